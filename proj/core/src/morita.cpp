#include "sgx/morita.hpp"

#include <algorithm>
#include <sstream>

#include "sgx/error.hpp"

namespace sgx {

  namespace {
    bool onto(std::span<Element const> values, std::size_t n) {
      std::vector<bool> hit(n, false);
      for (Element v : values) {
        hit[v] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    template <typename... Args>
    std::string describe(Args const&... args) {
      std::ostringstream out;
      (out << ... << args);
      return out.str();
    }
  }  // namespace

  Pairing::Pairing(LeftAct P, RightAct Q, std::vector<Element> table)
      : _left(std::move(P)), _right(std::move(Q)), _table(std::move(table)) {
    FiniteSemigroup const& S = _left.semigroup();
    if (!(S == _right.semigroup())) {
      throw SemigroupMismatch("pairing acts are over different semigroups");
    }
    if (_table.size() != _left.size() * _right.size()) {
      throw OutOfRange("pairing table has the wrong number of entries");
    }
    for (Element v : _table) {
      if (v >= S.order()) {
        throw OutOfRange("pairing value " + std::to_string(v) + " is out of range");
      }
    }
    for (Element s = 0; s < S.order(); ++s) {
      for (Point p = 0; p < _left.size(); ++p) {
        for (Point q = 0; q < _right.size(); ++q) {
          if ((*this)(_left.act(s, p), q) != S(s, (*this)(p, q))) {
            throw BiactLawViolation("left", s, p, q);
          }
          if ((*this)(p, _right.act(q, s)) != S((*this)(p, q), s)) {
            throw BiactLawViolation("right", s, p, q);
          }
        }
      }
    }
  }

  bool Pairing::is_surjective() const {
    return onto(_table, semigroup().order());
  }

  MoritaSemigroup::MoritaSemigroup(Pairing pairing, TensorProduct tensor, FiniteSemigroup semigroup)
      : _pairing(std::move(pairing)),
        _tensor(std::move(tensor)),
        _semigroup(std::move(semigroup)),
        _unitary(is_unitary(_pairing.left()) && is_unitary(_pairing.right())),
        _surjectively_defined(_pairing.is_surjective()) {}

  MoritaSemigroup build_morita_semigroup(Pairing const& pairing) {
    LeftAct const&    P  = pairing.left();
    TensorProduct     QP = tensor_product(pairing.right(), P);
    std::size_t const nc = QP.num_classes();

    auto product = [&](PointPair x, PointPair y) {
      auto const [q, p]   = x;
      auto const [q2, p2] = y;
      return QP.class_of(q, P.act(pairing(p, q2), p2));
    };

    std::vector<Element> table(nc * nc);
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t d = 0; d < nc; ++d) {
        Element const value = product(QP.representative(c), QP.representative(d));
        for (PointPair const& x : QP.members(c)) {
          for (PointPair const& y : QP.members(d)) {
            if (product(x, y) != value) {
              throw WellDefinednessViolation(
                  describe("Morita product depends on representatives of classes ", c, " and ", d));
            }
          }
        }
        table[c * nc + d] = value;
      }
    }
    FiniteSemigroup semigroup(nc, std::move(table));
    return MoritaSemigroup(pairing, std::move(QP), std::move(semigroup));
  }

  MoritaContext::MoritaContext(Biact P, Biact Q, std::vector<Element> theta, std::vector<Element> phi)
      : _P(std::move(P)),
        _Q(std::move(Q)),
        _PQ(tensor_product(_P, _Q)),
        _QP(tensor_product(_Q, _P)),
        _theta(std::move(theta)),
        _phi(std::move(phi)) {
    if (!(_P.left_semigroup() == _Q.right_semigroup())
        || !(_P.right_semigroup() == _Q.left_semigroup())) {
      throw SemigroupMismatch("P must be an (S, T)-biact and Q a (T, S)-biact");
    }
    if (_theta.size() != _PQ.num_classes() || _phi.size() != _QP.num_classes()) {
      throw OutOfRange("theta and phi must be given on every tensor class");
    }
    for (Element v : _theta) {
      if (v >= S().order()) {
        throw OutOfRange("theta value out of range");
      }
    }
    for (Element v : _phi) {
      if (v >= T().order()) {
        throw OutOfRange("phi value out of range");
      }
    }
  }

  MoritaContext MoritaContext::from_pair_maps(Biact P, Biact Q, PairMap const& theta, PairMap const& phi) {
    auto const PQ = tensor_product(P, Q);
    auto const QP = tensor_product(Q, P);
    auto       th = induced_map(PQ, theta, P.left_semigroup().order());
    auto       ph = induced_map(QP, phi, P.right_semigroup().order());
    return MoritaContext(std::move(P), std::move(Q), std::move(th), std::move(ph));
  }

  bool ContextReport::valid() const noexcept {
    return std::all_of(laws.begin(), laws.end(), [](LawCheck const& l) { return l.holds; });
  }

  std::string ContextReport::first_failure() const {
    for (LawCheck const& l : laws) {
      if (!l.holds) {
        return l.name + ": " + l.witness;
      }
    }
    return {};
  }

  namespace {
    // Checks f(x.u) = f(x)u and f(u.x) = u f(x) on a tensor product with
    // residual actions, where f maps classes into the acting semigroup R.
    void check_biact_morphism(std::string const&       name,
                              TensorProduct const&     t,
                              std::span<Element const> f,
                              std::vector<LawCheck>&   out) {
      LeftAct const&         L = *t.residual_left();
      RightAct const&        R = *t.residual_right();
      FiniteSemigroup const& U = L.semigroup();
      LawCheck left{name + " left-equivariant", true, {}};
      LawCheck right{name + " right-equivariant", true, {}};
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        for (Element u = 0; u < U.order(); ++u) {
          if (left.holds && f[L.act(u, c)] != U(u, f[c])) {
            left.holds   = false;
            left.witness = describe("class ", c, ", element ", u);
          }
          if (right.holds && f[R.act(c, u)] != U(f[c], u)) {
            right.holds   = false;
            right.witness = describe("class ", c, ", element ", u);
          }
        }
      }
      out.push_back(std::move(left));
      out.push_back(std::move(right));
    }
  }  // namespace

  ContextReport verify_context(MoritaContext const& ctx) {
    ContextReport r{{}, false, false};
    Biact const&  P = ctx.P();
    Biact const&  Q = ctx.Q();
    check_biact_morphism("theta", ctx.PQ(), ctx.theta(), r.laws);
    check_biact_morphism("phi", ctx.QP(), ctx.phi(), r.laws);

    LawCheck on_P{"theta(p(x)q)p' = p phi(q(x)p')", true, {}};
    LawCheck on_Q{"q' theta(p(x)q) = phi(q'(x)p)q", true, {}};
    for (Point p = 0; p < P.size() && on_P.holds; ++p) {
      for (Point q = 0; q < Q.size() && on_P.holds; ++q) {
        for (Point p2 = 0; p2 < P.size(); ++p2) {
          if (P.act_left(ctx.theta(p, q), p2) != P.act_right(p, ctx.phi(q, p2))) {
            on_P.holds   = false;
            on_P.witness = describe("(p, q, p') = (", p, ", ", q, ", ", p2, ")");
            break;
          }
        }
      }
    }
    for (Point p = 0; p < P.size() && on_Q.holds; ++p) {
      for (Point q = 0; q < Q.size() && on_Q.holds; ++q) {
        for (Point q2 = 0; q2 < Q.size(); ++q2) {
          if (Q.act_right(q2, ctx.theta(p, q)) != Q.act_left(ctx.phi(q2, p), q)) {
            on_Q.holds   = false;
            on_Q.witness = describe("(p, q, q') = (", p, ", ", q, ", ", q2, ")");
            break;
          }
        }
      }
    }
    r.laws.push_back(std::move(on_P));
    r.laws.push_back(std::move(on_Q));
    r.unitary    = is_unitary(P) && is_unitary(Q);
    r.surjective = onto(ctx.theta(), ctx.S().order()) && onto(ctx.phi(), ctx.T().order());
    return r;
  }

  bool InducedMorphisms::properties_hold() const noexcept {
    auto ok = [](MorphismQuality const& q) {
      return q.almost_injective && (!q.surjective || q.idempotents_lift);
    };
    return ok(theta_quality) && ok(phi_quality);
  }

  InducedMorphisms context_induced_semigroup_morphisms(MoritaContext const& ctx) {
    ContextReport const report = verify_context(ctx);
    if (!report.valid()) {
      throw ContextInvalid("Morita context is invalid: " + report.first_failure());
    }
    Biact const& P = ctx.P();
    Biact const& Q = ctx.Q();

    std::vector<Element> over_S_table(P.size() * Q.size());
    for (Point p = 0; p < P.size(); ++p) {
      for (Point q = 0; q < Q.size(); ++q) {
        over_S_table[p * Q.size() + q] = ctx.theta(p, q);
      }
    }
    std::vector<Element> over_T_table(Q.size() * P.size());
    for (Point q = 0; q < Q.size(); ++q) {
      for (Point p = 0; p < P.size(); ++p) {
        over_T_table[q * P.size() + p] = ctx.phi(q, p);
      }
    }
    MoritaSemigroup over_S = build_morita_semigroup(P.left(), Q.right(), std::move(over_S_table));
    MoritaSemigroup over_T = build_morita_semigroup(Q.left(), P.right(), std::move(over_T_table));

    // The Morita semigroups are built on the same tensor products as the
    // context, so class i of each is the class theta or phi is given on.
    SemigroupMorphism theta(over_T.semigroup(), ctx.S(), {ctx.theta().begin(), ctx.theta().end()});
    SemigroupMorphism phi(over_S.semigroup(), ctx.T(), {ctx.phi().begin(), ctx.phi().end()});
    MorphismQuality   tq = morphism_quality(theta);
    MorphismQuality   pq = morphism_quality(phi);
    return InducedMorphisms{std::move(over_S), std::move(over_T), std::move(theta), std::move(phi), tq, pq};
  }

  MoritaSemigroup tensor_square(FiniteSemigroup const& S) {
    return build_morita_semigroup(
        LeftAct::regular(S), RightAct::regular(S), {S.table().begin(), S.table().end()});
  }

  MoritaContext canonical_context(FiniteSemigroup const& S) {
    if (!is_factorizable(S)) {
      throw NotFactorizable();
    }
    MoritaSemigroup const  SS = tensor_square(S);
    FiniteSemigroup const& T  = SS.semigroup();
    std::vector<Element>   mu = tensor_multiplication(SS.tensor());

    std::size_t const  n = S.order();
    std::size_t const  m = T.order();
    std::vector<Point> right_T(n * m), left_T(m * n);
    for (Point p = 0; p < n; ++p) {
      for (Element x = 0; x < m; ++x) {
        right_T[p * m + x] = S(p, mu[x]);
        left_T[x * n + p]  = S(mu[x], p);
      }
    }
    Biact P(LeftAct::regular(S), RightAct(T, n, std::move(right_T)));
    Biact Q(LeftAct(T, n, std::move(left_T)), RightAct::regular(S));
    TensorProduct const& classes = SS.tensor();
    MoritaContext        ctx     = MoritaContext::from_pair_maps(
        std::move(P),
        std::move(Q),
        [&S](Point p, Point q) { return S(p, q); },
        [&classes](Point q, Point p) { return classes.class_of(q, p); });
    ContextReport const report = verify_context(ctx);
    if (!report.valid()) {
      throw ContextInvalid("canonical context fails " + report.first_failure());
    }
    return ctx;
  }

  FirmEquivalenceReport verify_firm_equivalence(MoritaContext const& ctx) {
    if (!is_firm(ctx.S()) || !is_firm(ctx.T())) {
      throw PreconditionFailed("both semigroups of the context must be firm");
    }
    auto bijective = [](std::span<Element const> f, std::size_t n) {
      return f.size() == n && onto(f, n);
    };
    if (!bijective(ctx.theta(), ctx.S().order()) || !bijective(ctx.phi(), ctx.T().order())) {
      throw PreconditionFailed("theta and phi must be bijective");
    }
    ContextReport const report = verify_context(ctx);
    if (!report.valid()) {
      throw PreconditionFailed("Morita context is invalid: " + report.first_failure());
    }
    if (!report.unitary) {
      throw PreconditionFailed("Morita context is not unitary");
    }
    InducedMorphisms const induced = context_induced_semigroup_morphisms(ctx);
    return FirmEquivalenceReport{is_injective(induced.theta) && is_surjective(induced.theta),
                                 induced.over_T.unitary(),
                                 induced.over_T.surjectively_defined()};
  }

}  // namespace sgx
