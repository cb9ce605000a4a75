#include "sgx/dual_pairs.hpp"

#include <algorithm>
#include <set>

#include "sgx/error.hpp"
#include "sgx/tensor.hpp"

namespace sgx {

  Pair::Pair(LeftAct A, RightAct B, std::vector<Element> table)
      : _pairing(std::move(A), std::move(B), std::move(table)) {}

  Pair Pair::regular(FiniteSemigroup const& S) {
    std::vector<Element> table(S.table().begin(), S.table().end());
    return Pair(LeftAct::regular(S), RightAct::regular(S), std::move(table));
  }

  AdjointPair compose(AdjointPair const& x, AdjointPair const& y) {
    AdjointPair r{std::vector<Point>(x.rho.size()), std::vector<Point>(x.sigma.size())};
    for (Point a = 0; a < x.rho.size(); ++a) {
      r.rho[a] = y.rho[x.rho[a]];
    }
    for (Point b = 0; b < x.sigma.size(); ++b) {
      r.sigma[b] = x.sigma[y.sigma[b]];
    }
    return r;
  }

  bool is_adjoint(Pair const& beta, AdjointPair const& x) {
    LeftAct const&  A = beta.A();
    RightAct const& B = beta.B();
    std::size_t const n = beta.semigroup().order();
    if (x.rho.size() != A.size() || x.sigma.size() != B.size()) {
      return false;
    }
    for (Element s = 0; s < n; ++s) {
      for (Point a = 0; a < A.size(); ++a) {
        if (x.rho[A.act(s, a)] != A.act(s, x.rho[a])) {
          return false;
        }
      }
      for (Point b = 0; b < B.size(); ++b) {
        if (x.sigma[B.act(b, s)] != B.act(x.sigma[b], s)) {
          return false;
        }
      }
    }
    for (Point a = 0; a < A.size(); ++a) {
      for (Point b = 0; b < B.size(); ++b) {
        if (beta(x.rho[a], b) != beta(a, x.sigma[b])) {
          return false;
        }
      }
    }
    return true;
  }

  Bracket bracket(Pair const& beta, Point b, Point a) {
    LeftAct const&  A = beta.A();
    RightAct const& B = beta.B();
    if (a >= A.size() || b >= B.size()) {
      throw OutOfRange("bracket argument out of range");
    }
    AdjointPair x{std::vector<Point>(A.size()), std::vector<Point>(B.size())};
    for (Point y = 0; y < A.size(); ++y) {
      x.rho[y] = A.act(beta(y, b), a);
    }
    for (Point y = 0; y < B.size(); ++y) {
      x.sigma[y] = B.act(b, beta(a, y));
    }
    return Bracket{b, a, std::move(x)};
  }

  namespace {
    // a in S.a' for a left act.
    bool in_left_orbit(LeftAct const& A, Point a, Point a2) {
      for (Element s = 0; s < A.semigroup().order(); ++s) {
        if (A.act(s, a2) == a) {
          return true;
        }
      }
      return false;
    }

    bool in_right_orbit(RightAct const& B, Point b, Point b2) {
      for (Element s = 0; s < B.semigroup().order(); ++s) {
        if (B.act(b2, s) == b) {
          return true;
        }
      }
      return false;
    }

    bool rank_one(Pair const& beta, AdjointPair const& x) {
      LeftAct const&  A = beta.A();
      RightAct const& B = beta.B();
      bool            left = false, right = false;
      for (Point a = 0; a < A.size() && !left; ++a) {
        left = std::all_of(x.rho.begin(), x.rho.end(), [&](Point y) {
          return in_left_orbit(A, y, a);
        });
      }
      for (Point b = 0; b < B.size() && !right; ++b) {
        right = std::all_of(x.sigma.begin(), x.sigma.end(), [&](Point y) {
          return in_right_orbit(B, y, b);
        });
      }
      return left && right;
    }

    FiniteSemigroup composition_table(std::vector<AdjointPair> const& elements) {
      std::size_t const    m = elements.size();
      std::vector<Element> table(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          AdjointPair const p  = compose(elements[i], elements[j]);
          auto              it = std::lower_bound(elements.begin(), elements.end(), p);
          if (it == elements.end() || *it != p) {
            throw InvariantViolation("set of adjoint pairs is not closed under composition");
          }
          table[i * m + j] = static_cast<Element>(it - elements.begin());
        }
      }
      return FiniteSemigroup(m, std::move(table));
    }

    void require_wlu_dual(Pair const& beta) {
      if (!has_weak_local_units(beta.semigroup())) {
        throw PreconditionFailed("base semigroup lacks weak local units");
      }
      if (!is_dual_pair(beta)) {
        throw PreconditionFailed("pair is not dual");
      }
    }
  }  // namespace

  bool DualityReport::dual() const noexcept {
    auto const present = [](auto const& w) { return w.has_value(); };
    return std::all_of(a_witness.begin(), a_witness.end(), present)
           && std::all_of(b_witness.begin(), b_witness.end(), present);
  }

  DualityReport duality(Pair const& beta) {
    LeftAct const&    A = beta.A();
    RightAct const&   B = beta.B();
    std::size_t const n = beta.semigroup().order();

    // <a', B> = S and <A, b'> = S.
    std::vector<bool> a_full(A.size()), b_full(B.size());
    for (Point a = 0; a < A.size(); ++a) {
      std::vector<bool> hit(n, false);
      for (Point b = 0; b < B.size(); ++b) {
        hit[beta(a, b)] = true;
      }
      a_full[a] = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    }
    for (Point b = 0; b < B.size(); ++b) {
      std::vector<bool> hit(n, false);
      for (Point a = 0; a < A.size(); ++a) {
        hit[beta(a, b)] = true;
      }
      b_full[b] = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    }

    DualityReport r{std::vector<std::optional<Point>>(A.size()),
                    std::vector<std::optional<Point>>(B.size())};
    for (Point a = 0; a < A.size(); ++a) {
      for (Point a2 = 0; a2 < A.size() && !r.a_witness[a]; ++a2) {
        if (a_full[a2] && in_left_orbit(A, a, a2)) {
          r.a_witness[a] = a2;
        }
      }
    }
    for (Point b = 0; b < B.size(); ++b) {
      for (Point b2 = 0; b2 < B.size() && !r.b_witness[b]; ++b2) {
        if (b_full[b2] && in_right_orbit(B, b, b2)) {
          r.b_witness[b] = b2;
        }
      }
    }
    return r;
  }

  std::optional<std::size_t> AdjointSemigroup::index_of(AdjointPair const& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  AdjointSemigroup omega(Pair const& beta, std::size_t limit) {
    auto const left  = enumerate_endomorphisms(beta.A(), limit);
    auto const right = enumerate_endomorphisms(beta.B(), limit);

    std::vector<AdjointPair> elements;
    for (auto const& f : left) {
      for (auto const& g : right) {
        AdjointPair x{{f.map().begin(), f.map().end()}, {g.map().begin(), g.map().end()}};
        bool        adjoint = true;
        for (Point a = 0; a < beta.A().size() && adjoint; ++a) {
          for (Point b = 0; b < beta.B().size() && adjoint; ++b) {
            adjoint = beta(x.rho[a], b) == beta(a, x.sigma[b]);
          }
        }
        if (adjoint) {
          elements.push_back(std::move(x));
        }
      }
    }
    std::sort(elements.begin(), elements.end());

    AdjointPair id{std::vector<Point>(beta.A().size()), std::vector<Point>(beta.B().size())};
    for (Point a = 0; a < id.rho.size(); ++a) {
      id.rho[a] = a;
    }
    for (Point b = 0; b < id.sigma.size(); ++b) {
      id.sigma[b] = b;
    }
    if (!std::binary_search(elements.begin(), elements.end(), id)) {
      throw InvariantViolation("identity pair is not adjoint");
    }
    FiniteSemigroup table = composition_table(elements);
    return AdjointSemigroup{std::move(elements), std::move(table)};
  }

  std::vector<std::size_t> omega1(Pair const& beta, AdjointSemigroup const& om) {
    std::vector<std::size_t> result;
    std::vector<bool>        member(om.elements.size(), false);
    for (std::size_t i = 0; i < om.elements.size(); ++i) {
      if (rank_one(beta, om.elements[i])) {
        result.push_back(i);
        member[i] = true;
      }
    }
    for (std::size_t i : result) {
      for (std::size_t j = 0; j < om.elements.size(); ++j) {
        if (!member[om.semigroup(i, j)] || !member[om.semigroup(j, i)]) {
          throw InvariantViolation("rank-one adjoint pairs do not form an ideal");
        }
      }
    }
    return result;
  }

  SigmaSemigroup sigma(Pair const& beta) {
    std::size_t const na = beta.A().size();
    std::size_t const nb = beta.B().size();

    std::vector<AdjointPair> all;
    all.reserve(na * nb);
    for (Point b = 0; b < nb; ++b) {
      for (Point a = 0; a < na; ++a) {
        all.push_back(bracket(beta, b, a).pair);
      }
    }
    std::vector<AdjointPair> elements = all;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (auto const& x : elements) {
      if (!is_adjoint(beta, x)) {
        throw InvariantViolation("bracket is not an adjoint pair");
      }
    }

    std::vector<std::size_t> index(na * nb);
    for (std::size_t i = 0; i < all.size(); ++i) {
      index[i] = static_cast<std::size_t>(
          std::lower_bound(elements.begin(), elements.end(), all[i]) - elements.begin());
    }
    FiniteSemigroup table = composition_table(elements);

    bool rule = true;
    for (Point b = 0; b < nb && rule; ++b) {
      for (Point a = 0; a < na && rule; ++a) {
        for (Point b2 = 0; b2 < nb && rule; ++b2) {
          for (Point a2 = 0; a2 < na && rule; ++a2) {
            Point const a3 = beta.A().act(beta(a, b2), a2);
            rule = table(index[b * na + a], index[b2 * na + a2]) == index[b * na + a3];
          }
        }
      }
    }
    return SigmaSemigroup{std::move(elements), std::move(table), std::move(index), rule};
  }

  bool sigma_is_ideal(SigmaSemigroup const& sg, AdjointSemigroup const& om) {
    auto const in_sigma = [&](AdjointPair const& x) {
      return std::binary_search(sg.elements.begin(), sg.elements.end(), x);
    };
    for (auto const& x : sg.elements) {
      if (!om.index_of(x)) {
        return false;
      }
      for (auto const& w : om.elements) {
        if (!in_sigma(compose(x, w)) || !in_sigma(compose(w, x))) {
          return false;
        }
      }
    }
    return true;
  }

  HotzelMap hotzel_map(Pair const& beta) {
    // P = A and Q = B, so the Morita semigroup is B (x)_S A.
    MoritaSemigroup   morita = build_morita_semigroup(beta.pairing());
    SigmaSemigroup    sg     = sigma(beta);
    std::size_t const na     = beta.A().size();
    auto              map    = induced_map(
        morita.tensor(),
        [&](Point b, Point a) { return sg.bracket_index[b * na + a]; },
        sg.elements.size());
    SemigroupMorphism f(morita.semigroup(), sg.semigroup, std::move(map));
    MorphismQuality   quality   = morphism_quality(f);
    bool const        injective = is_injective(f);
    return HotzelMap{std::move(morita), std::move(sg), std::move(f), quality, injective};
  }

  SigmaIsomorphismReport verify_sigma_isomorphism(Pair const& beta) {
    require_wlu_dual(beta);
    HotzelMap  map = hotzel_map(beta);
    bool const iso = map.injective && map.quality.surjective;
    return SigmaIsomorphismReport{std::move(map), iso};
  }

  RankOneReport verify_sigma_equals_rank_one(Pair const& beta, std::size_t limit) {
    require_wlu_dual(beta);
    SigmaSemigroup const sg = sigma(beta);
    RankOneReport        r{true, true, false, sg.elements.size(), 0};
    try {
      AdjointSemigroup const om = omega(beta, limit);
      auto const             o1 = omega1(beta, om);
      std::set<AdjointPair>  rank_one_set;
      for (std::size_t i : o1) {
        rank_one_set.insert(om.elements[i]);
      }
      r.omega1_size     = o1.size();
      r.sigma_in_omega1 = std::all_of(sg.elements.begin(), sg.elements.end(), [&](auto const& x) {
        return rank_one_set.count(x) == 1;
      });
      r.omega1_in_sigma = std::all_of(rank_one_set.begin(), rank_one_set.end(), [&](auto const& x) {
        return std::binary_search(sg.elements.begin(), sg.elements.end(), x);
      });
    } catch (SearchSpaceTooLarge const&) {
      r.complete        = false;
      r.sigma_in_omega1 = std::all_of(sg.elements.begin(), sg.elements.end(), [&](auto const& x) {
        return rank_one(beta, x);
      });
    }
    return r;
  }

  MoritaUnitsReport morita_units_check(Pair const& beta) {
    require_wlu_dual(beta);
    MoritaSemigroup const morita = build_morita_semigroup(beta.pairing());
    return MoritaUnitsReport{has_weak_local_units(morita.semigroup()),
                             has_local_units(beta.semigroup()),
                             has_local_units(morita.semigroup())};
  }

}  // namespace sgx
