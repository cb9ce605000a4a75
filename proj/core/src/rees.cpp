#include "sgx/rees.hpp"

#include <cmath>

#include "sgx/error.hpp"

namespace sgx {

  namespace {
    FiniteSemigroup rees_table(FiniteSemigroup const&   S,
                               std::size_t              nu,
                               std::size_t              nv,
                               std::span<Element const> p) {
      std::size_t const    n = S.order();
      std::size_t const    m = nu * n * nv;
      std::vector<Element> table(m * m);
      auto                 index = [&](std::size_t u, Element s, std::size_t v) {
        return (u * n + s) * nv + v;
      };
      for (std::size_t u = 0; u < nu; ++u) {
        for (Element s = 0; s < n; ++s) {
          for (std::size_t v = 0; v < nv; ++v) {
            for (std::size_t u2 = 0; u2 < nu; ++u2) {
              for (Element s2 = 0; s2 < n; ++s2) {
                for (std::size_t v2 = 0; v2 < nv; ++v2) {
                  Element const mid = S(S(s, p[v * nu + u2]), s2);
                  table[index(u, s, v) * m + index(u2, s2, v2)] = index(u, mid, v2);
                }
              }
            }
          }
        }
      }
      return FiniteSemigroup(m, std::move(table));
    }

    std::vector<Element> checked_sandwich(FiniteSemigroup const& S,
                                          std::size_t            nu,
                                          std::size_t            nv,
                                          std::vector<Element>   p) {
      if (nu == 0 || nv == 0) {
        throw OutOfRange("index sets of a Rees matrix semigroup must be non-empty");
      }
      if (p.size() != nu * nv) {
        throw OutOfRange("sandwich matrix has the wrong number of entries");
      }
      for (Element x : p) {
        if (x >= S.order()) {
          throw OutOfRange("sandwich entry " + std::to_string(x) + " is out of range");
        }
      }
      return p;
    }
  }  // namespace

  ReesMatrixSemigroup::ReesMatrixSemigroup(FiniteSemigroup      base,
                                           std::size_t          u_count,
                                           std::size_t          v_count,
                                           std::vector<Element> sandwich)
      : _base(std::move(base)),
        _u_count(u_count),
        _v_count(v_count),
        _sandwich(checked_sandwich(_base, u_count, v_count, std::move(sandwich))),
        _semigroup(rees_table(_base, u_count, v_count, _sandwich)) {}

  bool rees_factorizable(ReesMatrixSemigroup const& M) {
    FiniteSemigroup const& S = M.base();
    std::vector<Element>   all(S.order());
    for (Element s = 0; s < S.order(); ++s) {
      all[s] = s;
    }
    std::vector<Element> image(M.sandwich().begin(), M.sandwich().end());
    auto const           SpS    = set_product(S, set_product(S, all, image), all);
    bool const           via_p  = SpS.size() == S.order();
    bool const           direct = is_factorizable(M.semigroup());
    if (via_p != direct) {
      throw InvariantViolation("S = S im(p) S disagrees with factorizability of M");
    }
    return via_p;
  }

  ReesCover morita_cover(ReesMatrixSemigroup const& M) {
    FiniteSemigroup const& S = M.base();
    if (!is_factorizable(S)) {
      throw NotFactorizable();
    }
    std::size_t const n  = S.order();
    std::size_t const nu = M.u_count();
    std::size_t const nv = M.v_count();

    // Q = U x S with (u, s)s' = (u, ss'); P = S x V with s'(s, v) = (s's, v).
    std::vector<Point> q_action(nu * n * n), p_action(n * n * nv);
    for (std::size_t u = 0; u < nu; ++u) {
      for (Element s = 0; s < n; ++s) {
        for (Element s2 = 0; s2 < n; ++s2) {
          q_action[(u * n + s) * n + s2] = u * n + S(s, s2);
        }
      }
    }
    for (Element s2 = 0; s2 < n; ++s2) {
      for (Element s = 0; s < n; ++s) {
        for (std::size_t v = 0; v < nv; ++v) {
          p_action[s2 * (n * nv) + s * nv + v] = S(s2, s) * nv + v;
        }
      }
    }
    RightAct Q(S, nu * n, std::move(q_action));
    LeftAct  P(S, n * nv, std::move(p_action));

    std::vector<Element> pairing(P.size() * Q.size());
    for (Element s = 0; s < n; ++s) {
      for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t u = 0; u < nu; ++u) {
          for (Element s2 = 0; s2 < n; ++s2) {
            pairing[(s * nv + v) * Q.size() + (u * n + s2)] = S(S(s, M.sandwich(v, u)), s2);
          }
        }
      }
    }
    MoritaSemigroup morita = build_morita_semigroup(std::move(P), std::move(Q), std::move(pairing));

    auto psi_map = induced_map(
        morita.tensor(),
        [&](Point q, Point p) {
          return M.index(q / n, S(q % n, p / nv), p % nv);
        },
        M.semigroup().order());
    SemigroupMorphism psi(morita.semigroup(), M.semigroup(), std::move(psi_map));
    MorphismQuality   quality   = morphism_quality(psi);
    bool const        injective = is_injective(psi);
    return ReesCover{M, std::move(morita), std::move(psi), quality, injective};
  }

  CoverInjectivity cover_injectivity(ReesCover const& cover) {
    CoverInjectivity result{cover.injective, {}, true, 0};
    ReesMatrixSemigroup const& M = cover.rees;
    if (!is_firm(M.base())) {
      return result;
    }
    FiniteSemigroup const& S  = M.base();
    TensorProduct const&   QP = cover.morita.tensor();
    std::size_t const      n  = S.order();
    std::size_t const      nv = M.v_count();

    std::vector<std::vector<PointPair>> preimages(M.semigroup().order());
    for (Point q = 0; q < QP.first().size(); ++q) {
      for (Point p = 0; p < QP.second().size(); ++p) {
        preimages[M.index(q / n, S(q % n, p / nv), p % nv)].emplace_back(q, p);
      }
    }
    for (auto const& pairs : preimages) {
      for (std::size_t i = 1; i < pairs.size(); ++i) {
        auto w = tossing_witness(QP, pairs.front(), pairs[i]);
        if (!w) {
          ++result.unconnected_pairs;
          continue;
        }
        auto end = replay(*w, QP.first(), QP.second());
        result.witnesses_replay = result.witnesses_replay && end && *end == w->to;
        result.witnesses.push_back(std::move(*w));
      }
    }
    return result;
  }

  CoverInjectivity cover_injectivity(ReesMatrixSemigroup const& M) {
    if (!is_factorizable(M.base())) {
      throw CoverMissing("no Morita cover: base semigroup is not factorizable");
    }
    return cover_injectivity(morita_cover(M));
  }

  TensorBaseCover tensor_base_cover(FiniteSemigroup const& S,
                                    std::size_t            u_count,
                                    std::size_t            v_count,
                                    std::vector<Element>   sandwich) {
    if (!is_factorizable(S)) {
      throw NotFactorizable();
    }
    MoritaSemigroup     square = tensor_square(S);
    bool const          firm   = is_firm(square.semigroup());
    ReesMatrixSemigroup M(square.semigroup(), u_count, v_count, std::move(sandwich));
    bool const          factorizable = rees_factorizable(M);
    ReesCover           cover        = morita_cover(M);
    return TensorBaseCover{std::move(square), firm, std::move(cover), factorizable};
  }

  std::vector<std::vector<Element>> all_sandwich_matrices(std::size_t n,
                                                          std::size_t u_count,
                                                          std::size_t v_count,
                                                          std::size_t cap) {
    std::size_t const cells = u_count * v_count;
    double const      count = std::pow(static_cast<double>(n), static_cast<double>(cells));
    if (count > static_cast<double>(cap)) {
      throw SearchSpaceTooLarge(count, cap);
    }
    std::vector<std::vector<Element>> result;
    std::vector<Element>              p(cells, 0);
    while (true) {
      result.push_back(p);
      std::size_t i = cells;
      while (i > 0 && p[i - 1] + 1 == n) {
        p[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++p[i - 1];
    }
    return result;
  }

}  // namespace sgx
