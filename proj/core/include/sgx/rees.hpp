#pragma once

#include <cstddef>
#include <vector>

#include "sgx/morita.hpp"
#include "sgx/morphisms.hpp"
#include "sgx/semigroup.hpp"
#include "sgx/tensor.hpp"

namespace sgx {

  //! The Rees matrix semigroup M(S, U, V, p) on triples (u, s, v) with
  //! (u, s, v)(u', s', v') = (u, s p(v, u') s', v').
  //!
  //! Triples are encoded lexicographically: index = (u |S| + s) |V| + v.
  class ReesMatrixSemigroup {
   public:
    struct Triple {
      std::size_t u;
      Element     s;
      std::size_t v;

      friend bool operator==(Triple const&, Triple const&) = default;
    };

    //! sandwich[v * |U| + u] = p(v, u). Throws OutOfRange.
    ReesMatrixSemigroup(FiniteSemigroup base,
                        std::size_t     u_count,
                        std::size_t     v_count,
                        std::vector<Element> sandwich);

    FiniteSemigroup const& base() const noexcept {
      return _base;
    }
    std::size_t u_count() const noexcept {
      return _u_count;
    }
    std::size_t v_count() const noexcept {
      return _v_count;
    }
    Element sandwich(std::size_t v, std::size_t u) const noexcept {
      return _sandwich[v * _u_count + u];
    }
    std::span<Element const> sandwich() const noexcept {
      return _sandwich;
    }
    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    Element index(std::size_t u, Element s, std::size_t v) const noexcept {
      return (u * _base.order() + s) * _v_count + v;
    }
    Triple triple(Element x) const noexcept {
      return {x / (_base.order() * _v_count), (x / _v_count) % _base.order(), x % _v_count};
    }

   private:
    FiniteSemigroup      _base;
    std::size_t          _u_count;
    std::size_t          _v_count;
    std::vector<Element> _sandwich;
    FiniteSemigroup      _semigroup;
  };

  inline ReesMatrixSemigroup rees_construct(FiniteSemigroup const& S,
                                            std::size_t            u_count,
                                            std::size_t            v_count,
                                            std::vector<Element>   sandwich) {
    return ReesMatrixSemigroup(S, u_count, v_count, std::move(sandwich));
  }

  //! S = S im(p) S. Also computes factorizability of M directly and throws
  //! InvariantViolation if the two disagree.
  bool rees_factorizable(ReesMatrixSemigroup const& M);

  //! The unitary Morita semigroup Q (x)_S P covering M, where Q = U x S
  //! and P = S x V with componentwise actions, <(s, v), (u, s')> =
  //! s p(v, u) s', and psi((u, s) (x) (t, v)) = (u, st, v).
  struct ReesCover {
    ReesMatrixSemigroup rees;
    MoritaSemigroup     morita;
    SemigroupMorphism   psi;
    MorphismQuality     quality;
    bool                injective;

    //! psi is a surjective, almost injective morphism along which
    //! idempotents lift.
    bool properties_hold() const noexcept {
      return quality.surjective && quality.almost_injective && quality.idempotents_lift;
    }

    //! Point index of (u, s) in Q and of (s, v) in P.
    Point q_point(std::size_t u, Element s) const noexcept {
      return u * rees.base().order() + s;
    }
    Point p_point(Element s, std::size_t v) const noexcept {
      return s * rees.v_count() + v;
    }
  };

  //! Throws NotFactorizable when the base semigroup is not factorizable.
  ReesCover morita_cover(ReesMatrixSemigroup const& M);

  struct CoverInjectivity {
    bool injective;
    //! Filled when the base is firm: for each element of M, tossings from
    //! its least preimage pair in Q x P to each other preimage pair.
    std::vector<TossingWitness> witnesses;
    //! Every witness replays to its stated end pair.
    bool witnesses_replay;
    //! Preimage pairs of one element of M that no tossing connects.
    std::size_t unconnected_pairs;
  };

  CoverInjectivity cover_injectivity(ReesCover const& cover);

  //! Builds the cover first; throws CoverMissing when that is impossible.
  CoverInjectivity cover_injectivity(ReesMatrixSemigroup const& M);

  //! Rees matrix semigroup over S (x)_S S covered by a Morita semigroup.
  struct TensorBaseCover {
    MoritaSemigroup square;  // S (x)_S S
    bool            square_firm;
    ReesCover       cover;
    bool            rees_factorizable;

    //! psi is bijective, and the Morita semigroup is surjectively defined
    //! whenever M is factorizable.
    bool holds() const noexcept {
      return cover.properties_hold() && cover.injective
             && (!rees_factorizable || cover.morita.surjectively_defined());
    }
  };

  //! sandwich is a |V| x |U| table into S (x)_S S. Throws NotFactorizable.
  TensorBaseCover tensor_base_cover(FiniteSemigroup const& S,
                                    std::size_t            u_count,
                                    std::size_t            v_count,
                                    std::vector<Element>   sandwich);

  //! Every |V| x |U| table into an order-n semigroup, lexicographic. Throws
  //! SearchSpaceTooLarge above `cap` tables.
  std::vector<std::vector<Element>> all_sandwich_matrices(std::size_t n,
                                                          std::size_t u_count,
                                                          std::size_t v_count,
                                                          std::size_t cap = 4096);

}  // namespace sgx
