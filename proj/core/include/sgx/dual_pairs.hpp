#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sgx/acts.hpp"
#include "sgx/morita.hpp"
#include "sgx/morphisms.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

  //! A pair over S: a left act _SA, a right act B_S and an (S, S)-biact
  //! morphism <,> : A x B -> S.
  class Pair {
   public:
    //! table[a * |B| + b] = <a, b>. Same errors as Pairing.
    Pair(LeftAct A, RightAct B, std::vector<Element> table);

    //! A = _SS, B = S_S, <a, b> = ab.
    static Pair regular(FiniteSemigroup const& S);

    LeftAct const& A() const noexcept {
      return _pairing.left();
    }
    RightAct const& B() const noexcept {
      return _pairing.right();
    }
    FiniteSemigroup const& semigroup() const noexcept {
      return _pairing.semigroup();
    }
    Pairing const& pairing() const noexcept {
      return _pairing;
    }
    Element operator()(Point a, Point b) const noexcept {
      return _pairing(a, b);
    }

   private:
    Pairing _pairing;
  };

  //! (rho, sigma) with rho in End(_SA), sigma in End(B_S). Ordered
  //! lexicographically by rho, then sigma.
  struct AdjointPair {
    std::vector<Point> rho;
    std::vector<Point> sigma;

    friend auto operator<=>(AdjointPair const&, AdjointPair const&) = default;
  };

  //! (f, g)(f', g') = (f' o f, g o g').
  AdjointPair compose(AdjointPair const& x, AdjointPair const& y);

  //! rho, sigma are endomorphisms and <rho(a), b> = <a, sigma(b)>.
  bool is_adjoint(Pair const& beta, AdjointPair const& x);

  //! [b, a] = (<-, b>a, b<a, ->).
  struct Bracket {
    Point       b;
    Point       a;
    AdjointPair pair;
  };

  Bracket bracket(Pair const& beta, Point b, Point a);

  struct DualityReport {
    //! Least a' with a in Sa' and <a', B> = S, per a.
    std::vector<std::optional<Point>> a_witness;
    //! Least b' with b in b'S and <A, b'> = S, per b.
    std::vector<std::optional<Point>> b_witness;

    bool dual() const noexcept;
  };

  DualityReport duality(Pair const& beta);

  inline bool is_dual_pair(Pair const& beta) {
    return duality(beta).dual();
  }

  //! A finite semigroup whose elements are adjoint pairs, sorted.
  struct AdjointSemigroup {
    std::vector<AdjointPair> elements;
    FiniteSemigroup          semigroup;

    std::optional<std::size_t> index_of(AdjointPair const& x) const;
  };

  //! All adjoint pairs. Throws SearchSpaceTooLarge via endomorphism
  //! enumeration.
  AdjointSemigroup omega(Pair const& beta, std::size_t limit = default_candidate_limit());

  //! Indices into omega of the rank-one pairs: rho(A) in Sa and
  //! sigma(B) in bS for some a, b. Throws InvariantViolation if they do
  //! not form an ideal.
  std::vector<std::size_t> omega1(Pair const& beta, AdjointSemigroup const& omega);

  //! The semigroup of brackets, deduplicated by underlying adjoint pair.
  struct SigmaSemigroup {
    std::vector<AdjointPair> elements;
    FiniteSemigroup          semigroup;
    //! bracket_index[b * |A| + a] = index of [b, a].
    std::vector<std::size_t> bracket_index;
    //! [b,a][b',a'] = [b, <a,b'>a'] for all brackets, comparing composition
    //! with the bracket rule.
    bool product_rule_holds;

    std::size_t index(Point b, Point a, std::size_t a_count) const noexcept {
      return bracket_index[b * a_count + a];
    }
  };

  SigmaSemigroup sigma(Pair const& beta);

  //! Every bracket lies in omega and both products with omega stay in the
  //! brackets.
  bool sigma_is_ideal(SigmaSemigroup const& sigma, AdjointSemigroup const& omega);

  //! b (x) a -> [b, a] from the Morita semigroup B (x)_S A onto sigma.
  struct HotzelMap {
    MoritaSemigroup   morita;
    SigmaSemigroup    sigma;
    SemigroupMorphism map;
    MorphismQuality   quality;
    bool              injective;

    //! Surjective, almost injective, and idempotents lift.
    bool properties_hold() const noexcept {
      return quality.surjective && quality.almost_injective && quality.idempotents_lift;
    }
  };

  HotzelMap hotzel_map(Pair const& beta);

  //! For a dual pair over a semigroup with weak local units the map is
  //! bijective. Throws PreconditionFailed.
  struct SigmaIsomorphismReport {
    HotzelMap map;
    bool      isomorphism;
  };

  SigmaIsomorphismReport verify_sigma_isomorphism(Pair const& beta);

  struct RankOneReport {
    //! False when omega exceeded the candidate limit; then only the
    //! inclusion of the brackets in the rank-one pairs is checked.
    bool complete;
    bool sigma_in_omega1;
    bool omega1_in_sigma;
    std::size_t sigma_size;
    std::size_t omega1_size;

    bool equal() const noexcept {
      return complete && sigma_in_omega1 && omega1_in_sigma;
    }
  };

  //! Brackets = rank-one adjoint pairs for a dual pair over a semigroup
  //! with weak local units. Throws PreconditionFailed.
  RankOneReport verify_sigma_equals_rank_one(Pair const& beta,
                                             std::size_t limit = default_candidate_limit());

  struct MoritaUnitsReport {
    bool weak_local_units;       // of B (x)_S A
    bool base_local_units;       // of S
    bool local_units;            // of B (x)_S A

    bool holds() const noexcept {
      return weak_local_units && (!base_local_units || local_units);
    }
  };

  //! For a dual pair over a semigroup with weak local units. Throws
  //! PreconditionFailed.
  MoritaUnitsReport morita_units_check(Pair const& beta);

}  // namespace sgx
