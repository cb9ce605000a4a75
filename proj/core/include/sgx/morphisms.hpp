#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgx/acts.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

  //! A map f: S -> T with f(xy) = f(x)f(y), checked on construction.
  class SemigroupMorphism {
   public:
    //! Throws OutOfRange or NotMultiplicative(x, y).
    SemigroupMorphism(FiniteSemigroup source, FiniteSemigroup target, std::vector<Element> map);

    static SemigroupMorphism identity(FiniteSemigroup const& S);

    FiniteSemigroup const& source() const noexcept {
      return _source;
    }
    FiniteSemigroup const& target() const noexcept {
      return _target;
    }
    std::span<Element const> map() const noexcept {
      return _map;
    }
    Element operator()(Element x) const noexcept {
      return _map[x];
    }

   private:
    FiniteSemigroup      _source;
    FiniteSemigroup      _target;
    std::vector<Element> _map;
  };

  bool is_injective(SemigroupMorphism const& f);
  bool is_surjective(SemigroupMorphism const& f);

  //! Distinct x, y in aSb with f(x) = f(y), where a in Sa and b in bS.
  struct AlmostInjectivityFailure {
    Element a;
    Element b;
    Element x;
    Element y;
  };

  //! The first failure in lexicographic order of (a, b), if any.
  std::optional<AlmostInjectivityFailure> almost_injectivity_failure(SemigroupMorphism const& f);

  //! f is injective on every aSb = {asb | s in S} with a in Sa and b in bS.
  inline bool is_almost_injective(SemigroupMorphism const& f) {
    return !almost_injectivity_failure(f).has_value();
  }

  //! The least idempotent of the target with no idempotent preimage.
  std::optional<Element> unlifted_idempotent(SemigroupMorphism const& f);

  inline bool idempotents_lift(SemigroupMorphism const& f) {
    return !unlifted_idempotent(f).has_value();
  }

  //! Every regular element of the target has a regular preimage.
  bool regulars_lift(SemigroupMorphism const& f);

  struct MorphismQuality {
    bool almost_injective;
    bool surjective;
    bool strict_local_iso;
    bool idempotents_lift;
    bool regulars_lift;

    friend bool operator==(MorphismQuality const&, MorphismQuality const&) = default;
  };

  MorphismQuality morphism_quality(SemigroupMorphism const& f);

  //! The three conditions that coincide when the source has common weak
  //! local units.
  struct InjectivityConditions {
    bool almost_injective;
    bool injective_on_right_ideals;  // f restricted to sS, every s
    bool injective_on_left_ideals;   // f restricted to Ss, every s

    bool equivalent() const noexcept {
      return almost_injective == injective_on_right_ideals
             && almost_injective == injective_on_left_ideals;
    }
  };

  //! Evaluates all three conditions. Throws PreconditionFailed when the
  //! source lacks common weak local units.
  InjectivityConditions check_injectivity_conditions(SemigroupMorphism const& f);

  //! The semigroup on the carrier of A with a . a' = a.rho(a'), and rho as
  //! a morphism from it onto S.
  struct ActSemigroup {
    FiniteSemigroup   semigroup;
    SemigroupMorphism rho;
    MorphismQuality   quality;

    //! rho is almost injective, and lifts idempotents when surjective.
    bool properties_hold() const noexcept {
      return quality.almost_injective && (!quality.surjective || quality.idempotents_lift);
    }
  };

  //! rho must map A_S into the regular act S_S; throws PreconditionFailed
  //! otherwise.
  ActSemigroup act_to_semigroup(RightAct const& A, RightActMorphism const& rho);

  //! For a strict local isomorphism tau: T -> S with T having common weak
  //! local units, the right S-action t * s' = tt' on T, where tau(t') = s'.
  //! The least preimage is used and independence of that choice is
  //! verified. Throws PreconditionFailed, WitnessNotFound, or
  //! WellDefinednessViolation.
  RightAct sli_to_act(SemigroupMorphism const& tau);

}  // namespace sgx
