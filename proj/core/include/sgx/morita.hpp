#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgx/acts.hpp"
#include "sgx/morphisms.hpp"
#include "sgx/semigroup.hpp"
#include "sgx/tensor.hpp"

namespace sgx {

  //! An (S, S)-biact morphism <,> : _SP x Q_S -> S, that is
  //! <s.p, q> = s<p,q> and <p, q.s> = <p,q>s.
  class Pairing {
   public:
    //! table[p * |Q| + q] = <p, q>. Throws SemigroupMismatch, OutOfRange, or
    //! BiactLawViolation.
    Pairing(LeftAct P, RightAct Q, std::vector<Element> table);

    LeftAct const& left() const noexcept {
      return _left;
    }
    RightAct const& right() const noexcept {
      return _right;
    }
    FiniteSemigroup const& semigroup() const noexcept {
      return _left.semigroup();
    }
    Element operator()(Point p, Point q) const noexcept {
      return _table[p * _right.size() + q];
    }
    std::span<Element const> table() const noexcept {
      return _table;
    }
    bool is_surjective() const;

   private:
    LeftAct              _left;
    RightAct             _right;
    std::vector<Element> _table;
  };

  //! The semigroup Q (x)_S P with (q (x) p)(q' (x) p') = q (x) <p,q'>p'.
  class MoritaSemigroup {
   public:
    Pairing const& pairing() const noexcept {
      return _pairing;
    }
    //! Q (x)_S P; element i of semigroup() is class i.
    TensorProduct const& tensor() const noexcept {
      return _tensor;
    }
    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    //! P and Q are unitary acts.
    bool unitary() const noexcept {
      return _unitary;
    }
    //! The pairing is onto S.
    bool surjectively_defined() const noexcept {
      return _surjectively_defined;
    }

   private:
    friend MoritaSemigroup build_morita_semigroup(Pairing const&);

    MoritaSemigroup(Pairing pairing, TensorProduct tensor, FiniteSemigroup semigroup);

    Pairing         _pairing;
    TensorProduct   _tensor;
    FiniteSemigroup _semigroup;
    bool            _unitary;
    bool            _surjectively_defined;
  };

  //! The product is checked against every choice of representatives;
  //! WellDefinednessViolation signals an inconsistent pairing table.
  MoritaSemigroup build_morita_semigroup(Pairing const& pairing);

  inline MoritaSemigroup build_morita_semigroup(LeftAct P, RightAct Q, std::vector<Element> table) {
    return build_morita_semigroup(Pairing(std::move(P), std::move(Q), std::move(table)));
  }

  //! A Morita context (S, T, _SP_T, _TQ_S, theta, phi). The maps are given
  //! on tensor classes: theta on P (x)_T Q into S, phi on Q (x)_S P into T.
  //! Construction only checks shapes; verify_context checks the laws.
  class MoritaContext {
   public:
    //! Throws SemigroupMismatch or OutOfRange.
    MoritaContext(Biact P, Biact Q, std::vector<Element> theta, std::vector<Element> phi);

    //! theta and phi given on pairs, factored through the classes. Throws
    //! NotBalanced if they are not balanced.
    static MoritaContext from_pair_maps(Biact P, Biact Q, PairMap const& theta, PairMap const& phi);

    FiniteSemigroup const& S() const noexcept {
      return _P.left_semigroup();
    }
    FiniteSemigroup const& T() const noexcept {
      return _P.right_semigroup();
    }
    Biact const& P() const noexcept {
      return _P;
    }
    Biact const& Q() const noexcept {
      return _Q;
    }
    //! P (x)_T Q with residual (S, S) actions.
    TensorProduct const& PQ() const noexcept {
      return _PQ;
    }
    //! Q (x)_S P with residual (T, T) actions.
    TensorProduct const& QP() const noexcept {
      return _QP;
    }
    std::span<Element const> theta() const noexcept {
      return _theta;
    }
    std::span<Element const> phi() const noexcept {
      return _phi;
    }
    Element theta(Point p, Point q) const noexcept {
      return _theta[_PQ.class_of(p, q)];
    }
    Element phi(Point q, Point p) const noexcept {
      return _phi[_QP.class_of(q, p)];
    }

   private:
    Biact                _P;
    Biact                _Q;
    TensorProduct        _PQ;
    TensorProduct        _QP;
    std::vector<Element> _theta;
    std::vector<Element> _phi;
  };

  //! Outcome of one law: holds, or the first failing instance.
  struct LawCheck {
    std::string name;
    bool        holds;
    std::string witness;
  };

  struct ContextReport {
    std::vector<LawCheck> laws;
    bool                  unitary;
    bool                  surjective;

    bool valid() const noexcept;
    //! Name and witness of the first failing law, or empty.
    std::string first_failure() const;
  };

  //! Checks that theta and phi are biact morphisms and both mixed
  //! identities theta(p(x)q)p' = p phi(q(x)p') and
  //! q' theta(p(x)q) = phi(q'(x)p)q, and records the unitary and surjective
  //! flags.
  ContextReport verify_context(MoritaContext const& ctx);

  //! The two Morita semigroups a context induces, with theta and phi as
  //! semigroup morphisms out of them.
  struct InducedMorphisms {
    MoritaSemigroup   over_S;  // Q (x)_S P, pairing <p,q> = theta(p (x) q)
    MoritaSemigroup   over_T;  // P (x)_T Q, pairing <q,p> = phi(q (x) p)
    SemigroupMorphism theta;   // over_T -> S
    SemigroupMorphism phi;     // over_S -> T
    MorphismQuality   theta_quality;
    MorphismQuality   phi_quality;

    //! Both maps almost injective; surjective ones lift idempotents.
    bool properties_hold() const noexcept;
  };

  //! Throws ContextInvalid unless verify_context passes.
  InducedMorphisms context_induced_semigroup_morphisms(MoritaContext const& ctx);

  //! The context connecting S and S (x)_S S: P = S as an (S, S(x)S)-biact
  //! and Q = S as an (S(x)S, S)-biact, with S(x)S acting through
  //! multiplication, theta(p (x) q) = pq and phi(q (x) p) = q (x) p.
  //! Throws NotFactorizable.
  MoritaContext canonical_context(FiniteSemigroup const& S);

  //! The Morita semigroup S (x)_S S over S (pairing = multiplication).
  MoritaSemigroup tensor_square(FiniteSemigroup const& S);

  struct FirmEquivalenceReport {
    bool theta_isomorphism;     // theta: P (x)_T Q -> S is a semigroup isomorphism
    bool unitary;               // P (x)_T Q is a unitary Morita semigroup over T
    bool surjectively_defined;  // and surjectively defined

    bool holds() const noexcept {
      return theta_isomorphism && unitary && surjectively_defined;
    }
  };

  //! For a context between firm S and T with bijective theta and phi,
  //! checks that S is isomorphic (via theta) to a unitary surjectively
  //! defined Morita semigroup over T. Throws PreconditionFailed.
  FirmEquivalenceReport verify_firm_equivalence(MoritaContext const& ctx);

}  // namespace sgx
