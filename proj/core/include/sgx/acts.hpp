#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgx/semigroup.hpp"

namespace sgx {

  //! Index of a point in the carrier of an act.
  using Point = std::size_t;

  //! A finite right act A_S: act(a, s) = a.s with (a.s).s' = a.(ss').
  class RightAct {
   public:
    //! action[a * S.order() + s] = a.s. Throws OutOfRange or
    //! CompatibilityViolation(a, s, s').
    RightAct(FiniteSemigroup S, std::size_t size, std::vector<Point> action);

    //! S acting on itself by right multiplication.
    static RightAct regular(FiniteSemigroup const& S);

    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Point act(Point a, Element s) const noexcept {
      return _action[a * _semigroup.order() + s];
    }
    std::span<Point const> table() const noexcept {
      return _action;
    }

   private:
    FiniteSemigroup    _semigroup;
    std::size_t        _size;
    std::vector<Point> _action;
  };

  //! A finite left act _SA: act(s, a) = s.a with s.(s'.a) = (ss').a.
  class LeftAct {
   public:
    //! action[s * size + a] = s.a.
    LeftAct(FiniteSemigroup S, std::size_t size, std::vector<Point> action);

    static LeftAct regular(FiniteSemigroup const& S);

    FiniteSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Point act(Element s, Point a) const noexcept {
      return _action[s * _size + a];
    }
    std::span<Point const> table() const noexcept {
      return _action;
    }

   private:
    FiniteSemigroup    _semigroup;
    std::size_t        _size;
    std::vector<Point> _action;
  };

  //! An (S, T)-biact: a left S-act and a right T-act on the same carrier
  //! with (s.a).t = s.(a.t).
  class Biact {
   public:
    Biact(LeftAct left, RightAct right);

    //! S as an (S, S)-biact under multiplication.
    static Biact regular(FiniteSemigroup const& S);

    LeftAct const& left() const noexcept {
      return _left;
    }
    RightAct const& right() const noexcept {
      return _right;
    }
    FiniteSemigroup const& left_semigroup() const noexcept {
      return _left.semigroup();
    }
    FiniteSemigroup const& right_semigroup() const noexcept {
      return _right.semigroup();
    }
    std::size_t size() const noexcept {
      return _left.size();
    }
    Point act_left(Element s, Point a) const noexcept {
      return _left.act(s, a);
    }
    Point act_right(Point a, Element t) const noexcept {
      return _right.act(a, t);
    }

   private:
    LeftAct  _left;
    RightAct _right;
  };

  //! A.S = A.
  bool is_unitary(RightAct const& A);
  //! S.A = A.
  bool is_unitary(LeftAct const& A);
  //! Unitary on both sides.
  bool is_unitary(Biact const& A);

  //! An equivariant map between two acts of the same kind.
  template <typename Act>
  class ActMorphism {
   public:
    //! Throws OutOfRange, SemigroupMismatch, or EquivarianceViolation(a, s)
    //! naming the first failing point and element.
    ActMorphism(Act source, Act target, std::vector<Point> map);

    Act const& source() const noexcept {
      return _source;
    }
    Act const& target() const noexcept {
      return _target;
    }
    std::span<Point const> map() const noexcept {
      return _map;
    }
    Point operator()(Point a) const noexcept {
      return _map[a];
    }

   private:
    Act                _source;
    Act                _target;
    std::vector<Point> _map;
  };

  using RightActMorphism = ActMorphism<RightAct>;
  using LeftActMorphism  = ActMorphism<LeftAct>;
  using BiactMorphism    = ActMorphism<Biact>;

  template <typename Act>
  ActMorphism<Act> check_morphism(std::vector<Point> map,
                                  Act const&         source,
                                  Act const&         target) {
    return ActMorphism<Act>(source, target, std::move(map));
  }

  //! Candidate limit for exhaustive searches: the value of the environment
  //! variable SGX_MAX_CANDIDATES if set, otherwise 10^6.
  std::size_t default_candidate_limit();

  //! All endomorphisms in lexicographic order of their maps. Throws
  //! SearchSpaceTooLarge when size^size exceeds the limit.
  std::vector<RightActMorphism> enumerate_endomorphisms(
      RightAct const& A,
      std::size_t     limit = default_candidate_limit());
  std::vector<LeftActMorphism> enumerate_endomorphisms(
      LeftAct const& A,
      std::size_t    limit = default_candidate_limit());
  std::vector<BiactMorphism> enumerate_endomorphisms(
      Biact const& A,
      std::size_t  limit = default_candidate_limit());

}  // namespace sgx
