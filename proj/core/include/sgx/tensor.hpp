#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sgx/acts.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

  //! A pair (a, b) in A x B.
  using PointPair = std::pair<Point, Point>;

  //! The tensor product A (x)_S B of a right act A_S and a left act _SB:
  //! the quotient of A x B by the least equivalence identifying (a.s, b)
  //! with (a, s.b).
  //!
  //! Classes are numbered in increasing order of their least member, where
  //! pairs are ordered lexicographically. If A is also a left T-act (or B a
  //! right U-act) the residual action on classes is available.
  class TensorProduct {
   public:
    RightAct const& first() const noexcept {
      return _first;
    }
    LeftAct const& second() const noexcept {
      return _second;
    }
    FiniteSemigroup const& semigroup() const noexcept {
      return _first.semigroup();
    }

    std::size_t num_classes() const noexcept {
      return _members.size();
    }
    std::size_t class_of(Point a, Point b) const noexcept {
      return _class_of[a * _second.size() + b];
    }
    std::size_t class_of(PointPair ab) const noexcept {
      return class_of(ab.first, ab.second);
    }
    //! Members of a class in lexicographic order.
    std::vector<PointPair> const& members(std::size_t c) const noexcept {
      return _members[c];
    }
    PointPair representative(std::size_t c) const noexcept {
      return _members[c].front();
    }

    //! t.(a (x) b) = (t.a) (x) b, when built from a biact on the left.
    std::optional<LeftAct> const& residual_left() const noexcept {
      return _residual_left;
    }
    //! (a (x) b).u = a (x) (b.u), when built from a biact on the right.
    std::optional<RightAct> const& residual_right() const noexcept {
      return _residual_right;
    }
    //! Requires both residual actions; throws PreconditionFailed otherwise.
    Biact as_biact() const;

   private:
    friend TensorProduct make_tensor(RightAct const&,
                                     LeftAct const&,
                                     std::optional<LeftAct> const&,
                                     std::optional<RightAct> const&);

    TensorProduct(RightAct first, LeftAct second)
        : _first(std::move(first)), _second(std::move(second)) {}

    RightAct                            _first;
    LeftAct                             _second;
    std::vector<std::size_t>            _class_of;
    std::vector<std::vector<PointPair>> _members;
    std::optional<LeftAct>              _residual_left;
    std::optional<RightAct>             _residual_right;
  };

  //! Throws SemigroupMismatch unless both acts are over the same semigroup.
  TensorProduct tensor_product(RightAct const& A, LeftAct const& B);
  //! A is a (T, S)-biact; the result carries the residual left T-action.
  TensorProduct tensor_product(Biact const& A, LeftAct const& B);
  //! B is an (S, U)-biact; the result carries the residual right U-action.
  TensorProduct tensor_product(RightAct const& A, Biact const& B);
  //! Both residual actions; the result is a (T, U)-biact via as_biact().
  TensorProduct tensor_product(Biact const& A, Biact const& B);

  //! A map A x B -> {0, ..., codomain_size - 1}.
  using PairMap = std::function<std::size_t(Point, Point)>;

  //! Factor a balanced map through the classes. Throws NotBalanced(a, s, b)
  //! for the first triple with f(a.s, b) != f(a, s.b), and OutOfRange for
  //! values outside the codomain.
  std::vector<std::size_t> induced_map(TensorProduct const& t,
                                       PairMap const&       f,
                                       std::size_t          codomain_size);

  //! One elementary identification. Forward moves (a.s, b) to (a, s.b);
  //! backward moves (a, s.b) to (a.s, b).
  struct TossingStep {
    Point   a;
    Element s;
    Point   b;
    bool    forward;

    friend bool operator==(TossingStep const&, TossingStep const&) = default;
  };

  struct TossingWitness {
    PointPair                from;
    PointPair                to;
    std::vector<TossingStep> steps;
  };

  //! A shortest chain of elementary steps from `from` to `to`, if the two
  //! pairs lie in the same class. Among shortest chains the search visits
  //! neighbours in lexicographic order, so the result is reproducible.
  std::optional<TossingWitness> tossing_witness(TensorProduct const& t,
                                                PointPair            from,
                                                PointPair            to);

  //! Replay the steps starting at w.from; returns the final pair, or
  //! nothing if some step does not apply to the current pair.
  std::optional<PointPair> replay(TossingWitness const& w,
                                  RightAct const&       A,
                                  LeftAct const&        B);

  //! The multiplication S (x)_S S -> S, s (x) s' -> ss', on classes.
  std::vector<Element> tensor_multiplication(TensorProduct const& SS);

  //! The multiplication map S (x)_S S -> S is bijective.
  bool is_firm(FiniteSemigroup const& S);

}  // namespace sgx
