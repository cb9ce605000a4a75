#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace sgx {

  //! Index of an element of a finite semigroup, 0 <= x < order.
  using Element = std::size_t;

  //! A finite semigroup on {0, ..., n-1} given by its Cayley table.
  //!
  //! The table is stored row-major, so product(x, y) == table()[x * n + y]
  //! (row = left factor). Construction checks every triple for
  //! associativity; a FiniteSemigroup is immutable afterwards and copies
  //! share the table.
  class FiniteSemigroup {
   public:
    //! Throws OutOfRange for order 0, a table of the wrong size or an entry
    //! >= order, and AssociativityViolation naming the first failing
    //! triple (lexicographic in x, y, z).
    FiniteSemigroup(std::size_t order, std::vector<Element> table);

    std::size_t order() const noexcept {
      return _order;
    }

    Element product(Element x, Element y) const noexcept {
      return (*_table)[x * _order + y];
    }

    Element operator()(Element x, Element y) const noexcept {
      return product(x, y);
    }

    std::span<Element const> table() const noexcept {
      return *_table;
    }

    friend bool operator==(FiniteSemigroup const& lhs,
                           FiniteSemigroup const& rhs) noexcept {
      return lhs._order == rhs._order
             && (lhs._table == rhs._table || *lhs._table == *rhs._table);
    }

   private:
    std::size_t                                _order;
    std::shared_ptr<std::vector<Element> const> _table;
  };

  //! Build from rows; rows[x][y] is the product xy.
  FiniteSemigroup make_semigroup(std::size_t                              order,
                                 std::vector<std::vector<Element>> const& rows);

  //! The set {e | ee = e}, ascending.
  std::vector<Element> idempotents(FiniteSemigroup const& S);

  //! Every s has idempotents e, f with fs = s = se.
  bool has_local_units(FiniteSemigroup const& S);

  //! Every s has u, v with us = s = sv.
  bool has_weak_local_units(FiniteSemigroup const& S);

  //! Every pair s, s' has a common left unit u and a common right unit v.
  bool has_common_weak_local_units(FiniteSemigroup const& S);

  //! SS = S.
  bool is_factorizable(FiniteSemigroup const& S);

  //! x = xyx for some y.
  bool is_regular_element(FiniteSemigroup const& S, Element x);

  std::optional<Element> identity(FiniteSemigroup const& S);

  //! Least subsemigroup containing the generators, as an ascending list.
  //! Throws EmptyGenerators or OutOfRange.
  std::vector<Element> subsemigroup_closure(FiniteSemigroup const& S,
                                            std::span<Element const> generators);

  //! The set {xy | x in lhs, y in rhs}, ascending and without repeats.
  std::vector<Element> set_product(FiniteSemigroup const&   S,
                                   std::span<Element const> lhs,
                                   std::span<Element const> rhs);

  //! An isomorphism S -> T as an element map, if one exists.
  std::optional<std::vector<Element>> find_isomorphism(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T);

  inline bool are_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    return find_isomorphism(S, T).has_value();
  }

  //! The lexicographically least row-major table among all relabelings of
  //! S. Enumerates order! permutations, so intended for order <= 8.
  std::vector<Element> canonical_table(FiniteSemigroup const& S);

  //! Small named semigroups used throughout the tests and examples.
  namespace catalog {
    //! T1, the one-element semigroup.
    FiniteSemigroup trivial();
    //! Z_n under addition mod n.
    FiniteSemigroup cyclic_group(std::size_t n);
    //! xy = y.
    FiniteSemigroup right_zero(std::size_t n);
    //! xy = x.
    FiniteSemigroup left_zero(std::size_t n);
    //! xy = 0.
    FiniteSemigroup null_semigroup(std::size_t n);
    //! {0, ..., n-1} under max, a chain semilattice (n-1 is a zero, 0 an
    //! identity).
    FiniteSemigroup chain(std::size_t n);
  }  // namespace catalog

}  // namespace sgx
