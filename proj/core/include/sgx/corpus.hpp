#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgx/classify.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

  enum class Dedup { labeled, isomorphism };

  //! Largest order the enumerator accepts. Order 4 additionally needs
  //! explicit permission.
  inline constexpr std::size_t max_corpus_order = 4;

  //! All semigroups of one order. Labeled members come in lexicographic
  //! order of their row-major tables; in isomorphism mode each member is
  //! the lexicographically least table of its class, in increasing order.
  struct Corpus {
    std::size_t                  order;
    Dedup                        mode;
    std::vector<FiniteSemigroup> members;
  };

  //! Throws OrderTooLarge for n > 4, or n = 4 without allow_order4, and
  //! OutOfRange for n = 0. For n <= 3 the labeled count is checked against
  //! a plain sweep over all n^(n*n) tables.
  Corpus enumerate_semigroups(std::size_t n, Dedup mode, bool allow_order4 = false);

  //! Members of orders 1..n concatenated.
  std::vector<FiniteSemigroup> semigroups_up_to(std::size_t n, Dedup mode, bool allow_order4 = false);

  //! Number of associative tables on n elements by checking every table.
  //! Throws OrderTooLarge for n > 3.
  std::size_t count_by_sweep(std::size_t n);

  struct CounterexamplePredicate {
    std::string                              name;
    std::string                              description;
    std::function<bool(ClassReport const&)> holds;
  };

  //! The fixed menu, e.g. "factorizable-not-firm", "lu-not-cwlu".
  std::vector<CounterexamplePredicate> const& counterexample_predicates();

  //! Searches orders 1..n up to isomorphism. Candidates of one order are
  //! visited in lexicographic order of the column-major reading of their
  //! canonical tables. Throws OrderTooLarge, or PreconditionFailed for an
  //! unknown predicate name.
  std::optional<FiniteSemigroup> find_counterexample(std::string const& predicate,
                                                     std::size_t        n,
                                                     bool               allow_order4 = false);

}  // namespace sgx
