#pragma once

#include <vector>

#include "oracles.hpp"
#include "sgx/semigroup.hpp"

namespace fx {

  inline sgx::FiniteSemigroup T1() {
    return sgx::make_semigroup(1, {{0}});
  }
  inline sgx::FiniteSemigroup Z2() {
    return sgx::make_semigroup(2, {{0, 1}, {1, 0}});
  }
  inline sgx::FiniteSemigroup RZ2() {
    return sgx::make_semigroup(2, {{0, 1}, {0, 1}});
  }
  inline sgx::FiniteSemigroup LZ2() {
    return sgx::make_semigroup(2, {{0, 0}, {1, 1}});
  }
  inline sgx::FiniteSemigroup N2() {
    return sgx::make_semigroup(2, {{0, 0}, {0, 0}});
  }
  //! {0 < 1} under max, a monoid with identity 0.
  inline sgx::FiniteSemigroup chain2() {
    return sgx::make_semigroup(2, {{0, 1}, {1, 1}});
  }
  //! Z3 under addition.
  inline sgx::FiniteSemigroup Z3() {
    return sgx::make_semigroup(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  }
  //! Factorizable, not firm (found by exhaustive search at order 4).
  inline sgx::FiniteSemigroup factorizable_not_firm() {
    return sgx::make_semigroup(4, {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 2, 3}, {0, 0, 2, 3}});
  }

  inline oracle::Table table_of(sgx::FiniteSemigroup const& S) {
    return {S.table().begin(), S.table().end()};
  }

  //! Every labeled semigroup of orders 1..n, from the brute-force oracle.
  inline std::vector<sgx::FiniteSemigroup> oracle_corpus(std::size_t n) {
    std::vector<sgx::FiniteSemigroup> all;
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto& t : oracle::all_associative(k)) {
        all.emplace_back(k, std::move(t));
      }
    }
    return all;
  }

}  // namespace fx
