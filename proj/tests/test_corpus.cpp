#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/corpus.hpp"
#include "sgx/error.hpp"
#include "sgx/tensor.hpp"

using namespace sgx;

TEST_SUITE("corpus") {
  TEST_CASE("labeled counts match brute force") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const expected = oracle::all_associative(n);
      auto const corpus   = enumerate_semigroups(n, Dedup::labeled);
      REQUIRE(corpus.members.size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(fx::table_of(corpus.members[i]) == expected[i]);
      }
      CHECK(count_by_sweep(n) == expected.size());
    }
    CHECK(enumerate_semigroups(1, Dedup::labeled).members.size() == 1);
    CHECK(enumerate_semigroups(2, Dedup::labeled).members.size() == 8);
    CHECK(enumerate_semigroups(3, Dedup::labeled).members.size() == 113);
  }

  TEST_CASE("isomorphism classes match brute force") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const corpus = enumerate_semigroups(n, Dedup::isomorphism);
      CHECK(corpus.members.size() == oracle::isomorphism_classes(n));
      for (std::size_t i = 0; i < corpus.members.size(); ++i) {
        auto const t = fx::table_of(corpus.members[i]);
        CHECK(t == oracle::least_relabeling(t));
        if (i > 0) {
          CHECK(fx::table_of(corpus.members[i - 1]) < t);
        }
      }
    }
    CHECK(enumerate_semigroups(2, Dedup::isomorphism).members.size() == 5);
    CHECK(enumerate_semigroups(3, Dedup::isomorphism).members.size() == 24);
  }

  TEST_CASE("order 4") {
    CHECK_THROWS_AS(enumerate_semigroups(4, Dedup::labeled), OrderTooLarge);
    CHECK_THROWS_AS(enumerate_semigroups(5, Dedup::labeled, true), OrderTooLarge);
    CHECK_THROWS_AS(enumerate_semigroups(0, Dedup::labeled), OutOfRange);
    CHECK_THROWS_AS(count_by_sweep(4), OrderTooLarge);

    auto const labeled = enumerate_semigroups(4, Dedup::labeled, true);
    CHECK(labeled.members.size() == 3492);
    std::set<oracle::Table> classes;
    for (auto const& S : labeled.members) {
      classes.insert(canonical_table(S));
    }
    CHECK(classes.size() == 188);
    CHECK(enumerate_semigroups(4, Dedup::isomorphism, true).members.size() == 188);
  }

  TEST_CASE("sampled order-4 tables are enumerated exactly when associative") {
    auto const     labeled = enumerate_semigroups(4, Dedup::labeled, true);
    std::set<oracle::Table> members;
    for (auto const& S : labeled.members) {
      members.insert(fx::table_of(S));
    }
    // Random relabelings of enumerated tables stay in the corpus, and
    // edited tables are in it exactly when associative.
    std::mt19937                               rng(20240611);
    std::uniform_int_distribution<std::size_t> pick(0, labeled.members.size() - 1);
    std::uniform_int_distribution<std::size_t> entry(0, 3);
    for (int i = 0; i < 200; ++i) {
      std::vector<std::size_t> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(members.count(oracle::relabel(fx::table_of(labeled.members[pick(rng)]), perm)) == 1);
    }
    // One-cell edits of members land on both sides of associativity.
    std::uniform_int_distribution<std::size_t> cell(0, 15);
    std::size_t                                associative = 0, rejected = 0;
    for (int i = 0; i < 5000; ++i) {
      oracle::Table t = fx::table_of(labeled.members[pick(rng)]);
      t[cell(rng)]    = entry(rng);
      bool const assoc = oracle::associative(t);
      (assoc ? associative : rejected)++;
      CHECK(members.count(t) == (assoc ? 1u : 0u));
    }
    CHECK(associative > 0);
    CHECK(rejected > 0);
  }

  TEST_CASE("semigroups_up_to") {
    CHECK(semigroups_up_to(3, Dedup::labeled).size() == 1 + 8 + 113);
    CHECK(semigroups_up_to(3, Dedup::isomorphism).size() == 1 + 5 + 24);
  }

  TEST_CASE("counterexamples") {
    auto const& menu = counterexample_predicates();
    CHECK(menu.size() == 8);

    auto const lu_not_cwlu = find_counterexample("lu-not-cwlu", 3);
    REQUIRE(lu_not_cwlu.has_value());
    CHECK(*lu_not_cwlu == fx::RZ2());

    auto const firm_not_wlu = find_counterexample("firm-not-wlu", 3);
    REQUIRE(firm_not_wlu.has_value());
    CHECK(firm_not_wlu->order() == 3);
    CHECK(is_firm(*firm_not_wlu));
    CHECK_FALSE(has_weak_local_units(*firm_not_wlu));

    CHECK_FALSE(find_counterexample("factorizable-not-firm", 3).has_value());
    auto const fnf = find_counterexample("factorizable-not-firm", 4, true);
    REQUIRE(fnf.has_value());
    CHECK(fnf->order() == 4);
    CHECK(is_factorizable(*fnf));
    CHECK_FALSE(oracle::firm(fx::table_of(*fnf)));

    CHECK_FALSE(find_counterexample("cwlu-not-firm", 3).has_value());
    CHECK_FALSE(find_counterexample("firm-not-factorizable", 3).has_value());
    CHECK_THROWS_AS(find_counterexample("no-such-predicate", 2), PreconditionFailed);
    CHECK_THROWS_AS(find_counterexample("lu-not-cwlu", 4), OrderTooLarge);
  }

  TEST_CASE("every predicate result satisfies its predicate") {
    for (auto const& p : counterexample_predicates()) {
      auto const found = find_counterexample(p.name, 3);
      if (found) {
        CHECK(p.holds(classify(*found)));
      }
      for (auto const& S : semigroups_up_to(3, Dedup::isomorphism)) {
        if (!found) {
          CHECK_FALSE(p.holds(classify(S)));
        }
      }
    }
  }
}
