#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/classify.hpp"
#include "sgx/error.hpp"
#include "sgx/semigroup.hpp"
#include "sgx/tensor.hpp"

using namespace sgx;

TEST_SUITE("semigroup-core") {
  TEST_CASE("make_semigroup validates tables") {
    CHECK(fx::T1().order() == 1);
    auto const rz2 = fx::RZ2();
    CHECK(rz2(0, 1) == 1);
    CHECK(rz2(1, 0) == 0);
    CHECK_THROWS_AS(make_semigroup(2, {{0, 0}, {0, 2}}), OutOfRange);
    CHECK_THROWS_AS(make_semigroup(2, {{0, 0}, {0}}), OutOfRange);
    CHECK_THROWS_AS(FiniteSemigroup(0, {}), OutOfRange);
  }

  TEST_CASE("associativity failure names the first failing triple") {
    // 1*0 = 1 and 0*1 = 0 otherwise zero: (1 0) 1 = 0 but 1 (0 1) = 1.
    try {
      make_semigroup(2, {{0, 0}, {1, 0}});
      FAIL("expected AssociativityViolation");
    } catch (AssociativityViolation const& e) {
      CHECK(e.x == 1);
      CHECK(e.y == 0);
      CHECK(e.z == 1);
    }
  }

  TEST_CASE("idempotents") {
    CHECK(idempotents(fx::T1()) == std::vector<Element>{0});
    CHECK(idempotents(fx::RZ2()) == std::vector<Element>{0, 1});
    CHECK(idempotents(fx::Z2()) == std::vector<Element>{0});
  }

  TEST_CASE("idempotents are the fixed points of squaring") {
    for (auto const& S : fx::oracle_corpus(3)) {
      std::vector<Element> expected;
      for (Element e = 0; e < S.order(); ++e) {
        if (oracle::idempotent(fx::table_of(S), e)) {
          expected.push_back(e);
        }
      }
      CHECK(idempotents(S) == expected);
    }
  }

  TEST_CASE("class predicates on the named examples") {
    CHECK(has_local_units(fx::RZ2()));
    CHECK(has_local_units(fx::Z2()));
    CHECK_FALSE(has_local_units(fx::N2()));

    CHECK(has_weak_local_units(fx::RZ2()));
    CHECK_FALSE(has_weak_local_units(fx::N2()));
    CHECK(has_weak_local_units(fx::Z2()));

    CHECK_FALSE(has_common_weak_local_units(fx::RZ2()));
    CHECK(has_common_weak_local_units(fx::Z2()));
    CHECK_FALSE(has_common_weak_local_units(fx::LZ2()));

    CHECK_FALSE(is_factorizable(fx::N2()));
    CHECK(is_factorizable(fx::RZ2()));
    CHECK(is_factorizable(fx::Z2()));
  }

  TEST_CASE("class predicates agree with direct definitions on all orders <= 3") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const t = fx::table_of(S);
      CAPTURE(t);
      CHECK(has_local_units(S) == oracle::local_units(t));
      CHECK(has_weak_local_units(S) == oracle::weak_local_units(t));
      CHECK(has_common_weak_local_units(S) == oracle::common_weak_local_units(t));
      CHECK(is_factorizable(S) == oracle::factorizable(t));
      CHECK(is_firm(S) == oracle::firm(t));
    }
  }

  TEST_CASE("classify") {
    ClassReport const all_true{true, true, true, true, true};
    ClassReport const all_false{false, false, false, false, false};
    CHECK(classify(fx::Z2()) == all_true);
    CHECK(classify(fx::RZ2()) == ClassReport{true, true, false, true, true});
    CHECK(classify(fx::N2()) == all_false);

    std::ostringstream out;
    out << classify(fx::RZ2());
    CHECK(out.str() == "LU:true WLU:true CWLU:false firm:true factorizable:true");
  }

  TEST_CASE("classify is deterministic and satisfies the class chain") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const r = classify(S);
      CHECK(r.chain_consistent());
      CHECK(classify(S) == r);
    }
  }

  TEST_CASE("a factorizable semigroup need not be firm") {
    auto const S = fx::factorizable_not_firm();
    CHECK(is_factorizable(S));
    CHECK_FALSE(is_firm(S));
    CHECK_FALSE(oracle::firm(fx::table_of(S)));
    CHECK(oracle::factorizable(fx::table_of(S)));
  }

  TEST_CASE("subsemigroup_closure") {
    std::vector<Element> one{1}, zero{0};
    CHECK(subsemigroup_closure(fx::Z2(), one) == std::vector<Element>{0, 1});
    CHECK(subsemigroup_closure(fx::RZ2(), zero) == std::vector<Element>{0});
    CHECK(subsemigroup_closure(fx::T1(), zero) == std::vector<Element>{0});
    CHECK_THROWS_AS(subsemigroup_closure(fx::Z2(), std::vector<Element>{}), EmptyGenerators);
    CHECK_THROWS_AS(subsemigroup_closure(fx::Z2(), std::vector<Element>{2}), OutOfRange);
  }

  TEST_CASE("isomorphism and canonical tables") {
    CHECK(are_isomorphic(fx::Z2(), fx::Z2()));
    CHECK_FALSE(are_isomorphic(fx::RZ2(), fx::LZ2()));
    CHECK_FALSE(are_isomorphic(fx::Z2(), fx::chain2()));
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const c = canonical_table(S);
      CHECK(c == oracle::least_relabeling(fx::table_of(S)));
      FiniteSemigroup const C(S.order(), c);
      auto const            iso = find_isomorphism(S, C);
      REQUIRE(iso.has_value());
      for (Element x = 0; x < S.order(); ++x) {
        for (Element y = 0; y < S.order(); ++y) {
          CHECK((*iso)[S(x, y)] == C((*iso)[x], (*iso)[y]));
        }
      }
    }
  }

  TEST_CASE("catalog") {
    CHECK(catalog::trivial() == fx::T1());
    CHECK(catalog::cyclic_group(2) == fx::Z2());
    CHECK(catalog::right_zero(2) == fx::RZ2());
    CHECK(catalog::left_zero(2) == fx::LZ2());
    CHECK(catalog::null_semigroup(2) == fx::N2());
    CHECK(identity(fx::Z2()) == Element{0});
    CHECK_FALSE(identity(fx::RZ2()).has_value());
    CHECK(is_regular_element(fx::RZ2(), 1));
    CHECK_FALSE(is_regular_element(fx::N2(), 1));
  }
}
