#include <cstdlib>

#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/acts.hpp"
#include "sgx/error.hpp"

using namespace sgx;

namespace {
  std::vector<Point> self_map(auto const& m) {
    return {m.map().begin(), m.map().end()};
  }
}  // namespace

TEST_SUITE("acts") {
  TEST_CASE("regular and trivial acts are valid") {
    auto const z2 = fx::Z2();
    CHECK(RightAct::regular(z2).size() == 2);
    CHECK(RightAct::regular(fx::RZ2()).act(0, 1) == 1);
    CHECK(LeftAct::regular(fx::RZ2()).act(0, 1) == 1);
    // Z2 acting trivially on two points.
    RightAct const trivial(z2, 2, {0, 0, 1, 1});
    CHECK(trivial.act(1, 1) == 1);
    CHECK(Biact::regular(z2).size() == 2);
  }

  TEST_CASE("bad action tables are rejected") {
    // a.1 swaps 0 and 1 for Z2 but (a.1).1 = a.0 must equal a.(1+1) = a.0 ... so use
    // a table where a.0 moves points: (a.0).0 = a.(0+0) forces a.0 idempotent.
    CHECK_THROWS_AS(RightAct(fx::Z2(), 3, {1, 0, 2, 2, 0, 1}), CompatibilityViolation);
    CHECK_THROWS_AS(RightAct(fx::Z2(), 2, {0, 2, 1, 0}), OutOfRange);
    CHECK_THROWS_AS(LeftAct(fx::Z2(), 2, {0, 1, 1}), OutOfRange);
    CHECK_THROWS_AS(RightAct(fx::Z2(), 0, {}), OutOfRange);
    // Left and right actions that do not commute: RZ2 left regular with a
    // right Z2 swap: (s.a).t vs s.(a.t).
    LeftAct const  left = LeftAct(fx::LZ2(), 2, {0, 0, 1, 1});  // s.a = s
    RightAct const swap(fx::Z2(), 2, {0, 1, 1, 0});
    CHECK_THROWS_AS(Biact(left, swap), CompatibilityViolation);
  }

  TEST_CASE("is_unitary") {
    CHECK(is_unitary(RightAct::regular(fx::Z2())));
    CHECK_FALSE(is_unitary(RightAct::regular(fx::N2())));
    CHECK(is_unitary(RightAct::regular(fx::RZ2())));
    CHECK(is_unitary(LeftAct::regular(fx::RZ2())));
    CHECK_FALSE(is_unitary(LeftAct::regular(fx::N2())));
    CHECK(is_unitary(Biact::regular(fx::Z2())));
  }

  TEST_CASE("is_unitary agrees with the image of the action") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const        A = RightAct::regular(S);
      std::vector<bool> hit(A.size(), false);
      for (auto p : A.table()) {
        hit[p] = true;
      }
      CHECK(is_unitary(A) == std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }

  TEST_CASE("check_morphism") {
    auto const z2 = RightAct::regular(fx::Z2());
    CHECK(check_morphism<RightAct>({0, 1}, z2, z2).map().size() == 2);
    CHECK(check_morphism<RightAct>({1, 0}, z2, z2)(0) == 1);
    auto const rz2 = RightAct::regular(fx::RZ2());
    try {
      check_morphism<RightAct>({0, 0}, rz2, rz2);
      FAIL("expected EquivarianceViolation");
    } catch (EquivarianceViolation const& e) {
      CHECK(e.s == 1);
    }
    CHECK_THROWS_AS(check_morphism<RightAct>({0, 2}, z2, z2), OutOfRange);
    CHECK_THROWS_AS(check_morphism<RightAct>({0, 1}, z2, rz2), SemigroupMismatch);
  }

  TEST_CASE("enumerate_endomorphisms on small acts") {
    CHECK(enumerate_endomorphisms(LeftAct::regular(fx::Z2())).size() == 2);
    CHECK(enumerate_endomorphisms(RightAct::regular(fx::T1())).size() == 1);
    // f(a s) = f(s) must equal f(a) s = s: only the identity.
    auto const rz2_right = enumerate_endomorphisms(RightAct::regular(fx::RZ2()));
    REQUIRE(rz2_right.size() == 1);
    CHECK(self_map(rz2_right[0]) == std::vector<Point>{0, 1});
    // s.a = a for the left regular act of RZ2: every map.
    CHECK(enumerate_endomorphisms(LeftAct::regular(fx::RZ2())).size() == 4);
  }

  TEST_CASE("enumerate_endomorphisms matches brute force, contains the identity, and is closed") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const               A = RightAct::regular(S);
      std::vector<std::size_t> act(A.table().begin(), A.table().end());
      auto const               expected = oracle::equivariant_self_maps(act, A.size(), S.order());
      auto const               endos    = enumerate_endomorphisms(A);
      REQUIRE(endos.size() == expected.size());
      std::vector<std::vector<Point>> maps;
      for (std::size_t i = 0; i < endos.size(); ++i) {
        maps.push_back(self_map(endos[i]));
        CHECK(maps.back() == expected[i]);
      }
      std::vector<Point> id(A.size());
      std::iota(id.begin(), id.end(), 0);
      CHECK(std::find(maps.begin(), maps.end(), id) != maps.end());
      for (auto const& f : maps) {
        for (auto const& g : maps) {
          std::vector<Point> fg(A.size());
          for (Point a = 0; a < A.size(); ++a) {
            fg[a] = f[g[a]];
          }
          CHECK(std::find(maps.begin(), maps.end(), fg) != maps.end());
        }
      }
    }
  }

  TEST_CASE("the candidate guard") {
    auto const A = RightAct::regular(fx::Z3());
    CHECK_THROWS_AS(enumerate_endomorphisms(A, 26), SearchSpaceTooLarge);
    CHECK(enumerate_endomorphisms(A, 27).size() == 3);

    ::setenv("SGX_MAX_CANDIDATES", "10", 1);
    CHECK(default_candidate_limit() == 10);
    CHECK_THROWS_AS(enumerate_endomorphisms(A), SearchSpaceTooLarge);
    ::unsetenv("SGX_MAX_CANDIDATES");
    CHECK(default_candidate_limit() == 1'000'000);
  }
}
