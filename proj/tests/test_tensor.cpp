#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/error.hpp"
#include "sgx/tensor.hpp"

using namespace sgx;

namespace {
  TensorProduct square(FiniteSemigroup const& S) {
    return tensor_product(RightAct::regular(S), LeftAct::regular(S));
  }
}  // namespace

TEST_SUITE("tensor") {
  TEST_CASE("small tensor products") {
    CHECK(square(fx::T1()).num_classes() == 1);
    CHECK(square(fx::Z2()).num_classes() == 2);
    // (0, b) ~ (a, 0) for all a, b; (1, 1) stands alone.
    auto const n2 = square(fx::N2());
    CHECK(n2.num_classes() == 2);
    CHECK(n2.class_of(0, 1) == n2.class_of(1, 0));
    CHECK(n2.class_of(1, 1) == 1);
    CHECK(n2.members(0) == std::vector<PointPair>{{0, 0}, {0, 1}, {1, 0}});

    // Z2 acting trivially on the right: (a, 0) ~ (a, 1).
    RightAct const trivial(fx::Z2(), 2, {0, 0, 1, 1});
    auto const     t = tensor_product(trivial, LeftAct::regular(fx::Z2()));
    CHECK(t.num_classes() == 2);
    CHECK(t.representative(1) == PointPair{1, 0});
  }

  TEST_CASE("classes agree with the fixed-point closure on all orders <= 3") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const        t   = square(S);
      auto const        rel = oracle::regular_tensor_relation(fx::table_of(S));
      std::size_t const n   = S.order();
      std::size_t const m   = n * n;
      CHECK(t.num_classes() == oracle::count_classes(rel, m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          CHECK((t.class_of(i / n, i % n) == t.class_of(j / n, j % n)) == rel[i * m + j]);
        }
      }
      // Least-member numbering.
      for (std::size_t c = 1; c < t.num_classes(); ++c) {
        CHECK(t.representative(c - 1) < t.representative(c));
      }
    }
  }

  TEST_CASE("tossing witnesses replay and exist exactly within a class") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const        t = square(S);
      std::size_t const n = S.order();
      for (Point a = 0; a < n; ++a) {
        for (Point b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < t.num_classes(); ++c) {
            auto const to = t.representative(c);
            auto const w  = tossing_witness(t, {a, b}, to);
            REQUIRE(w.has_value() == (t.class_of(a, b) == c));
            if (w) {
              CHECK(replay(*w, t.first(), t.second()) == to);
            }
          }
        }
      }
    }
  }

  TEST_CASE("tossing witness shape") {
    auto const t = square(fx::N2());
    auto const w = tossing_witness(t, {0, 1}, {1, 0});
    REQUIRE(w.has_value());
    // (0, 1) = (1.1, 1) -> (1, 1.1) = (1, 0) in one forward step.
    CHECK(w->steps.size() == 1);
    CHECK(w->steps.front().forward);
    auto const self = tossing_witness(t, {1, 1}, {1, 1});
    REQUIRE(self.has_value());
    CHECK(self->steps.empty());
    CHECK_FALSE(tossing_witness(t, {1, 1}, {0, 0}).has_value());
  }

  TEST_CASE("induced maps") {
    auto const z2 = square(fx::Z2());
    auto const S  = fx::Z2();
    auto const mu = induced_map(z2, [&](Point a, Point b) { return S(a, b); }, 2);
    CHECK(mu.size() == 2);
    CHECK(mu[z2.class_of(1, 1)] == 0);
    CHECK(mu == tensor_multiplication(z2));
    try {
      induced_map(z2, [](Point a, Point) { return a; }, 2);
      FAIL("expected NotBalanced");
    } catch (NotBalanced const& e) {
      CHECK(e.a == 0);
      CHECK(e.s == 1);
      CHECK(e.b == 0);
    }
    CHECK_THROWS_AS(induced_map(z2, [&](Point a, Point b) { return S(a, b) + 5; }, 2), OutOfRange);
  }

  TEST_CASE("residual actions") {
    auto const Z2 = fx::Z2();
    auto const t  = tensor_product(Biact::regular(Z2), Biact::regular(Z2));
    REQUIRE(t.residual_left().has_value());
    REQUIRE(t.residual_right().has_value());
    auto const b = t.as_biact();
    CHECK(b.size() == 2);
    CHECK(b.act_left(1, t.class_of(0, 0)) == t.class_of(1, 0));
    CHECK(b.act_right(t.class_of(0, 0), 1) == t.class_of(0, 1));

    auto const left_only = tensor_product(Biact::regular(Z2), LeftAct::regular(Z2));
    CHECK(left_only.residual_left().has_value());
    CHECK_FALSE(left_only.residual_right().has_value());
    CHECK_THROWS_AS(left_only.as_biact(), PreconditionFailed);
  }

  TEST_CASE("mismatched semigroups") {
    CHECK_THROWS_AS(tensor_product(RightAct::regular(fx::Z2()), LeftAct::regular(fx::RZ2())),
                    SemigroupMismatch);
  }

  TEST_CASE("firmness") {
    CHECK(is_firm(fx::Z2()));
    CHECK(is_firm(fx::RZ2()));
    CHECK_FALSE(is_firm(fx::N2()));
    auto const mu = tensor_multiplication(square(fx::RZ2()));
    CHECK(mu == std::vector<Element>{0, 1});
  }
}
