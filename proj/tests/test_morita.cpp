#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/error.hpp"
#include "sgx/morita.hpp"

using namespace sgx;

namespace {
  Pairing multiplication(FiniteSemigroup const& S) {
    std::vector<Element> table(S.table().begin(), S.table().end());
    return Pairing(LeftAct::regular(S), RightAct::regular(S), std::move(table));
  }
}  // namespace

TEST_SUITE("morita") {
  TEST_CASE("pairings must respect both actions") {
    auto const Z2 = fx::Z2();
    CHECK(multiplication(Z2).is_surjective());
    CHECK_THROWS_AS(Pairing(LeftAct::regular(Z2), RightAct::regular(Z2), {1, 1, 1, 1}),
                    BiactLawViolation);
    CHECK_THROWS_AS(Pairing(LeftAct::regular(Z2), RightAct::regular(Z2), {0, 1, 1}), OutOfRange);
    CHECK_THROWS_AS(Pairing(LeftAct::regular(Z2), RightAct::regular(fx::RZ2()), {0, 1, 1, 0}),
                    SemigroupMismatch);
    // N2 pairs everything to 0 and is not onto.
    CHECK_FALSE(multiplication(fx::N2()).is_surjective());
  }

  TEST_CASE("Morita semigroup over Z2") {
    auto const M = build_morita_semigroup(multiplication(fx::Z2()));
    CHECK(M.semigroup().order() == 2);
    CHECK(M.unitary());
    CHECK(M.surjectively_defined());
    CHECK(are_isomorphic(M.semigroup(), fx::Z2()));
  }

  TEST_CASE("Morita semigroup products follow the pairing rule on all orders <= 3") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const  M = build_morita_semigroup(multiplication(S));
      auto const& t = M.tensor();
      REQUIRE(M.semigroup().order() == t.num_classes());
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        for (std::size_t d = 0; d < t.num_classes(); ++d) {
          auto const [q, p]   = t.representative(c);
          auto const [q2, p2] = t.representative(d);
          CHECK(M.semigroup()(c, d) == t.class_of(q, S(S(p, q2), p2)));
        }
      }
      CHECK(M.unitary() == is_unitary(LeftAct::regular(S)));
      CHECK(M.surjectively_defined() == oracle::factorizable(fx::table_of(S)));
    }
  }

  TEST_CASE("tensor squares of firm semigroups are isomorphic to them") {
    for (auto const& S : fx::oracle_corpus(3)) {
      if (oracle::firm(fx::table_of(S))) {
        CHECK(are_isomorphic(tensor_square(S).semigroup(), S));
      }
    }
  }

  TEST_CASE("the canonical context is valid for factorizable semigroups") {
    for (auto const& S : fx::oracle_corpus(3)) {
      if (!oracle::factorizable(fx::table_of(S))) {
        CHECK_THROWS_AS(canonical_context(S), NotFactorizable);
        continue;
      }
      auto const ctx    = canonical_context(S);
      auto const report = verify_context(ctx);
      CHECK(report.valid());
      CHECK(report.first_failure().empty());
      CHECK(context_induced_semigroup_morphisms(ctx).properties_hold());
    }
    CHECK_THROWS_AS(canonical_context(fx::N2()), NotFactorizable);
  }

  TEST_CASE("a context with constant phi fails its laws") {
    auto const  Z2 = fx::Z2();
    auto const  P  = Biact::regular(Z2);
    auto const  theta = [&](Point p, Point q) { return Z2(p, q); };
    auto const  good  = MoritaContext::from_pair_maps(P, P, theta, theta);
    CHECK(verify_context(good).valid());
    auto const induced = context_induced_semigroup_morphisms(good);
    CHECK(induced.properties_hold());
    CHECK(induced.theta_quality.surjective);

    auto const bad = MoritaContext::from_pair_maps(P, P, theta, [](Point, Point) { return 0; });
    auto const report = verify_context(bad);
    CHECK_FALSE(report.valid());
    CHECK(report.first_failure().rfind("phi", 0) == 0);
    CHECK_THROWS_AS(context_induced_semigroup_morphisms(bad), ContextInvalid);

    CHECK_THROWS_AS(MoritaContext::from_pair_maps(P, P, [](Point p, Point) { return p; }, theta),
                    NotBalanced);
    CHECK_THROWS_AS(MoritaContext(P, P, {0, 1}, {0}), OutOfRange);
  }

  TEST_CASE("firm equivalence") {
    for (auto const& S : fx::oracle_corpus(3)) {
      if (oracle::firm(fx::table_of(S))) {
        CHECK(verify_firm_equivalence(canonical_context(S)).holds());
      }
    }
    CHECK_THROWS_AS(verify_firm_equivalence(canonical_context(fx::factorizable_not_firm())),
                    PreconditionFailed);
  }
}
