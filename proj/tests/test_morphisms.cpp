#include "doctest.h"
#include "fixtures.hpp"
#include "sgx/error.hpp"
#include "sgx/morphisms.hpp"

using namespace sgx;

namespace {
  //! Every multiplicative map S -> T, by brute force over all maps.
  std::vector<std::vector<Element>> multiplicative_maps(FiniteSemigroup const& S,
                                                        FiniteSemigroup const& T) {
    std::vector<std::vector<Element>> out;
    std::vector<Element>              f(S.order(), 0);
    while (true) {
      bool ok = true;
      for (Element x = 0; x < S.order() && ok; ++x) {
        for (Element y = 0; y < S.order() && ok; ++y) {
          ok = f[S(x, y)] == T(f[x], f[y]);
        }
      }
      if (ok) {
        out.push_back(f);
      }
      std::size_t i = S.order();
      while (i > 0 && f[i - 1] + 1 == T.order()) {
        f[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++f[i - 1];
    }
  }

  //! Injective on aSb whenever a in Sa and b in bS.
  bool almost_injective(FiniteSemigroup const& S, std::vector<Element> const& f) {
    std::size_t const n = S.order();
    auto in_Sa = [&](Element a) {
      for (Element s = 0; s < n; ++s) {
        if (S(s, a) == a) {
          return true;
        }
      }
      return false;
    };
    auto in_bS = [&](Element b) {
      for (Element s = 0; s < n; ++s) {
        if (S(b, s) == b) {
          return true;
        }
      }
      return false;
    };
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!in_Sa(a) || !in_bS(b)) {
          continue;
        }
        for (Element s = 0; s < n; ++s) {
          for (Element t = 0; t < n; ++t) {
            Element const x = S(S(a, s), b), y = S(S(a, t), b);
            if (x != y && f[x] == f[y]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  //! Injective on xS (right) or Sx (left) for every x.
  bool injective_on_ideals(FiniteSemigroup const& S, std::vector<Element> const& f, bool right) {
    std::size_t const n = S.order();
    for (Element x = 0; x < n; ++x) {
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          Element const u = right ? S(x, s) : S(s, x);
          Element const v = right ? S(x, t) : S(t, x);
          if (u != v && f[u] == f[v]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<FiniteSemigroup> small_semigroups() {
    return fx::oracle_corpus(2);
  }
}  // namespace

TEST_SUITE("morphisms") {
  TEST_CASE("construction checks multiplicativity") {
    CHECK(SemigroupMorphism(fx::Z2(), fx::Z2(), {0, 0}).map().size() == 2);
    try {
      SemigroupMorphism(fx::Z2(), fx::Z2(), {1, 1});
      FAIL("expected NotMultiplicative");
    } catch (NotMultiplicative const& e) {
      CHECK(e.x == 0);
      CHECK(e.y == 0);
    }
    CHECK_THROWS_AS(SemigroupMorphism(fx::Z2(), fx::T1(), {0, 1}), OutOfRange);
    CHECK_THROWS_AS(SemigroupMorphism(fx::Z2(), fx::T1(), {0}), OutOfRange);
  }

  TEST_CASE("quality of named maps") {
    auto const id = morphism_quality(SemigroupMorphism::identity(fx::Z2()));
    CHECK(id == MorphismQuality{true, true, true, true, true});

    // Constant map on Z2: aSb is all of Z2 and collapses.
    auto const constant = morphism_quality(SemigroupMorphism(fx::Z2(), fx::Z2(), {0, 0}));
    CHECK_FALSE(constant.almost_injective);
    CHECK_FALSE(constant.surjective);

    auto const onto_trivial = morphism_quality(SemigroupMorphism(fx::Z2(), fx::T1(), {0, 0}));
    CHECK(onto_trivial.surjective);
    CHECK_FALSE(onto_trivial.almost_injective);
    CHECK(onto_trivial.idempotents_lift);

    // Only 0 lies in Sa for N2, and 0S0 = {0}.
    auto const n2 = SemigroupMorphism(fx::N2(), fx::T1(), {0, 0});
    CHECK(is_almost_injective(n2));
    CHECK(morphism_quality(n2).strict_local_iso);

    auto const into_z2 = SemigroupMorphism(fx::T1(), fx::Z2(), {0});
    CHECK(is_injective(into_z2));
    CHECK_FALSE(is_surjective(into_z2));
    CHECK(idempotents_lift(into_z2));
    CHECK_FALSE(regulars_lift(into_z2));

    // Every aSb = {b} in RZ2 is a singleton.
    auto const rz2 = SemigroupMorphism(fx::RZ2(), fx::T1(), {0, 0});
    CHECK(is_almost_injective(rz2));
  }

  TEST_CASE("almost_injectivity_failure names a genuine collision") {
    auto const f = SemigroupMorphism(fx::Z2(), fx::Z2(), {0, 0});
    auto const w = almost_injectivity_failure(f);
    REQUIRE(w.has_value());
    CHECK(w->x != w->y);
    CHECK(f(w->x) == f(w->y));
  }

  TEST_CASE("quality agrees with brute force on every map between orders <= 2") {
    auto const all = small_semigroups();
    for (auto const& S : all) {
      for (auto const& T : all) {
        for (auto const& map : multiplicative_maps(S, T)) {
          SemigroupMorphism const f(S, T, map);
          auto const              q = morphism_quality(f);
          CHECK(q.almost_injective == almost_injective(S, map));
          std::vector<bool> hit(T.order(), false);
          for (auto x : map) {
            hit[x] = true;
          }
          CHECK(q.surjective == std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
          CHECK(q.strict_local_iso == (q.almost_injective && q.surjective));
          bool lifts = true;
          for (Element e = 0; e < T.order(); ++e) {
            if (T(e, e) != e) {
              continue;
            }
            bool found = false;
            for (Element x = 0; x < S.order(); ++x) {
              found = found || (S(x, x) == x && map[x] == e);
            }
            lifts = lifts && found;
          }
          CHECK(q.idempotents_lift == lifts);
        }
      }
    }
  }

  TEST_CASE("the injectivity conditions coincide under common weak local units") {
    auto const all = fx::oracle_corpus(3);
    for (auto const& S : all) {
      bool const cwlu = has_common_weak_local_units(S);
      for (auto const& T : small_semigroups()) {
        for (auto const& map : multiplicative_maps(S, T)) {
          SemigroupMorphism const f(S, T, map);
          if (!cwlu) {
            CHECK_THROWS_AS(check_injectivity_conditions(f), PreconditionFailed);
            continue;
          }
          auto const c = check_injectivity_conditions(f);
          CHECK(c.equivalent());
          CHECK(c.almost_injective == almost_injective(S, map));
          CHECK(c.injective_on_right_ideals == injective_on_ideals(S, map, true));
          CHECK(c.injective_on_left_ideals == injective_on_ideals(S, map, false));
        }
      }
    }
  }

  TEST_CASE("act_to_semigroup") {
    for (auto const& S : fx::oracle_corpus(3)) {
      auto const A = RightAct::regular(S);
      for (auto const& rho : enumerate_endomorphisms(A)) {
        auto const r = act_to_semigroup(A, rho);
        CHECK(r.properties_hold());
        for (Point a = 0; a < A.size(); ++a) {
          for (Point b = 0; b < A.size(); ++b) {
            CHECK(r.semigroup(a, b) == A.act(a, rho(b)));
          }
        }
      }
    }
    // rho must land in S_S: a trivial two-point act into Z2.
    RightAct const trivial(fx::Z2(), 2, {0, 0, 1, 1});
    auto const     self = enumerate_endomorphisms(trivial);
    REQUIRE_FALSE(self.empty());
    CHECK_THROWS_AS(act_to_semigroup(trivial, self.front()), PreconditionFailed);
  }

  TEST_CASE("sli_to_act") {
    auto const Z2 = fx::Z2();
    auto const A  = sli_to_act(SemigroupMorphism::identity(Z2));
    CHECK(A.size() == 2);
    CHECK(std::equal(A.table().begin(), A.table().end(), RightAct::regular(Z2).table().begin()));
    CHECK_THROWS_AS(sli_to_act(SemigroupMorphism(Z2, Z2, {0, 0})), PreconditionFailed);
    CHECK_THROWS_AS(sli_to_act(SemigroupMorphism::identity(fx::RZ2())), PreconditionFailed);
  }
}
