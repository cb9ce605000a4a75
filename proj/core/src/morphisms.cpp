#include "sgx/morphisms.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "sgx/error.hpp"

namespace sgx {

  SemigroupMorphism::SemigroupMorphism(FiniteSemigroup      source,
                                       FiniteSemigroup      target,
                                       std::vector<Element> map)
      : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
    if (_map.size() != _source.order()) {
      throw OutOfRange("morphism map has " + std::to_string(_map.size())
                       + " entries, expected " + std::to_string(_source.order()));
    }
    for (Element v : _map) {
      if (v >= _target.order()) {
        throw OutOfRange("morphism image " + std::to_string(v) + " is out of range");
      }
    }
    for (Element x = 0; x < _source.order(); ++x) {
      for (Element y = 0; y < _source.order(); ++y) {
        if (_map[_source(x, y)] != _target(_map[x], _map[y])) {
          throw NotMultiplicative(x, y);
        }
      }
    }
  }

  SemigroupMorphism SemigroupMorphism::identity(FiniteSemigroup const& S) {
    std::vector<Element> id(S.order());
    for (Element x = 0; x < S.order(); ++x) {
      id[x] = x;
    }
    return SemigroupMorphism(S, S, std::move(id));
  }

  bool is_injective(SemigroupMorphism const& f) {
    std::vector<bool> hit(f.target().order(), false);
    for (Element v : f.map()) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  bool is_surjective(SemigroupMorphism const& f) {
    std::vector<bool> hit(f.target().order(), false);
    for (Element v : f.map()) {
      hit[v] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  namespace {
    // First pair of distinct members of `set` identified by f.
    std::optional<std::pair<Element, Element>> collision(SemigroupMorphism const& f,
                                                         std::span<Element const> set) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          if (f(set[i]) == f(set[j])) {
            return std::make_pair(set[i], set[j]);
          }
        }
      }
      return std::nullopt;
    }

    std::vector<Element> distinct_sorted(std::vector<Element> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }
  }  // namespace

  std::optional<AlmostInjectivityFailure> almost_injectivity_failure(SemigroupMorphism const& f) {
    FiniteSemigroup const& S = f.source();
    std::size_t const      n = S.order();
    std::vector<Element>   left_fixed, right_fixed;  // a in Sa, b in bS
    for (Element x = 0; x < n; ++x) {
      bool in_Sx = false, in_xS = false;
      for (Element y = 0; y < n; ++y) {
        in_Sx = in_Sx || S(y, x) == x;
        in_xS = in_xS || S(x, y) == x;
      }
      if (in_Sx) {
        left_fixed.push_back(x);
      }
      if (in_xS) {
        right_fixed.push_back(x);
      }
    }
    for (Element a : left_fixed) {
      for (Element b : right_fixed) {
        std::vector<Element> aSb(n);
        for (Element s = 0; s < n; ++s) {
          aSb[s] = S(S(a, s), b);
        }
        aSb = distinct_sorted(std::move(aSb));
        // With a in Sa and b in bS the set aSb is a subsemigroup.
        for (Element x : aSb) {
          for (Element y : aSb) {
            if (!std::binary_search(aSb.begin(), aSb.end(), S(x, y))) {
              throw InvariantViolation("aSb is not closed under multiplication");
            }
          }
        }
        if (auto c = collision(f, aSb)) {
          return AlmostInjectivityFailure{a, b, c->first, c->second};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Element> unlifted_idempotent(SemigroupMorphism const& f) {
    std::vector<bool> lifted(f.target().order(), false);
    for (Element e : idempotents(f.source())) {
      lifted[f(e)] = true;
    }
    for (Element e : idempotents(f.target())) {
      if (!lifted[e]) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool regulars_lift(SemigroupMorphism const& f) {
    std::vector<bool> lifted(f.target().order(), false);
    for (Element x = 0; x < f.source().order(); ++x) {
      if (is_regular_element(f.source(), x)) {
        lifted[f(x)] = true;
      }
    }
    for (Element t = 0; t < f.target().order(); ++t) {
      if (is_regular_element(f.target(), t) && !lifted[t]) {
        return false;
      }
    }
    return true;
  }

  MorphismQuality morphism_quality(SemigroupMorphism const& f) {
    MorphismQuality q{};
    q.almost_injective = is_almost_injective(f);
    q.surjective       = is_surjective(f);
    q.strict_local_iso = q.almost_injective && q.surjective;
    q.idempotents_lift = idempotents_lift(f);
    q.regulars_lift    = regulars_lift(f);
    return q;
  }

  InjectivityConditions check_injectivity_conditions(SemigroupMorphism const& f) {
    FiniteSemigroup const& S = f.source();
    if (!has_common_weak_local_units(S)) {
      throw PreconditionFailed("source semigroup lacks common weak local units");
    }
    std::size_t const     n = S.order();
    InjectivityConditions r{is_almost_injective(f), true, true};
    for (Element s = 0; s < n; ++s) {
      std::vector<Element> sS(n), Ss(n);
      for (Element t = 0; t < n; ++t) {
        sS[t] = S(s, t);
        Ss[t] = S(t, s);
      }
      r.injective_on_right_ideals
          = r.injective_on_right_ideals && !collision(f, distinct_sorted(sS));
      r.injective_on_left_ideals
          = r.injective_on_left_ideals && !collision(f, distinct_sorted(Ss));
    }
    return r;
  }

  ActSemigroup act_to_semigroup(RightAct const& A, RightActMorphism const& rho) {
    FiniteSemigroup const& S = A.semigroup();
    RightAct const&        target = rho.target();
    bool const             into_regular
        = target.semigroup() == S && target.size() == S.order()
          && std::equal(target.table().begin(), target.table().end(), S.table().begin());
    if (!into_regular || rho.source().size() != A.size()
        || !std::equal(rho.source().table().begin(),
                       rho.source().table().end(),
                       A.table().begin())) {
      throw PreconditionFailed("rho must be an S-morphism from A into the regular act S_S");
    }
    std::size_t const    m = A.size();
    std::vector<Element> table(m * m);
    for (Point a = 0; a < m; ++a) {
      for (Point b = 0; b < m; ++b) {
        table[a * m + b] = A.act(a, rho(b));
      }
    }
    FiniteSemigroup   T(m, std::move(table));
    SemigroupMorphism f(T, S, {rho.map().begin(), rho.map().end()});
    MorphismQuality   q = morphism_quality(f);
    return ActSemigroup{std::move(T), std::move(f), q};
  }

  RightAct sli_to_act(SemigroupMorphism const& tau) {
    FiniteSemigroup const& T = tau.source();
    FiniteSemigroup const& S = tau.target();
    if (!has_common_weak_local_units(T)) {
      throw PreconditionFailed("source semigroup lacks common weak local units");
    }
    if (!is_surjective(tau) || !is_almost_injective(tau)) {
      throw PreconditionFailed("morphism is not a strict local isomorphism");
    }
    std::vector<std::vector<Element>> preimages(S.order());
    for (Element t = 0; t < T.order(); ++t) {
      preimages[tau(t)].push_back(t);
    }
    std::vector<Point> action(T.order() * S.order());
    for (Element t = 0; t < T.order(); ++t) {
      for (Element s = 0; s < S.order(); ++s) {
        if (preimages[s].empty()) {
          throw WitnessNotFound("element " + std::to_string(s) + " has no preimage");
        }
        Element const value = T(t, preimages[s].front());
        for (Element other : preimages[s]) {
          if (T(t, other) != value) {
            std::ostringstream msg;
            msg << "t * s depends on the preimage of s at (t, s) = (" << t << ", " << s << ")";
            throw WellDefinednessViolation(msg.str());
          }
        }
        action[t * S.order() + s] = value;
      }
    }
    RightAct act(S, T.order(), std::move(action));
    // tau(t * s) = tau(t) s: tau is an S-morphism into S_S.
    [[maybe_unused]] RightActMorphism const equivariant(
        act, RightAct::regular(S), {tau.map().begin(), tau.map().end()});
    return act;
  }

}  // namespace sgx
