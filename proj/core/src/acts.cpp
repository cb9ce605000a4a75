#include "sgx/acts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

#include "sgx/error.hpp"

namespace sgx {

  namespace {
    void check_entries(std::span<Point const> action, std::size_t expected, std::size_t size) {
      if (size == 0) {
        throw OutOfRange("an act must have at least one point");
      }
      if (action.size() != expected) {
        throw OutOfRange("action table has " + std::to_string(action.size())
                         + " entries, expected " + std::to_string(expected));
      }
      for (Point p : action) {
        if (p >= size) {
          throw OutOfRange("action table entry " + std::to_string(p)
                           + " is out of range for carrier size "
                           + std::to_string(size));
        }
      }
    }

    bool right_ok(RightAct const& A, RightAct const& B, std::span<Point const> f, Point a, Element s) {
      return f[A.act(a, s)] == B.act(f[a], s);
    }

    bool left_ok(LeftAct const& A, LeftAct const& B, std::span<Point const> f, Element s, Point a) {
      return f[A.act(s, a)] == B.act(s, f[a]);
    }

    void check_map(std::span<Point const> map, std::size_t source_size, std::size_t target_size) {
      if (map.size() != source_size) {
        throw OutOfRange("morphism map has the wrong length");
      }
      for (Point p : map) {
        if (p >= target_size) {
          throw OutOfRange("morphism image " + std::to_string(p) + " is out of range");
        }
      }
    }

    void verify(RightAct const& A, RightAct const& B, std::span<Point const> f) {
      if (!(A.semigroup() == B.semigroup())) {
        throw SemigroupMismatch("acts are over different semigroups");
      }
      check_map(f, A.size(), B.size());
      for (Point a = 0; a < A.size(); ++a) {
        for (Element s = 0; s < A.semigroup().order(); ++s) {
          if (!right_ok(A, B, f, a, s)) {
            throw EquivarianceViolation(a, s);
          }
        }
      }
    }

    void verify(LeftAct const& A, LeftAct const& B, std::span<Point const> f) {
      if (!(A.semigroup() == B.semigroup())) {
        throw SemigroupMismatch("acts are over different semigroups");
      }
      check_map(f, A.size(), B.size());
      for (Point a = 0; a < A.size(); ++a) {
        for (Element s = 0; s < A.semigroup().order(); ++s) {
          if (!left_ok(A, B, f, s, a)) {
            throw EquivarianceViolation(a, s);
          }
        }
      }
    }

    void verify(Biact const& A, Biact const& B, std::span<Point const> f) {
      verify(A.left(), B.left(), f);
      verify(A.right(), B.right(), f);
    }

    // Depth-first search over maps A -> A assigning f(0), f(1), ... in
    // increasing order, so the output is lexicographic. `consistent(f, k)`
    // checks every constraint whose points are all <= k and involve k.
    std::vector<std::vector<Point>> search_self_maps(
        std::size_t                                                        size,
        std::size_t                                                        limit,
        std::function<bool(std::vector<Point> const&, Point)> const& consistent) {
      double const candidates = std::pow(static_cast<double>(size), static_cast<double>(size));
      if (candidates > static_cast<double>(limit)) {
        throw SearchSpaceTooLarge(candidates, limit);
      }
      std::vector<std::vector<Point>> found;
      std::vector<Point>              f(size, 0);
      std::function<void(Point)>      descend = [&](Point k) {
        if (k == size) {
          found.push_back(f);
          return;
        }
        for (Point v = 0; v < size; ++v) {
          f[k] = v;
          if (consistent(f, k)) {
            descend(k + 1);
          }
        }
      };
      descend(0);
      return found;
    }

    bool right_consistent(RightAct const& A, std::vector<Point> const& f, Point k) {
      for (Point a = 0; a <= k; ++a) {
        for (Element s = 0; s < A.semigroup().order(); ++s) {
          Point const x = A.act(a, s);
          if (x <= k && (a == k || x == k) && f[x] != A.act(f[a], s)) {
            return false;
          }
        }
      }
      return true;
    }

    bool left_consistent(LeftAct const& A, std::vector<Point> const& f, Point k) {
      for (Point a = 0; a <= k; ++a) {
        for (Element s = 0; s < A.semigroup().order(); ++s) {
          Point const x = A.act(s, a);
          if (x <= k && (a == k || x == k) && f[x] != A.act(s, f[a])) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  RightAct::RightAct(FiniteSemigroup S, std::size_t size, std::vector<Point> action)
      : _semigroup(std::move(S)), _size(size), _action(std::move(action)) {
    std::size_t const n = _semigroup.order();
    check_entries(_action, size * n, size);
    for (Point a = 0; a < size; ++a) {
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          if (act(act(a, s), t) != act(a, _semigroup(s, t))) {
            throw CompatibilityViolation("right act", a, s, t);
          }
        }
      }
    }
  }

  RightAct RightAct::regular(FiniteSemigroup const& S) {
    return RightAct(S, S.order(), {S.table().begin(), S.table().end()});
  }

  LeftAct::LeftAct(FiniteSemigroup S, std::size_t size, std::vector<Point> action)
      : _semigroup(std::move(S)), _size(size), _action(std::move(action)) {
    std::size_t const n = _semigroup.order();
    check_entries(_action, size * n, size);
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        for (Point a = 0; a < size; ++a) {
          if (act(s, act(t, a)) != act(_semigroup(s, t), a)) {
            throw CompatibilityViolation("left act", a, s, t);
          }
        }
      }
    }
  }

  LeftAct LeftAct::regular(FiniteSemigroup const& S) {
    return LeftAct(S, S.order(), {S.table().begin(), S.table().end()});
  }

  Biact::Biact(LeftAct left, RightAct right)
      : _left(std::move(left)), _right(std::move(right)) {
    if (_left.size() != _right.size()) {
      throw OutOfRange("left and right actions of a biact have different carriers");
    }
    for (Element s = 0; s < _left.semigroup().order(); ++s) {
      for (Point a = 0; a < size(); ++a) {
        for (Element t = 0; t < _right.semigroup().order(); ++t) {
          if (act_right(act_left(s, a), t) != act_left(s, act_right(a, t))) {
            throw CompatibilityViolation("biact", a, s, t);
          }
        }
      }
    }
  }

  Biact Biact::regular(FiniteSemigroup const& S) {
    return Biact(LeftAct::regular(S), RightAct::regular(S));
  }

  bool is_unitary(RightAct const& A) {
    std::vector<bool> hit(A.size(), false);
    for (Point p : A.table()) {
      hit[p] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_unitary(LeftAct const& A) {
    std::vector<bool> hit(A.size(), false);
    for (Point p : A.table()) {
      hit[p] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_unitary(Biact const& A) {
    return is_unitary(A.left()) && is_unitary(A.right());
  }

  template <typename Act>
  ActMorphism<Act>::ActMorphism(Act source, Act target, std::vector<Point> map)
      : _source(std::move(source)), _target(std::move(target)), _map(std::move(map)) {
    verify(_source, _target, _map);
  }

  template class ActMorphism<RightAct>;
  template class ActMorphism<LeftAct>;
  template class ActMorphism<Biact>;

  std::size_t default_candidate_limit() {
    if (char const* env = std::getenv("SGX_MAX_CANDIDATES")) {
      char*                    end   = nullptr;
      unsigned long long const value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') {
        return static_cast<std::size_t>(value);
      }
    }
    return 1'000'000;
  }

  std::vector<RightActMorphism> enumerate_endomorphisms(RightAct const& A, std::size_t limit) {
    auto const maps = search_self_maps(A.size(), limit, [&A](auto const& f, Point k) {
      return right_consistent(A, f, k);
    });
    std::vector<RightActMorphism> result;
    result.reserve(maps.size());
    for (auto const& f : maps) {
      result.emplace_back(A, A, f);
    }
    return result;
  }

  std::vector<LeftActMorphism> enumerate_endomorphisms(LeftAct const& A, std::size_t limit) {
    auto const maps = search_self_maps(A.size(), limit, [&A](auto const& f, Point k) {
      return left_consistent(A, f, k);
    });
    std::vector<LeftActMorphism> result;
    result.reserve(maps.size());
    for (auto const& f : maps) {
      result.emplace_back(A, A, f);
    }
    return result;
  }

  std::vector<BiactMorphism> enumerate_endomorphisms(Biact const& A, std::size_t limit) {
    auto const maps = search_self_maps(A.size(), limit, [&A](auto const& f, Point k) {
      return left_consistent(A.left(), f, k) && right_consistent(A.right(), f, k);
    });
    std::vector<BiactMorphism> result;
    result.reserve(maps.size());
    for (auto const& f : maps) {
      result.emplace_back(A, A, f);
    }
    return result;
  }

}  // namespace sgx
