#include "sgx/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "sgx/error.hpp"

namespace sgx {

  FiniteSemigroup::FiniteSemigroup(std::size_t order, std::vector<Element> table)
      : _order(order) {
    if (order == 0) {
      throw OutOfRange("a semigroup must have at least one element");
    }
    if (table.size() != order * order) {
      std::ostringstream msg;
      msg << "Cayley table has " << table.size() << " entries, expected "
          << order * order;
      throw OutOfRange(msg.str());
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= order) {
        std::ostringstream msg;
        msg << "table entry (" << i / order << ", " << i % order
            << ") = " << table[i] << " is out of range for order " << order;
        throw OutOfRange(msg.str());
      }
    }
    for (Element x = 0; x < order; ++x) {
      for (Element y = 0; y < order; ++y) {
        Element const xy = table[x * order + y];
        for (Element z = 0; z < order; ++z) {
          if (table[xy * order + z] != table[x * order + table[y * order + z]]) {
            throw AssociativityViolation(x, y, z);
          }
        }
      }
    }
    _table = std::make_shared<std::vector<Element> const>(std::move(table));
  }

  FiniteSemigroup make_semigroup(std::size_t                              order,
                                 std::vector<std::vector<Element>> const& rows) {
    if (rows.size() != order) {
      throw OutOfRange("Cayley table has the wrong number of rows");
    }
    std::vector<Element> flat;
    flat.reserve(order * order);
    for (auto const& row : rows) {
      if (row.size() != order) {
        throw OutOfRange("Cayley table row has the wrong length");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteSemigroup(order, std::move(flat));
  }

  std::vector<Element> idempotents(FiniteSemigroup const& S) {
    std::vector<Element> result;
    for (Element e = 0; e < S.order(); ++e) {
      if (S(e, e) == e) {
        result.push_back(e);
      }
    }
    return result;
  }

  bool has_local_units(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    for (Element s = 0; s < S.order(); ++s) {
      bool const left = std::any_of(
          E.begin(), E.end(), [&](Element f) { return S(f, s) == s; });
      bool const right = std::any_of(
          E.begin(), E.end(), [&](Element e) { return S(s, e) == s; });
      if (!left || !right) {
        return false;
      }
    }
    return true;
  }

  bool has_weak_local_units(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    for (Element s = 0; s < n; ++s) {
      bool left = false, right = false;
      for (Element u = 0; u < n; ++u) {
        left  = left || S(u, s) == s;
        right = right || S(s, u) == s;
      }
      if (!left || !right) {
        return false;
      }
    }
    return true;
  }

  bool has_common_weak_local_units(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    for (Element s = 0; s < n; ++s) {
      for (Element t = s; t < n; ++t) {
        bool left = false, right = false;
        for (Element u = 0; u < n; ++u) {
          left  = left || (S(u, s) == s && S(u, t) == t);
          right = right || (S(s, u) == s && S(t, u) == t);
        }
        if (!left || !right) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_factorizable(FiniteSemigroup const& S) {
    std::vector<bool> hit(S.order(), false);
    for (Element v : S.table()) {
      hit[v] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_regular_element(FiniteSemigroup const& S, Element x) {
    for (Element y = 0; y < S.order(); ++y) {
      if (S(S(x, y), x) == x) {
        return true;
      }
    }
    return false;
  }

  std::optional<Element> identity(FiniteSemigroup const& S) {
    for (Element e = 0; e < S.order(); ++e) {
      bool ok = true;
      for (Element x = 0; x < S.order() && ok; ++x) {
        ok = S(e, x) == x && S(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::vector<Element> subsemigroup_closure(FiniteSemigroup const&   S,
                                            std::span<Element const> generators) {
    if (generators.empty()) {
      throw EmptyGenerators();
    }
    std::vector<bool>    in(S.order(), false);
    std::vector<Element> members;
    for (Element g : generators) {
      if (g >= S.order()) {
        throw OutOfRange("generator out of range");
      }
      if (!in[g]) {
        in[g] = true;
        members.push_back(g);
      }
    }
    // Every product of members is eventually formed: a new element is
    // multiplied against all earlier ones (both sides) when it is reached.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Element p : {S(members[i], members[j]), S(members[j], members[i])}) {
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<Element> set_product(FiniteSemigroup const&   S,
                                   std::span<Element const> lhs,
                                   std::span<Element const> rhs) {
    std::vector<bool> hit(S.order(), false);
    for (Element x : lhs) {
      for (Element y : rhs) {
        hit[S(x, y)] = true;
      }
    }
    std::vector<Element> result;
    for (Element x = 0; x < S.order(); ++x) {
      if (hit[x]) {
        result.push_back(x);
      }
    }
    return result;
  }

  namespace {
    // Isomorphism-invariant data used to prune the search.
    using Signature = std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t>;

    std::vector<Signature> signatures(FiniteSemigroup const& S) {
      std::size_t const      n = S.order();
      std::vector<Signature> sig(n);
      for (Element x = 0; x < n; ++x) {
        std::size_t       fix_left = 0, fix_right = 0;
        std::vector<bool> right_ideal(n, false), left_ideal(n, false);
        for (Element y = 0; y < n; ++y) {
          fix_left += S(y, x) == x;
          fix_right += S(x, y) == x;
          right_ideal[S(x, y)] = true;
          left_ideal[S(y, x)]  = true;
        }
        sig[x] = {S(x, x) == x,
                  fix_left,
                  fix_right,
                  static_cast<std::size_t>(
                      std::count(right_ideal.begin(), right_ideal.end(), true)),
                  static_cast<std::size_t>(
                      std::count(left_ideal.begin(), left_ideal.end(), true))};
      }
      return sig;
    }

    bool extend(FiniteSemigroup const&        S,
                FiniteSemigroup const&        T,
                std::vector<Signature> const& sigS,
                std::vector<Signature> const& sigT,
                std::vector<Element>&         image,
                std::vector<bool>&            used,
                Element                       k) {
      std::size_t const n = S.order();
      if (k == n) {
        return true;
      }
      for (Element t = 0; t < n; ++t) {
        if (used[t] || sigS[k] != sigT[t]) {
          continue;
        }
        image[k] = t;
        bool ok  = true;
        for (Element i = 0; i <= k && ok; ++i) {
          for (Element j = 0; j <= k && ok; ++j) {
            Element const ij = S(i, j);
            if (ij <= k) {
              ok = T(image[i], image[j]) == image[ij];
            }
          }
        }
        if (ok) {
          used[t] = true;
          if (extend(S, T, sigS, sigT, image, used, k + 1)) {
            return true;
          }
          used[t] = false;
        }
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<Element>> find_isomorphism(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T) {
    if (S.order() != T.order()) {
      return std::nullopt;
    }
    auto const sigS = signatures(S);
    auto const sigT = signatures(T);
    {
      auto a = sigS, b = sigT;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    std::vector<Element> image(S.order(), 0);
    std::vector<bool>    used(S.order(), false);
    if (extend(S, T, sigS, sigT, image, used, 0)) {
      return image;
    }
    return std::nullopt;
  }

  std::vector<Element> canonical_table(FiniteSemigroup const& S) {
    std::size_t const    n = S.order();
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> best(S.table().begin(), S.table().end());
    std::vector<Element> relabeled(n * n);
    do {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          relabeled[perm[x] * n + perm[y]] = perm[S(x, y)];
        }
      }
      if (relabeled < best) {
        best = relabeled;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  namespace catalog {
    namespace {
      template <typename F>
      FiniteSemigroup tabulate(std::size_t n, F&& f) {
        std::vector<Element> table(n * n);
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            table[x * n + y] = f(x, y);
          }
        }
        return FiniteSemigroup(n, std::move(table));
      }
    }  // namespace

    FiniteSemigroup trivial() {
      return FiniteSemigroup(1, {0});
    }

    FiniteSemigroup cyclic_group(std::size_t n) {
      return tabulate(n, [n](Element x, Element y) { return (x + y) % n; });
    }

    FiniteSemigroup right_zero(std::size_t n) {
      return tabulate(n, [](Element, Element y) { return y; });
    }

    FiniteSemigroup left_zero(std::size_t n) {
      return tabulate(n, [](Element x, Element) { return x; });
    }

    FiniteSemigroup null_semigroup(std::size_t n) {
      return tabulate(n, [](Element, Element) { return Element{0}; });
    }

    FiniteSemigroup chain(std::size_t n) {
      return tabulate(n, [](Element x, Element y) { return std::max(x, y); });
    }
  }  // namespace catalog

}  // namespace sgx
