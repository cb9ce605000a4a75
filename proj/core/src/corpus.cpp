#include "sgx/corpus.hpp"

#include <algorithm>

#include "sgx/error.hpp"

namespace sgx {

  namespace {
    constexpr Element unset = static_cast<Element>(-1);

    void check_order(std::size_t n, bool allow_order4) {
      if (n == 0) {
        throw OutOfRange("semigroup order must be at least 1");
      }
      if (n > max_corpus_order) {
        throw OrderTooLarge("order " + std::to_string(n) + " exceeds the cap of "
                            + std::to_string(max_corpus_order));
      }
      if (n == max_corpus_order && !allow_order4) {
        throw OrderTooLarge("order 4 enumeration needs explicit permission");
      }
    }

    // Every triple whose products are all assigned is associative.
    bool consistent(std::vector<Element> const& t, std::size_t n) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Element const xy = t[x * n + y];
          if (xy == unset) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            Element const yz = t[y * n + z];
            if (yz == unset) {
              continue;
            }
            Element const l = t[xy * n + z];
            Element const r = t[x * n + yz];
            if (l != unset && r != unset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    }

    void extend(std::vector<Element>&               t,
                std::size_t                         n,
                std::size_t                         cell,
                std::vector<std::vector<Element>>& out) {
      if (cell == n * n) {
        out.push_back(t);
        return;
      }
      for (Element v = 0; v < n; ++v) {
        t[cell] = v;
        if (consistent(t, n)) {
          extend(t, n, cell + 1, out);
        }
      }
      t[cell] = unset;
    }

    std::vector<Element> column_major(std::vector<Element> const& t, std::size_t n) {
      std::vector<Element> c(t.size());
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          c[y * n + x] = t[x * n + y];
        }
      }
      return c;
    }
  }  // namespace

  std::size_t count_by_sweep(std::size_t n) {
    if (n == 0) {
      return 0;
    }
    if (n > 3) {
      throw OrderTooLarge("table sweep is limited to order 3");
    }
    std::size_t const    cells = n * n;
    std::vector<Element> t(cells, 0);
    std::size_t          count = 0;
    while (true) {
      bool assoc = true;
      for (std::size_t x = 0; x < n && assoc; ++x) {
        for (std::size_t y = 0; y < n && assoc; ++y) {
          for (std::size_t z = 0; z < n && assoc; ++z) {
            assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
          }
        }
      }
      count += assoc ? 1 : 0;
      std::size_t i = cells;
      while (i > 0 && t[i - 1] + 1 == n) {
        t[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++t[i - 1];
    }
    return count;
  }

  Corpus enumerate_semigroups(std::size_t n, Dedup mode, bool allow_order4) {
    check_order(n, allow_order4);
    std::vector<std::vector<Element>> tables;
    std::vector<Element>              t(n * n, unset);
    extend(t, n, 0, tables);
    if (n <= 3 && tables.size() != count_by_sweep(n)) {
      throw InvariantViolation("backtracking enumeration disagrees with the table sweep");
    }

    Corpus corpus{n, mode, {}};
    if (mode == Dedup::labeled) {
      corpus.members.reserve(tables.size());
      for (auto& table : tables) {
        corpus.members.emplace_back(n, std::move(table));
      }
      return corpus;
    }
    std::vector<std::vector<Element>> canonical;
    for (auto& table : tables) {
      FiniteSemigroup S(n, std::move(table));
      auto            c = canonical_table(S);
      if (std::equal(c.begin(), c.end(), S.table().begin())) {
        canonical.push_back(std::move(c));
      }
    }
    std::sort(canonical.begin(), canonical.end());
    for (auto& table : canonical) {
      corpus.members.emplace_back(n, std::move(table));
    }
    return corpus;
  }

  std::vector<FiniteSemigroup> semigroups_up_to(std::size_t n, Dedup mode, bool allow_order4) {
    check_order(n, allow_order4);
    std::vector<FiniteSemigroup> all;
    for (std::size_t k = 1; k <= n; ++k) {
      auto c = enumerate_semigroups(k, mode, allow_order4);
      std::move(c.members.begin(), c.members.end(), std::back_inserter(all));
    }
    return all;
  }

  std::vector<CounterexamplePredicate> const& counterexample_predicates() {
    static std::vector<CounterexamplePredicate> const menu = {
        {"factorizable-not-firm",
         "factorizable but not firm",
         [](ClassReport const& r) { return r.factorizable && !r.firm; }},
        {"firm-not-factorizable",
         "firm but not factorizable",
         [](ClassReport const& r) { return r.firm && !r.factorizable; }},
        {"firm-not-wlu",
         "firm without weak local units",
         [](ClassReport const& r) { return r.firm && !r.weak_local_units; }},
        {"wlu-not-lu",
         "weak local units but not local units",
         [](ClassReport const& r) { return r.weak_local_units && !r.local_units; }},
        {"lu-not-cwlu",
         "local units but not common weak local units",
         [](ClassReport const& r) { return r.local_units && !r.common_weak_local_units; }},
        {"cwlu-not-lu",
         "common weak local units but not local units",
         [](ClassReport const& r) { return r.common_weak_local_units && !r.local_units; }},
        {"wlu-not-cwlu",
         "weak local units but not common weak local units",
         [](ClassReport const& r) { return r.weak_local_units && !r.common_weak_local_units; }},
        {"cwlu-not-firm",
         "common weak local units but not firm",
         [](ClassReport const& r) { return r.common_weak_local_units && !r.firm; }},
    };
    return menu;
  }

  std::optional<FiniteSemigroup> find_counterexample(std::string const& predicate,
                                                     std::size_t        n,
                                                     bool               allow_order4) {
    auto const& menu = counterexample_predicates();
    auto        it   = std::find_if(
        menu.begin(), menu.end(), [&](auto const& p) { return p.name == predicate; });
    if (it == menu.end()) {
      throw PreconditionFailed("unknown predicate '" + predicate + "'");
    }
    check_order(n, allow_order4);
    for (std::size_t k = 1; k <= n; ++k) {
      auto members = enumerate_semigroups(k, Dedup::isomorphism, allow_order4).members;
      std::stable_sort(members.begin(), members.end(), [k](auto const& x, auto const& y) {
        std::vector<Element> const tx(x.table().begin(), x.table().end());
        std::vector<Element> const ty(y.table().begin(), y.table().end());
        return column_major(tx, k) < column_major(ty, k);
      });
      for (auto const& S : members) {
        if (it->holds(classify(S))) {
          return S;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace sgx
