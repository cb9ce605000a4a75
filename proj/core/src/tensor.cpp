#include "sgx/tensor.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "sgx/error.hpp"

namespace sgx {

  namespace {
    class DisjointSets {
     public:
      explicit DisjointSets(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          // Keep the smaller index as root.
          if (y < x) {
            std::swap(x, y);
          }
          _parent[y] = x;
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  TensorProduct make_tensor(RightAct const&                A,
                            LeftAct const&                 B,
                            std::optional<LeftAct> const&  outer_left,
                            std::optional<RightAct> const& outer_right) {
    if (!(A.semigroup() == B.semigroup())) {
      throw SemigroupMismatch("tensor factors are acts over different semigroups");
    }
    TensorProduct     t(A, B);
    std::size_t const nb = B.size();
    std::size_t const np = A.size() * nb;
    DisjointSets      sets(np);
    for (Point a = 0; a < A.size(); ++a) {
      for (Element s = 0; s < A.semigroup().order(); ++s) {
        for (Point b = 0; b < nb; ++b) {
          sets.unite(A.act(a, s) * nb + b, a * nb + B.act(s, b));
        }
      }
    }
    // Roots are least members, so scanning pairs in order numbers classes
    // by least member.
    std::vector<std::size_t> id_of_root(np, np);
    t._class_of.resize(np);
    for (std::size_t i = 0; i < np; ++i) {
      std::size_t const r = sets.find(i);
      if (id_of_root[r] == np) {
        id_of_root[r] = t._members.size();
        t._members.emplace_back();
      }
      t._class_of[i] = id_of_root[r];
      t._members[id_of_root[r]].emplace_back(i / nb, i % nb);
    }

    std::size_t const nc = t.num_classes();
    if (outer_left) {
      FiniteSemigroup const& T = outer_left->semigroup();
      std::vector<Point>     table(T.order() * nc);
      for (Element u = 0; u < T.order(); ++u) {
        for (std::size_t c = 0; c < nc; ++c) {
          auto const [a0, b0] = t.representative(c);
          std::size_t const image = t.class_of(outer_left->act(u, a0), b0);
          for (auto const& [a, b] : t.members(c)) {
            if (t.class_of(outer_left->act(u, a), b) != image) {
              throw WellDefinednessViolation("residual left action depends on the representative");
            }
          }
          table[u * nc + c] = image;
        }
      }
      t._residual_left.emplace(T, nc, std::move(table));
    }
    if (outer_right) {
      FiniteSemigroup const& U = outer_right->semigroup();
      std::vector<Point>     table(nc * U.order());
      for (std::size_t c = 0; c < nc; ++c) {
        for (Element u = 0; u < U.order(); ++u) {
          auto const [a0, b0] = t.representative(c);
          std::size_t const image = t.class_of(a0, outer_right->act(b0, u));
          for (auto const& [a, b] : t.members(c)) {
            if (t.class_of(a, outer_right->act(b, u)) != image) {
              throw WellDefinednessViolation("residual right action depends on the representative");
            }
          }
          table[c * U.order() + u] = image;
        }
      }
      t._residual_right.emplace(U, nc, std::move(table));
    }
    return t;
  }

  Biact TensorProduct::as_biact() const {
    if (!_residual_left || !_residual_right) {
      throw PreconditionFailed("tensor product was not built from biacts on both sides");
    }
    return Biact(*_residual_left, *_residual_right);
  }

  TensorProduct tensor_product(RightAct const& A, LeftAct const& B) {
    return make_tensor(A, B, std::nullopt, std::nullopt);
  }

  TensorProduct tensor_product(Biact const& A, LeftAct const& B) {
    return make_tensor(A.right(), B, A.left(), std::nullopt);
  }

  TensorProduct tensor_product(RightAct const& A, Biact const& B) {
    return make_tensor(A, B.left(), std::nullopt, B.right());
  }

  TensorProduct tensor_product(Biact const& A, Biact const& B) {
    return make_tensor(A.right(), B.left(), A.left(), B.right());
  }

  std::vector<std::size_t> induced_map(TensorProduct const& t,
                                       PairMap const&       f,
                                       std::size_t          codomain_size) {
    RightAct const& A = t.first();
    LeftAct const&  B = t.second();
    for (Point a = 0; a < A.size(); ++a) {
      for (Element s = 0; s < t.semigroup().order(); ++s) {
        for (Point b = 0; b < B.size(); ++b) {
          if (f(A.act(a, s), b) != f(a, B.act(s, b))) {
            throw NotBalanced(a, s, b);
          }
        }
      }
    }
    std::vector<std::size_t> result(t.num_classes());
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      auto const [a0, b0] = t.representative(c);
      result[c]           = f(a0, b0);
      if (result[c] >= codomain_size) {
        std::ostringstream msg;
        msg << "map value " << result[c] << " at (" << a0 << ", " << b0
            << ") is outside a codomain of size " << codomain_size;
        throw OutOfRange(msg.str());
      }
      for (auto const& [a, b] : t.members(c)) {
        if (f(a, b) != result[c]) {
          throw WellDefinednessViolation("balanced map is not constant on a tensor class");
        }
      }
    }
    return result;
  }

  namespace {
    struct Edge {
      std::size_t target;
      TossingStep step;
    };

    // Neighbours of (x, y) in increasing order of (target, step).
    std::vector<Edge> neighbours(RightAct const& A, LeftAct const& B, Point x, Point y) {
      std::vector<Edge> out;
      std::size_t const nb = B.size();
      std::size_t const n  = A.semigroup().order();
      // Forward: (x, y) = (a.s, b) -> (a, s.b).
      for (Point a = 0; a < A.size(); ++a) {
        for (Element s = 0; s < n; ++s) {
          if (A.act(a, s) == x) {
            out.push_back({a * nb + B.act(s, y), {a, s, y, true}});
          }
        }
      }
      // Backward: (x, y) = (a, s.b) -> (a.s, b).
      for (Element s = 0; s < n; ++s) {
        for (Point b = 0; b < nb; ++b) {
          if (B.act(s, b) == y) {
            out.push_back({A.act(x, s) * nb + b, {x, s, b, false}});
          }
        }
      }
      std::sort(out.begin(), out.end(), [](Edge const& l, Edge const& r) {
        auto key = [](Edge const& e) {
          return std::make_tuple(e.target, e.step.a, e.step.s, e.step.b, !e.step.forward);
        };
        return key(l) < key(r);
      });
      return out;
    }
  }  // namespace

  std::optional<TossingWitness> tossing_witness(TensorProduct const& t,
                                                PointPair            from,
                                                PointPair            to) {
    RightAct const& A = t.first();
    LeftAct const&  B = t.second();
    if (from.first >= A.size() || from.second >= B.size() || to.first >= A.size()
        || to.second >= B.size()) {
      throw OutOfRange("pair is outside A x B");
    }
    if (t.class_of(from) != t.class_of(to)) {
      return std::nullopt;
    }
    std::size_t const nb     = B.size();
    std::size_t const start  = from.first * nb + from.second;
    std::size_t const finish = to.first * nb + to.second;
    std::size_t const np     = A.size() * nb;

    std::vector<std::optional<Edge>> via(np);
    std::vector<bool>                seen(np, false);
    std::deque<std::size_t>          queue{start};
    seen[start] = true;
    while (!queue.empty() && !seen[finish]) {
      std::size_t const cur = queue.front();
      queue.pop_front();
      for (Edge const& e : neighbours(A, B, cur / nb, cur % nb)) {
        if (!seen[e.target]) {
          seen[e.target] = true;
          via[e.target]  = Edge{cur, e.step};
          queue.push_back(e.target);
        }
      }
    }
    if (!seen[finish]) {
      throw WellDefinednessViolation("pairs share a class but no tossing connects them");
    }
    TossingWitness w{from, to, {}};
    for (std::size_t cur = finish; cur != start; cur = via[cur]->target) {
      w.steps.push_back(via[cur]->step);
    }
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
  }

  std::optional<PointPair> replay(TossingWitness const& w,
                                  RightAct const&       A,
                                  LeftAct const&        B) {
    PointPair cur = w.from;
    for (TossingStep const& st : w.steps) {
      if (st.a >= A.size() || st.b >= B.size() || st.s >= A.semigroup().order()) {
        return std::nullopt;
      }
      PointPair const lhs{A.act(st.a, st.s), st.b};
      PointPair const rhs{st.a, B.act(st.s, st.b)};
      if (st.forward && cur == lhs) {
        cur = rhs;
      } else if (!st.forward && cur == rhs) {
        cur = lhs;
      } else {
        return std::nullopt;
      }
    }
    return cur;
  }

  std::vector<Element> tensor_multiplication(TensorProduct const& SS) {
    FiniteSemigroup const& S = SS.semigroup();
    return induced_map(
        SS, [&S](Point a, Point b) { return S(a, b); }, S.order());
  }

  bool is_firm(FiniteSemigroup const& S) {
    auto const SS = tensor_product(RightAct::regular(S), LeftAct::regular(S));
    if (SS.num_classes() != S.order()) {
      return false;
    }
    auto              mu = tensor_multiplication(SS);
    std::vector<bool> hit(S.order(), false);
    for (Element x : mu) {
      hit[x] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

}  // namespace sgx
