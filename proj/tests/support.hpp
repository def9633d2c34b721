#pragma once

// Test-only generators and brute-force reference computations. Nothing here
// calls the library's search routines, so results are independent.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "arbor/graph.hpp"

namespace testing_support {

using arbor::Edge;
using arbor::Graph;
using arbor::VertexSet;
using Rng = std::mt19937_64;

inline Graph relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  return Graph(g.order(), e);
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = VertexSet::single(0), frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

inline Graph gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

// Random 2-tree on n >= 3 vertices with each edge kept with probability keep;
// retried until connected.
inline Graph partial_2tree(int n, double keep, Rng& rng) {
  for (;;) {
    std::vector<std::pair<int, int>> all{{0, 1}, {1, 2}, {0, 2}};
    for (int v = 3; v < n; ++v) {
      auto [a, b] = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      all.emplace_back(a, v);
      all.emplace_back(b, v);
    }
    std::bernoulli_distribution coin(keep);
    std::vector<std::pair<int, int>> e;
    for (auto p : all) {
      if (coin(rng)) e.emplace_back(p);
    }
    Graph g(n, e);
    if (connected(g)) return relabel(g, rng);
  }
}

// Random connected graph with an elimination tree of depth at most d: a random
// rooted tree (parent edges always kept) plus random ancestor edges.
inline Graph td_graph(int d, int max_n, Rng& rng) {
  std::vector<int> parent{-1}, level{1};
  std::uniform_int_distribution<int> kids(1, 3);
  for (std::size_t i = 0; i < parent.size() && static_cast<int>(parent.size()) < max_n; ++i) {
    if (level[i] == d) continue;
    int c = kids(rng);
    for (int j = 0; j < c && static_cast<int>(parent.size()) < max_n; ++j) {
      parent.push_back(static_cast<int>(i));
      level.push_back(level[i] + 1);
    }
  }
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < static_cast<int>(parent.size()); ++v) {
    e.emplace_back(parent[v], v);
    for (int a = parent[parent[v]] >= 0 ? parent[parent[v]] : -1; a >= 0; a = parent[a]) {
      if (coin(rng)) e.emplace_back(a, v);
    }
  }
  return relabel(Graph(static_cast<int>(parent.size()), e), rng);
}

// Points in the unit square; candidate segments in random order, kept when
// they cross nothing already kept. Then a random subset of edges survives.
inline Graph planar(int n, double keep, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<double, double>> pt(n);
  for (auto& p : pt) p = {u(rng), u(rng)};
  auto orient = [&](int a, int b, int c) {
    double v = (pt[b].first - pt[a].first) * (pt[c].second - pt[a].second) -
               (pt[b].second - pt[a].second) * (pt[c].first - pt[a].first);
    return (v > 0) - (v < 0);
  };
  auto cross = [&](std::pair<int, int> s, std::pair<int, int> t) {
    if (s.first == t.first || s.first == t.second || s.second == t.first || s.second == t.second) return false;
    return orient(s.first, s.second, t.first) * orient(s.first, s.second, t.second) < 0 &&
           orient(t.first, t.second, s.first) * orient(t.first, t.second, s.second) < 0;
  };
  std::vector<std::pair<int, int>> cand;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) cand.emplace_back(i, j);
  }
  std::shuffle(cand.begin(), cand.end(), rng);
  std::vector<std::pair<int, int>> kept;
  for (auto c : cand) {
    if (std::none_of(kept.begin(), kept.end(), [&](auto k) { return cross(c, k); })) kept.push_back(c);
  }
  std::bernoulli_distribution coin(keep);
  std::vector<std::pair<int, int>> e;
  for (auto k : kept) {
    if (coin(rng)) e.push_back(k);
  }
  return Graph(n, e);
}

// ---- brute force -------------------------------------------------------------

inline bool induces_tree(const Graph& g, VertexSet s) {
  return !s.empty() && g.edges_within(s) == s.size() - 1 && [&] {
    VertexSet seen = VertexSet::single(s.first()), frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v) & s;
      frontier = next - seen;
      seen |= next;
    }
    return seen == s;
  }();
}

inline std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
  return out;
}

// Edges of g in some (k+1)-vertex induced tree.
inline std::set<Edge> bf_k_valid(const Graph& g, int k) {
  std::set<Edge> out;
  for (VertexSet s : all_subsets(g.order())) {
    if (s.size() == k + 1 && induces_tree(g, s)) {
      for (const Edge& e : g.edges_in(s)) out.insert(e);
    }
  }
  return out;
}

// Every component of g[s] a tree with at least k edges.
inline bool bf_k_strong(const Graph& g, VertexSet s, int k) {
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first()), frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v) & s;
      frontier = next - comp;
      comp |= next;
    }
    if (!induces_tree(g, comp) || comp.size() - 1 < k) return false;
    left -= comp;
  }
  return true;
}

// Minimum number of k-strong forests covering the k-valid edges, by layered
// search over covered-edge masks. Small graphs only (n <= 8).
inline int bf_fk(const Graph& g, int k) {
  auto valid = bf_k_valid(g, k);
  if (valid.empty()) return 0;
  std::vector<Edge> idx(valid.begin(), valid.end());
  std::uint64_t full = (idx.size() == 64) ? ~0ULL : ((1ULL << idx.size()) - 1);
  std::vector<std::uint64_t> masks;
  for (VertexSet s : all_subsets(g.order())) {
    if (s.empty() || !bf_k_strong(g, s, k)) continue;
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (s.contains(idx[i].u) && s.contains(idx[i].v)) m |= 1ULL << i;
    }
    if (m) masks.push_back(m);
  }
  std::unordered_set<std::uint64_t> layer{0};
  for (int r = 1;; ++r) {
    std::unordered_set<std::uint64_t> next;
    for (auto a : layer) {
      for (auto m : masks) {
        if ((a | m) == full) return r;
        next.insert(a | m);
      }
    }
    layer = std::move(next);
  }
}

// Tree-width as the minimum over all elimination orders (n <= 9).
inline int bf_treewidth(const Graph& g) {
  int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    VertexSet gone;
    int width = 0;
    for (int v : order) {
      VertexSet later = adj[v] - gone;
      width = std::max(width, later.size());
      for (int a : later) adj[a] |= later.without(a);
      gone.insert(v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Tree-depth from the recursive definition on connected subsets.
inline int bf_treedepth(const Graph& g) {
  std::map<std::uint64_t, int> memo;
  std::function<int(VertexSet)> td = [&](VertexSet s) -> int {
    if (s.empty()) return 0;
    auto it = memo.find(s.bits());
    if (it != memo.end()) return it->second;
    // Split into components first.
    VertexSet comp = VertexSet::single(s.first()), frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v) & s;
      frontier = next - comp;
      comp |= next;
    }
    int r;
    if (comp != s) {
      r = std::max(td(comp), td(s - comp));
    } else {
      r = s.size();
      for (int v : s) r = std::min(r, 1 + td(s.without(v)));
    }
    memo[s.bits()] = r;
    return r;
  };
  return td(g.vertices());
}

inline bool bf_is_acyclic_coloring(const Graph& g, const std::vector<int>& c) {
  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) return false;
  }
  int q = *std::max_element(c.begin(), c.end()) + 1;
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      VertexSet s;
      for (int v = 0; v < g.order(); ++v) {
        if (c[v] == a || c[v] == b) s.insert(v);
      }
      // A forest has |E| = |V| - #components on every subset; check per component.
      VertexSet left = s;
      while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first()), frontier = comp;
        while (!frontier.empty()) {
          VertexSet next;
          for (int v : frontier) next |= g.neighbors(v) & s;
          frontier = next - comp;
          comp |= next;
        }
        if (!induces_tree(g, comp)) return false;
        left -= comp;
      }
    }
  }
  return true;
}

// Acyclic chromatic number by trying every colouring with q colours (n <= 8).
inline int bf_acyclic_chromatic(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  for (int q = 1;; ++q) {
    std::vector<int> c(n, 0);
    for (;;) {
      if (bf_is_acyclic_coloring(g, c)) return q;
      int i = 0;
      while (i < n && ++c[i] == q) c[i++] = 0;
      if (i == n) break;
    }
  }
}

// max ceil(|E(H)| / (|V(H)| - 1)) over all vertex subsets with >= 2 vertices.
inline int bf_arboricity(const Graph& g) {
  int best = 0;
  for (VertexSet s : all_subsets(g.order())) {
    if (s.size() < 2) continue;
    int m = g.edges_within(s);
    best = std::max(best, (m + s.size() - 2) / (s.size() - 1));
  }
  return best;
}

// Smallest l with a labelling in 1..l separating N[u] sums on non-twin edges.
inline int bf_dis(const Graph& g, int cap) {
  int n = g.order();
  for (int l = 1; l <= cap; ++l) {
    std::vector<int> lab(n, 1);
    for (;;) {
      bool ok = true;
      for (const Edge& e : g.edges()) {
        VertexSet a = g.neighbors(e.u).with(e.u), b = g.neighbors(e.v).with(e.v);
        if (a == b) continue;
        int sa = 0, sb = 0;
        for (int v : a) sa += lab[v];
        for (int v : b) sb += lab[v];
        if (sa == sb) {
          ok = false;
          break;
        }
      }
      if (ok) return l;
      int i = 0;
      while (i < n && ++lab[i] > l) lab[i++] = 1;
      if (i == n) break;
    }
  }
  return cap + 1;
}

}  // namespace testing_support
