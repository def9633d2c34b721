#include "arbor/tw_general.hpp"

#include <algorithm>
#include <unordered_set>

#include "arbor/errors.hpp"
#include "arbor/tw2.hpp"

namespace arbor {

namespace {

// Adjacency of the filled graph produced by eliminating in `order`.
std::vector<VertexSet> fill(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  VertexSet done;
  for (int v : order) {
    VertexSet later = adj[v] - done;
    for (int a : later) adj[a] |= later.without(a);
    done.insert(v);
  }
  return adj;
}

// Vertices outside s ∪ {v} reachable from v through s.
VertexSet q_set(const Graph& g, VertexSet s, int v) {
  VertexSet inner = reachable(g, VertexSet::single(v), s.with(v));
  VertexSet out;
  for (int w : inner) out |= g.neighbors(w);
  return out - s.with(v);
}

struct ExactOrder {
  const Graph& g;
  int t;
  std::unordered_set<std::uint64_t> failed;
  std::vector<int> order;

  bool run(VertexSet s) {
    if (s == g.vertices()) return true;
    if (failed.count(s.bits())) return false;
    for (int v : g.vertices() - s) {
      if (q_set(g, s, v).size() > t) continue;
      order.push_back(v);
      if (run(s.with(v))) return true;
      order.pop_back();
    }
    failed.insert(s.bits());
    return false;
  }
};

}  // namespace

int elimination_width(const Graph& g, const std::vector<int>& order) {
  auto adj = fill(g, order);
  std::vector<int> pos(g.order());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  int w = 0;
  for (int v = 0; v < g.order(); ++v) {
    int later = 0;
    for (int a : adj[v]) later += pos[a] > pos[v];
    w = std::max(w, later);
  }
  return w;
}

std::vector<int> min_fill_order(const Graph& g) {
  int n = g.order();
  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  VertexSet alive = g.vertices();
  std::vector<int> order;
  while (!alive.empty()) {
    int best = -1, best_fill = 0, best_deg = 0;
    for (int v : alive) {
      VertexSet nb = adj[v] & alive;
      int missing = 0;
      for (int a : nb) missing += (nb - adj[a]).without(a).size();
      missing /= 2;
      int deg = nb.size();
      if (best < 0 || missing < best_fill || (missing == best_fill && deg < best_deg)) {
        best = v;
        best_fill = missing;
        best_deg = deg;
      }
    }
    VertexSet nb = adj[best] & alive;
    for (int a : nb) adj[a] |= nb.without(a);
    alive.erase(best);
    order.push_back(best);
  }
  return order;
}

std::optional<std::vector<int>> elimination_order_within(const Graph& g, int t) {
  if (t < 0) return std::nullopt;
  std::vector<int> heuristic = min_fill_order(g);
  if (elimination_width(g, heuristic) <= t) return heuristic;
  if (t <= 2 && g.order() >= 3) {
    if (!has_treewidth_at_most_2(g)) return std::nullopt;
    // Replay the degree-2 reduction as an elimination order.
    auto comp = complete_to_2tree(g);
    std::vector<int> order;
    for (auto it = comp->sequence.rbegin(); it != comp->sequence.rend(); ++it) order.push_back(it->vertex);
    for (int b : comp->base) order.push_back(b);
    if (elimination_width(g, order) <= t) return order;
  }
  if (g.order() > kExactTreewidthCap) {
    throw PreconditionError("exact tree-width limited to " + std::to_string(kExactTreewidthCap) + " vertices");
  }
  ExactOrder search{g, t, {}, {}};
  if (search.run(VertexSet())) return search.order;
  return std::nullopt;
}

int exact_treewidth(const Graph& g) {
  if (g.order() > kExactTreewidthCap) {
    throw PreconditionError("exact tree-width limited to " + std::to_string(kExactTreewidthCap) + " vertices");
  }
  int upper = elimination_width(g, min_fill_order(g));
  int lower = g.size() > 0 ? 1 : 0;
  for (int t = lower; t < upper; ++t) {
    ExactOrder search{g, t, {}, {}};
    if (search.run(VertexSet())) return t;
  }
  return upper;
}

std::optional<TTreeColoring> t_tree_coloring(const Graph& g, int t) {
  if (t < 1) throw InputError("t must be positive");
  auto order = elimination_order_within(g, t);
  if (!order) return std::nullopt;
  auto adj = fill(g, *order);
  int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
  std::vector<int> color(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int v = (*order)[i];
    std::vector<bool> used(t + 1, false);
    for (int a : adj[v]) {
      if (pos[a] > i) used[color[a]] = true;
    }
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) {
    for (int a : adj[v]) {
      if (v < a) pairs.emplace_back(v, a);
    }
  }
  TTreeColoring r;
  r.t = t;
  r.order = *order;
  r.h = Graph(n, pairs);
  r.coloring = Coloring{color, t + 1, ColoringContract::proper, 1};
  return r;
}

ForestCover cover_f1_tw(const Graph& g, int t) {
  auto tc = t_tree_coloring(g, t);
  if (!tc) throw PreconditionError("tree-width exceeds " + std::to_string(t));
  std::vector<VertexSet> forests;
  for (int a = 0; a <= t; ++a) {
    for (int b = a + 1; b <= t; ++b) {
      int pair[2] = {a, b};
      VertexSet s = tc->coloring.classes_members(pair);
      VertexSet kept;
      for (int v : s) {
        if (g.neighbors(v).intersects(s)) kept.insert(v);
      }
      if (!kept.empty()) forests.push_back(kept);
    }
  }
  return make_cover(g, 1, std::move(forests));
}

ForestCover cover_f2_tw(const Graph& g, int t) {
  if (t < 2) throw PreconditionError("the f2 tree-width cover needs t >= 2");
  auto tc = t_tree_coloring(g, t);
  if (!tc) throw PreconditionError("tree-width exceeds " + std::to_string(t));
  std::vector<VertexSet> forests;
  for (int a = 0; a <= t; ++a) {
    for (int b = a + 1; b <= t; ++b) {
      for (int c = b + 1; c <= t; ++c) {
        int triple[3] = {a, b, c};
        InducedSubgraph sub = induced_subgraph(g, tc->coloring.classes_members(triple));
        for (VertexSet f : cover_2valid_tw2(sub.graph).forests) forests.push_back(sub.lift(f));
      }
    }
  }
  return make_cover(g, 2, std::move(forests));
}

}  // namespace arbor
