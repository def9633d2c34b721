#include <algorithm>
#include <unordered_map>

#include "arbor/errors.hpp"
#include "arbor/oracle.hpp"

namespace arbor {

VertexSet Coloring::class_members(int c) const {
  VertexSet s;
  for (int v = 0; v < static_cast<int>(color.size()); ++v) {
    if (color[v] == c) s.insert(v);
  }
  return s;
}

VertexSet Coloring::classes_members(std::span<const int> cs) const {
  VertexSet s;
  for (int c : cs) s |= class_members(c);
  return s;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (color[e.u] == color[e.v]) return false;
  }
  return true;
}

bool is_acyclic_coloring(const Graph& g, const std::vector<int>& color) {
  if (!is_proper_coloring(g, color)) return false;
  int top = 0;
  for (int c : color) top = std::max(top, c + 1);
  for (int a = 0; a < top; ++a) {
    for (int b = a + 1; b < top; ++b) {
      VertexSet s;
      for (int v = 0; v < g.order(); ++v) {
        if (color[v] == a || color[v] == b) s.insert(v);
      }
      if (!is_induced_forest(g, s).acyclic) return false;
    }
  }
  return true;
}

namespace {

struct BudgetOut {};

class TreeDepthSolver {
 public:
  TreeDepthSolver(const Graph& g, BudgetMeter* meter) : g_(g), meter_(meter) {}

  int solve(VertexSet s) {
    if (s.empty()) return 0;
    auto comps = components(g_, s);
    if (comps.size() > 1) {
      int d = 0;
      for (VertexSet c : comps) d = std::max(d, connected(c));
      return d;
    }
    return connected(s);
  }

  // Fills parent pointers for an optimal elimination forest of g[s].
  void build(VertexSet s, int parent, std::vector<int>& out) {
    for (VertexSet c : components(g_, s)) {
      if (c.size() == 1) {
        out[c.first()] = parent;
        continue;
      }
      connected(c);
      int root = memo_.at(c.bits()).root;
      out[root] = parent;
      build(c.without(root), root, out);
    }
  }

 private:
  struct Entry {
    int depth;
    int root;
  };

  int connected(VertexSet s) {
    if (s.size() == 1) return 1;
    if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second.depth;
    if (meter_ && !meter_->tick()) throw BudgetOut{};
    // Roots of high degree first; a complete graph needs |s| levels anyway.
    std::vector<int> order = s.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return (g_.neighbors(a) & s).size() > (g_.neighbors(b) & s).size();
    });
    int edges = g_.edges_within(s);
    int n = s.size();
    int lower = edges == n * (n - 1) / 2 ? n : 2;
    Entry best{n + 1, order.front()};
    for (int v : order) {
      int d = 1 + solve(s.without(v));
      if (d < best.depth) best = {d, v};
      if (best.depth <= lower) break;
    }
    memo_[s.bits()] = best;
    return best.depth;
  }

  const Graph& g_;
  BudgetMeter* meter_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace

ExactResult<EliminationTree> exact_tree_depth(const Graph& g, const SearchBudget& budget) {
  BudgetMeter meter(budget);
  TreeDepthSolver solver(g, &meter);
  ExactResult<EliminationTree> r;
  try {
    int d = solver.solve(g.vertices());
    std::vector<int> parent(g.order(), -1);
    solver.build(g.vertices(), -1, parent);
    r.lower = r.upper = d;
    r.mode = ProofMode::exhausted_search;
    r.certificate = EliminationTree(std::move(parent), g.vertices());
  } catch (const BudgetOut&) {
    // A path through all vertices in index order is always a valid elimination tree.
    std::vector<int> parent(g.order());
    for (int v = 0; v < g.order(); ++v) parent[v] = v - 1;
    r.lower = g.size() > 0 ? 2 : (g.order() > 0 ? 1 : 0);
    r.upper = g.order();
    r.mode = ProofMode::budget_exhausted;
    r.certificate = EliminationTree(std::move(parent), g.vertices());
  }
  return r;
}

int tree_depth_of(const Graph& g, VertexSet s) {
  TreeDepthSolver solver(g, nullptr);
  return solver.solve(s);
}

namespace {

struct AcyclicSearch {
  const Graph& g;
  BudgetMeter& meter;
  std::vector<int> order;
  std::vector<int> color;
  VertexSet colored;
  int limit = 0;

  // Would colouring v with c close a two-coloured cycle?
  bool creates_cycle(int v, int c) const {
    VertexSet nb = g.neighbors(v) & colored;
    std::vector<VertexSet> by_color(limit);
    for (int w : nb) by_color[color[w]].insert(w);
    for (int c2 = 0; c2 < limit; ++c2) {
      VertexSet hits = by_color[c2];
      if (c2 == c || hits.size() < 2) continue;
      VertexSet two;
      for (int w : colored) {
        if (color[w] == c || color[w] == c2) two.insert(w);
      }
      while (!hits.empty()) {
        VertexSet comp = reachable(g, VertexSet::single(hits.first()), two);
        if ((comp & hits).size() > 1) return true;
        hits -= comp;
      }
    }
    return false;
  }

  bool run(int i, int used) {
    if (i == static_cast<int>(order.size())) return true;
    if (!meter.tick()) return false;
    int v = order[i];
    for (int c = 0; c < std::min(used + 1, limit); ++c) {
      bool clash = false;
      for (int w : g.neighbors(v) & colored) {
        if (color[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash || creates_cycle(v, c)) continue;
      color[v] = c;
      colored.insert(v);
      if (run(i + 1, std::max(used, c + 1))) return true;
      colored.erase(v);
      color[v] = -1;
      if (meter.exhausted()) return false;
    }
    return false;
  }
};

// BFS order from a maximum-degree vertex, component by component.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> order;
  VertexSet seen;
  while (seen.size() < g.order()) {
    int start = -1;
    for (int v : g.vertices() - seen) {
      if (start < 0 || g.degree(v) > g.degree(start)) start = v;
    }
    std::vector<int> queue{start};
    seen.insert(start);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      order.push_back(v);
      std::vector<int> next = (g.neighbors(v) - seen).to_vector();
      std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
      for (int w : next) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return order;
}

}  // namespace

ExactResult<Coloring> exact_acyclic_chromatic(const Graph& g, const SearchBudget& budget) {
  ExactResult<Coloring> r;
  int n = g.order();
  if (n == 0) {
    r.certificate = Coloring{{}, 0, ColoringContract::acyclic, 1};
    return r;
  }
  BudgetMeter meter(budget);
  AcyclicSearch s{g, meter, search_order(g), std::vector<int>(n, -1), VertexSet(), 0};
  int start = g.size() > 0 ? 2 : 1;
  for (int q = start; q <= n; ++q) {
    s.limit = q;
    std::fill(s.color.begin(), s.color.end(), -1);
    s.colored = VertexSet();
    if (s.run(0, 0)) {
      r.lower = r.upper = q;
      r.mode = q == start ? ProofMode::bound_met : ProofMode::exhausted_search;
      r.certificate = Coloring{s.color, q, ColoringContract::acyclic, 1};
      return r;
    }
    if (meter.exhausted()) {
      std::vector<int> distinct(n);
      for (int v = 0; v < n; ++v) distinct[v] = v;
      r.lower = q;
      r.upper = n;
      r.mode = ProofMode::budget_exhausted;
      r.certificate = Coloring{distinct, n, ColoringContract::acyclic, 1};
      return r;
    }
  }
  throw VerificationError("acyclic colouring search failed with n colours");
}

int nash_williams_arboricity(const Graph& g) {
  int n = g.order();
  if (g.size() == 0) return 0;
  if (n > 24) throw PreconditionError("Nash-Williams enumeration limited to 24 vertices");
  int best = 0;
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet s(bits);
    if (s.size() < 2) continue;
    int e = g.edges_within(s);
    int v1 = s.size() - 1;
    int value = (e + v1 - 1) / v1;
    if (value <= best) continue;
    if (!is_connected(g, s)) continue;
    best = value;
  }
  return best;
}

}  // namespace arbor
