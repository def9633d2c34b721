#include "arbor/tw2.hpp"

#include <algorithm>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

int common_count(const Graph& h, Edge e) { return (h.neighbors(e.u) & h.neighbors(e.v)).size(); }

// Identifies u and w into one vertex (numbered by position of u after w is dropped).
Graph identify(const Graph& g, int u, int w) {
  auto idx = [&](int x) {
    if (x == w) x = u;
    return x > w ? x - 1 : x;
  };
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    int a = idx(e.u), b = idx(e.v);
    if (a != b) pairs.emplace_back(a, b);
  }
  return Graph(g.order() - 1, pairs);
}

}  // namespace

std::optional<TwoTreeCompletion> complete_to_2tree(const Graph& g) {
  int n = g.order();
  if (n < 3) throw PreconditionError("a 2-tree completion needs at least 3 vertices");
  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  VertexSet alive = g.vertices();
  std::vector<int> removed;
  std::vector<VertexSet> later(n);
  while (alive.size() > 3) {
    int pick = -1;
    for (int v : alive) {
      if (adj[v].size() <= 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    VertexSet nb = adj[pick];
    later[pick] = nb;
    if (nb.size() == 2) {
      int a = nb.first(), b = nb.without(a).first();
      adj[a].insert(b);
      adj[b].insert(a);
    }
    for (int x : nb) adj[x].erase(pick);
    adj[pick] = VertexSet();
    alive.erase(pick);
    removed.push_back(pick);
  }

  TwoTreeCompletion c;
  c.source_hash = g.hash();
  std::vector<int> last = alive.to_vector();
  c.base = {last[0], last[1], last[2]};
  std::vector<VertexSet> h(n);
  auto link = [&](int a, int b) {
    h[a].insert(b);
    h[b].insert(a);
  };
  link(last[0], last[1]);
  link(last[0], last[2]);
  link(last[1], last[2]);
  VertexSet built = alive;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    int v = *it;
    VertexSet nb = later[v];
    Edge at;
    if (nb.size() == 2) {
      at = Edge(nb.first(), nb.without(nb.first()).first());
    } else if (nb.size() == 1) {
      int a = nb.first();
      at = Edge(a, h[a].first());
    } else {
      int a = built.first();
      at = Edge(a, h[a].first());
    }
    link(v, at.u);
    link(v, at.v);
    built.insert(v);
    c.sequence.push_back({v, at});
  }
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) {
    for (int w : h[v]) {
      if (v < w) pairs.emplace_back(v, w);
    }
  }
  c.h = Graph(n, pairs);
  for (const Edge& e : c.h.edges()) {
    (common_count(c.h, e) >= 2 ? c.inner : c.outer).push_back(e);
  }
  return c;
}

bool has_treewidth_at_most_2(const Graph& g) {
  if (g.order() < 3) return true;
  return complete_to_2tree(g).has_value();
}

std::optional<Edge> find_contractible_edge(const Graph& g, const TwoTreeCompletion& comp) {
  for (const Edge& e : comp.outer) {
    if (g.has_edge(e) && common_count(g, e) == 0) return e;
  }
  return std::nullopt;
}

CompletionChecks check_completion(const Graph& g, const TwoTreeCompletion& comp) {
  const Graph& h = comp.h;
  CompletionChecks r;
  r.contains_g = h.order() == g.order() &&
                 std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return h.has_edge(e); });

  auto outer = [&](int a, int b) { return common_count(h, Edge(a, b)) == 1; };
  r.p1 = true;
  for (const Edge& e : h.edges()) {
    for (int z : h.neighbors(e.u) & h.neighbors(e.v)) {
      int tri[3] = {e.u, e.v, z};
      for (int i = 0; i < 3; ++i) {
        int v = tri[i], a = tri[(i + 1) % 3], b = tri[(i + 2) % 3];
        if (outer(v, a) && outer(v, b) && h.degree(v) != 2) r.p1 = false;
      }
    }
  }
  r.p2 = true;
  for (const Edge& e : comp.inner) {
    if (is_connected(h, h.vertices().without(e.u).without(e.v))) r.p2 = false;
  }

  bool two_connected = g.order() >= 3 && is_biconnected(g);
  r.p3 = r.p4 = r.p5 = r.p6 = r.p7 = true;
  if (!two_connected) return r;
  if (g.order() >= 4) {
    for (int u = 0; u < g.order(); ++u) {
      for (int w = u + 1; w < g.order(); ++w) {
        VertexSet rest = g.vertices().without(u).without(w);
        auto comps = components(g, rest);
        for (VertexSet k : comps) {
          if (!g.neighbors(u).intersects(k) || !g.neighbors(w).intersects(k)) r.p3 = false;
        }
        bool merged_2c = is_biconnected(identify(g, u, w));
        if ((comps.size() == 1) != merged_2c) r.p4 = false;
      }
    }
  }
  for (const Edge& e : comp.outer) {
    if (!g.has_edge(e)) {
      r.p5 = false;
      continue;
    }
    Edge m[1] = {e};
    if (g.order() >= 4 && !is_biconnected(contract_matching(g, m).graph)) r.p6 = false;
  }
  for (const Edge& t : twin_edges(g)) {
    VertexSet s = g.vertices().without(t.u).without(t.v);
    for (int z : s) {
      if (g.neighbors(z) != VertexSet::of({t.u, t.v})) r.p7 = false;
    }
    if (g.size() != 2 * s.size() + 1) r.p7 = false;
  }
  return r;
}

bool is_cycle_c4(const Graph& g) {
  if (g.order() != 4 || g.size() != 4) return false;
  for (int v = 0; v < 4; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

VertexSet GoodColoring::forest(int i) const {
  VertexSet s;
  for (int v = 0; v < static_cast<int>(color.size()); ++v) {
    if (color[v] != i) s.insert(v);
  }
  return s;
}

GoodColoringCheck check_good_coloring(const Graph& g, const std::vector<int>& color) {
  GoodColoringCheck r{true, true, true};
  GoodColoring c{color};
  for (int i = 1; i <= 3; ++i) {
    ForestCheck f = is_induced_forest(g, c.forest(i));
    if (!f.acyclic) r.forests = false;
    for (const auto& comp : f.components) {
      if (comp.edges == 0) r.no_k1 = false;
      if (comp.vertices.size() == 2) {
        int a = comp.vertices.first(), b = comp.vertices.without(a).first();
        if (g.closed_neighbors(a) != g.closed_neighbors(b)) r.k2_are_twins = false;
      }
    }
  }
  return r;
}

namespace {

// Colouring of C4 whose only K2-component contains v, which gets colour 2.
std::vector<int> c4_template(const Graph& g, int v) {
  int p = g.neighbors(v).first();
  int w = g.neighbors(v).without(p).first();
  int q = g.vertices().without(v).without(p).without(w).first();
  std::vector<int> c(4);
  c[v] = 2;
  c[p] = 1;
  c[q] = 1;
  c[w] = 3;
  return c;
}

// Least permutation of {1,2,3} sending a to 1, applied in place.
void align_to_one(std::vector<int>& c, int a) {
  std::array<int, 3> perm = {1, 2, 3};
  do {
    if (perm[a - 1] == 1) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int& x : c) x = perm[x - 1];
}

std::vector<int> color_rec(const Graph& g);

std::vector<int> color_part(const Graph& g, VertexSet part, int cut, std::vector<int>& out) {
  InducedSubgraph sub = induced_subgraph(g, part);
  int local_cut = sub.from_parent[cut];
  std::vector<int> c = is_cycle_c4(sub.graph) ? c4_template(sub.graph, local_cut) : color_rec(sub.graph);
  align_to_one(c, c[local_cut]);
  for (int i = 0; i < sub.graph.order(); ++i) out[sub.to_parent[i]] = c[i];
  return c;
}

std::vector<int> color_not_2connected(const Graph& g) {
  BlockDecomposition bd = blocks(g);
  for (VertexSet b : bd.blocks) {
    VertexSet cuts = b & bd.cut_vertices;
    if (cuts.size() != 1) continue;
    int v = cuts.first();
    std::vector<int> out(g.order(), 0);
    color_part(g, b, v, out);
    color_part(g, g.vertices() - b.without(v), v, out);
    return out;
  }
  throw VerificationError("no leaf block in a graph that is not 2-connected");
}

// Proper 3-colouring of the completion from its construction sequence.
std::vector<int> color_2tree(const TwoTreeCompletion& comp) {
  std::vector<int> c(comp.h.order(), 0);
  c[comp.base[0]] = 1;
  c[comp.base[1]] = 2;
  c[comp.base[2]] = 3;
  for (const auto& step : comp.sequence) c[step.vertex] = 6 - c[step.attached.u] - c[step.attached.v];
  return c;
}

std::vector<int> color_contracted(const Graph& g, Edge e) {
  Edge m[1] = {e};
  Contraction con = contract_matching(g, m);
  const Graph& gp = con.graph;
  int v = con.map.class_of[e.u];
  std::vector<int> c(g.order(), 0);

  if (is_cycle_c4(gp)) {
    // g is C5: 1,1,2,2,3 around the cycle starting at vertex 0.
    const int pattern[5] = {1, 1, 2, 2, 3};
    int prev = -1, cur = 0;
    for (int i = 0; i < 5; ++i) {
      c[cur] = pattern[i];
      VertexSet next = g.neighbors(cur);
      if (prev >= 0) next.erase(prev);
      prev = cur;
      cur = next.first();
    }
    return c;
  }

  auto twins = twin_edges(gp);
  if (!twins.empty()) {
    int x = twins.front().u, y = twins.front().v;
    VertexSet s = gp.vertices().without(x).without(y);
    auto members = [&](int cls) { return con.map.members[cls]; };
    if (v == x) std::swap(x, y);
    if (v == y) {
      for (int a : members(x)) c[a] = 1;
      c[e.u] = c[e.v] = 2;
      for (int z : s) {
        for (int a : members(z)) c[a] = 3;
      }
    } else {
      int xv = members(x).first(), yv = members(y).first();
      int u = e.u, w = e.v;
      if (!g.adjacent(u, xv)) std::swap(u, w);
      c[xv] = 1;
      c[u] = 1;
      c[yv] = 2;
      for (int z : s.without(v)) {
        for (int a : members(z)) c[a] = 3;
      }
      c[w] = 3;
    }
    return c;
  }

  std::vector<int> cp = color_rec(gp);
  for (int a = 0; a < g.order(); ++a) c[a] = cp[con.map.class_of[a]];
  return c;
}

std::vector<int> color_rec(const Graph& g) {
  if (g.order() == 2) return {1, 1};
  if (!is_biconnected(g)) return color_not_2connected(g);
  auto comp = complete_to_2tree(g);
  if (!comp) throw PreconditionError("tree-width exceeds 2");
  if (auto e = find_contractible_edge(g, *comp)) return color_contracted(g, *e);
  return color_2tree(*comp);
}

}  // namespace

GoodColoring good_coloring(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("good colouring needs at least one edge");
  if (!is_connected(g, g.vertices())) throw PreconditionError("good colouring needs a connected graph");
  if (is_cycle_c4(g)) throw PreconditionError("C4 has no good colouring");
  if (!has_treewidth_at_most_2(g)) throw PreconditionError("tree-width exceeds 2");
  return GoodColoring{color_rec(g)};
}

ForestCover cover_2valid_tw2(const Graph& g) {
  if (!has_treewidth_at_most_2(g)) throw PreconditionError("tw2 cover needs tree-width at most 2");
  std::vector<std::vector<VertexSet>> parts;
  for (VertexSet comp : components(g)) {
    if (comp.size() < 2) continue;
    InducedSubgraph sub = induced_subgraph(g, comp);
    const Graph& c = sub.graph;
    std::vector<VertexSet> local;
    if (is_cycle_c4(c)) {
      int a = 0, b = c.neighbors(0).first(), d = c.neighbors(0).without(b).first();
      int opp = c.vertices().without(a).without(b).without(d).first();
      local = {VertexSet::of({d, a, b}), VertexSet::of({b, opp, d})};
    } else {
      GoodColoring gc = good_coloring(c);
      for (int i = 1; i <= 3; ++i) {
        VertexSet kept;
        for (const auto& fc : is_induced_forest(c, gc.forest(i)).components) {
          if (fc.edges >= 2) kept |= fc.vertices;
        }
        local.push_back(kept);
      }
    }
    for (VertexSet& s : local) s = sub.lift(s);
    parts.push_back(local);
  }
  return make_cover(g, 2, dedup_forests(merge_indexwise(parts)));
}

}  // namespace arbor
