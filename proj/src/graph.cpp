#include "arbor/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "arbor/errors.hpp"

namespace arbor {

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.u << ',' << e.v << ')';
}

Graph::Graph(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  build(n, std::move(edges));
}

Graph::Graph(int n, std::span<const Edge> edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  *this = Graph(n, std::span<const std::pair<int, int>>(pairs));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> pairs)
    : Graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size())) {}

void Graph::build(int n, std::vector<Edge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  n_ = n;
  rows_.assign(n, VertexSet());
  for (const Edge& e : edges) {
    rows_[e.u].insert(e.v);
    rows_[e.v].insert(e.u);
  }
  edges_ = std::move(edges);

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (const Edge& e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  hash_ = h;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (int v : s) twice += (rows_[v] & s).size();
  return twice / 2;
}

std::vector<Edge> Graph::edges_in(VertexSet s) const {
  std::vector<Edge> out;
  for (int u : s) {
    for (int v : rows_[u] & s) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string format_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string Graph::hash_hex() const { return format_hash(hash_); }

Graph build_graph(int n, std::span<const std::pair<int, int>> pairs) { return Graph(n, pairs); }

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (int v : local) out.insert(to_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw InputError("vertex set exceeds graph range");
  InducedSubgraph sub;
  sub.from_parent.assign(g.order(), -1);
  for (int v : s) {
    sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges_in(s)) edges.emplace_back(sub.from_parent[e.u], sub.from_parent[e.v]);
  sub.graph = Graph(s.size(), std::span<const Edge>(edges));
  return sub;
}

VertexSet ContractionMap::expand(VertexSet classes) const {
  VertexSet out;
  for (int c : classes) out |= members[c];
  return out;
}

Contraction contract_matching(const Graph& g, std::span<const Edge> m) {
  VertexSet used;
  for (const Edge& e : m) {
    if (!g.has_edge(e)) {
      throw InputError("contraction edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") is not an edge");
    }
    if (used.contains(e.u) || used.contains(e.v)) throw InputError("contraction set is not a matching");
    used.insert(e.u);
    used.insert(e.v);
  }
  std::vector<int> partner(g.order(), -1);
  for (const Edge& e : m) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }

  Contraction out;
  out.map.source_hash = g.hash();
  out.map.class_of.assign(g.order(), -1);
  out.map.matching.assign(m.begin(), m.end());
  std::sort(out.map.matching.begin(), out.map.matching.end());
  for (int v = 0; v < g.order(); ++v) {
    if (out.map.class_of[v] != -1) continue;
    int id = out.map.class_count();
    VertexSet cls = VertexSet::single(v);
    if (partner[v] != -1) cls.insert(partner[v]);
    for (int w : cls) out.map.class_of[w] = id;
    out.map.members.push_back(cls);
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = out.map.class_of[e.u];
    int b = out.map.class_of[e.v];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(out.map.class_count(), std::span<const Edge>(edges));
  return out;
}

VertexSet reachable(const Graph& g, VertexSet from, VertexSet within) {
  VertexSet seen = from & within;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, VertexSet::single(rest.first()), rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reachable(g, VertexSet::single(s.first()), s) == s;
}

ForestCheck is_induced_forest(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw InputError("vertex set exceeds graph range");
  ForestCheck out;
  out.acyclic = true;
  for (VertexSet comp : components(g, s)) {
    int e = g.edges_within(comp);
    out.components.push_back({comp, e});
    if (e != comp.size() - 1) out.acyclic = false;
  }
  return out;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  int timer = 0;
  BlockDecomposition out;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent != -1 || children > 1) out.cut_vertices.insert(v);
          VertexSet block;
          Edge top(v, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e == top) break;
          }
          out.blocks.push_back(block);
        }
      } else if (disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        stack.emplace_back(v, w);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  BlockFinder f(g);
  for (int v = 0; v < g.order(); ++v) {
    if (f.disc[v] != -1) continue;
    if (g.degree(v) == 0) {
      f.disc[v] = f.timer++;
      f.out.blocks.push_back(VertexSet::single(v));
      continue;
    }
    f.dfs(v, -1);
  }
  std::sort(f.out.blocks.begin(), f.out.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.first() != b.first() ? a.first() < b.first() : a < b; });
  return f.out;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 2 || !is_connected(g, g.vertices())) return false;
  return blocks(g).blocks.size() == 1;
}

std::vector<Edge> twin_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.closed_neighbors(e.u) == g.closed_neighbors(e.v)) out.push_back(e);
  }
  return out;
}

}  // namespace arbor
