#include "arbor/validity.hpp"

#include "arbor/errors.hpp"

namespace arbor {

namespace {

struct TreeEnumerator {
  const Graph& g;
  VertexSet within;
  int max_size;
  bool only_full;
  const std::function<bool(VertexSet)>& visit;
  bool stopped = false;

  void grow(VertexSet tree, VertexSet excluded) {
    if (!only_full || tree.size() == max_size) {
      if (!visit(tree)) {
        stopped = true;
        return;
      }
    }
    if (tree.size() >= max_size) return;

    VertexSet boundary;
    for (int v : tree) boundary |= g.neighbors(v);
    boundary = (boundary & within) - tree - excluded;
    VertexSet frontier;
    for (int c : boundary) {
      // A vertex with two neighbours in the tree closes a cycle now and forever.
      if ((g.neighbors(c) & tree).size() == 1) {
        frontier.insert(c);
      } else {
        excluded.insert(c);
      }
    }
    if (only_full && reachable(g, tree, within - excluded).size() < max_size) return;

    for (int c : frontier) {
      grow(tree.with(c), excluded);
      if (stopped) return;
      excluded.insert(c);
      if (only_full && reachable(g, tree, within - excluded).size() < max_size) return;
    }
  }
};

void enumerate(const Graph& g, VertexSet seed, VertexSet within, int max_size, bool only_full,
               const std::function<bool(VertexSet)>& visit) {
  if (!seed.is_subset_of(within) || seed.empty()) return;
  if (seed.size() > max_size) return;
  TreeEnumerator e{g, within, max_size, only_full, visit};
  e.grow(seed, VertexSet());
}

}  // namespace

void for_each_induced_tree(const Graph& g, VertexSet seed, VertexSet within, int max_size,
                           const std::function<bool(VertexSet)>& visit) {
  enumerate(g, seed, within, max_size, false, visit);
}

std::optional<WitnessTree> find_witness_tree(const Graph& g, Edge e, int k, VertexSet within) {
  if (k < 1) throw InputError("k must be positive");
  if (!g.has_edge(e) || !within.contains(e.u) || !within.contains(e.v)) {
    throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  if (k + 1 > within.size()) return std::nullopt;
  std::optional<WitnessTree> found;
  enumerate(g, VertexSet::of({e.u, e.v}), within, k + 1, true, [&](VertexSet s) {
    found = WitnessTree{s, e, g.edges_in(s)};
    return false;
  });
  return found;
}

std::optional<WitnessTree> find_witness_tree(const Graph& g, Edge e, int k) {
  return find_witness_tree(g, e, k, g.vertices());
}

bool is_k_valid(const Graph& g, Edge e, int k, VertexSet within) {
  return find_witness_tree(g, e, k, within).has_value();
}

std::vector<Edge> k_valid_edges(const Graph& g, int k, VertexSet within) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges_in(within)) {
    if (is_k_valid(g, e, k, within)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> k_valid_edges(const Graph& g, int k) { return k_valid_edges(g, k, g.vertices()); }

bool is_k_strong_forest(const Graph& g, VertexSet s, int k) {
  ForestCheck check = is_induced_forest(g, s);
  if (!check.acyclic) return false;
  for (const auto& c : check.components) {
    if (c.edges < k) return false;
  }
  return true;
}

}  // namespace arbor
