#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// An induced tree with exactly k edges that contains `certified`.
struct WitnessTree {
  VertexSet vertices;
  Edge certified;
  std::vector<Edge> edges;

  int k() const { return static_cast<int>(edges.size()); }
};

// Visits every connected vertex set S with seed ⊆ S ⊆ within such that g[S] is
// a tree (seed itself must induce a tree), exactly once each, growing S one
// vertex at a time by least-candidate extension. Sets larger than max_size are
// not visited. The visitor returns false to stop the enumeration.
void for_each_induced_tree(const Graph& g, VertexSet seed, VertexSet within, int max_size,
                           const std::function<bool(VertexSet)>& visit);

// Witness tree for edge e inside g[within], or nullopt. Throws InputError if e
// is not an edge of g[within]. k larger than |within|-1 yields nullopt.
std::optional<WitnessTree> find_witness_tree(const Graph& g, Edge e, int k, VertexSet within);
std::optional<WitnessTree> find_witness_tree(const Graph& g, Edge e, int k);

std::vector<Edge> k_valid_edges(const Graph& g, int k, VertexSet within);
std::vector<Edge> k_valid_edges(const Graph& g, int k);
bool is_k_valid(const Graph& g, Edge e, int k, VertexSet within);

// g[s] is a forest and every component has at least k edges.
bool is_k_strong_forest(const Graph& g, VertexSet s, int k);

}  // namespace arbor
