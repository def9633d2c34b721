#pragma once

#include <optional>
#include <vector>

#include "arbor/cover.hpp"
#include "arbor/graph.hpp"
#include "arbor/oracle.hpp"

namespace arbor {

inline constexpr int kExactTreewidthCap = 18;

// Width of an elimination order: the largest number of later neighbours in the fill.
int elimination_width(const Graph& g, const std::vector<int>& order);

// Min-fill greedy elimination order.
std::vector<int> min_fill_order(const Graph& g);

// An elimination order of width at most t, or nullopt if tw(g) > t. Heuristics
// first, then exact subset search (PreconditionError beyond kExactTreewidthCap
// vertices when heuristics fail).
std::optional<std::vector<int>> elimination_order_within(const Graph& g, int t);

// Exact tree-width; PreconditionError beyond kExactTreewidthCap vertices.
int exact_treewidth(const Graph& g);

/// A t-tree-style completion given as an elimination order, its filled graph H
/// and a proper (t+1)-colouring of H with colours 0..t.
struct TTreeColoring {
  int t = 0;
  std::vector<int> order;
  Graph h;
  Coloring coloring;
};

std::optional<TTreeColoring> t_tree_coloring(const Graph& g, int t);

// One forest per colour pair with an edge; at most C(t+1,2) forests.
// PreconditionError if tw(g) > t.
ForestCover cover_f1_tw(const Graph& g, int t);

// tw2 cover on each colour triple; at most 3*C(t+1,3) forests.
// PreconditionError if t < 2 or tw(g) > t.
ForestCover cover_f2_tw(const Graph& g, int t);

}  // namespace arbor
