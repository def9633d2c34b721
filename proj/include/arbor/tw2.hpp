#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/cover.hpp"
#include "arbor/graph.hpp"

namespace arbor {

/// A 2-tree H on V(G) with G ⊆ H, built from a base triangle by attaching one
/// vertex at a time to an existing edge.
struct TwoTreeCompletion {
  struct Step {
    int vertex;
    Edge attached;  // the edge of H the vertex was joined to
  };

  std::uint64_t source_hash = 0;
  Graph h;
  std::array<int, 3> base{};
  std::vector<Step> sequence;
  std::vector<Edge> inner;  // in at least two triangles of H
  std::vector<Edge> outer;  // in exactly one triangle of H
};

// Degree-at-most-2 reduction, always removing the least removable vertex.
// Absent iff tw(g) >= 3. Throws PreconditionError for fewer than 3 vertices.
std::optional<TwoTreeCompletion> complete_to_2tree(const Graph& g);

bool has_treewidth_at_most_2(const Graph& g);

// Least outer edge of the completion that lies in no triangle of g.
std::optional<Edge> find_contractible_edge(const Graph& g, const TwoTreeCompletion& comp);

// Results of the structural checks on a completion; properties that do not
// apply to g (e.g. the 2-connected ones) are reported as true.
struct CompletionChecks {
  bool contains_g = false;
  bool p1 = false, p2 = false, p3 = false, p4 = false, p5 = false, p6 = false, p7 = false;

  bool all() const { return contains_g && p1 && p2 && p3 && p4 && p5 && p6 && p7; }
};

CompletionChecks check_completion(const Graph& g, const TwoTreeCompletion& comp);

bool is_cycle_c4(const Graph& g);

/// Colouring with colours 1..3; forest(i) is the set of vertices not coloured i.
struct GoodColoring {
  std::vector<int> color;

  VertexSet forest(int i) const;
};

struct GoodColoringCheck {
  bool forests = false;      // each V_i induces a forest
  bool no_k1 = false;        // no isolated vertex in any F_i
  bool k2_are_twins = false; // every K2-component of every F_i is a twin edge

  bool good() const { return forests && no_k1 && k2_are_twins; }
};

GoodColoringCheck check_good_coloring(const Graph& g, const std::vector<int>& color);

// Throws PreconditionError if g is disconnected, has no edge, is C4, or has
// tree-width above 2.
GoodColoring good_coloring(const Graph& g);

// At most 3 forests (2 for a C4 component) covering all 2-valid edges.
// Throws PreconditionError if tw(g) > 2.
ForestCover cover_2valid_tw2(const Graph& g);

}  // namespace arbor
