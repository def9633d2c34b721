#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// A family of vertex sets, each meant to induce a k-strong forest, that together
/// cover every k-valid edge of the graph with hash `graph_hash`.
struct ForestCover {
  std::uint64_t graph_hash = 0;
  int k = 1;
  std::vector<VertexSet> forests;

  int size() const { return static_cast<int>(forests.size()); }
};

ForestCover make_cover(const Graph& g, int k, std::vector<VertexSet> forests);

enum class CoverViolation { none, not_a_forest, small_component, uncovered_edge };

const char* to_string(CoverViolation v);

struct CoverVerdict {
  bool valid = true;
  CoverViolation violation = CoverViolation::none;
  int forest_index = -1;         // offending forest for the first two kinds
  std::vector<Edge> uncovered;  // every uncovered k-valid edge
  std::string message;
};

// Throws InputError if the cover was built for a different graph.
CoverVerdict verify_cover(const Graph& g, const ForestCover& cover);

// Throws VerificationError with the verdict message if the cover is invalid.
void require_valid(const Graph& g, const ForestCover& cover);

// Edges with both ends in at least one forest.
std::vector<Edge> covered_edges(const Graph& g, const std::vector<VertexSet>& forests);

// Index-wise union: result[j] = ∪_i parts[i][j]. Callers guarantee the unions
// stay k-strong forests (disjoint non-adjacent pieces or pieces glued at one vertex).
std::vector<VertexSet> merge_indexwise(const std::vector<std::vector<VertexSet>>& parts);

// Drops empty sets and exact duplicates, keeping first occurrences in order.
std::vector<VertexSet> dedup_forests(std::vector<VertexSet> forests);

// JSON: {"k": int, "graph_hash": hex, "forests": [[v, ...], ...]}.
std::string cover_to_json(const ForestCover& cover);
ForestCover cover_from_json(const std::string& text);

}  // namespace arbor
