#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arbor/budget.hpp"
#include "arbor/cover.hpp"
#include "arbor/elimination_tree.hpp"
#include "arbor/graph.hpp"

namespace arbor {

enum class ColoringContract { proper, acyclic, good, tree_depth };

/// Vertex colouring with colours 0..colors-1 (tw2's good colourings use 1..3).
struct Coloring {
  std::vector<int> color;
  int colors = 0;
  ColoringContract contract = ColoringContract::proper;
  int p = 1;  // for tree_depth colourings

  VertexSet class_members(int c) const;
  VertexSet classes_members(std::span<const int> cs) const;
};

bool is_proper_coloring(const Graph& g, const std::vector<int>& color);
// Proper, and every two colour classes induce a forest.
bool is_acyclic_coloring(const Graph& g, const std::vector<int>& color);

// ---- f_k -------------------------------------------------------------------

struct FkLimits {
  SearchBudget budget;
  int max_vertices = 0;  // 0 selects default_fk_vertex_cap(k)
};

// 20 vertices for k <= 3, 16 otherwise.
int default_fk_vertex_cap(int k);

// Maximal induced forests with components of fewer than k edges removed; every
// k-strong forest's edge set lies inside some member. Ordered and deduplicated.
std::vector<VertexSet> enumerate_candidate_forests(const Graph& g, int k);

// Exact f_k(g) with an optimal cover. On budget exhaustion the result carries
// [lower, upper] and the best cover found.
ExactResult<ForestCover> exact_f_k(const Graph& g, int k, const FkLimits& limits = {});

// Conflict lower bound and greedy upper bound only, no search.
ExactResult<ForestCover> f_k_bounds(const Graph& g, int k);

// ---- structural parameters --------------------------------------------------

ExactResult<EliminationTree> exact_tree_depth(const Graph& g, const SearchBudget& budget = {});

// Tree-depth of g[s] (exact, memoized). Used by colouring checks.
int tree_depth_of(const Graph& g, VertexSet s);

ExactResult<Coloring> exact_acyclic_chromatic(const Graph& g, const SearchBudget& budget = {});

// max ⌈|E(H)|/(|V(H)|-1)⌉ over connected induced H with ≥ 2 vertices; 0 if edgeless.
int nash_williams_arboricity(const Graph& g);

// ---- distinguishing labelings -------------------------------------------------

// Smallest l admitting labels in 1..l whose closed-neighbourhood sums differ on
// every edge uv with N[u] != N[v]. On cap exhaustion lower = cap + 1.
ExactResult<std::vector<int>> exact_dis(const Graph& g, int label_cap,
                                        const SearchBudget& budget = {});

bool is_distinguishing_labeling(const Graph& g, const std::vector<int>& labels);

struct DisBoundVerdict {
  int dis = 0;
  long long product = 1;
  bool holds = false;
};

// Checks dis[g] <= p1 * ... * pm for a cover of ALL edges by m 2-strong forests.
// Throws PreconditionError if the cover is not such a cover or the p_i are not
// pairwise coprime integers >= 4.
DisBoundVerdict check_dis_bound(const Graph& g, const ForestCover& cover, std::span<const int> primes);

}  // namespace arbor
