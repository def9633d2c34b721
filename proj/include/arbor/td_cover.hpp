#pragma once

#include <optional>
#include <vector>

#include "arbor/budget.hpp"
#include "arbor/cover.hpp"
#include "arbor/elimination_tree.hpp"
#include "arbor/graph.hpp"
#include "arbor/oracle.hpp"

namespace arbor {

long long int_pow(long long base, int exp);
long long binomial(int n, int r);

// An underlying forest of depth at most d for g, or nullopt if td(g) > d.
// Disconnected graphs get one tree per component.
std::optional<EliminationTree> underlying_tree(const Graph& g, int d);

struct DerivedBranch {
  EliminationTree branch;        // {r} ∪ subtree(x), rooted at r
  EliminationTree without_root;  // G_i - r, rooted at x
  EliminationTree without_x;     // G_i - x, rooted at r
};

// Cut-depth reductions of the branch through child x of the single root.
DerivedBranch derive_branch(const EliminationTree& t, int x);

/// Almost k-valid edges of g[t.members()] relative to the single root r.
struct AlmostValidReport {
  int root = -1;
  int depth = 0;
  bool star_rooted = false;
  std::vector<Edge> edges;            // on an induced path containing r anywhere
  std::vector<Edge> endpoint_edges;   // on an induced path with r as an endpoint
  std::vector<int> per_branch;        // counts of `edges` per child of r, in child order
  long long bound_td = 0;             // (2k)^{d-1} - 1
  long long bound_td_star = 0;        // 2(2k)^{d-2} - 1 (d >= 2)

  // Count within the bound that applies to this tree.
  bool within_bound() const;
};

AlmostValidReport almost_k_valid_edges(const Graph& g, const EliminationTree& t, int k);

/// Sizes of the five partial covers at one recursion node and their bounds.
struct TdLedgerEntry {
  int root = -1;
  int depth = 0;
  int f1 = 0, f2 = 0, f3 = 0, f4 = 0, f5 = 0;
  long long b1 = 0, b23 = 0, b4 = 0, b5 = 0, total_bound = 0;

  bool ok() const;
};

struct TdCoverResult {
  ForestCover cover;
  std::vector<TdLedgerEntry> ledger;

  bool ledger_ok() const;
};

// Covers the k-valid edges of g[t.members()] with at most (2k)^d k-strong
// forests. InputError if t is not valid for g. k = 1 goes through the
// tree-width colouring with t = d - 1.
TdCoverResult cover_td_detailed(const Graph& g, const EliminationTree& t, int k);
ForestCover cover_td(const Graph& g, const EliminationTree& t, int k);

// Level colouring of t: cover_td on every (k+1)-subset of levels; at most
// C(d, k+1) (2k)^{k+1} forests when d >= k+1.
ForestCover cover_td_by_levels(const Graph& g, const EliminationTree& t, int k);

// Every p' <= p colour classes induce tree-depth at most p'.
bool is_p_tree_depth_coloring(const Graph& g, const std::vector<int>& color, int p);

// Minimum colours for a p-tree-depth colouring by search over q = 1, 2, ...
// On budget exhaustion the certificate is the best colouring found.
ExactResult<Coloring> p_tree_depth_coloring(const Graph& g, int p, const SearchBudget& budget = {});

// cover_td on every (k+1)-subset of colour classes of a minimum
// (k+1)-tree-depth colouring. BudgetExceeded if the colouring search runs out.
ForestCover cover_via_low_td_coloring(const Graph& g, int k, const SearchBudget& budget = {});

}  // namespace arbor
