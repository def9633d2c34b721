#pragma once

#include <vector>

#include "arbor/budget.hpp"
#include "arbor/cover.hpp"
#include "arbor/graph.hpp"
#include "arbor/oracle.hpp"

namespace arbor {

// Proper edge colouring with at most Δ+1 colours (Misra-Gries); entry i is the
// colour of g.edges()[i].
std::vector<int> edge_coloring(const Graph& g);

// The colour classes of edge_coloring(g) that are non-empty, in colour order.
std::vector<std::vector<Edge>> matching_decomposition(const Graph& g);

// One induced forest per colour pair of a minimum acyclic colouring, minus
// isolated vertices. BudgetExceeded if the colouring search runs out.
ForestCover cover_f1_acyclic(const Graph& g, const SearchBudget& budget = {});

/// Per colour pair {a,b}: the components of g[a ∪ b] with at least two edges
/// (forest) and the single-edge components (matching).
struct PairSplit {
  struct Pair {
    int a = 0;
    int b = 0;
    VertexSet forest;
    std::vector<Edge> matching;
  };

  Coloring coloring;
  std::vector<Pair> pairs;     // lexicographic colour pairs
  std::vector<Edge> leftover;  // edges in no pair forest, sorted

  bool is_induced_matching(const Graph& g, const std::vector<Edge>& m) const;
};

// PreconditionError if the colouring is not acyclic.
PairSplit pair_split(const Graph& g, const Coloring& c);

// The subgraph of g induced by the expansion of h_ab, a vertex set of the
// contracted graph. PreconditionError if h_ab does not induce a forest there.
InducedSubgraph uncontract_forest_pair(const Graph& g, const Contraction& con, VertexSet h_ab);

enum class AcyclicRoute { pair, vizing, best };

const char* to_string(AcyclicRoute r);

struct AcyclicCoverResult {
  ForestCover cover;
  AcyclicRoute route = AcyclicRoute::pair;  // route that produced the cover
  int x = 0;                 // acyclic chromatic number of g
  int base_forests = 0;      // pair forests F_ij kept
  long long bound = 0;       // the route's bound at this x
  int uncontractions = 0;    // uncontracted pieces whose tree-width was asserted
  int max_contracted_x = 0;  // largest acyclic chromatic number among contracted graphs
};

// Both routes verify their tree-width claims on every uncontracted piece and
// throw VerificationError if one fails.
AcyclicCoverResult cover_f2_acyclic_detailed(const Graph& g, AcyclicRoute route = AcyclicRoute::best,
                                             const SearchBudget& budget = {});
ForestCover cover_f2_acyclic(const Graph& g, AcyclicRoute route = AcyclicRoute::best,
                             const SearchBudget& budget = {});

}  // namespace arbor
