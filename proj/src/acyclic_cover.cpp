#include "arbor/acyclic_cover.hpp"

#include <algorithm>
#include <unordered_map>

#include "arbor/errors.hpp"
#include "arbor/td_cover.hpp"
#include "arbor/tw2.hpp"
#include "arbor/tw_general.hpp"
#include "arbor/validity.hpp"

namespace arbor {

const char* to_string(AcyclicRoute r) {
  switch (r) {
    case AcyclicRoute::pair: return "pair";
    case AcyclicRoute::vizing: return "vizing";
    case AcyclicRoute::best: return "best";
  }
  return "?";
}

namespace {

Coloring acyclic_coloring_or_throw(const Graph& g, const SearchBudget& budget, const char* stage) {
  auto r = exact_acyclic_chromatic(g, budget);
  if (!r.exact()) throw BudgetExceeded(std::string("acyclic colouring budget exhausted: ") + stage);
  return *r.certificate;
}

}  // namespace

ForestCover cover_f1_acyclic(const Graph& g, const SearchBudget& budget) {
  Coloring c = acyclic_coloring_or_throw(g, budget, "input graph");
  std::vector<VertexSet> forests;
  for (int a = 0; a < c.colors; ++a) {
    for (int b = a + 1; b < c.colors; ++b) {
      int pair[2] = {a, b};
      VertexSet s = c.classes_members(pair);
      VertexSet kept;
      for (int v : s) {
        if (g.neighbors(v).intersects(s)) kept.insert(v);
      }
      if (!kept.empty()) forests.push_back(kept);
    }
  }
  return make_cover(g, 1, std::move(forests));
}

bool PairSplit::is_induced_matching(const Graph& g, const std::vector<Edge>& m) const {
  VertexSet ends;
  for (const Edge& e : m) {
    if (!g.has_edge(e) || ends.contains(e.u) || ends.contains(e.v)) return false;
    ends.insert(e.u);
    ends.insert(e.v);
  }
  return g.edges_within(ends) == static_cast<int>(m.size());
}

PairSplit pair_split(const Graph& g, const Coloring& c) {
  if (!is_acyclic_coloring(g, c.color)) throw PreconditionError("pair split needs an acyclic colouring");
  PairSplit ps;
  ps.coloring = c;
  for (int a = 0; a < c.colors; ++a) {
    for (int b = a + 1; b < c.colors; ++b) {
      int pair[2] = {a, b};
      PairSplit::Pair p{a, b, VertexSet(), {}};
      for (const auto& comp : is_induced_forest(g, c.classes_members(pair)).components) {
        if (comp.edges >= 2) {
          p.forest |= comp.vertices;
        } else if (comp.edges == 1) {
          p.matching.emplace_back(comp.vertices.first(), comp.vertices.without(comp.vertices.first()).first());
        }
      }
      for (const Edge& e : p.matching) ps.leftover.push_back(e);
      ps.pairs.push_back(std::move(p));
    }
  }
  std::sort(ps.leftover.begin(), ps.leftover.end());
  return ps;
}

InducedSubgraph uncontract_forest_pair(const Graph& g, const Contraction& con, VertexSet h_ab) {
  if (con.map.source_hash != g.hash()) throw InputError("contraction belongs to a different graph");
  if (!is_induced_forest(con.graph, h_ab).acyclic) {
    throw PreconditionError("uncontraction needs a forest in the contracted graph");
  }
  return induced_subgraph(g, con.map.expand(h_ab));
}

namespace {

struct Pipeline {
  const Graph& g;
  SearchBudget budget;
  std::unordered_map<std::uint64_t, Coloring> colorings;
  int uncontractions = 0;
  int max_contracted_x = 0;

  const Coloring& coloring_of(const Graph& h) {
    auto it = colorings.find(h.hash());
    if (it != colorings.end()) return it->second;
    Coloring c = acyclic_coloring_or_throw(h, budget, "contracted graph");
    max_contracted_x = std::max(max_contracted_x, c.colors);
    return colorings.emplace(h.hash(), std::move(c)).first->second;
  }

  // Covers the 2-valid edges of g among `targets` (all in matching m) through
  // the uncontracted colour-pair pieces of g/m. max_tw is the asserted bound.
  std::vector<VertexSet> cover_matching(const std::vector<Edge>& m, const std::vector<Edge>& targets, int max_tw) {
    Contraction con = contract_matching(g, m);
    const Coloring& c = coloring_of(con.graph);
    struct Piece {
      InducedSubgraph sub;
      std::vector<Edge> hits;
    };
    std::vector<Piece> pieces;
    for (int a = 0; a < c.colors; ++a) {
      for (int b = a + 1; b < c.colors; ++b) {
        int pair[2] = {a, b};
        InducedSubgraph sub = uncontract_forest_pair(g, con, c.classes_members(pair));
        ++uncontractions;
        bool ok = max_tw == 2 ? has_treewidth_at_most_2(sub.graph)
                              : elimination_order_within(sub.graph, max_tw).has_value();
        if (!ok) throw VerificationError("uncontracted piece exceeds tree-width " + std::to_string(max_tw));
        std::vector<Edge> hits;
        VertexSet vs = sub.lift(sub.graph.vertices());
        for (const Edge& e : targets) {
          if (vs.contains(e.u) && vs.contains(e.v) && is_k_valid(g, e, 2, vs)) hits.push_back(e);
        }
        pieces.push_back({std::move(sub), std::move(hits)});
      }
    }
    // Greedy choice of pieces until every target is covered.
    std::vector<Edge> open = targets;
    std::vector<VertexSet> out;
    while (!open.empty()) {
      int best = -1;
      std::size_t gain = 0;
      for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
        std::size_t cnt = 0;
        for (const Edge& e : pieces[i].hits) cnt += std::find(open.begin(), open.end(), e) != open.end();
        if (cnt > gain) {
          gain = cnt;
          best = i;
        }
      }
      if (best < 0) throw VerificationError("a 2-valid matching edge is 2-valid in no uncontracted piece");
      const Piece& p = pieces[best];
      ForestCover local = max_tw == 2 ? cover_2valid_tw2(p.sub.graph) : cover_f2_tw(p.sub.graph, max_tw);
      for (VertexSet f : local.forests) {
        VertexSet lifted = p.sub.lift(f);
        bool useful = false;
        for (const Edge& e : open) {
          if (lifted.contains(e.u) && lifted.contains(e.v)) useful = true;
        }
        if (useful) out.push_back(lifted);
      }
      std::erase_if(open, [&](const Edge& e) {
        return std::find(p.hits.begin(), p.hits.end(), e) != p.hits.end();
      });
    }
    return out;
  }
};

std::vector<Edge> two_valid_only(const Graph& g, const std::vector<Edge>& es) {
  std::vector<Edge> out;
  for (const Edge& e : es) {
    if (g.closed_neighbors(e.u) != g.closed_neighbors(e.v)) out.push_back(e);
  }
  return out;
}

AcyclicCoverResult run_route(Pipeline& pl, const PairSplit& ps, AcyclicRoute route) {
  const Graph& g = pl.g;
  AcyclicCoverResult res;
  res.route = route;
  res.x = ps.coloring.colors;
  long long pairs = binomial(res.x, 2);
  std::vector<VertexSet> forests;
  for (const auto& p : ps.pairs) {
    if (!p.forest.empty()) forests.push_back(p.forest);
  }
  res.base_forests = static_cast<int>(forests.size());
  if (route == AcyclicRoute::pair) {
    res.bound = pairs * (3 * pairs + 1);
    for (const auto& p : ps.pairs) {
      if (!ps.is_induced_matching(g, p.matching)) throw VerificationError("pair matching is not induced");
      auto targets = two_valid_only(g, p.matching);
      if (targets.empty()) continue;
      for (VertexSet f : pl.cover_matching(p.matching, targets, 2)) forests.push_back(f);
    }
  } else {
    res.bound = pairs * (12LL * res.x + 1);
    Graph leftover(g.order(), std::span<const Edge>(ps.leftover));
    for (const auto& m : matching_decomposition(leftover)) {
      auto targets = two_valid_only(g, m);
      if (targets.empty()) continue;
      for (VertexSet f : pl.cover_matching(m, targets, 3)) forests.push_back(f);
    }
  }
  res.cover = make_cover(g, 2, dedup_forests(std::move(forests)));
  require_valid(g, res.cover);
  res.uncontractions = pl.uncontractions;
  res.max_contracted_x = pl.max_contracted_x;
  return res;
}

}  // namespace

AcyclicCoverResult cover_f2_acyclic_detailed(const Graph& g, AcyclicRoute route, const SearchBudget& budget) {
  Pipeline pl{g, budget, {}, 0, 0};
  Coloring c = acyclic_coloring_or_throw(g, budget, "input graph");
  PairSplit ps = pair_split(g, c);
  if (route != AcyclicRoute::best) return run_route(pl, ps, route);
  AcyclicCoverResult a = run_route(pl, ps, AcyclicRoute::pair);
  AcyclicCoverResult b = run_route(pl, ps, AcyclicRoute::vizing);
  b.uncontractions = a.uncontractions = pl.uncontractions;
  return b.cover.size() < a.cover.size() ? b : a;
}

ForestCover cover_f2_acyclic(const Graph& g, AcyclicRoute route, const SearchBudget& budget) {
  return cover_f2_acyclic_detailed(g, route, budget).cover;
}

}  // namespace arbor
