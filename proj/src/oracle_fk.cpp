#include <algorithm>
#include <bitset>
#include <unordered_map>

#include "arbor/errors.hpp"
#include "arbor/oracle.hpp"
#include "arbor/validity.hpp"

namespace arbor {

const char* to_string(ProofMode m) {
  switch (m) {
    case ProofMode::exhausted_search: return "exhausted-search";
    case ProofMode::bound_met: return "bound-met";
    case ProofMode::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

int default_fk_vertex_cap(int k) { return k <= 3 ? 20 : 16; }

namespace {

// Maximal vertex sets inducing a forest, by include/exclude branching in vertex order.
struct MaximalForestEnumerator {
  const Graph& g;
  std::vector<VertexSet> out;

  // True if adding v to the forest s keeps it acyclic: v's neighbours in s lie
  // in pairwise distinct components.
  bool extends(VertexSet s, int v) const {
    VertexSet nb = g.neighbors(v) & s;
    while (!nb.empty()) {
      VertexSet comp = reachable(g, VertexSet::single(nb.first()), s);
      if ((comp & nb).size() > 1) return false;
      nb -= comp;
    }
    return true;
  }

  void run(int v, VertexSet chosen, VertexSet excluded) {
    int n = g.order();
    if (v == n) {
      for (int x : excluded) {
        if (extends(chosen, x)) return;
      }
      out.push_back(chosen);
      return;
    }
    VertexSet undecided = VertexSet::range(n) - VertexSet::range(v);
    // An excluded vertex needs two forest neighbours eventually.
    for (int x : excluded) {
      if ((g.neighbors(x) & (chosen | undecided)).size() < 2) return;
    }
    if (extends(chosen, v)) run(v + 1, chosen.with(v), excluded);
    run(v + 1, chosen, excluded.with(v));
  }
};

constexpr int kMaxUniverse = 256;
using EdgeBits = std::bitset<kMaxUniverse>;

struct SetCoverInstance {
  int universe = 0;
  std::vector<EdgeBits> sets;
  std::vector<std::vector<int>> containing;  // per element, indices of sets containing it
  std::vector<EdgeBits> compatible;          // per element, union of sets containing it
};

SetCoverInstance make_instance(int universe, std::vector<EdgeBits> sets) {
  SetCoverInstance inst;
  inst.universe = universe;
  // Drop dominated sets; they never improve an optimal cover.
  std::vector<bool> keep(sets.size(), true);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if ((sets[i] & ~sets[j]).none() && (sets[i] != sets[j] || j < i)) keep[i] = false;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (keep[i]) inst.sets.push_back(sets[i]);
  }
  inst.containing.assign(universe, {});
  inst.compatible.assign(universe, EdgeBits());
  for (int s = 0; s < static_cast<int>(inst.sets.size()); ++s) {
    for (int e = 0; e < universe; ++e) {
      if (inst.sets[s][e]) {
        inst.containing[e].push_back(s);
        inst.compatible[e] |= inst.sets[s];
      }
    }
  }
  return inst;
}

// Pairwise incompatible uncovered elements: no set contains two of them.
int conflict_bound(const SetCoverInstance& inst, const EdgeBits& uncovered) {
  std::vector<int> order;
  for (int e = 0; e < inst.universe; ++e) {
    if (uncovered[e]) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.compatible[a].count() < inst.compatible[b].count();
  });
  EdgeBits blocked;
  int count = 0;
  for (int e : order) {
    if (blocked[e]) continue;
    ++count;
    blocked |= inst.compatible[e];
  }
  return count;
}

std::vector<int> greedy_cover(const SetCoverInstance& inst, EdgeBits uncovered) {
  std::vector<int> chosen;
  while (uncovered.any()) {
    int best = -1;
    std::size_t best_gain = 0;
    for (int s = 0; s < static_cast<int>(inst.sets.size()); ++s) {
      std::size_t gain = (inst.sets[s] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (best < 0) throw VerificationError("candidate family does not cover every k-valid edge");
    chosen.push_back(best);
    uncovered &= ~inst.sets[best];
  }
  return chosen;
}

struct DepthSearch {
  const SetCoverInstance& inst;
  BudgetMeter& meter;
  std::unordered_map<EdgeBits, int> refuted;  // uncovered -> largest refuted depth
  std::vector<int> stack;

  // True if `uncovered` can be covered with at most `depth` sets. Sets stack on success.
  bool search(const EdgeBits& uncovered, int depth) {
    if (uncovered.none()) return true;
    if (depth == 0 || !meter.tick()) return false;
    auto it = refuted.find(uncovered);
    if (it != refuted.end() && it->second >= depth) return false;
    if (conflict_bound(inst, uncovered) > depth) {
      refuted[uncovered] = std::max(refuted[uncovered], depth);
      return false;
    }
    // Branch on the uncovered element contained in the fewest sets.
    int pivot = -1;
    std::size_t fewest = SIZE_MAX;
    for (int e = 0; e < inst.universe; ++e) {
      if (uncovered[e] && inst.containing[e].size() < fewest) {
        fewest = inst.containing[e].size();
        pivot = e;
      }
    }
    for (int s : inst.containing[pivot]) {
      stack.push_back(s);
      if (search(uncovered & ~inst.sets[s], depth - 1)) return true;
      stack.pop_back();
      if (meter.exhausted()) return false;
    }
    if (!meter.exhausted()) refuted[uncovered] = std::max(refuted[uncovered], depth);
    return false;
  }
};

struct Prepared {
  std::vector<VertexSet> candidates;
  SetCoverInstance inst;
  std::vector<VertexSet> inst_forests;
  EdgeBits all;
};

Prepared prepare(const Graph& g, int k, int cap) {
  if (k < 1) throw InputError("k must be positive");
  if (g.order() > cap) {
    throw PreconditionError("exact f_k limited to " + std::to_string(cap) + " vertices (graph has " +
                            std::to_string(g.order()) + ")");
  }
  std::vector<Edge> universe = k_valid_edges(g, k);
  if (static_cast<int>(universe.size()) > kMaxUniverse) throw PreconditionError("too many k-valid edges");
  Prepared p;
  if (universe.empty()) return p;
  std::vector<int> index(g.order() * g.order(), -1);
  for (int i = 0; i < static_cast<int>(universe.size()); ++i) {
    index[universe[i].u * g.order() + universe[i].v] = i;
  }
  p.candidates = enumerate_candidate_forests(g, k);
  std::vector<EdgeBits> sets;
  for (VertexSet f : p.candidates) {
    EdgeBits bits;
    for (const Edge& e : g.edges_in(f)) {
      int i = index[e.u * g.order() + e.v];
      if (i >= 0) bits.set(i);
    }
    sets.push_back(bits);
  }
  for (int i = 0; i < static_cast<int>(universe.size()); ++i) p.all.set(i);
  p.inst = make_instance(static_cast<int>(universe.size()), sets);
  for (const EdgeBits& s : p.inst.sets) {
    auto it = std::find(sets.begin(), sets.end(), s);
    p.inst_forests.push_back(p.candidates[it - sets.begin()]);
  }
  return p;
}

ForestCover cover_from(const Graph& g, int k, const Prepared& p, const std::vector<int>& chosen) {
  std::vector<VertexSet> forests;
  for (int s : chosen) forests.push_back(p.inst_forests[s]);
  std::sort(forests.begin(), forests.end());
  return make_cover(g, k, std::move(forests));
}

}  // namespace

std::vector<VertexSet> enumerate_candidate_forests(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be positive");
  MaximalForestEnumerator en{g, {}};
  en.run(0, VertexSet(), VertexSet());
  std::vector<VertexSet> out;
  for (VertexSet m : en.out) {
    VertexSet kept;
    for (const auto& c : is_induced_forest(g, m).components) {
      if (c.edges >= k) kept |= c.vertices;
    }
    if (!kept.empty()) out.push_back(kept);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExactResult<ForestCover> f_k_bounds(const Graph& g, int k) {
  Prepared p = prepare(g, k, default_fk_vertex_cap(k));
  ExactResult<ForestCover> r;
  if (p.all.none()) {
    r.mode = ProofMode::bound_met;
    r.certificate = make_cover(g, k, {});
    return r;
  }
  std::vector<int> greedy = greedy_cover(p.inst, p.all);
  r.lower = conflict_bound(p.inst, p.all);
  r.upper = static_cast<int>(greedy.size());
  r.mode = r.lower == r.upper ? ProofMode::bound_met : ProofMode::budget_exhausted;
  r.certificate = cover_from(g, k, p, greedy);
  return r;
}

ExactResult<ForestCover> exact_f_k(const Graph& g, int k, const FkLimits& limits) {
  int cap = limits.max_vertices > 0 ? limits.max_vertices : default_fk_vertex_cap(k);
  Prepared p = prepare(g, k, cap);
  ExactResult<ForestCover> r;
  if (p.all.none()) {
    r.mode = ProofMode::bound_met;
    r.certificate = make_cover(g, k, {});
    return r;
  }
  std::vector<int> greedy = greedy_cover(p.inst, p.all);
  int lower = conflict_bound(p.inst, p.all);
  int upper = static_cast<int>(greedy.size());
  r.certificate = cover_from(g, k, p, greedy);
  if (lower == upper) {
    r.lower = r.upper = upper;
    r.mode = ProofMode::bound_met;
    return r;
  }
  BudgetMeter meter(limits.budget);
  DepthSearch search{p.inst, meter, {}, {}};
  for (int depth = lower; depth < upper; ++depth) {
    search.stack.clear();
    if (search.search(p.all, depth)) {
      r.lower = r.upper = depth;
      r.mode = depth == lower ? ProofMode::bound_met : ProofMode::exhausted_search;
      r.certificate = cover_from(g, k, p, search.stack);
      return r;
    }
    if (meter.exhausted()) {
      r.lower = depth;
      r.upper = upper;
      r.mode = ProofMode::budget_exhausted;
      return r;
    }
  }
  r.lower = r.upper = upper;
  r.mode = ProofMode::exhausted_search;
  return r;
}

}  // namespace arbor
