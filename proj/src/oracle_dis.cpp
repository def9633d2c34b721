#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"
#include "arbor/oracle.hpp"
#include "arbor/validity.hpp"

namespace arbor {

namespace {

struct Constraint {
  int u;
  int v;
};

// Edges whose endpoints have different closed neighbourhoods.
std::vector<Constraint> constraints_of(const Graph& g) {
  std::vector<Constraint> out;
  for (const Edge& e : g.edges()) {
    if (g.closed_neighbors(e.u) != g.closed_neighbors(e.v)) out.push_back({e.u, e.v});
  }
  return out;
}

struct DisSearch {
  const Graph& g;
  BudgetMeter& meter;
  std::vector<int> order;
  // checks[i]: constraints whose closed neighbourhoods are fully labelled once order[i] is.
  std::vector<std::vector<Constraint>> checks;
  std::vector<int> label;
  int limit = 1;

  int sum(int v) const {
    int s = 0;
    for (int w : g.closed_neighbors(v)) s += label[w];
    return s;
  }

  bool run(int i) {
    if (i == static_cast<int>(order.size())) return true;
    if (!meter.tick()) return false;
    int v = order[i];
    for (int l = 1; l <= limit; ++l) {
      label[v] = l;
      bool ok = true;
      for (const Constraint& c : checks[i]) {
        if (sum(c.u) == sum(c.v)) {
          ok = false;
          break;
        }
      }
      if (ok && run(i + 1)) return true;
      if (meter.exhausted()) break;
    }
    label[v] = 0;
    return false;
  }
};

}  // namespace

bool is_distinguishing_labeling(const Graph& g, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != g.order()) return false;
  auto sum = [&](int v) {
    int s = 0;
    for (int w : g.closed_neighbors(v)) s += labels[w];
    return s;
  };
  for (const Constraint& c : constraints_of(g)) {
    if (sum(c.u) == sum(c.v)) return false;
  }
  return true;
}

ExactResult<std::vector<int>> exact_dis(const Graph& g, int label_cap, const SearchBudget& budget) {
  if (label_cap < 1) throw InputError("label cap must be positive");
  int n = g.order();
  ExactResult<std::vector<int>> r;
  std::vector<Constraint> cons = constraints_of(g);
  BudgetMeter meter(budget);
  DisSearch s{g, meter, {}, std::vector<std::vector<Constraint>>(n), std::vector<int>(n, 0), 1};
  for (int v = 0; v < n; ++v) s.order.push_back(v);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[s.order[i]] = i;
  for (const Constraint& c : cons) {
    int last = 0;
    for (int w : g.closed_neighbors(c.u) | g.closed_neighbors(c.v)) last = std::max(last, pos[w]);
    s.checks[last].push_back(c);
  }
  for (int l = 1; l <= label_cap; ++l) {
    s.limit = l;
    std::fill(s.label.begin(), s.label.end(), 0);
    if (s.run(0)) {
      r.lower = r.upper = l;
      r.mode = l == 1 ? ProofMode::bound_met : ProofMode::exhausted_search;
      r.certificate = s.label;
      return r;
    }
    if (meter.exhausted()) {
      r.lower = l;
      r.upper = label_cap + 1;
      r.mode = ProofMode::budget_exhausted;
      return r;
    }
  }
  r.lower = label_cap + 1;
  r.upper = label_cap + 1;
  r.mode = ProofMode::budget_exhausted;
  return r;
}

DisBoundVerdict check_dis_bound(const Graph& g, const ForestCover& cover, std::span<const int> primes) {
  if (primes.empty() || static_cast<int>(primes.size()) != cover.size()) {
    throw PreconditionError("need one modulus per forest");
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 4) throw PreconditionError("moduli must be at least 4");
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (std::gcd(primes[i], primes[j]) != 1) throw PreconditionError("moduli must be pairwise coprime");
    }
  }
  if (cover.graph_hash != g.hash()) throw InputError("cover belongs to a different graph");
  for (VertexSet f : cover.forests) {
    if (!is_k_strong_forest(g, f, 2)) throw PreconditionError("cover contains a set that is not a 2-strong forest");
  }
  if (covered_edges(g, cover.forests).size() != g.edges().size()) {
    throw PreconditionError("cover does not cover every edge");
  }
  DisBoundVerdict v;
  for (int p : primes) v.product *= p;
  auto r = exact_dis(g, static_cast<int>(v.product));
  v.dis = r.exact() ? r.value() : r.lower;
  v.holds = r.exact() && v.dis <= v.product;
  return v;
}

}  // namespace arbor
