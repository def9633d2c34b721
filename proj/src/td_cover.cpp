#include "arbor/td_cover.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "arbor/errors.hpp"
#include "arbor/tw_general.hpp"
#include "arbor/validity.hpp"

namespace arbor {

long long int_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::optional<EliminationTree> underlying_tree(const Graph& g, int d) {
  if (d < 1) throw InputError("depth must be positive");
  auto r = exact_tree_depth(g);
  if (r.value() > d) return std::nullopt;
  return r.certificate;
}

DerivedBranch derive_branch(const EliminationTree& t, int x) {
  EliminationTree b = t.branch(x);
  return {b, b.without_root(), b.without_root_child()};
}

namespace {

// Induced paths of g[within] starting at r, each visited once as a vertex
// sequence beginning with r (at least one edge).
void for_each_rooted_path(const Graph& g, int r, VertexSet within,
                          const std::function<void(const std::vector<int>&, VertexSet)>& visit) {
  std::vector<int> path{r};
  std::function<void(VertexSet)> grow = [&](VertexSet on) {
    int last = path.back();
    for (int w : (g.neighbors(last) & within) - on) {
      if ((g.neighbors(w) & on) != VertexSet::single(last)) continue;
      path.push_back(w);
      visit(path, on.with(w));
      grow(on.with(w));
      path.pop_back();
    }
  };
  grow(VertexSet::single(r));
}

std::vector<Edge> path_edges(const std::vector<int>& p) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(p[i - 1], p[i]);
  return out;
}

void sort_unique(std::vector<Edge>& es) {
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
}

// Edges on some induced path with r as an endpoint.
std::vector<Edge> endpoint_path_edges(const Graph& g, int r, VertexSet within) {
  std::vector<Edge> out;
  for_each_rooted_path(g, r, within, [&](const std::vector<int>& p, VertexSet) {
    out.emplace_back(p[p.size() - 2], p.back());
  });
  sort_unique(out);
  return out;
}

// Edges on some induced path through r, with r anywhere on it: two arms from
// r whose non-root parts are disjoint and mutually non-adjacent.
std::vector<Edge> through_path_edges(const Graph& g, int r, VertexSet within) {
  struct Arm {
    std::vector<int> path;
    VertexSet body;  // path without r
  };
  std::vector<Arm> arms;
  for_each_rooted_path(g, r, within, [&](const std::vector<int>& p, VertexSet on) {
    arms.push_back({p, on.without(r)});
  });
  std::vector<Edge> out;
  for (const Arm& a : arms) {
    for (const Edge& e : path_edges(a.path)) out.push_back(e);
  }
  for (std::size_t i = 0; i < arms.size(); ++i) {
    VertexSet near_i = arms[i].body;
    for (int v : arms[i].body) near_i |= g.neighbors(v);
    for (std::size_t j = i + 1; j < arms.size(); ++j) {
      if (arms[j].body.intersects(near_i)) continue;
      // Both arms and their junction at r form one induced path.
      for (const Edge& e : path_edges(arms[j].path)) out.push_back(e);
      for (const Edge& e : path_edges(arms[i].path)) out.push_back(e);
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

bool AlmostValidReport::within_bound() const {
  long long n = static_cast<long long>(edges.size());
  if (depth < 2) return n == 0;
  return n <= (star_rooted ? bound_td_star : bound_td);
}

AlmostValidReport almost_k_valid_edges(const Graph& g, const EliminationTree& t, int k) {
  if (k < 1) throw InputError("k must be positive");
  if (!t.is_valid_for(g)) throw InputError("elimination tree is not valid for the graph");
  AlmostValidReport rep;
  rep.root = t.root();
  rep.depth = t.depth();
  rep.star_rooted = t.is_star_rooted();
  rep.bound_td = int_pow(2 * k, rep.depth - 1) - 1;
  rep.bound_td_star = rep.depth >= 2 ? 2 * int_pow(2 * k, rep.depth - 2) - 1 : 0;
  VertexSet m = t.members();
  auto valid = k_valid_edges(g, k, m);
  auto not_valid = [&](const Edge& e) { return !std::binary_search(valid.begin(), valid.end(), e); };
  for (const Edge& e : through_path_edges(g, rep.root, m)) {
    if (not_valid(e)) rep.edges.push_back(e);
  }
  for (const Edge& e : endpoint_path_edges(g, rep.root, m)) {
    if (not_valid(e)) rep.endpoint_edges.push_back(e);
  }
  for (int x : t.children(rep.root)) {
    VertexSet b = t.descendants(x).with(x).with(rep.root);
    int count = 0;
    for (const Edge& e : rep.edges) count += b.contains(e.u) && b.contains(e.v);
    rep.per_branch.push_back(count);
  }
  return rep;
}

bool TdLedgerEntry::ok() const {
  return f1 <= b1 && f2 <= b23 && f3 <= b23 && f4 <= b4 && f5 <= b5 && f1 + f2 + f3 + f4 + f5 <= total_bound;
}

bool TdCoverResult::ledger_ok() const {
  return std::all_of(ledger.begin(), ledger.end(), [](const TdLedgerEntry& e) { return e.ok(); });
}

namespace {

class TdCover {
 public:
  TdCover(const Graph& g, int k) : g_(g), k_(k) {}

  std::vector<TdLedgerEntry> ledger;

  std::vector<VertexSet> run(const EliminationTree& t) {
    VertexSet m = t.members();
    if (g_.edges_within(m) == 0) return {};
    auto roots = t.roots();
    if (roots.size() > 1) {
      std::vector<std::vector<VertexSet>> parts;
      for (int rho : roots) parts.push_back(run(t.subtree(rho)));
      return checked(merge_indexwise(parts));
    }
    int r = roots.front();
    int d = t.depth();
    if (d <= 1) return {};
    if (d == 2) {
      if (g_.edges_within(m) >= k_) return {(g_.neighbors(r) & m).with(r)};
      return {};
    }
    return split(t, r, d);
  }

 private:
  // Every assembled union must still be a k-strong forest.
  std::vector<VertexSet> checked(std::vector<VertexSet> fs) const {
    for (VertexSet f : fs) {
      if (!is_k_strong_forest(g_, f, k_)) throw VerificationError("assembled set is not a k-strong forest");
    }
    return fs;
  }

  bool valid_in(Edge e, VertexSet s) const {
    return s.contains(e.u) && s.contains(e.v) && is_k_valid(g_, e, k_, s);
  }

  VertexSet witness(Edge e, VertexSet within) const {
    auto w = find_witness_tree(g_, e, k_, within);
    if (!w) throw VerificationError("missing witness tree for a k-valid edge");
    return w->vertices;
  }

  std::vector<VertexSet> split(const EliminationTree& t, int r, int d) {
    VertexSet m = t.members();
    std::vector<Edge> valid = k_valid_edges(g_, k_, m);
    if (valid.empty()) return {};
    std::vector<int> xs = t.children(r).to_vector();
    std::vector<VertexSet> branch;
    for (int x : xs) branch.push_back(t.descendants(x).with(x).with(r));
    auto branch_of = [&](const Edge& e) {
      for (std::size_t i = 0; i < branch.size(); ++i) {
        if (branch[i].contains(e.u) && branch[i].contains(e.v)) return static_cast<int>(i);
      }
      throw VerificationError("edge outside every branch");
    };
    int nb = static_cast<int>(xs.size());

    // S1: root-star edges.
    std::vector<VertexSet> f1;
    std::vector<Edge> s1;
    VertexSet children = t.children(r);
    for (const Edge& e : valid) {
      if ((e.u == r && children.contains(e.v)) || (e.v == r && children.contains(e.u))) s1.push_back(e);
    }
    if (static_cast<int>(s1.size()) >= k_) {
      VertexSet star = VertexSet::single(r);
      for (const Edge& e : s1) star |= VertexSet::of({e.u, e.v});
      f1.push_back(star);
    } else {
      for (const Edge& e : s1) f1.push_back(witness(e, m));
    }

    // S2, S3: recursive covers of G_i - r and G_i - x_i.
    std::vector<std::vector<VertexSet>> parts2, parts3;
    for (int i = 0; i < nb; ++i) {
      DerivedBranch db = derive_branch(t, xs[i]);
      parts2.push_back(run(db.without_root));
      std::vector<VertexSet> with_root;
      for (VertexSet f : run(db.without_x)) {
        if (f.contains(r)) with_root.push_back(f);
      }
      parts3.push_back(with_root);
    }
    std::vector<VertexSet> f2 = checked(merge_indexwise(parts2));
    std::vector<VertexSet> f3 = checked(merge_indexwise(parts3));

    // Classify the rest.
    std::vector<std::vector<VertexSet>> parts4(nb);
    std::vector<std::vector<Edge>> s5(nb);
    for (const Edge& e : valid) {
      if (std::find(s1.begin(), s1.end(), e) != s1.end()) continue;
      int i = branch_of(e);
      if (valid_in(e, branch[i].without(r))) continue;
      if (valid_in(e, branch[i].without(xs[i]))) continue;
      if (valid_in(e, branch[i])) {
        parts4[i].push_back(witness(e, branch[i]));
      } else {
        s5[i].push_back(e);
      }
    }
    std::vector<VertexSet> f4 = checked(merge_indexwise(parts4));

    // S5: almost k-valid leftovers.
    std::vector<VertexSet> f5;
    int s = 0;
    for (int i = 0; i < nb; ++i) s += g_.neighbors(r).intersects(branch[i].without(r));
    if (s <= k_ - 1) {
      for (int i = 0; i < nb; ++i) {
        for (const Edge& e : s5[i]) f5.push_back(witness(e, m));
      }
    } else {
      bool any = std::any_of(s5.begin(), s5.end(), [](const auto& v) { return !v.empty(); });
      if (any) {
        std::vector<std::vector<VertexSet>> paths(nb);
        for (int i = 0; i < nb; ++i) {
          VertexSet at_root = g_.neighbors(r) & branch[i];
          if (at_root.empty()) continue;
          paths[i] = root_paths(r, branch[i], s5[i]);
          if (paths[i].empty()) paths[i].push_back(VertexSet::of({r, at_root.first()}));
        }
        std::size_t rounds = 0;
        for (const auto& p : paths) rounds = std::max(rounds, p.size());
        for (std::size_t j = 0; j < rounds; ++j) {
          VertexSet f;
          for (const auto& p : paths) {
            if (!p.empty()) f |= p[j % p.size()];
          }
          f5.push_back(f);
        }
        f5 = checked(f5);
      }
    }

    TdLedgerEntry entry;
    entry.root = r;
    entry.depth = d;
    entry.f1 = static_cast<int>(f1.size());
    entry.f2 = static_cast<int>(f2.size());
    entry.f3 = static_cast<int>(f3.size());
    entry.f4 = static_cast<int>(f4.size());
    entry.f5 = static_cast<int>(f5.size());
    long long base = 2LL * k_;
    entry.b1 = k_ - 1;
    entry.b23 = int_pow(base, d - 1);
    entry.b4 = 2 * (int_pow(base, d - 2) - 1);
    entry.b5 = (k_ - 1) * (2 * int_pow(base, d - 2) - 1);
    entry.total_bound = int_pow(base, d);
    ledger.push_back(entry);

    std::vector<VertexSet> out;
    for (auto* part : {&f1, &f2, &f3, &f4, &f5}) out.insert(out.end(), part->begin(), part->end());
    return out;
  }

  // Shortest induced path from r inside the branch for each target edge, deduplicated.
  std::vector<VertexSet> root_paths(int r, VertexSet branch, const std::vector<Edge>& targets) const {
    std::vector<std::pair<std::size_t, VertexSet>> best(targets.size(), {SIZE_MAX, VertexSet()});
    for_each_rooted_path(g_, r, branch, [&](const std::vector<int>& p, VertexSet on) {
      Edge last(p[p.size() - 2], p.back());
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] == last && p.size() < best[i].first) best[i] = {p.size(), on};
      }
    });
    std::vector<VertexSet> out;
    for (const auto& [len, on] : best) {
      if (len == SIZE_MAX) throw VerificationError("edge left for the root-path step lies on no induced root path");
      if (std::find(out.begin(), out.end(), on) == out.end()) out.push_back(on);
    }
    return out;
  }

  const Graph& g_;
  int k_;
};

EliminationTree lift_tree(const InducedSubgraph& sub, const EliminationTree& local, int n) {
  std::vector<int> parent(n, -1);
  for (int v : local.members()) {
    int p = local.parent_of(v);
    parent[sub.to_parent[v]] = p < 0 ? -1 : sub.to_parent[p];
  }
  return EliminationTree(std::move(parent), sub.lift(local.members()));
}

}  // namespace

TdCoverResult cover_td_detailed(const Graph& g, const EliminationTree& t, int k) {
  if (k < 1) throw InputError("k must be positive");
  if (!t.is_valid_for(g)) throw InputError("elimination tree is not valid for the graph");
  TdCoverResult res;
  if (k == 1) {
    InducedSubgraph sub = induced_subgraph(g, t.members());
    int tw = std::max(t.depth() - 1, 1);
    std::vector<VertexSet> forests;
    for (VertexSet f : cover_f1_tw(sub.graph, tw).forests) forests.push_back(sub.lift(f));
    res.cover = make_cover(g, 1, std::move(forests));
    return res;
  }
  TdCover builder(g, k);
  std::vector<VertexSet> forests = builder.run(t);
  res.ledger = std::move(builder.ledger);
  res.cover = make_cover(g, k, dedup_forests(std::move(forests)));
  return res;
}

ForestCover cover_td(const Graph& g, const EliminationTree& t, int k) { return cover_td_detailed(g, t, k).cover; }

namespace {

// Calls visit for every r-subset of {0..n-1}, in lexicographic order.
void for_each_subset(int n, int r, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      visit(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

ForestCover cover_td_by_levels(const Graph& g, const EliminationTree& t, int k) {
  int d = t.depth();
  if (d <= k + 1) return cover_td(g, t, k);
  std::vector<VertexSet> by_level(d);
  for (int v : t.members()) by_level[t.level(v) - 1].insert(v);
  std::vector<VertexSet> forests;
  for_each_subset(d, k + 1, [&](const std::vector<int>& levels) {
    VertexSet s;
    for (int l : levels) s |= by_level[l];
    for (VertexSet f : cover_td(g, t.restricted_to(s), k).forests) forests.push_back(f);
  });
  return make_cover(g, k, dedup_forests(std::move(forests)));
}

namespace {

class TdColoringCheck {
 public:
  TdColoringCheck(const Graph& g, int p) : g_(g), p_(p) {}

  int td(VertexSet s) {
    auto it = memo_.find(s.bits());
    if (it != memo_.end()) return it->second;
    int d = tree_depth_of(g_, s);
    memo_[s.bits()] = d;
    return d;
  }

  // Every set of 2..p classes among `used` that includes `focus` has tree-depth
  // at most its number of classes. Classes are given as vertex sets.
  bool subsets_ok(const std::vector<VertexSet>& classes, int focus) {
    std::vector<int> others;
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
      if (c != focus && !classes[c].empty()) others.push_back(c);
    }
    bool ok = true;
    std::function<void(std::size_t, VertexSet, int)> rec = [&](std::size_t start, VertexSet s, int count) {
      if (!ok) return;
      if (count >= 2 && s.size() > count && td(s) > count) {
        ok = false;
        return;
      }
      if (count == p_) return;
      for (std::size_t i = start; i < others.size(); ++i) rec(i + 1, s | classes[others[i]], count + 1);
    };
    rec(0, classes[focus], 1);
    return ok;
  }

 private:
  const Graph& g_;
  int p_;
  std::unordered_map<std::uint64_t, int> memo_;
};

struct TdColoringSearch {
  const Graph& g;
  int p;
  BudgetMeter& meter;
  TdColoringCheck& check;
  int q = 0;
  std::vector<int> color;
  std::vector<VertexSet> classes;

  bool run(int v, int used) {
    if (v == g.order()) return true;
    if (!meter.tick()) return false;
    for (int c = 0; c < std::min(used + 1, q); ++c) {
      if (g.neighbors(v).intersects(classes[c])) continue;
      classes[c].insert(v);
      color[v] = c;
      if (check.subsets_ok(classes, c) && run(v + 1, std::max(used, c + 1))) return true;
      classes[c].erase(v);
      color[v] = -1;
      if (meter.exhausted()) return false;
    }
    return false;
  }
};

}  // namespace

bool is_p_tree_depth_coloring(const Graph& g, const std::vector<int>& color, int p) {
  if (!is_proper_coloring(g, color)) return false;
  int top = 0;
  for (int c : color) top = std::max(top, c + 1);
  std::vector<VertexSet> classes(top);
  for (int v = 0; v < g.order(); ++v) classes[color[v]].insert(v);
  TdColoringCheck check(g, p);
  for (int c = 0; c < top; ++c) {
    if (!check.subsets_ok(classes, c)) return false;
  }
  return true;
}

ExactResult<Coloring> p_tree_depth_coloring(const Graph& g, int p, const SearchBudget& budget) {
  if (p < 1) throw InputError("p must be positive");
  int n = g.order();
  ExactResult<Coloring> r;
  if (n == 0) {
    r.certificate = Coloring{{}, 0, ColoringContract::tree_depth, p};
    return r;
  }
  BudgetMeter meter(budget);
  TdColoringCheck check(g, p);
  for (int q = 1; q <= n; ++q) {
    TdColoringSearch s{g, p, meter, check, q, std::vector<int>(n, -1), std::vector<VertexSet>(q)};
    if (s.run(0, 0)) {
      r.lower = r.upper = q;
      r.mode = ProofMode::exhausted_search;
      r.certificate = Coloring{s.color, q, ColoringContract::tree_depth, p};
      return r;
    }
    if (meter.exhausted()) {
      std::vector<int> distinct(n);
      for (int v = 0; v < n; ++v) distinct[v] = v;
      r.lower = q;
      r.upper = n;
      r.mode = ProofMode::budget_exhausted;
      r.certificate = Coloring{distinct, n, ColoringContract::tree_depth, p};
      return r;
    }
  }
  throw VerificationError("p-tree-depth colouring search failed with n colours");
}

ForestCover cover_via_low_td_coloring(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 1) throw InputError("k must be positive");
  auto col = p_tree_depth_coloring(g, k + 1, budget);
  if (!col.exact()) {
    throw BudgetExceeded("(k+1)-tree-depth colouring search exhausted its budget at q = " +
                         std::to_string(col.lower));
  }
  const Coloring& c = *col.certificate;
  int q = c.colors;
  std::vector<VertexSet> forests;
  auto run_on = [&](VertexSet s) {
    InducedSubgraph sub = induced_subgraph(g, s);
    auto td = exact_tree_depth(sub.graph);
    EliminationTree t = lift_tree(sub, *td.certificate, g.order());
    for (VertexSet f : cover_td(g, t, k).forests) forests.push_back(f);
  };
  if (q <= k + 1) {
    run_on(g.vertices());
  } else {
    for_each_subset(q, k + 1, [&](const std::vector<int>& cs) { run_on(c.classes_members(cs)); });
  }
  return make_cover(g, k, dedup_forests(std::move(forests)));
}

}  // namespace arbor
