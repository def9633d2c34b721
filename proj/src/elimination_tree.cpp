#include "arbor/elimination_tree.hpp"

#include <algorithm>

#include "arbor/errors.hpp"

namespace arbor {

EliminationTree::EliminationTree(std::vector<int> parent, VertexSet members)
    : parent_(std::move(parent)), members_(members) {
  for (int v : members_) {
    if (v >= static_cast<int>(parent_.size())) throw InputError("elimination tree: member out of range");
    int p = parent_[v];
    if (p != -1 && !members_.contains(p)) throw InputError("elimination tree: parent outside members");
  }
  // Parent pointers must be acyclic.
  for (int v : members_) {
    int steps = 0;
    for (int u = v; u != -1; u = parent_[u]) {
      if (++steps > members_.size()) throw InputError("elimination tree: parent cycle");
    }
  }
}

std::vector<int> EliminationTree::roots() const {
  std::vector<int> out;
  for (int v : members_) {
    if (parent_[v] == -1) out.push_back(v);
  }
  return out;
}

int EliminationTree::root() const {
  auto r = roots();
  if (r.size() != 1) throw PreconditionError("elimination tree has " + std::to_string(r.size()) + " roots");
  return r.front();
}

VertexSet EliminationTree::children(int v) const {
  VertexSet out;
  for (int w : members_) {
    if (parent_[w] == v) out.insert(w);
  }
  return out;
}

int EliminationTree::level(int v) const {
  int l = 0;
  for (int u = v; u != -1; u = parent_[u]) ++l;
  return l;
}

int EliminationTree::depth() const {
  int d = 0;
  for (int v : members_) d = std::max(d, level(v));
  return d;
}

VertexSet EliminationTree::ancestors(int v) const {
  VertexSet out;
  for (int u = parent_[v]; u != -1; u = parent_[u]) out.insert(u);
  return out;
}

bool EliminationTree::is_ancestor(int a, int v) const { return ancestors(v).contains(a); }

VertexSet EliminationTree::descendants(int v) const {
  VertexSet out;
  for (int w : members_) {
    if (w != v && is_ancestor(v, w)) out.insert(w);
  }
  return out;
}

bool EliminationTree::is_star_rooted() const {
  auto r = roots();
  return r.size() == 1 && children(r.front()).size() == 1;
}

bool EliminationTree::is_valid_for(const Graph& g) const {
  if (!members_.is_subset_of(g.vertices())) return false;
  for (const Edge& e : g.edges_in(members_)) {
    if (!is_ancestor(e.u, e.v) && !is_ancestor(e.v, e.u)) return false;
  }
  return true;
}

EliminationTree EliminationTree::branch(int child) const {
  int r = root();
  if (parent_[child] != r) throw PreconditionError("branch: not a child of the root");
  VertexSet keep = descendants(child).with(child).with(r);
  return EliminationTree(parent_, keep);
}

EliminationTree EliminationTree::without_root() const {
  if (!is_star_rooted()) throw PreconditionError("cut-depth reduction needs a root of degree 1");
  int r = root();
  int x = children(r).first();
  std::vector<int> p = parent_;
  p[x] = -1;
  return EliminationTree(std::move(p), members_.without(r));
}

EliminationTree EliminationTree::without_root_child() const {
  if (!is_star_rooted()) throw PreconditionError("cut-depth reduction needs a root of degree 1");
  int r = root();
  int x = children(r).first();
  std::vector<int> p = parent_;
  for (int w : children(x)) p[w] = r;
  return EliminationTree(std::move(p), members_.without(x));
}

EliminationTree EliminationTree::subtree(int v) const {
  std::vector<int> p = parent_;
  p[v] = -1;
  return EliminationTree(std::move(p), descendants(v).with(v));
}

EliminationTree EliminationTree::restricted_to(VertexSet keep) const {
  keep &= members_;
  std::vector<int> p = parent_;
  for (int v : keep) {
    int u = parent_[v];
    while (u != -1 && !keep.contains(u)) u = parent_[u];
    p[v] = u;
  }
  return EliminationTree(std::move(p), keep);
}

}  // namespace arbor
