#pragma once

#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Rooted forest over a subset of a graph's vertices certifying tree-depth:
/// every edge of g[members] must join an ancestor/descendant pair.
///
/// parent[v] == -1 marks a root; entries for non-members are ignored. Trees for
/// sub-problems keep the global vertex numbering of the original graph.
class EliminationTree {
 public:
  EliminationTree() = default;
  EliminationTree(std::vector<int> parent, VertexSet members);

  const std::vector<int>& parent() const { return parent_; }
  int parent_of(int v) const { return parent_[v]; }
  VertexSet members() const { return members_; }

  std::vector<int> roots() const;
  bool single_root() const { return roots().size() == 1; }
  int root() const;  // requires single_root()
  VertexSet children(int v) const;
  // Number of vertices on the longest root-to-leaf path (0 for an empty tree).
  int depth() const;
  int level(int v) const;  // 1 for a root
  VertexSet descendants(int v) const;  // excludes v
  VertexSet ancestors(int v) const;    // excludes v
  bool is_ancestor(int a, int v) const;

  // TD*(d): a single root with exactly one child.
  bool is_star_rooted() const;

  // Every edge of g[members] joins an ancestor/descendant pair.
  bool is_valid_for(const Graph& g) const;

  // Tree of the branch {r} ∪ subtree(x) for a child x of the single root r.
  EliminationTree branch(int child) const;
  // For a TD*-tree with root r and only child x: the tree of G - r (root x) and
  // of G - x (x removed, r adopts x's children). Throws PreconditionError otherwise.
  EliminationTree without_root() const;
  EliminationTree without_root_child() const;
  // The subtree rooted at v as a stand-alone tree.
  EliminationTree subtree(int v) const;
  // Restriction to a vertex subset: each kept vertex hangs below its nearest
  // kept ancestor.
  EliminationTree restricted_to(VertexSet keep) const;

 private:
  std::vector<int> parent_;
  VertexSet members_;
};

}  // namespace arbor
