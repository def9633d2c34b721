#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

// Graphs are capped so that every vertex set fits in one machine word.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63}, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  // Least member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr auto operator<=>(const VertexSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, out-of-range indices or n > kMaxVertices.
  // Duplicate and reversed pairs collapse to one edge.
  Graph(int n, std::span<const std::pair<int, int>> pairs);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> pairs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const { return rows_[v].with(v); }
  int degree(int v) const { return rows_[v].size(); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  bool has_edge(Edge e) const { return e.u < n_ && e.v < n_ && adjacent(e.u, e.v); }

  // Number of edges with both ends in s.
  int edges_within(VertexSet s) const;
  std::vector<Edge> edges_in(VertexSet s) const;

  // Canonical 64-bit FNV-1a hash of (n, sorted edge list).
  std::uint64_t hash() const { return hash_; }
  std::string hash_hex() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void build(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
  std::uint64_t hash_ = 0;
};

std::string format_hash(std::uint64_t h);

/// build_graph: the canonical constructor as a free function.
Graph build_graph(int n, std::span<const std::pair<int, int>> pairs);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;    // new index -> old index
  std::vector<int> from_parent;  // old index -> new index, -1 if dropped

  VertexSet lift(VertexSet local) const;
};

// Vertices are renumbered densely in increasing order of their old index.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Record of contracting a matching: old vertex -> class, class -> members.
struct ContractionMap {
  std::uint64_t source_hash = 0;
  std::vector<int> class_of;
  std::vector<VertexSet> members;
  std::vector<Edge> matching;

  int class_count() const { return static_cast<int>(members.size()); }
  VertexSet expand(VertexSet classes) const;
};

struct Contraction {
  Graph graph;
  ContractionMap map;
};

// Classes are numbered by their least member. Throws InputError if m is not a
// matching of g.
Contraction contract_matching(const Graph& g, std::span<const Edge> m);

struct ForestComponent {
  VertexSet vertices;
  int edges = 0;
};

struct ForestCheck {
  bool acyclic = false;
  std::vector<ForestComponent> components;  // ordered by least vertex
};

ForestCheck is_induced_forest(const Graph& g, VertexSet s);

// Connected components of g[s], ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet s);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g, VertexSet s);

// Vertices reachable from `from` inside `within`.
VertexSet reachable(const Graph& g, VertexSet from, VertexSet within);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // ordered by least vertex
  VertexSet cut_vertices;
};

// Biconnected components; a bridge is a 2-vertex block, an isolated vertex a
// 1-vertex block.
BlockDecomposition blocks(const Graph& g);
bool is_biconnected(const Graph& g);

// Edges uv with N[u] = N[v].
std::vector<Edge> twin_edges(const Graph& g);

// Edge list text format.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// DOT export; each overlay set gets its own colour.
void write_dot(std::ostream& out, const Graph& g, std::span<const VertexSet> overlay = {});

}  // namespace arbor
