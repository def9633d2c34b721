#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor::families {

// Basic shapes.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);  // centre 0

// Centre 0, rim 1..c in cyclic order. c >= 3.
Graph wheel(int c);

// The five forests drawn for wheel(7): the rim paths F1, F2 and three spoke stars.
std::vector<VertexSet> wheel7_forests();

// Originals 0..t-1, then one subdivision vertex per pair i<j in lexicographic order.
Graph subdivided_complete(int t);

// Vertex sets of the two star halves: G1 holds every subdivision edge at the
// smaller original, G2 every one at the larger.
std::pair<VertexSet, VertexSet> subdivided_complete_halves(int t);

// Originals 0..t-1; per pair i<j in lexicographic order: a (next to i),
// b (next to j), then k-1 pendants on a.
Graph pendant_double_subdivided_complete(int t, int k);

// The three k-strong forests {T1, T2, T3}, produced when t >= 2k+2.
std::optional<std::vector<VertexSet>> pendant_double_subdivided_cover(int t, int k);

// Orientation of K_t as (tail, head) pairs with in- and out-degree at least
// floor((t-1)/2) - 1 everywhere; Euler-circuit based.
std::vector<std::pair<int, int>> balanced_orientation(int t);

// Clique on 0..n, tail n+1..n+k-1 hanging from n.
Graph clique_plus_tail(int n, int k);

// u_i = i-1 (i = 1..2k) on a path, w_i = 2k+i-1 (i = 1..2k-1) adjacent to u_i, u_{i+1}.
Graph saw_graph(int k);

struct Biclique {
  Graph graph;
  VertexSet t1;  // all but A_1..A_{n-1}
  VertexSet t2;  // all but B_1..B_{n-1}
};

// Class A = 0..n-1, class B = n..2n-1, s_ij = 2n + i*n + j subdivides A_i B_j.
Biclique subdivided_biclique(int n);

// Triangle 0,1,2 with pendants 3-0, 4-1, 5-2.
Graph triangle_with_pendants();

// c = 0, y_1..y_{k-1} = 1..k-1, z = k, leaves k+1..2k. Edges c-y_i, z-y_i, c-leaf.
Graph td3_extremal(int k);

// Generator by family name, as used by the command line ("wheel", "saw", ...).
Graph generate(const std::string& family, const std::vector<int>& params);
std::vector<std::string> family_names();

}  // namespace arbor::families
