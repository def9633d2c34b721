#include <doctest.h>

#include "arbor/cover.hpp"
#include "arbor/errors.hpp"
#include "arbor/families.hpp"
#include "arbor/oracle.hpp"
#include "arbor/tw_general.hpp"
#include "arbor/validity.hpp"
#include "support.hpp"

using namespace arbor;
namespace fam = arbor::families;
namespace ts = testing_support;

TEST_CASE("wheel") {
  Graph w = fam::wheel(7);
  CHECK(w.order() == 8);
  CHECK(w.size() == 14);
  CHECK(fam::wheel(3) == fam::complete(4));
  CHECK_THROWS_AS(fam::wheel(2), InputError);
  for (int r = 1; r <= 7; ++r) {
    CHECK(is_k_valid(w, Edge(0, r), 3, w.vertices()));
    CHECK_FALSE(is_k_valid(w, Edge(0, r), 4, w.vertices()));
  }
  auto f = fam::wheel7_forests();
  CHECK(f.size() == 5);
  for (int k = 1; k <= 3; ++k) CHECK(verify_cover(w, make_cover(w, k, f)).valid);
  for (int k = 4; k <= 5; ++k) CHECK(verify_cover(w, make_cover(w, k, {f[0], f[1]})).valid);
}

TEST_CASE("subdivided complete graphs") {
  Graph c6 = fam::subdivided_complete(3);
  CHECK(c6.order() == 6);
  CHECK(c6.size() == 6);
  Graph t4 = fam::subdivided_complete(4);
  CHECK(t4.order() == 10);
  CHECK(t4.size() == 12);
  auto [g1, g2] = fam::subdivided_complete_halves(4);
  auto has_induced_c6 = [&](VertexSet half) {
    for (VertexSet s : ts::all_subsets(10)) {
      if (!s.is_subset_of(half) || s.size() != 6 || t4.edges_within(s) != 6) continue;
      bool two_regular = true;
      for (int v : s) two_regular &= (t4.neighbors(v) & s).size() == 2;
      if (two_regular && ts::connected(induced_subgraph(t4, s).graph)) return true;
    }
    return false;
  };
  CHECK((has_induced_c6(g1) || has_induced_c6(g2)));
}

TEST_CASE("pendant double subdivision") {
  Graph plain = fam::pendant_double_subdivided_complete(3, 1);
  CHECK(plain.order() == 3 + 3 * 2);
  CHECK(plain.size() == 9);
  Graph g = fam::pendant_double_subdivided_complete(6, 2);
  CHECK(g.order() == 6 + 15 * 3);
  auto cover = fam::pendant_double_subdivided_cover(6, 2);
  REQUIRE(cover);
  CHECK(cover->size() == 3);
  CHECK(verify_cover(g, make_cover(g, 2, *cover)).valid);
  CHECK_FALSE(fam::pendant_double_subdivided_cover(5, 2));
  for (int t = 2; t <= 9; ++t) {
    auto arcs = fam::balanced_orientation(t);
    CHECK(arcs.size() == static_cast<std::size_t>(t * (t - 1) / 2));
    std::vector<int> in(t), out(t);
    std::set<Edge> seen;
    for (auto [a, b] : arcs) {
      ++out[a];
      ++in[b];
      seen.insert(Edge(a, b));
    }
    CHECK(seen.size() == arcs.size());
    for (int v = 0; v < t; ++v) {
      CHECK(in[v] >= (t - 1) / 2 - 1);
      CHECK(out[v] >= (t - 1) / 2 - 1);
    }
  }
}

TEST_CASE("clique plus tail") {
  Graph g = fam::clique_plus_tail(3, 2);
  CHECK(g.order() == 5);
  CHECK(exact_f_k(g, 2).value() == 3);
  CHECK(exact_f_k(g, 3).value() == 0);
  CHECK(exact_f_k(fam::clique_plus_tail(1, 1), 1).value() == 1);
  CHECK(k_valid_edges(fam::clique_plus_tail(2, 3), 4).empty());
}

TEST_CASE("saw graph") {
  Graph h = fam::saw_graph(2);
  CHECK(h.order() == 7);
  CHECK(h.size() == 9);
  CHECK(exact_f_k(h, 2).value() >= 2);
  CHECK(exact_f_k(h, 2).value() == ts::bf_fk(h, 2));
  CHECK(exact_treewidth(fam::saw_graph(3)) == 2);
  CHECK(fam::saw_graph(3).order() == 11);
}

TEST_CASE("subdivided biclique") {
  auto b2 = fam::subdivided_biclique(2);
  CHECK(b2.graph.order() == 8);
  CHECK(ts::induces_tree(b2.graph, b2.t1));
  CHECK(ts::induces_tree(b2.graph, b2.t2));
  CHECK(b2.t1.size() == 7);
  CHECK(b2.t2.size() == 7);
  auto b1 = fam::subdivided_biclique(1);
  CHECK(ts::induces_tree(b1.graph, b1.graph.vertices()));
  CHECK(b1.graph.size() == 2);
  CHECK(verify_cover(b1.graph, make_cover(b1.graph, 2, {b1.t1})).valid);
  auto b3 = fam::subdivided_biclique(3);
  // The trees have n^2 + n edges, so they are k-strong exactly up to k = 12.
  for (int k = 1; k <= 12; ++k) CHECK(verify_cover(b3.graph, make_cover(b3.graph, k, {b3.t1, b3.t2})).valid);
  CHECK(b3.graph.edges_within(b3.t1) == 12);
}

TEST_CASE("triangle with pendants and the td-3 family") {
  Graph tp = fam::triangle_with_pendants();
  CHECK(tp.order() == 6);
  CHECK(tp.size() == 6);
  CHECK(exact_f_k(tp, 2).value() == 3);
  for (int k = 2; k <= 4; ++k) {
    Graph x = fam::td3_extremal(k);
    CHECK(exact_tree_depth(x).value() == 3);
    CHECK(exact_f_k(x, k).value() == k - 1);
  }
}

TEST_CASE("generator registry") {
  CHECK(fam::generate("wheel", {7}).order() == 8);
  CHECK(fam::generate("saw", {3}).order() == 11);
  CHECK(fam::generate("biclique-sub", {2}).order() == 8);
  CHECK_THROWS_AS(fam::generate("nope", {}), InputError);
  CHECK_THROWS_AS(fam::generate("wheel", {}), InputError);
}
