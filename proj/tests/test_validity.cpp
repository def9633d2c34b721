#include <doctest.h>

#include "arbor/families.hpp"
#include "arbor/validity.hpp"
#include "support.hpp"

using namespace arbor;
namespace fam = arbor::families;
namespace ts = testing_support;

TEST_CASE("witness trees on small graphs") {
  Graph p = fam::path(2);
  auto w = find_witness_tree(p, Edge(0, 1), 1);
  REQUIRE(w);
  CHECK(w->vertices == VertexSet::of({0, 1}));
  CHECK(w->k() == 1);

  Graph wheel = fam::wheel(7);
  for (int r = 1; r <= 7; ++r) {
    CHECK(find_witness_tree(wheel, Edge(0, r), 3));
    CHECK_FALSE(find_witness_tree(wheel, Edge(0, r), 4));
    Edge rim(r, r % 7 + 1);
    auto t = find_witness_tree(wheel, rim, 5);
    REQUIRE(t);
    CHECK(ts::induces_tree(wheel, t->vertices));
    CHECK(t->vertices.size() == 6);
    CHECK(t->vertices.contains(rim.u));
    CHECK(t->vertices.contains(rim.v));
    CHECK_FALSE(find_witness_tree(wheel, rim, 6));
  }
}

TEST_CASE("k_valid_edges examples") {
  CHECK(k_valid_edges(fam::complete(3), 2).empty());
  CHECK(k_valid_edges(fam::cycle(4), 2).size() == 4);
  // Clique 0..3, tail 3-4-5: every edge at the attachment vertex is 3-valid.
  Graph g = fam::clique_plus_tail(3, 3);
  auto valid = k_valid_edges(g, 3);
  for (const Edge& e : g.edges()) {
    if (e.u == 3 || e.v == 3) CHECK(std::find(valid.begin(), valid.end(), e) != valid.end());
  }
}

TEST_CASE("is_k_strong_forest") {
  CHECK(is_k_strong_forest(fam::wheel(7), fam::wheel7_forests()[0], 4));
  CHECK_FALSE(is_k_strong_forest(fam::path(3), VertexSet::of({1}), 1));
  CHECK(is_k_strong_forest(fam::path(3), VertexSet::of({0, 1, 2}), 2));
  CHECK_FALSE(is_k_strong_forest(fam::cycle(4), VertexSet::range(4), 1));
}

TEST_CASE("k-valid edges agree with brute force") {
  ts::Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    Graph g = ts::gnp(8, 0.35 + 0.05 * (i % 5), rng);
    for (int k = 1; k <= 5; ++k) {
      auto got = k_valid_edges(g, k);
      auto want = ts::bf_k_valid(g, k);
      CHECK(std::set<Edge>(got.begin(), got.end()) == want);
      for (const Edge& e : got) {
        auto w = find_witness_tree(g, e, k);
        REQUIRE(w);
        CHECK(ts::induces_tree(g, w->vertices));
        CHECK(w->vertices.size() == k + 1);
      }
    }
  }
}

TEST_CASE("2-valid edges are exactly the non-twin edges") {
  ts::Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    Graph g = ts::gnp(7, 0.6, rng);
    auto twins = twin_edges(g);
    auto valid = k_valid_edges(g, 2);
    CHECK(twins.size() + valid.size() == static_cast<std::size_t>(g.size()));
    for (const Edge& e : twins) CHECK(std::find(valid.begin(), valid.end(), e) == valid.end());
  }
}

TEST_CASE("validity is monotone in the ambient set") {
  ts::Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    Graph g = ts::gnp(9, 0.4, rng);
    VertexSet within = VertexSet::range(9).without(static_cast<int>(rng() % 9));
    for (const Edge& e : k_valid_edges(g, 3, within)) CHECK(is_k_valid(g, e, 3, g.vertices()));
  }
}
