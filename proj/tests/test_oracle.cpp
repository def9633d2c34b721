#include <doctest.h>

#include "arbor/cover.hpp"
#include "arbor/errors.hpp"
#include "arbor/families.hpp"
#include "arbor/oracle.hpp"
#include "arbor/validity.hpp"
#include "support.hpp"

using namespace arbor;
namespace fam = arbor::families;
namespace ts = testing_support;

TEST_CASE("exact f_k on the wheel and small fixtures") {
  Graph w = fam::wheel(7);
  for (int k = 1; k <= 3; ++k) CHECK(exact_f_k(w, k).value() == 5);
  for (int k = 4; k <= 5; ++k) {
    auto r = exact_f_k(w, k);
    CHECK(r.exact());
    CHECK(r.value() == 2);
    CHECK(verify_cover(w, *r.certificate).valid);
  }
  CHECK(exact_f_k(fam::cycle(4), 2).value() == 2);
  CHECK(exact_f_k(fam::complete(5), 1).value() == 10);
  auto k3 = exact_f_k(fam::complete(3), 2);
  CHECK(k3.value() == 0);
  CHECK(k3.certificate->forests.empty());
}

TEST_CASE("candidate forests") {
  auto p3 = enumerate_candidate_forests(fam::path(3), 2);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0] == VertexSet::range(3));
  auto c4 = enumerate_candidate_forests(fam::cycle(4), 2);
  CHECK(c4.size() == 4);
  for (VertexSet s : c4) CHECK(s.size() == 3);
  CHECK(enumerate_candidate_forests(fam::complete(3), 2).empty());
}

TEST_CASE("every k-strong forest extends to a candidate") {
  ts::Rng rng(21);
  for (int i = 0; i < 15; ++i) {
    Graph g = ts::gnp(7, 0.45, rng);
    for (int k = 1; k <= 3; ++k) {
      auto cands = enumerate_candidate_forests(g, k);
      for (VertexSet s : ts::all_subsets(7)) {
        if (s.empty() || !ts::bf_k_strong(g, s, k)) continue;
        auto es = g.edges_in(s);
        bool found = std::any_of(cands.begin(), cands.end(), [&](VertexSet c) {
          return std::all_of(es.begin(), es.end(), [&](Edge e) { return c.contains(e.u) && c.contains(e.v); });
        });
        CHECK(found);
      }
    }
  }
}

TEST_CASE("exact f_k matches brute force") {
  ts::Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    Graph g = ts::gnp(6 + i % 2, 0.5, rng);
    for (int k = 1; k <= 3; ++k) {
      auto r = exact_f_k(g, k);
      CHECK(r.exact());
      CHECK(r.value() == ts::bf_fk(g, k));
      CHECK(verify_cover(g, *r.certificate).valid);
    }
  }
}

TEST_CASE("verify_cover reports violations") {
  Graph w = fam::wheel(7);
  auto f = fam::wheel7_forests();
  CHECK(verify_cover(w, make_cover(w, 3, f)).valid);
  CHECK(verify_cover(w, make_cover(w, 4, {f[0], f[1]})).valid);
  auto bad = verify_cover(fam::cycle(4), make_cover(fam::cycle(4), 2, {VertexSet::of({0, 1, 2})}));
  CHECK_FALSE(bad.valid);
  CHECK(bad.violation == CoverViolation::uncovered_edge);
  CHECK(bad.uncovered.size() == 2);
  auto cyc = verify_cover(fam::cycle(4), make_cover(fam::cycle(4), 1, {VertexSet::range(4)}));
  CHECK(cyc.violation == CoverViolation::not_a_forest);
  CHECK_THROWS_AS(verify_cover(fam::cycle(5), make_cover(fam::cycle(4), 1, {})), InputError);
}

TEST_CASE("cover json round trip") {
  Graph w = fam::wheel(7);
  ForestCover c = make_cover(w, 3, fam::wheel7_forests());
  ForestCover back = cover_from_json(cover_to_json(c));
  CHECK(back.k == 3);
  CHECK(back.graph_hash == c.graph_hash);
  CHECK(back.forests == c.forests);
}

TEST_CASE("budget exhaustion gives an interval") {
  FkLimits tight{SearchBudget::node_count(1), 0};
  auto r = exact_f_k(fam::complete(6), 1, tight);
  CHECK(r.lower <= 15);
  CHECK(r.upper >= 15);
  ts::Rng rng(1);
  CHECK_THROWS_AS(exact_f_k(ts::gnp(30, 0.1, rng), 4), PreconditionError);
}

TEST_CASE("tree-depth") {
  for (int d = 1; d <= 6; ++d) CHECK(exact_tree_depth(fam::complete(d)).value() == d);
  CHECK(exact_tree_depth(fam::star(5)).value() == 2);
  CHECK(exact_tree_depth(fam::path(7)).value() == 3);
  ts::Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    Graph g = ts::gnp(9, 0.35, rng);
    auto r = exact_tree_depth(g);
    CHECK(r.value() == ts::bf_treedepth(g));
    CHECK(r.certificate->is_valid_for(g));
    CHECK(r.certificate->depth() == r.value());
  }
}

TEST_CASE("acyclic chromatic number") {
  CHECK(exact_acyclic_chromatic(fam::path(5)).value() == 2);
  CHECK(exact_acyclic_chromatic(fam::cycle(4)).value() == 3);
  CHECK(exact_acyclic_chromatic(fam::complete(5)).value() == 5);
  ts::Rng rng(24);
  for (int i = 0; i < 25; ++i) {
    Graph g = ts::gnp(7, 0.45, rng);
    auto r = exact_acyclic_chromatic(g);
    CHECK(r.value() == ts::bf_acyclic_chromatic(g));
    CHECK(ts::bf_is_acyclic_coloring(g, r.certificate->color));
    CHECK(is_acyclic_coloring(g, r.certificate->color));
  }
}

TEST_CASE("Nash-Williams arboricity") {
  CHECK(nash_williams_arboricity(fam::path(6)) == 1);
  CHECK(nash_williams_arboricity(fam::complete(4)) == 2);
  CHECK(nash_williams_arboricity(fam::complete(5)) == 3);
  for (int t = 3; t <= 5; ++t) CHECK(nash_williams_arboricity(fam::subdivided_complete(t)) == 2);
  ts::Rng rng(25);
  for (int i = 0; i < 25; ++i) {
    Graph g = ts::gnp(9, 0.5, rng);
    CHECK(nash_williams_arboricity(g) == ts::bf_arboricity(g));
  }
}

TEST_CASE("distinguishing labelings") {
  CHECK(exact_dis(fam::path(2), 10).value() == 1);
  CHECK(exact_dis(fam::complete(3), 10).value() == 1);
  CHECK(exact_dis(fam::path(3), 10).value() == ts::bf_dis(fam::path(3), 10));
  ts::Rng rng(26);
  for (int i = 0; i < 20; ++i) {
    Graph g = ts::gnp(6, 0.5, rng);
    auto r = exact_dis(g, 8);
    CHECK(r.value() == ts::bf_dis(g, 8));
    if (r.certificate) CHECK(is_distinguishing_labeling(g, *r.certificate));
  }
}

TEST_CASE("dis bound checks") {
  Graph c4 = fam::cycle(4);
  ForestCover two = make_cover(c4, 2, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 0})});
  int p45[] = {4, 5};
  auto v = check_dis_bound(c4, two, p45);
  CHECK(v.holds);
  CHECK(v.dis == ts::bf_dis(c4, 20));
  CHECK(v.product == 20);
  Graph p3 = fam::path(3);
  int p5[] = {5};
  CHECK(check_dis_bound(p3, make_cover(p3, 2, {VertexSet::range(3)}), p5).holds);
  Graph k3 = fam::complete(3);
  CHECK_THROWS_AS(check_dis_bound(k3, make_cover(k3, 2, {}), p5), PreconditionError);
  int p44[] = {4, 4};
  CHECK_THROWS_AS(check_dis_bound(c4, two, p44), PreconditionError);
}
