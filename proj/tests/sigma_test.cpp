#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "transvec/sigma.hpp"
#include "transvec/verify.hpp"

using namespace transvec;

namespace {

SignedWord a2_word(std::vector<int> ls) { return SignedWord(CoxeterGraph::path(2), std::move(ls)); }

}  // namespace

TEST_CASE("l_minus") {
  SignedWord a4 = a4_example_word();
  CHECK(l_minus(a4, 3) == 0);
  CHECK(l_minus(a4, 8) == 7);
  CHECK(l_minus(a4, 1) == 0);
  CHECK_THROWS_AS(l_minus(a4, 0), InputError);
  CHECK_THROWS_AS(l_minus(a4, 18), InputError);
}

TEST_CASE("bounded_set") {
  SignedWord a4 = a4_example_word();
  auto b = bounded_set(a4);
  CHECK(b.size() == 13);
  std::vector<int> unbounded;
  for (int l = 1; l <= 17; ++l)
    if (std::find(b.begin(), b.end(), l) == b.end()) unbounded.push_back(l);
  CHECK(unbounded == std::vector<int>{1, 2, 3, 6});

  CHECK(bounded_set(a2_word({-1, -2, -1})) == std::vector<int>{3});
  CHECK(bounded_set(a2_word({-1, 2})).empty());
}

TEST_CASE("build_sigma on the three-letter word") {
  SigmaGraph sg = build_sigma(a2_word({-1, -2, -1}));
  CHECK(sg.m() == 3);
  CHECK(sg.bounded_set() == std::vector<int>{3});
  auto es = sg.edges();
  REQUIRE(es.size() == 2);
  CHECK(sg.has_edge(3, 1));
  CHECK(sg.edge_type(3, 1) == EdgeType::Horizontal);
  CHECK(sg.has_edge(2, 3));
  CHECK(sg.edge_type(2, 3) == EdgeType::InclinedII);
}

TEST_CASE("build_sigma small cases") {
  SigmaGraph sg = build_sigma(a2_word({-1, 1}));
  CHECK(sg.edges().size() == 1);
  CHECK(sg.has_edge(2, 1));
  CHECK(sg.edge_type(2, 1) == EdgeType::Horizontal);
  CHECK(sg.bounded_set() == std::vector<int>{2});

  sg = build_sigma(a2_word({-1}));
  CHECK(sg.edges().empty());
  CHECK(sg.bounded_set().empty());

  sg = build_sigma(a2_word({}));
  CHECK(sg.m() == 0);
  CHECK(sg.edges().empty());

  CHECK_THROWS_AS(build_sigma(a2_word({-1, -1})), InputError);
}

TEST_CASE("every edge has a bounded endpoint") {
  InstanceGen gen(23);
  for (int i = 0; i < 100; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    SignedWord w = gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11));
    SigmaGraph sg = build_sigma(w);  // construction asserts the invariant
    for (auto& e : sg.edges()) CHECK((sg.bounded(e.from) || sg.bounded(e.to)));
    // Horizontal chains: the lower endpoint is the previous occurrence.
    for (auto& e : sg.edges())
      if (e.type == EdgeType::Horizontal)
        CHECK(sg.lminus[std::max(e.from, e.to)] == std::min(e.from, e.to));
  }
}

TEST_CASE("strip of the three-letter word") {
  SigmaGraph sg = build_sigma(a2_word({-1, -2, -1}));
  Strip s = build_strip(sg, 1, 2);
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0].charge == +1);
  CHECK(s.points[1].charge == -1);
  CHECK(s.points[2].charge == +1);
  CHECK_THROWS_AS(build_strip(build_sigma(a4_example_word()), 1, 3), InputError);
}

TEST_CASE("strip with no matching letters is empty") {
  SigmaGraph sg = build_sigma(SignedWord(CoxeterGraph::path(4), {-1, -2}));
  Strip s = build_strip(sg, 3, 4);
  CHECK(s.points.empty());
  CHECK(s.edges.empty());
  CHECK(check_strip_planarity(s).ok());
  CHECK(check_strip_cycles(s).ok());
}

TEST_CASE("a4 strip point count") {
  SigmaGraph sg = build_sigma(a4_example_word());
  // Five occurrences of letter 1 and six of letter 2.
  Strip s = build_strip(sg, 1, 2);
  CHECK(s.points.size() == 11);
  Strip s34 = build_strip(sg, 3, 4);
  CHECK(s34.points.size() == 6);
}

TEST_CASE("crafted crossing is caught") {
  Strip s;
  s.li = 1;
  s.lj = 2;
  s.points = {{1, -1, -1, +1}, {2, -1, -1, +1}, {3, +1, -1, -1}, {4, +1, -1, -1}};
  s.edges = {{1, 4, EdgeType::InclinedII}, {2, 3, EdgeType::InclinedII}};
  CHECK_FALSE(check_strip_planarity(s).ok());

  // Nested same-orientation chords do not cross.
  Strip t = s;
  t.edges = {{1, 3, EdgeType::InclinedII}, {2, 4, EdgeType::InclinedII}};
  CHECK(check_strip_planarity(t).ok());
}

TEST_CASE("directed polygons on a four-letter word") {
  SigmaGraph sg = build_sigma(a2_word({-1, -2, -1, 2}));
  Strip s = build_strip(sg, 1, 2);
  CHECK(check_strip_planarity(s).ok());
  CHECK(check_strip_cycles(s).ok());
}

TEST_CASE("strip checks pass on fixtures and random words") {
  CHECK(check_instance_strips(a4_example_word()).empty());
  for (int n = 2; n <= 7; ++n) CHECK(check_instance_strips(lexmin_w0_word_A(n)).empty());
  InstanceGen gen(31);
  for (int i = 0; i < 200; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    SignedWord w = gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11));
    CHECK(check_instance_strips(w).empty());
  }
}

TEST_CASE("boundary vertex witness") {
  SigmaGraph sg = build_sigma(a2_word({-1, -2, -1}));
  BoundaryWitness bw = boundary_vertex_witness(sg, {3});
  CHECK(bw.outside == 1);
  CHECK(bw.unique_neighbor == 3);
  CHECK_THROWS_AS(boundary_vertex_witness(sg, {}), InputError);
  CHECK_THROWS_AS(boundary_vertex_witness(sg, {2}), InputError);
}

TEST_CASE("boundary vertex exhaustive on the 17-letter fixture") {
  std::mt19937_64 rng(5);
  auto fails = check_instance_boundary(a4_example_word(), 13, 0, rng);
  CHECK(fails.empty());  // all 8191 nonempty subsets
}

TEST_CASE("move relabeling maps bounded onto bounded") {
  InstanceGen gen(37);
  for (int i = 0; i < 60; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    SignedWord w = gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11));
    CHECK(check_instance_graph_change(w).empty());
  }
}

TEST_CASE("graph change on the documented move sequence") {
  SignedWord a4 = a4_example_word();
  SigmaGraph s0 = build_sigma(a4);
  Move m1{MoveKind::Nontrivial2, 8};
  SigmaGraph predicted = predict_graph_change(s0, a4, m1);
  SignedWord a4b = apply_move(a4, m1);
  CHECK(predicted == build_sigma(a4b));

  Move m2{MoveKind::Braid3, 10};
  SigmaGraph predicted2 = predict_graph_change(build_sigma(a4b), a4b, m2);
  CHECK(predicted2 == build_sigma(apply_move(a4b, m2)));
}

TEST_CASE("trivial moves relabel without exceptions") {
  SignedWord w = a2_word({-1, 2});
  SigmaGraph sg = build_sigma(w);
  Move mv{MoveKind::Trivial2, 2};
  SigmaGraph predicted = predict_graph_change(sg, w, mv);
  CHECK(predicted == build_sigma(apply_move(w, mv)));
}

TEST_CASE("dot export carries labels and styles") {
  SigmaGraph sg = build_sigma(a2_word({-1, -2, -1}));
  std::string dot = to_dot(sg);
  CHECK(dot.find("label=\"1:-1\"") != std::string::npos);
  CHECK(dot.find("v3 -> v1 [style=solid]") != std::string::npos);
  CHECK(dot.find("v2 -> v3 [style=dashed]") != std::string::npos);
}

TEST_CASE("summary counts edges by family") {
  std::string s = summary(build_sigma(a2_word({-1, -2, -1})));
  CHECK(s.find("m: 3") != std::string::npos);
  CHECK(s.find("edges_horizontal: 1") != std::string::npos);
  CHECK(s.find("edges_inclined_ii: 1") != std::string::npos);
  CHECK(s.find("edges_inclined_iii: 0") != std::string::npos);
}
