#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transvec/phi.hpp"
#include "transvec/verify.hpp"

using namespace transvec;

namespace {

SignedWord a2_word(std::vector<int> ls) { return SignedWord(CoxeterGraph::path(2), std::move(ls)); }

}  // namespace

TEST_CASE("phi of a trivial move is the relabeling matrix") {
  SignedWord w = a2_word({-1, 2});
  SigmaGraph sg = build_sigma(w);
  Move mv{MoveKind::Trivial2, 2};
  for (int sign : {+1, -1}) {
    ZMatrix p = make_phi(sg, mv, sign).matrix;
    CHECK(p.at(0, 1) == 1);
    CHECK(p.at(1, 0) == 1);
    CHECK(p.at(0, 0) == 0);
    CHECK(p.at(1, 1) == 0);
  }
}

TEST_CASE("phi of the two-letter non-trivial move") {
  SignedWord w = a2_word({-1, 1});
  SigmaGraph sg = build_sigma(w);  // single edge 2 -> 1
  Move mv{MoveKind::Nontrivial2, 2};
  ZMatrix plus = make_phi(sg, mv, +1).matrix;
  // (x1, x2) -> (x1, -x2): no edges into position 2.
  CHECK(plus.apply({5, 7}) == std::vector<int64_t>{5, -7});
  ZMatrix minus = make_phi(sg, mv, -1).matrix;
  // (x1, x2) -> (x1, x1 - x2): one edge out of position 2.
  CHECK(minus.apply({5, 7}) == std::vector<int64_t>{5, -2});
}

TEST_CASE("three-move phi differs from the relabeling only in one row") {
  SignedWord w = a2_word({-1, -2, -1});
  SigmaGraph sg = build_sigma(w);
  Move mv{MoveKind::Braid3, 3};
  ZMatrix p = make_phi(sg, mv, +1).matrix;
  std::vector<int> sigma = move_sigma(mv, 3);
  for (int l = 1; l <= 2; ++l)
    for (int c = 1; c <= 3; ++c) CHECK(p.at(l - 1, c - 1) == (c == sigma[l] ? 1 : 0));
  // Row 3 mixes the incoming neighbor with the negated old coordinate.
  CHECK(p.at(2, 1) == 1);
  CHECK(p.at(2, 2) == -1);
}

TEST_CASE("inverse identities") {
  CHECK(check_phi_inverses(a2_word({-1, 1}), {MoveKind::Nontrivial2, 2}).ok());
  CHECK(check_phi_inverses(a2_word({-1, 2}), {MoveKind::Trivial2, 2}).ok());
  SignedWord a4 = a4_example_word();
  for (Move mv : enumerate_moves(a4)) CHECK(check_phi_inverses(a4, mv).ok());
}

TEST_CASE("phi squared equals the transvection") {
  SignedWord w = a2_word({-1, 1});
  Move mv{MoveKind::Nontrivial2, 2};
  CHECK(check_tau_phi_squared(w, mv).ok());
  // Explicitly: the composite maps (x1,x2) to (x1, x1+x2).
  SigmaGraph si = build_sigma(w);
  SigmaGraph sp = build_sigma(apply_move(w, mv));
  ZMatrix comp = make_phi(sp, mv, +1).matrix * make_phi(si, mv, +1).matrix;
  CHECK(comp.apply({5, 7}) == std::vector<int64_t>{5, 12});

  SignedWord a4 = a4_example_word();
  for (Move m2 : enumerate_moves(a4))
    if (!is_trivial(m2)) CHECK(check_tau_phi_squared(a4, m2).ok());
  CHECK_THROWS_AS(check_tau_phi_squared(a2_word({-1, 2}), Move{MoveKind::Trivial2, 2}),
                  InputError);
}

TEST_CASE("intertwining with exceptions") {
  SignedWord w = a2_word({-1, 2});
  IntertwinerReport rep = check_intertwiner(w, {MoveKind::Trivial2, 2});
  CHECK(rep.check.ok());
  CHECK(rep.excepted.empty());

  SignedWord a4 = a4_example_word();
  SigmaGraph sg = build_sigma(a4);
  Move mv{MoveKind::Nontrivial2, 8};
  IntertwinerReport rep8 = check_intertwiner(a4, mv);
  CHECK(rep8.check.ok());
  std::vector<int> expected;
  for (int l : sg.bounded_set())
    if (sg.has_edge(l, 8)) expected.push_back(l);
  CHECK(rep8.excepted == expected);
  CHECK_FALSE(rep8.excepted.empty());
}

TEST_CASE("form pullback identity") {
  CHECK(check_omega_transform(a2_word({-1, 1}), {MoveKind::Nontrivial2, 2}).ok());
  CHECK(check_omega_transform(a2_word({-1, 2}), {MoveKind::Trivial2, 2}).ok());
  SignedWord a4 = a4_example_word();
  for (Move mv : enumerate_moves(a4)) CHECK(check_omega_transform(a4, mv).ok());
}

TEST_CASE("random words satisfy all four identities") {
  InstanceGen gen(53);
  for (int i = 0; i < 60; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    SignedWord w = gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 9));
    CHECK(check_instance_phi(w).empty());
    CHECK(check_instance_omega(w).empty());
  }
}

TEST_CASE("identity certificate") {
  SignedWord w = a2_word({-1, -2, -1});
  ConjugacyCertificate cert = conjugacy_certificate(w, w, 100);
  CHECK(cert.path.empty());
  CHECK(cert.phi.is_identity());
  REQUIRE(cert.generator_images.size() == 1);
  CHECK(cert.generator_images[0].first == 3);
}

TEST_CASE("one-step certificate") {
  SignedWord w = a2_word({-1, -2, -1});
  SignedWord v = a2_word({-2, -1, -2});
  ConjugacyCertificate cert = conjugacy_certificate(w, v, 100);
  CHECK(cert.path.size() == 1);
  CHECK(cert.words.back() == v);
  CHECK(!cert.to_text().empty());
}

TEST_CASE("two-step certificate along the documented rewrite") {
  SignedWord a4 = a4_example_word();
  SignedWord target = apply_move(apply_move(a4, {MoveKind::Nontrivial2, 8}),
                                 {MoveKind::Braid3, 10});
  ConjugacyCertificate cert = conjugacy_certificate(a4, target, 4000);
  CHECK(cert.path.size() == 2);
  CHECK(cert.words.back() == target);
  int64_t d = det(cert.phi);
  CHECK((d == 1 || d == -1));
}

TEST_CASE("certificate rejects unrelated words") {
  CHECK_THROWS_AS(conjugacy_certificate(a2_word({-1}), a2_word({-2}), 100), InputError);
}
