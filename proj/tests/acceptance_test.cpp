// Acceptance suite: runs every criterion and prints one PASS/FAIL line per
// criterion. All arithmetic is exact; every comparison below is equality.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "transvec/orbits.hpp"
#include "transvec/verify.hpp"

using namespace transvec;

namespace {

struct Outcome {
  int id;
  std::string label;
  bool pass = true;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

OrbitReport run_word(const SignedWord& w) {
  SigmaGraph sg = build_sigma(w);
  return enumerate_orbits(SkewForm::of_sigma(sg), sg.bounded_set(), OrbitOptions{});
}

}  // namespace

int main() {
  std::vector<Outcome> outcomes;
  const uint64_t seed = kDefaultSeed;

  // Shared random instance set: at least 1000 words over graphs with up to
  // six vertices and at most fourteen letters.
  InstanceGen gen(seed);
  std::vector<SignedWord> random_set;
  while (random_set.size() < 1000) {
    CoxeterGraph g = gen.random_graph(2, 6);
    SignedWord w = gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11));
    if (w.size() >= 2) random_set.push_back(std::move(w));
  }

  // E6-compatible random words, fourteen to twenty-two letters.
  InstanceGen egen(seed ^ 0xe6e6u);
  std::vector<SignedWord> e6_set;
  for (int i = 0; i < 45; ++i) e6_set.push_back(egen.random_e6_instance(18));
  for (int i = 0; i < 5; ++i) e6_set.push_back(egen.random_e6_instance(22));
  std::vector<OrbitReport> e6_reports;

  {
    Outcome c{1, "component counts 2,6,20,52,96,192 for the chain fixtures n=2..7"};
    const uint64_t expected[] = {0, 0, 2, 6, 20, 52, 96, 192};
    for (int n = 2; n <= 7; ++n) {
      auto t0 = std::chrono::steady_clock::now();
      OrbitReport r = run_word(lexmin_w0_word_A(n));
      double dt = seconds_since(t0);
      if (r.orbit_count != expected[n])
        c.fail("n=" + std::to_string(n) + ": got " + std::to_string(r.orbit_count) +
               ", expected " + std::to_string(expected[n]));
      double budget = (n <= 6) ? 1.0 : 60.0;
      if (dt > budget)
        c.fail("n=" + std::to_string(n) + ": " + std::to_string(dt) + " s over budget");
      for (auto& v : r.violations) c.fail("n=" + std::to_string(n) + ": " + v);
    }
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{2, "closed-form count matches brute force on E6-compatible instances; "
                 "span meets radical trivially everywhere"};
    for (int n : {6, 7}) {
      OrbitReport r = run_word(lexmin_w0_word_A(n));
      if (!r.formula_applicable) c.fail("chain n=" + std::to_string(n) + " lost the flag");
      else if (r.formula_count != r.orbit_count)
        c.fail("chain n=" + std::to_string(n) + ": formula mismatch");
    }
    size_t checked = 0;
    for (auto& w : e6_set) {
      OrbitReport r = run_word(w);
      if (!r.formula_applicable) {
        c.fail(word_brief(w) + ": instance not compatible after all");
      } else if (r.formula_count != r.orbit_count) {
        c.fail(word_brief(w) + ": formula " + std::to_string(r.formula_count) +
               " vs brute " + std::to_string(r.orbit_count));
      }
      ++checked;
      e6_reports.push_back(std::move(r));
    }
    if (checked < 50) c.fail("only " + std::to_string(checked) + " compatible instances");
    size_t kernel_checked = 0;
    for (auto& w : random_set) {
      auto fails = check_instance_kernel_trivial(w);
      for (auto& f : fails) c.fail(f);
      ++kernel_checked;
    }
    for (auto& w : e6_set) {
      auto fails = check_instance_kernel_trivial(w);
      for (auto& f : fails) c.fail(f);
      ++kernel_checked;
    }
    c.details.push_back(std::to_string(checked) + " compatible instances, " +
                        std::to_string(kernel_checked) + " kernel checks");
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{3, "exceptional chains n=4,5: flag false, counts 20,52 beat 24,48"};
    const uint64_t brute[] = {0, 0, 0, 0, 20, 52};
    const uint64_t formula[] = {0, 0, 0, 0, 24, 48};
    for (int n : {4, 5}) {
      OrbitReport r = run_word(lexmin_w0_word_A(n));
      if (r.e6_compatible) c.fail("n=" + std::to_string(n) + ": flag unexpectedly true");
      if (r.orbit_count != brute[n])
        c.fail("n=" + std::to_string(n) + ": count " + std::to_string(r.orbit_count));
      if (r.formula_count != formula[n])
        c.fail("n=" + std::to_string(n) + ": formula value " +
               std::to_string(r.formula_count));
      if (r.orbit_count == r.formula_count)
        c.fail("n=" + std::to_string(n) + ": count fails to be exceptional");
    }
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{4, "rewrite prediction equals direct reconstruction on 1000+ instances"};
    uint64_t moves_checked = 0;
    for (auto& w : random_set) {
      auto fails = check_instance_graph_change(w);
      for (auto& f : fails) c.fail(f);
      moves_checked += enumerate_moves(w).size();
    }
    SignedWord a4 = a4_example_word();
    for (auto& f : check_instance_graph_change(a4)) c.fail(f);
    SignedWord a4b = apply_move(a4, {MoveKind::Nontrivial2, 8});
    for (auto& f : check_instance_graph_change(a4b)) c.fail(f);
    SignedWord a4c = apply_move(a4b, {MoveKind::Braid3, 10});
    for (auto& f : check_instance_graph_change(a4c)) c.fail(f);
    c.details.push_back(std::to_string(moves_checked) + " moves checked");
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{5, "conjugation-map identities hold as exact integer matrices"};
    for (auto& w : random_set) {
      for (auto& f : check_instance_phi(w)) c.fail(f);
      for (auto& f : check_instance_omega(w)) c.fail(f);
    }
    SignedWord a4 = a4_example_word();
    for (auto& f : check_instance_phi(a4)) c.fail(f);
    for (auto& f : check_instance_omega(a4)) c.fail(f);
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{6, "strip planarity and directed polygons hold on every strip"};
    for (auto& w : random_set)
      for (auto& f : check_instance_strips(w)) c.fail(f);
    for (int n = 2; n <= 7; ++n)
      for (auto& f : check_instance_strips(lexmin_w0_word_A(n))) c.fail(f);
    for (auto& f : check_instance_strips(a4_example_word())) c.fail(f);
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{7, "boundary vertex: exhaustive on the 17-letter fixture, sampled at rank 7"};
    std::mt19937_64 rng(seed ^ 0xb0bau);
    auto f1 = check_instance_boundary(a4_example_word(), 13, 0, rng);  // 8191 subsets
    for (auto& f : f1) c.fail(f);
    auto f2 = check_instance_boundary(lexmin_w0_word_A(7), 1, 10000, rng);
    for (auto& f : f2) c.fail(f);
    c.details.push_back("8191 exhaustive + 10000 sampled subsets");
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{8, "slice structure: fixed translates and two Q-separated orbits; "
                 "pure E6 levels 28/36 with 3 orbits"};
    for (auto& r : e6_reports) {
      if (r.slices_truncated) c.fail("slices unexpectedly truncated");
      for (auto& v : r.violations) c.fail(v);
    }
    for (int n : {6, 7}) {
      OrbitReport r = run_word(lexmin_w0_word_A(n));
      for (auto& v : r.violations) c.fail("chain n=" + std::to_string(n) + ": " + v);
    }
    OrbitReport re = enumerate_orbits(e6_fixture(), {1, 2, 3, 4, 5, 6}, OrbitOptions{});
    if (re.orbit_count != 3)
      c.fail("pure fixture: " + std::to_string(re.orbit_count) + " orbits");
    for (auto& v : re.violations) c.fail("pure fixture: " + v);
    JanssenReport je = check_janssen(e6_fixture(), {1, 2, 3, 4, 5, 6}, 1000000);
    if (je.skipped || je.level_q0 != 28 || je.level_q1 != 36)
      c.fail("pure fixture Q-levels " + std::to_string(je.level_q0) + "/" +
             std::to_string(je.level_q1) + ", expected 28/36");
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{9, "orbit counts agree across whole move-graph components"};
    for (int n : {3, 4}) {
      MoveGraph mg = enumerate_reduced_words(lexmin_w0_word_A(n), 100);
      size_t expect_words = (n == 3) ? 2 : 16;
      if (mg.words.size() != expect_words)
        c.fail("component size " + std::to_string(mg.words.size()) + ", expected " +
               std::to_string(expect_words));
      uint64_t ref = 0;
      for (size_t i = 0; i < mg.words.size(); ++i) {
        uint64_t cnt = run_word(mg.words[i]).orbit_count;
        if (i == 0) ref = cnt;
        else if (cnt != ref)
          c.fail("word " + std::to_string(i) + " differs: " + std::to_string(cnt));
      }
    }
    outcomes.push_back(std::move(c));
  }

  {
    Outcome c{10, "small-group facts and 100+ weakly orthogonal decompositions"};
    for (int n = 2; n <= 5; ++n) {
      SignedWord w = lexmin_w0_word_A(n);
      SigmaGraph sg = build_sigma(w);
      JanssenReport jr = check_janssen(SkewForm::of_sigma(sg), sg.bounded_set(), 1000000);
      if (jr.skipped) {
        c.details.push_back("chain n=" + std::to_string(n) + " skipped: " + jr.reason);
        continue;
      }
      for (auto& v : jr.check.violations) c.fail("chain n=" + std::to_string(n) + ": " + v);
    }
    JanssenReport je = check_janssen(e6_fixture(), {1, 2, 3, 4, 5, 6}, 1000000);
    if (je.skipped) c.fail("pure fixture closure skipped: " + je.reason);
    for (auto& v : je.check.violations) c.fail("pure fixture: " + v);

    SignedWord w = lexmin_w0_word_A(7);
    SigmaGraph sg = build_sigma(w);
    SkewForm f = SkewForm::of_sigma(sg);
    F2Form f2 = F2Form::of(f);
    auto B = sg.bounded_set();
    QForm q = make_q_form(f, B);
    F2Subspace K = kernel_within(f2, coordinate_subspace(f.m, B));
    E6Result e6 = is_e6_compatible(BGraph::of(f2, B));
    if (K.dim() == 0 || !e6.compatible) {
      c.fail("decomposition fixture is unusable");
    } else {
      F2Vec bmask = 0;
      for (int b : B) bmask |= F2Vec{1} << (b - 1);
      std::mt19937_64 rng(seed ^ 0xdecau);
      int done = 0;
      while (done < 100) {
        F2Vec v = static_cast<F2Vec>(rng()) & ((F2Vec{1} << f.m) - 1);
        XiForm xi = xi_from_slice(f2, v);
        bool usable = false;
        for (F2Vec kv : K.basis())
          if (xi.value(kv)) { usable = true; break; }
        if (!usable) continue;
        F2Vec u = static_cast<F2Vec>(rng()) & bmask;
        if (u == 0 || q.value(u) != xi.value(u)) continue;
        ++done;
        try {
          weakly_orthogonal_decomposition(f2, q, B, e6.witness, u, xi);
        } catch (const std::exception& e) {
          c.fail(std::string("decomposition: ") + e.what());
        }
      }
      c.details.push_back("100 decompositions verified");
    }
    outcomes.push_back(std::move(c));
  }

  int failures = 0;
  for (auto& c : outcomes) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.label << "\n";
    size_t shown = 0;
    for (auto& d : c.details) {
      std::cout << "        " << d << "\n";
      if (++shown >= 10) {
        std::cout << "        ... " << (c.details.size() - shown) << " more\n";
        break;
      }
    }
    if (!c.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
