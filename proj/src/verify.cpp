#include "transvec/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace transvec {

CoxeterGraph InstanceGen::random_graph(int min_n, int max_n) {
  std::uniform_int_distribution<int> nd(min_n, max_n);
  int n = nd(rng_);
  std::bernoulli_distribution edge(0.5);
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (edge(rng_)) es.emplace_back(i, j);
  return CoxeterGraph(n, es);
}

SignedWord InstanceGen::random_reduced_pair(const CoxeterGraph& g, int target_len) {
  std::vector<int> letters;
  ZMatrix pneg = ZMatrix::identity(g.n), ppos = ZMatrix::identity(g.n);
  std::vector<int> candidates;
  for (int i = 1; i <= g.n; ++i) {
    candidates.push_back(i);
    candidates.push_back(-i);
  }
  for (int step = 0; step < target_len; ++step) {
    std::shuffle(candidates.begin(), candidates.end(), rng_);
    bool placed = false;
    for (int c : candidates) {
      int a = c > 0 ? c : -c;
      ZMatrix& p = c > 0 ? ppos : pneg;
      bool keeps_reduced = true;
      for (int r = 0; r < g.n; ++r)
        if (p.at(r, a - 1) < 0) { keeps_reduced = false; break; }
      if (!keeps_reduced) continue;
      letters.push_back(c);
      p = p * geometric_action({a}, g);
      placed = true;
      break;
    }
    if (!placed) break;  // both factors maxed out
  }
  return SignedWord(g, std::move(letters));
}

SignedWord InstanceGen::random_e6_instance(int max_m) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    SignedWord w;
    int mode = static_cast<int>(rng_() % 3);
    if (mode == 0 && max_m >= 15) {
      int n = (max_m >= 21 && (rng_() & 1)) ? 7 : 6;
      w = lexmin_w0_word_A(n);
      int steps = 3 + static_cast<int>(rng_() % 40);
      for (int s = 0; s < steps; ++s) {
        auto moves = enumerate_moves(w);
        if (moves.empty()) break;
        w = apply_move(w, moves[rng_() % moves.size()]);
      }
    } else {
      CoxeterGraph g = (mode == 1) ? CoxeterGraph::path(4 + static_cast<int>(rng_() % 3))
                                   : random_graph(5, 7);
      int len = 10 + static_cast<int>(rng_() % std::max(1, max_m - 9));
      w = random_reduced_pair(g, len);
      if (w.size() < 8) continue;
    }
    if (w.size() > max_m) continue;
    SigmaGraph sg = build_sigma(w);
    auto B = sg.bounded_set();
    if (B.size() < 6 || B.size() > 24) continue;
    F2Form f2 = F2Form::of(SkewForm::of_sigma(sg));
    if (is_e6_compatible(BGraph::of(f2, B)).compatible) return w;
  }
  throw InputError("could not find an E6-compatible instance");
}

std::string word_brief(const SignedWord& w) {
  std::ostringstream os;
  os << "n=" << w.graph.n << " [";
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i];
  }
  os << "]";
  return os.str();
}

std::vector<std::string> check_instance_strips(const SignedWord& w) {
  std::vector<std::string> out;
  SigmaGraph sg = build_sigma(w);
  for (auto [i, j] : w.graph.edges()) {
    Strip s = build_strip(sg, i, j);
    for (auto& v : check_strip_planarity(s).violations)
      out.push_back(word_brief(w) + " strip(" + std::to_string(i) + "," +
                    std::to_string(j) + "): " + v);
    for (auto& v : check_strip_cycles(s).violations)
      out.push_back(word_brief(w) + " strip(" + std::to_string(i) + "," +
                    std::to_string(j) + "): " + v);
  }
  return out;
}

std::vector<std::string> check_instance_graph_change(const SignedWord& w) {
  std::vector<std::string> out;
  SigmaGraph sg = build_sigma(w);
  ZMatrix nref = geometric_action(w.negative_subword(), w.graph);
  ZMatrix pref = geometric_action(w.positive_subword(), w.graph);
  for (Move mv : enumerate_moves(w)) {
    SignedWord applied = apply_move(w, mv);
    SigmaGraph actual = build_sigma(applied);
    SigmaGraph predicted = predict_graph_change(sg, w, mv);
    if (!(predicted == actual))
      out.push_back(word_brief(w) + " " + move_name(mv) +
                    ": predicted graph differs from the rebuilt one");
    if (!(apply_move(applied, mv) == w))
      out.push_back(word_brief(w) + " " + move_name(mv) + ": move is not involutive");
    if (geometric_action(applied.negative_subword(), w.graph) != nref ||
        geometric_action(applied.positive_subword(), w.graph) != pref)
      out.push_back(word_brief(w) + " " + move_name(mv) + ": pair changed");
    std::vector<int> sigma = move_sigma(mv, w.size());
    std::set<int> mapped;
    for (int b : sg.bounded_set()) mapped.insert(sigma[b]);
    auto bp = actual.bounded_set();
    if (!std::equal(mapped.begin(), mapped.end(), bp.begin(), bp.end()) ||
        mapped.size() != bp.size())
      out.push_back(word_brief(w) + " " + move_name(mv) +
                    ": relabeling does not map bounded onto bounded");
  }
  return out;
}

std::vector<std::string> check_instance_phi(const SignedWord& w) {
  std::vector<std::string> out;
  SigmaGraph sg = build_sigma(w);
  for (Move mv : enumerate_moves(w)) {
    for (auto& v : check_phi_inverses(w, mv).violations)
      out.push_back(word_brief(w) + ": " + v);
    if (!is_trivial(mv))
      for (auto& v : check_tau_phi_squared(w, mv).violations)
        out.push_back(word_brief(w) + ": " + v);
    for (auto& v : check_intertwiner(w, mv).check.violations)
      out.push_back(word_brief(w) + ": " + v);
    for (int sign : {+1, -1}) {
      int64_t dval = det(make_phi(sg, mv, sign).matrix);
      if (dval != 1 && dval != -1)
        out.push_back(word_brief(w) + " " + move_name(mv) + ": phi determinant " +
                      std::to_string(dval));
    }
  }
  return out;
}

std::vector<std::string> check_instance_omega(const SignedWord& w) {
  std::vector<std::string> out;
  for (Move mv : enumerate_moves(w))
    for (auto& v : check_omega_transform(w, mv).violations)
      out.push_back(word_brief(w) + ": " + v);
  return out;
}

std::vector<std::string> check_instance_boundary(const SignedWord& w,
                                                 uint64_t exhaustive_limit,
                                                 uint64_t samples,
                                                 std::mt19937_64& rng) {
  std::vector<std::string> out;
  SigmaGraph sg = build_sigma(w);
  auto B = sg.bounded_set();
  if (B.empty()) return out;
  auto try_subset = [&](const std::vector<int>& S) {
    try {
      boundary_vertex_witness(sg, S);
    } catch (const VerificationError& e) {
      out.push_back(word_brief(w) + ": " + e.what());
    }
  };
  size_t nb = B.size();
  if (nb <= exhaustive_limit) {
    for (uint64_t mask = 1; mask < (uint64_t{1} << nb); ++mask) {
      std::vector<int> S;
      for (size_t i = 0; i < nb; ++i)
        if ((mask >> i) & 1u) S.push_back(B[i]);
      try_subset(S);
    }
  } else {
    for (uint64_t t = 0; t < samples; ++t) {
      std::vector<int> S;
      while (S.empty()) {
        S.clear();
        for (size_t i = 0; i < nb; ++i)
          if (rng() & 1u) S.push_back(B[i]);
      }
      try_subset(S);
    }
  }
  return out;
}

std::vector<std::string> check_instance_kernel_trivial(const SignedWord& w) {
  std::vector<std::string> out;
  SigmaGraph sg = build_sigma(w);
  if (sg.m() > 32) return out;
  F2Form f2 = F2Form::of(SkewForm::of_sigma(sg));
  F2Subspace cap = intersect(coordinate_subspace(sg.m(), sg.bounded_set()), full_kernel(f2));
  if (cap.dim() != 0)
    out.push_back(word_brief(w) + ": generator span meets the radical, dim " +
                  std::to_string(cap.dim()));
  return out;
}

namespace {

void brute_reduced_words(const CoxeterGraph& g, const ZMatrix& target, int length,
                         std::vector<int>& prefix, const ZMatrix& p,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    if (p == target) out.push_back(prefix);
    return;
  }
  for (int a = 1; a <= g.n; ++a) {
    bool ok = true;
    for (int r = 0; r < g.n; ++r)
      if (p.at(r, a - 1) < 0) { ok = false; break; }
    if (!ok) continue;
    prefix.push_back(a);
    brute_reduced_words(g, target, length, prefix, p * geometric_action({a}, g), out);
    prefix.pop_back();
  }
}

void all_shuffles(const std::vector<int>& neg, const std::vector<int>& pos, size_t ni,
                  size_t pi, std::vector<int>& acc, std::set<std::vector<int>>& out) {
  if (ni == neg.size() && pi == pos.size()) {
    out.insert(acc);
    return;
  }
  if (ni < neg.size()) {
    acc.push_back(-neg[ni]);
    all_shuffles(neg, pos, ni + 1, pi, acc, out);
    acc.pop_back();
  }
  if (pi < pos.size()) {
    acc.push_back(pos[pi]);
    all_shuffles(neg, pos, ni, pi + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::string> check_instance_tits(const SignedWord& w, size_t cap) {
  std::vector<std::string> out;
  MoveGraph mg = enumerate_reduced_words(w, cap);
  if (mg.truncated) {
    out.push_back(word_brief(w) + ": move graph truncated, instance too large");
    return out;
  }
  auto neg = w.negative_subword();
  auto pos = w.positive_subword();
  ZMatrix nref = geometric_action(neg, w.graph);
  ZMatrix pref = geometric_action(pos, w.graph);
  std::vector<std::vector<int>> rneg, rpos;
  std::vector<int> prefix;
  brute_reduced_words(w.graph, nref, static_cast<int>(neg.size()), prefix,
                      ZMatrix::identity(w.graph.n), rneg);
  brute_reduced_words(w.graph, pref, static_cast<int>(pos.size()), prefix,
                      ZMatrix::identity(w.graph.n), rpos);
  std::set<std::vector<int>> expected;
  std::vector<int> acc;
  for (auto& rn : rneg)
    for (auto& rp : rpos) all_shuffles(rn, rp, 0, 0, acc, expected);
  std::set<std::vector<int>> got;
  for (auto& word : mg.words) got.insert(word.letters);
  if (expected != got)
    out.push_back(word_brief(w) + ": move closure has " + std::to_string(got.size()) +
                  " words, brute force finds " + std::to_string(expected.size()));
  return out;
}

namespace {

std::vector<SignedWord> standard_fixtures() {
  std::vector<SignedWord> ws;
  for (int n = 2; n <= 7; ++n) ws.push_back(lexmin_w0_word_A(n));
  ws.push_back(a4_example_word());
  return ws;
}

void absorb(SuiteResult& r, std::vector<std::string> fails) {
  for (auto& f : fails) r.failures.push_back(std::move(f));
}

}  // namespace

SuiteResult verify_strips(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "strips";
  InstanceGen gen(cfg.seed ^ 0x5741u);
  std::mt19937_64 srng(cfg.seed ^ 0x777u);
  auto run = [&](const SignedWord& w) {
    ++r.instances;
    absorb(r, check_instance_strips(w));
    absorb(r, check_instance_boundary(w, 10, 50, srng));
    r.checks += 2 * w.graph.edges().size() + 1;
  };
  for (auto& w : standard_fixtures()) run(w);
  for (uint64_t i = 0; i < cfg.instances; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    run(gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11)));
  }
  return r;
}

SuiteResult verify_graph_change(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "graph-change";
  InstanceGen gen(cfg.seed ^ 0x6743u);
  auto run = [&](const SignedWord& w) {
    ++r.instances;
    absorb(r, check_instance_graph_change(w));
    absorb(r, check_instance_kernel_trivial(w));
    r.checks += enumerate_moves(w).size() + 1;
  };
  // The documented two-step rewrite of the 17-letter fixture.
  SignedWord a4 = a4_example_word();
  run(a4);
  SignedWord a4b = apply_move(a4, Move{MoveKind::Nontrivial2, 8});
  run(a4b);
  SignedWord a4c = apply_move(a4b, Move{MoveKind::Braid3, 10});
  run(a4c);
  for (uint64_t i = 0; i < cfg.instances; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    run(gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11)));
  }
  return r;
}

SuiteResult verify_phi(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "phi";
  InstanceGen gen(cfg.seed ^ 0x9151u);
  auto run = [&](const SignedWord& w) {
    ++r.instances;
    absorb(r, check_instance_phi(w));
    r.checks += 4 * enumerate_moves(w).size();
  };
  run(a4_example_word());
  for (uint64_t i = 0; i < cfg.instances; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    run(gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11)));
  }
  return r;
}

SuiteResult verify_omega(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "omega";
  InstanceGen gen(cfg.seed ^ 0xa973u);
  auto run = [&](const SignedWord& w) {
    ++r.instances;
    absorb(r, check_instance_omega(w));
    r.checks += 2 * enumerate_moves(w).size();
  };
  run(a4_example_word());
  for (uint64_t i = 0; i < cfg.instances; ++i) {
    CoxeterGraph g = gen.random_graph(2, 6);
    run(gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 11)));
  }
  return r;
}

SuiteResult verify_tits(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "tits";
  InstanceGen gen(cfg.seed ^ 0xbeefu);
  auto run = [&](const SignedWord& w) {
    ++r.instances;
    ++r.checks;
    absorb(r, check_instance_tits(w, 10000));
  };
  run(lexmin_w0_word_A(3));
  run(lexmin_w0_word_A(4));
  run(SignedWord(CoxeterGraph::path(2), {-1, 2}));
  uint64_t n = std::min<uint64_t>(cfg.instances, 40);
  for (uint64_t i = 0; i < n; ++i) {
    CoxeterGraph g = gen.random_graph(2, 3);
    run(gen.random_reduced_pair(g, 3 + static_cast<int>(gen.rng()() % 4)));
  }
  return r;
}

SuiteResult verify_orbits_theory(const VerifyConfig& cfg) {
  SuiteResult r;
  r.name = "orbits-theory";
  InstanceGen gen(cfg.seed ^ 0xc001u);
  OrbitOptions opt;
  opt.threads = cfg.threads;

  // Component counts of the chain fixtures, with the exceptional small
  // ranks flagged inapplicable.
  const uint64_t expected[] = {0, 0, 2, 6, 20, 52, 96, 192};
  for (int n = 2; n <= 7; ++n) {
    ++r.instances;
    SignedWord w = lexmin_w0_word_A(n);
    SigmaGraph sg = build_sigma(w);
    OrbitReport rep = enumerate_orbits(SkewForm::of_sigma(sg), sg.bounded_set(), opt);
    ++r.checks;
    if (rep.orbit_count != expected[n])
      r.failures.push_back("chain n=" + std::to_string(n) + ": " +
                           std::to_string(rep.orbit_count) + " orbits, expected " +
                           std::to_string(expected[n]));
    absorb(r, rep.violations);
    bool expect_flag = n >= 6;
    if (rep.e6_compatible != expect_flag)
      r.failures.push_back("chain n=" + std::to_string(n) + ": compatibility flag " +
                           (rep.e6_compatible ? "true" : "false"));
    if (rep.formula_applicable && rep.formula_count != rep.orbit_count)
      r.failures.push_back("chain n=" + std::to_string(n) + ": formula mismatch");
    CorollaryPrediction cp = corollary_orbit_count(w);
    if (cp.s != n - 1 || cp.count != (uint64_t{3} << (n - 1)))
      r.failures.push_back("chain n=" + std::to_string(n) + ": bad count prediction");
    if (cp.applicable && rep.orbit_count != cp.count)
      r.failures.push_back("chain n=" + std::to_string(n) + ": prediction mismatch");
  }

  // Random instances with an E6-compatible generator graph.
  uint64_t n_e6 = std::max<uint64_t>(5, cfg.instances / 20);
  for (uint64_t i = 0; i < n_e6; ++i) {
    SignedWord w = gen.random_e6_instance(18);
    ++r.instances;
    ++r.checks;
    SigmaGraph sg = build_sigma(w);
    OrbitReport rep = enumerate_orbits(SkewForm::of_sigma(sg), sg.bounded_set(), opt);
    if (!rep.formula_applicable)
      r.failures.push_back(word_brief(w) + ": instance lost compatibility");
    else if (rep.formula_count != rep.orbit_count)
      r.failures.push_back(word_brief(w) + ": formula " + std::to_string(rep.formula_count) +
                           " vs brute " + std::to_string(rep.orbit_count));
    absorb(r, rep.violations);
    absorb(r, check_instance_kernel_trivial(w));
  }

  // Orbit counts agree across whole move-graph components.
  for (int n : {3, 4}) {
    SignedWord w = lexmin_w0_word_A(n);
    MoveGraph mg = enumerate_reduced_words(w, 100);
    SigmaGraph sg0 = build_sigma(mg.words[0]);
    OrbitReport ref = enumerate_orbits(SkewForm::of_sigma(sg0), sg0.bounded_set(), opt);
    for (size_t t = 1; t < mg.words.size(); ++t) {
      ++r.checks;
      SigmaGraph sg = build_sigma(mg.words[t]);
      OrbitReport rep = enumerate_orbits(SkewForm::of_sigma(sg), sg.bounded_set(), opt);
      if (rep.orbit_count != ref.orbit_count)
        r.failures.push_back("words of one component differ in orbit count (chain n=" +
                             std::to_string(n) + ")");
    }
    r.instances += mg.words.size();
  }

  // Reversing every sign leaves the orbit structure unchanged.
  for (int i = 0; i < 8; ++i) {
    CoxeterGraph g = gen.random_graph(2, 5);
    SignedWord w = gen.random_reduced_pair(g, 4 + static_cast<int>(gen.rng()() % 9));
    ++r.instances;
    ++r.checks;
    SigmaGraph sg = build_sigma(w), sf = build_sigma(flip_signs(w));
    OrbitReport a = enumerate_orbits(SkewForm::of_sigma(sg), sg.bounded_set(), opt);
    OrbitReport b = enumerate_orbits(SkewForm::of_sigma(sf), sf.bounded_set(), opt);
    if (report_text(a) != report_text(b))
      r.failures.push_back(word_brief(w) + ": sign flip changed the orbit report");
  }

  // Small-group facts on the closable fixtures.
  auto run_janssen = [&](const SkewForm& f, const std::vector<int>& B, const std::string& tag) {
    ++r.instances;
    ++r.checks;
    JanssenReport jr = check_janssen(f, B, 1000000);
    if (jr.skipped) return jr;
    for (auto& v : jr.check.violations) r.failures.push_back(tag + ": " + v);
    return jr;
  };
  for (int n = 2; n <= 5; ++n) {
    SignedWord w = lexmin_w0_word_A(n);
    SigmaGraph sg = build_sigma(w);
    run_janssen(SkewForm::of_sigma(sg), sg.bounded_set(), "chain n=" + std::to_string(n));
  }
  {
    SkewForm e6 = e6_fixture();
    std::vector<int> all{1, 2, 3, 4, 5, 6};
    JanssenReport jr = run_janssen(e6, all, "e6");
    if (!jr.skipped && (jr.level_q0 != 28 || jr.level_q1 != 36))
      r.failures.push_back("e6: Q-level counts " + std::to_string(jr.level_q0) + "/" +
                           std::to_string(jr.level_q1) + ", expected 28/36");
    OrbitReport rep = enumerate_orbits(e6, all, opt);
    ++r.checks;
    if (rep.orbit_count != 3)
      r.failures.push_back("e6: " + std::to_string(rep.orbit_count) + " orbits, expected 3");
    absorb(r, rep.violations);
  }

  // Weakly orthogonal decompositions on instances with a nonzero restricted
  // kernel.
  {
    SignedWord w = lexmin_w0_word_A(7);
    SigmaGraph sg = build_sigma(w);
    SkewForm f = SkewForm::of_sigma(sg);
    F2Form f2 = F2Form::of(f);
    auto B = sg.bounded_set();
    QForm q = make_q_form(f, B);
    F2Subspace K = kernel_within(f2, coordinate_subspace(f.m, B));
    E6Result e6 = is_e6_compatible(BGraph::of(f2, B));
    uint64_t wanted = std::max<uint64_t>(20, cfg.instances / 5);
    if (K.dim() == 0 || !e6.compatible) {
      r.failures.push_back("decomposition fixture lost its kernel");
    } else {
      F2Vec bmask = 0;
      for (int b : B) bmask |= F2Vec{1} << (b - 1);
      std::mt19937_64& rng = gen.rng();
      uint64_t done = 0;
      while (done < wanted) {
        F2Vec v = static_cast<F2Vec>(rng()) & ((F2Vec{1} << f.m) - 1);
        XiForm xi = xi_from_slice(f2, v);
        bool k_ok = false;
        for (F2Vec kv : K.basis())
          if (xi.value(kv)) { k_ok = true; break; }
        if (!k_ok) continue;
        F2Vec u = static_cast<F2Vec>(rng()) & bmask;
        if (u == 0 || q.value(u) != xi.value(u)) continue;
        ++done;
        ++r.instances;
        ++r.checks;
        try {
          weakly_orthogonal_decomposition(f2, q, B, e6.witness, u, xi);
        } catch (const VerificationError& e) {
          r.failures.push_back(std::string("decomposition: ") + e.what());
        }
      }
    }
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"strips", "graph-change", "phi", "omega", "tits", "orbits-theory"};
}

std::vector<SuiteResult> run_suites(const std::string& which, const VerifyConfig& cfg) {
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& name) { return which == "all" || which == name; };
  bool known = which == "all";
  for (auto& n : suite_names()) known = known || n == which;
  if (!known) throw InputError("unknown suite: " + which);
  if (want("strips")) out.push_back(verify_strips(cfg));
  if (want("graph-change")) out.push_back(verify_graph_change(cfg));
  if (want("phi")) out.push_back(verify_phi(cfg));
  if (want("omega")) out.push_back(verify_omega(cfg));
  if (want("tits")) out.push_back(verify_tits(cfg));
  if (want("orbits-theory")) out.push_back(verify_orbits_theory(cfg));
  return out;
}

}  // namespace transvec
