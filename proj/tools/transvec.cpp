// Command-line front end: build the position graph of a reduced pair word,
// enumerate transvection orbits over F2, or run the verification suites.
//
// Exit codes: 0 success / all checks passed, 1 a verification failed,
// 2 bad input or configuration.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "transvec/orbits.hpp"
#include "transvec/verify.hpp"

namespace {

using namespace transvec;

struct InputSpec {
  std::string pi_path;
  std::string word_literal;
  bool word_given = false;
  std::vector<std::string> fixture;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--pi", in.pi_path, "Coxeter graph file (first line n, then edges)");
  cmd->add_option("--word", in.word_literal, "word literal, e.g. \"-1 -2 -1\"")
      ->expected(1)
      ->each([&in](const std::string&) { in.word_given = true; });
  cmd->add_option("--fixture", in.fixture,
                  "built-in fixture: 'an-w0 <n>' or 'a4-example'")
      ->expected(1, 2);
}

SignedWord resolve_word(const InputSpec& in) {
  bool from_fixture = !in.fixture.empty();
  bool from_literal = in.word_given || !in.pi_path.empty();
  if (from_fixture == from_literal)
    throw InputError("provide exactly one word source: --fixture, or --pi with --word");
  if (from_fixture) {
    if (in.fixture[0] == "a4-example") return a4_example_word();
    if (in.fixture[0] == "an-w0") {
      if (in.fixture.size() != 2) throw InputError("fixture an-w0 needs a rank argument");
      return lexmin_w0_word_A(std::stoi(in.fixture[1]));
    }
    throw InputError("unknown fixture: " + in.fixture[0]);
  }
  if (in.pi_path.empty()) throw InputError("--word requires --pi");
  CoxeterGraph g = load_coxeter_graph(in.pi_path);
  return SignedWord(g, parse_word_literal(in.word_literal));
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write: " + path);
  f << text;
}

int cmd_sigma(const InputSpec& in, const std::string& dot_path,
              const std::string& report_path) {
  SignedWord w = resolve_word(in);
  SigmaGraph sg = build_sigma(w);
  if (!dot_path.empty()) write_or_print(dot_path, to_dot(sg));
  write_or_print(report_path, summary(sg));
  return 0;
}

int cmd_orbits(const InputSpec& in, int limit, int threads,
               const std::string& report_path, const std::string& json_path) {
  SignedWord w = resolve_word(in);
  SigmaGraph sg = build_sigma(w);
  OrbitOptions opt;
  opt.limits.max_m = limit;
  opt.threads = threads;
  OrbitReport rep = enumerate_orbits(SkewForm::of_sigma(sg), sg.bounded_set(), opt);
  CorollaryPrediction cp = corollary_orbit_count(w);

  std::string text = report_text(rep);
  text += "corollary_applicable: " + std::string(cp.applicable ? "true" : "false") + "\n";
  text += "corollary_count: " + std::to_string(cp.count) + "\n";
  text += "s_distinct_letters: " + std::to_string(cp.s) + "\n";
  write_or_print(report_path, text);
  if (!json_path.empty()) write_or_print(json_path, report_json(rep) + "\n");
  std::cerr << "elapsed: " << rep.seconds << " s, threads: " << rep.threads << "\n";

  bool bad = !rep.ok();
  if (rep.formula_applicable && rep.formula_count != rep.orbit_count) bad = true;
  if (cp.applicable && cp.count != rep.orbit_count) bad = true;
  return bad ? 1 : 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, uint64_t instances, int threads) {
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.instances = instances;
  cfg.threads = threads;
  std::cout << "seed: " << cfg.seed << "\ninstances: " << cfg.instances << "\n";
  auto results = run_suites(suite, cfg);
  bool all_ok = true;
  for (auto& r : results) {
    std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (instances "
              << r.instances << ", checks " << r.checks << ")\n";
    for (size_t i = 0; i < r.failures.size(); ++i) {
      std::cout << "  counterexample: " << r.failures[i] << "\n";
      if (i >= 20) {
        std::cout << "  ... " << (r.failures.size() - i - 1) << " more\n";
        break;
      }
    }
    all_ok = all_ok && r.passed();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of reduced pair words and transvection orbits"};
  app.require_subcommand(1);

  InputSpec sigma_in, orbit_in;
  std::string dot_path, sigma_report;
  CLI::App* sigma_cmd = app.add_subcommand("sigma", "build the position graph");
  add_input_options(sigma_cmd, sigma_in);
  sigma_cmd->add_option("--dot", dot_path, "write a DOT rendering here");
  sigma_cmd->add_option("--report", sigma_report, "write the text summary here");

  int limit = 26, threads = 1;
  std::string orbit_report, orbit_json;
  CLI::App* orbit_cmd = app.add_subcommand("orbits", "enumerate orbits over F2");
  add_input_options(orbit_cmd, orbit_in);
  orbit_cmd->add_option("--limit", limit, "dimension cap (hard ceiling 30)");
  orbit_cmd->add_option("--threads", threads, "worker threads for the sharded kernel");
  orbit_cmd->add_option("--report", orbit_report, "write the text report here");
  orbit_cmd->add_option("--json", orbit_json, "write the JSON report here");

  std::string suite = "all";
  uint64_t seed = transvec::kDefaultSeed, instances = 200;
  int vthreads = 1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> names = transvec::suite_names();
  names.push_back("all");
  verify_cmd->add_option("suite", suite, "one of: strips graph-change phi omega tits orbits-theory all")
      ->check(CLI::IsMember(names));
  verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
  verify_cmd->add_option("--instances", instances, "random instances per suite");
  verify_cmd->add_option("--threads", vthreads, "worker threads for orbit enumeration");

  try {
    app.parse(argc, argv);
    if (sigma_cmd->parsed()) return cmd_sigma(sigma_in, dot_path, sigma_report);
    if (orbit_cmd->parsed())
      return cmd_orbits(orbit_in, limit, threads, orbit_report, orbit_json);
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, instances, vthreads);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const transvec::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const transvec::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
