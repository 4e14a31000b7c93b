#pragma once

#include <random>
#include <string>
#include <vector>

#include "transvec/orbits.hpp"
#include "transvec/phi.hpp"

namespace transvec {

inline constexpr uint64_t kDefaultSeed = 20227;

struct SuiteResult {
  std::string name;
  uint64_t instances = 0;
  uint64_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct VerifyConfig {
  uint64_t seed = kDefaultSeed;
  uint64_t instances = 200;
  int threads = 1;
};

// Deterministic random instances: graphs and reduced pair words grown
// letter by letter, each appended letter re-checked by root tracking.
class InstanceGen {
 public:
  explicit InstanceGen(uint64_t seed) : rng_(seed) {}
  std::mt19937_64& rng() { return rng_; }

  CoxeterGraph random_graph(int min_n, int max_n);
  SignedWord random_reduced_pair(const CoxeterGraph& g, int target_len);
  // A word whose generator graph is E6-compatible, with at most max_m
  // letters. Mixes fresh random words with move walks from the chain
  // fixtures.
  SignedWord random_e6_instance(int max_m);

 private:
  std::mt19937_64 rng_;
};

// Per-instance checkers shared by the suites and the acceptance runner.
// Each returns failure descriptions; empty means pass.
std::vector<std::string> check_instance_strips(const SignedWord& w);
std::vector<std::string> check_instance_graph_change(const SignedWord& w);
std::vector<std::string> check_instance_phi(const SignedWord& w);
std::vector<std::string> check_instance_omega(const SignedWord& w);
std::vector<std::string> check_instance_boundary(const SignedWord& w,
                                                 uint64_t exhaustive_limit,
                                                 uint64_t samples,
                                                 std::mt19937_64& rng);
// The generator span meets the radical of the whole form trivially.
std::vector<std::string> check_instance_kernel_trivial(const SignedWord& w);
// The move closure of the word equals the brute-force set of shuffles of
// reduced factorizations (only sensible for small instances).
std::vector<std::string> check_instance_tits(const SignedWord& w, size_t cap);

std::string word_brief(const SignedWord& w);

SuiteResult verify_strips(const VerifyConfig& cfg);
SuiteResult verify_graph_change(const VerifyConfig& cfg);
SuiteResult verify_phi(const VerifyConfig& cfg);
SuiteResult verify_omega(const VerifyConfig& cfg);
SuiteResult verify_tits(const VerifyConfig& cfg);
SuiteResult verify_orbits_theory(const VerifyConfig& cfg);

std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suites(const std::string& which, const VerifyConfig& cfg);

}  // namespace transvec
