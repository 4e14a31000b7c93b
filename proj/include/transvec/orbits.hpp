#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transvec/form.hpp"

namespace transvec {

// Vectors in F2^m are encoded as integers: coordinate k (1-based) is bit
// k-1. Orbit ids are the minimum encoding over the orbit.

struct OrbitLimits {
  int max_m = 26;  // hard ceiling 30
};

struct OrbitOptions {
  OrbitLimits limits{};
  int threads = 1;               // > 1 enables the coset-sharded kernel
  size_t max_slice_records = 4096;
  size_t max_orbit_records = size_t{1} << 22;
};

struct SliceRecord {
  F2Vec rep = 0;             // canonical representative: generator coords cleared
  uint64_t coset_index = 0;  // rank of the slice among all slices
  bool has_fixed = false;
  F2Vec fixed_base = 0;      // fixed set = fixed_base + K when has_fixed
  int fixed_dim = 0;
  uint64_t fixed_count = 0;
  uint64_t nonfixed_count = 0;
  std::vector<std::pair<F2Vec, int>> nonfixed_orbits;  // (orbit id, Q value)
};

struct OrbitReport {
  int m = 0;
  std::vector<int> B;
  uint64_t orbit_count = 0;
  std::vector<std::pair<uint64_t, uint64_t>> sizes;  // (size, multiplicity)
  bool e6_compatible = false;
  std::vector<int> e6_witness;
  bool formula_applicable = false;  // = e6_compatible of the generator graph
  uint64_t formula_count = 0;        // 2^(m-|B|) * (2 + 2^dim_U_cap_kernel)
  uint64_t formula_count_slices = 0; // 2^dim_invariants + 2^(m-|B|+1)
  int dim_U = 0;
  int dim_K = 0;              // kernel of the form restricted to the span
  int dim_U_cap_kernel = 0;   // span ∩ radical of the whole form
  int dim_invariants = 0;
  std::vector<SliceRecord> slices;
  bool slices_truncated = false;
  bool orbit_records_truncated = false;
  std::vector<std::string> violations;  // failed internal cross-checks
  double seconds = 0;
  int threads = 1;

  bool ok() const { return violations.empty(); }
};

// Exact orbit partition of the generator transvections acting on F2^m, by
// breadth-first search over all 2^m vectors. Deterministic: identical
// content in serial and sharded modes.
OrbitReport enumerate_orbits(const SkewForm& f, const std::vector<int>& B,
                             const OrbitOptions& opt = {});

struct FormulaPrediction {
  bool applicable = false;
  uint64_t count = 0;
  int dim_U_cap_kernel = 0;
  E6Result e6;
};

FormulaPrediction formula_orbit_count(const SkewForm& f, const std::vector<int>& B);
FormulaPrediction formula_orbit_count(const SigmaGraph& sg);

struct CorollaryPrediction {
  bool applicable = false;
  uint64_t count = 0;  // 3 * 2^s
  int s = 0;           // distinct letters in the word
  bool matches_formula = false;
};

CorollaryPrediction corollary_orbit_count(const SignedWord& w);

// Deterministic line-oriented text (no timing) and JSON with stable field
// names: m, orbit_count, sizes, e6_compatible, formula_count,
// formula_applicable, slices.
std::string report_text(const OrbitReport& r);
std::string report_json(const OrbitReport& r);

// Linear form on the generator span, given by its values on the generator
// coordinates.
struct XiForm {
  F2Vec mask = 0;
  int value(F2Vec u) const { return parity32(mask & u); }
};

// The form u -> Omega(u, v) induced by a slice representative v.
XiForm xi_from_slice(const F2Form& f, F2Vec v);

// Writes u as a sum of a weakly orthogonal family (each partial sum is
// Omega-orthogonal to the next member) of vectors x in the span, outside
// the restricted kernel, with Q(x) = xi(x) = 1. Requires Q(u) = xi(u), xi
// nonzero on the restricted kernel, u nonzero in the span, and an E6
// witness inside the generator set. The returned family is re-verified;
// construction failure throws VerificationError.
std::vector<F2Vec> weakly_orthogonal_decomposition(const F2Form& f, const QForm& q,
                                                   const std::vector<int>& B,
                                                   const std::vector<int>& e6_witness,
                                                   F2Vec u, XiForm xi);

struct JanssenReport {
  bool skipped = false;
  std::string reason;
  uint64_t closure_size = 0;
  uint64_t q1_vectors = 0;          // vectors checked for membership
  uint64_t level_q0 = 0, level_q1 = 0;  // Q-level counts over the whole span
  CheckReport check;
};

// Small-scale group facts: every transvection at a span vector outside the
// restricted kernel with Q = 1 lies in the generated group, and the group
// acts transitively on each Q-level set of span-minus-kernel. Skipped with
// a reason when the closure exceeds `cap`.
JanssenReport check_janssen(const SkewForm& f, const std::vector<int>& B, size_t cap);

}  // namespace transvec
