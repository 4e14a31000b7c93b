#include "transvec/orbits.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace transvec {

namespace {

struct OrbitRec {
  F2Vec id;
  uint64_t size;
  uint8_t q;
};

class Bitset {
 public:
  explicit Bitset(uint64_t n) : w_((n + 63) / 64, 0) {}
  bool test(uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  // Returns the previous value and sets the bit.
  bool test_set(uint64_t i) {
    uint64_t& x = w_[i >> 6];
    uint64_t b = uint64_t{1} << (i & 63);
    bool old = x & b;
    x |= b;
    return old;
  }

 private:
  std::vector<uint64_t> w_;
};

// Packs/unpacks the bits of a vector at a fixed ascending list of positions.
struct CoordPacker {
  std::vector<int> pos;  // 0-based

  F2Vec deposit(uint32_t bits) const {
    F2Vec r = 0;
    for (size_t i = 0; i < pos.size(); ++i)
      if ((bits >> i) & 1u) r |= F2Vec{1} << pos[i];
    return r;
  }
  uint32_t extract(F2Vec v) const {
    uint32_t r = 0;
    for (size_t i = 0; i < pos.size(); ++i)
      if ((v >> pos[i]) & 1u) r |= uint32_t{1} << i;
    return r;
  }
};

struct KernelOut {
  std::vector<OrbitRec> records;
  bool records_truncated = false;
  uint64_t count = 0;
  std::map<uint64_t, uint64_t> hist;
  std::vector<std::string> violations;
};

void orbits_serial(const F2Form& f2, const std::vector<int>& B, const QForm& q,
                   size_t max_records, KernelOut& out) {
  int m = f2.m;
  uint64_t total = uint64_t{1} << m;
  Bitset visited(total);
  std::vector<F2Vec> gadj, gbit;
  for (int b : B) {
    gadj.push_back(f2.adj[b - 1]);
    gbit.push_back(F2Vec{1} << (b - 1));
  }
  std::vector<F2Vec> stack;
  for (uint64_t v = 0; v < total; ++v) {
    if (visited.test(v)) continue;
    F2Vec seed = static_cast<F2Vec>(v);
    int q0 = q.value(seed);
    uint64_t size = 0;
    bool qbad = false;
    visited.test_set(v);
    stack.push_back(seed);
    while (!stack.empty()) {
      F2Vec x = stack.back();
      stack.pop_back();
      ++size;
      if (q.value(x) != q0) qbad = true;
      for (size_t g = 0; g < gadj.size(); ++g) {
        if (!parity32(x & gadj[g])) continue;
        F2Vec y = x ^ gbit[g];
        if (!visited.test_set(y)) stack.push_back(y);
      }
    }
    if (qbad)
      out.violations.push_back("Q is not constant on orbit " + std::to_string(seed));
    ++out.count;
    ++out.hist[size];
    if (out.records.size() < max_records)
      out.records.push_back({seed, size, static_cast<uint8_t>(q0)});
    else
      out.records_truncated = true;
  }
}

// One slice: all vectors agreeing with `rep` off the generator coordinates.
// The walk runs in local span coordinates: the off-span part contributes a
// constant parity per generator and a constant shift of Q.
void orbits_one_coset(const F2Form& f2, const QForm& q, const CoordPacker& packB,
                      const std::vector<int>& B, F2Vec rep, KernelOut& out) {
  int d = static_cast<int>(B.size());
  uint64_t total = uint64_t{1} << d;
  std::vector<uint32_t> ladj(d);
  std::vector<uint32_t> lbase(d);
  std::vector<uint8_t> qlin(d);
  for (int j = 0; j < d; ++j) {
    F2Vec a = f2.adj[B[j] - 1];
    ladj[j] = packB.extract(a);
    lbase[j] = static_cast<uint32_t>(parity32(rep & a));
    qlin[j] = q.linear[B[j] - 1];
  }
  uint32_t xi_local = packB.extract(f2.omega_row(rep));
  int qrep = q.value(rep);
  auto q_local = [&](uint32_t u) {
    int acc = qrep ^ parity32(u & xi_local);
    uint32_t rest = u;
    while (rest) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      acc ^= qlin[j] ^ parity32(ladj[j] & rest);
    }
    return acc;
  };

  Bitset visited(total);
  std::vector<uint32_t> stack;
  for (uint64_t u = 0; u < total; ++u) {
    if (visited.test(u)) continue;
    int q0 = q_local(static_cast<uint32_t>(u));
    uint64_t size = 0;
    bool qbad = false;
    visited.test_set(u);
    stack.push_back(static_cast<uint32_t>(u));
    while (!stack.empty()) {
      uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      if (q_local(x) != q0) qbad = true;
      for (int j = 0; j < d; ++j) {
        if (!(lbase[j] ^ parity32(x & ladj[j]))) continue;
        uint32_t y = x ^ (uint32_t{1} << j);
        if (!visited.test_set(y)) stack.push_back(y);
      }
    }
    F2Vec seed = rep | packB.deposit(static_cast<uint32_t>(u));
    if (qbad)
      out.violations.push_back("Q is not constant on orbit " + std::to_string(seed));
    ++out.count;
    ++out.hist[size];
    out.records.push_back({seed, size, static_cast<uint8_t>(q0)});
  }
}

}  // namespace

OrbitReport enumerate_orbits(const SkewForm& f, const std::vector<int>& B_in,
                             const OrbitOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  int m = f.m;
  if (opt.limits.max_m > 30) throw InputError("orbit dimension ceiling is 30");
  if (m > opt.limits.max_m)
    throw InputError("dimension " + std::to_string(m) + " exceeds the limit " +
                     std::to_string(opt.limits.max_m));
  std::vector<int> B = B_in;
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  for (int b : B)
    if (b < 1 || b > m) throw InputError("generator index out of range");

  F2Form f2 = F2Form::of(f);
  QForm q = make_q_form(f, B);
  int d = static_cast<int>(B.size());
  F2Vec bmask = 0;
  for (int b : B) bmask |= F2Vec{1} << (b - 1);

  CoordPacker packB, packRest;
  for (int b : B) packB.pos.push_back(b - 1);
  for (int k = 0; k < m; ++k)
    if (!((bmask >> k) & 1u)) packRest.pos.push_back(k);
  uint64_t ncosets = uint64_t{1} << (m - d);

  KernelOut kout;
  bool sharded = opt.threads > 1 && d >= 1 && ncosets <= (uint64_t{1} << 22);
  if (!sharded) {
    orbits_serial(f2, B, q, opt.max_orbit_records, kout);
  } else {
    std::vector<KernelOut> parts(ncosets);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(opt.threads)
#endif
    for (int64_t c = 0; c < static_cast<int64_t>(ncosets); ++c) {
      F2Vec rep = packRest.deposit(static_cast<uint32_t>(c));
      orbits_one_coset(f2, q, packB, B, rep, parts[c]);
    }
    for (auto& p : parts) {
      kout.count += p.count;
      for (auto& [sz, n] : p.hist) kout.hist[sz] += n;
      if (kout.records.size() + p.records.size() <= opt.max_orbit_records)
        kout.records.insert(kout.records.end(), p.records.begin(), p.records.end());
      else
        kout.records_truncated = true;
      kout.violations.insert(kout.violations.end(), p.violations.begin(),
                             p.violations.end());
    }
  }
  std::sort(kout.records.begin(), kout.records.end(),
            [](const OrbitRec& a, const OrbitRec& b) { return a.id < b.id; });
  std::sort(kout.violations.begin(), kout.violations.end());

  OrbitReport rep;
  rep.m = m;
  rep.B = B;
  rep.orbit_count = kout.count;
  for (auto& [sz, n] : kout.hist) rep.sizes.emplace_back(sz, n);
  rep.violations = kout.violations;
  rep.orbit_records_truncated = kout.records_truncated;
  rep.threads = sharded ? opt.threads : 1;

  uint64_t covered = 0;
  for (auto& [sz, n] : rep.sizes) covered += sz * n;
  if (covered != (uint64_t{1} << m))
    rep.violations.push_back("orbit sizes do not add up to the space size");

  F2Subspace U = coordinate_subspace(m, B);
  F2Subspace K = kernel_within(f2, U);
  F2Subspace capU = intersect(U, full_kernel(f2));
  F2Subspace VG = invariant_space(f2, B);
  rep.dim_U = U.dim();
  rep.dim_K = K.dim();
  rep.dim_U_cap_kernel = capU.dim();
  rep.dim_invariants = VG.dim();

  E6Result e6 = is_e6_compatible(BGraph::of(f2, B));
  rep.e6_compatible = e6.compatible;
  rep.e6_witness = e6.witness;
  rep.formula_applicable = e6.compatible;
  rep.formula_count =
      (uint64_t{1} << (m - d)) * (2 + (uint64_t{1} << rep.dim_U_cap_kernel));
  rep.formula_count_slices =
      (uint64_t{1} << rep.dim_invariants) + (uint64_t{1} << (m - d + 1));
  if (rep.formula_count != rep.formula_count_slices)
    rep.violations.push_back("the two closed-form evaluations disagree");

  // Per-slice structure, with the fixed points re-derived by linear algebra
  // and compared against the observed singleton orbits.
  if (ncosets > opt.max_slice_records || kout.records_truncated) {
    rep.slices_truncated = true;
  } else {
    std::map<F2Vec, SliceRecord> slices;
    std::map<F2Vec, std::vector<F2Vec>> fixed_ids;
    for (auto& r : kout.records) {
      F2Vec crep = r.id & ~bmask;
      SliceRecord& s = slices[crep];
      s.rep = crep;
      if (r.size == 1) {
        ++s.fixed_count;
        if (!s.has_fixed) {
          s.has_fixed = true;
          s.fixed_base = r.id;
        }
        fixed_ids[crep].push_back(r.id);
      } else {
        ++s.nonfixed_count;
        if (s.nonfixed_orbits.size() < opt.max_slice_records)
          s.nonfixed_orbits.emplace_back(r.id, r.q);
      }
    }
    // Linear-algebra side per slice.
    std::vector<F2Vec> gram_rows(d, 0);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        if ((f2.adj[B[j] - 1] >> (B[i] - 1)) & 1u) gram_rows[j] |= F2Vec{1} << i;
    uint64_t coset_index = 0;
    for (auto& [crep, s] : slices) {
      s.coset_index = coset_index++;
      bool k_orthogonal = true;
      for (F2Vec kv : K.basis())
        if (f2.omega(kv, crep)) { k_orthogonal = false; break; }
      if (k_orthogonal) {
        std::vector<uint8_t> rhs(d);
        for (int j = 0; j < d; ++j)
          rhs[j] = static_cast<uint8_t>(parity32(f2.adj[B[j] - 1] & crep));
        auto sol = solve_affine(d, gram_rows, rhs);
        if (!sol) {
          rep.violations.push_back("slice " + std::to_string(crep) +
                                   ": expected a fixed translate, none solvable");
        } else {
          F2Vec base = crep ^ packB.deposit(*sol);
          uint64_t expect = uint64_t{1} << K.dim();
          if (s.fixed_count != expect)
            rep.violations.push_back("slice " + std::to_string(crep) + ": " +
                                     std::to_string(s.fixed_count) +
                                     " fixed points, expected " + std::to_string(expect));
          s.fixed_dim = K.dim();
          s.fixed_base = K.reduce(base);
          s.has_fixed = true;
          // Every observed fixed point must lie on the predicted translate.
          for (F2Vec fid : fixed_ids[crep])
            if (!K.contains(fid ^ base))
              rep.violations.push_back("slice " + std::to_string(crep) +
                                       ": stray fixed point " + std::to_string(fid));
        }
      } else if (s.fixed_count != 0) {
        rep.violations.push_back("slice " + std::to_string(crep) +
                                 ": fixed points in a slice that should have none");
      }
      if (rep.e6_compatible) {
        bool two = s.nonfixed_count == 2 && s.nonfixed_orbits.size() == 2 &&
                   (s.nonfixed_orbits[0].second + s.nonfixed_orbits[1].second) == 1;
        if (!two)
          rep.violations.push_back("slice " + std::to_string(crep) +
                                   ": expected exactly two Q-separated moving orbits");
      }
    }
    rep.slices.reserve(slices.size());
    for (auto& [crep, s] : slices) rep.slices.push_back(std::move(s));
  }

  std::sort(rep.violations.begin(), rep.violations.end());
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

FormulaPrediction formula_orbit_count(const SkewForm& f, const std::vector<int>& B) {
  F2Form f2 = F2Form::of(f);
  FormulaPrediction p;
  p.e6 = is_e6_compatible(BGraph::of(f2, B));
  p.applicable = p.e6.compatible;
  F2Subspace U = coordinate_subspace(f.m, B);
  p.dim_U_cap_kernel = intersect(U, full_kernel(f2)).dim();
  p.count = (uint64_t{1} << (f.m - static_cast<int>(B.size()))) *
            (2 + (uint64_t{1} << p.dim_U_cap_kernel));
  return p;
}

FormulaPrediction formula_orbit_count(const SigmaGraph& sg) {
  return formula_orbit_count(SkewForm::of_sigma(sg), sg.bounded_set());
}

CorollaryPrediction corollary_orbit_count(const SignedWord& w) {
  SigmaGraph sg = build_sigma(w);
  FormulaPrediction fp = formula_orbit_count(sg);
  CorollaryPrediction c;
  c.s = w.distinct_letters();
  c.count = uint64_t{3} << c.s;
  c.applicable = fp.applicable;
  c.matches_formula = fp.count == c.count;
  return c;
}

std::string report_text(const OrbitReport& r) {
  std::ostringstream os;
  os << "m: " << r.m << "\n";
  os << "generators:";
  for (int b : r.B) os << ' ' << b;
  os << "\n";
  os << "orbit_count: " << r.orbit_count << "\n";
  os << "sizes:";
  for (auto& [sz, n] : r.sizes) os << ' ' << sz << ':' << n;
  os << "\n";
  os << "e6_compatible: " << (r.e6_compatible ? "true" : "false") << "\n";
  os << "e6_witness:";
  if (r.e6_witness.empty()) os << " -";
  for (int v : r.e6_witness) os << ' ' << v;
  os << "\n";
  os << "formula_applicable: " << (r.formula_applicable ? "true" : "false") << "\n";
  os << "formula_count: " << r.formula_count << "\n";
  os << "dim_U: " << r.dim_U << "\n";
  os << "dim_K: " << r.dim_K << "\n";
  os << "dim_U_cap_kernel: " << r.dim_U_cap_kernel << "\n";
  os << "dim_invariants: " << r.dim_invariants << "\n";
  os << "slices_truncated: " << (r.slices_truncated ? "true" : "false") << "\n";
  for (auto& s : r.slices) {
    os << "slice " << s.coset_index << ": rep=" << s.rep;
    if (s.has_fixed)
      os << " fixed_count=" << s.fixed_count << " fixed_dim=" << s.fixed_dim
         << " fixed_base=" << s.fixed_base;
    else
      os << " fixed_count=0";
    os << " orbits=";
    for (auto& [id, qv] : s.nonfixed_orbits) os << ' ' << id << '/' << qv;
    os << "\n";
  }
  os << "violations: " << r.violations.size() << "\n";
  for (auto& v : r.violations) os << "  " << v << "\n";
  return os.str();
}

std::string report_json(const OrbitReport& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["generators"] = r.B;
  j["orbit_count"] = r.orbit_count;
  nlohmann::json sizes = nlohmann::json::array();
  for (auto& [sz, n] : r.sizes) sizes.push_back({sz, n});
  j["sizes"] = sizes;
  j["e6_compatible"] = r.e6_compatible;
  j["e6_witness"] = r.e6_witness;
  j["formula_applicable"] = r.formula_applicable;
  j["formula_count"] = r.formula_count;
  j["dim_U"] = r.dim_U;
  j["dim_K"] = r.dim_K;
  j["dim_U_cap_kernel"] = r.dim_U_cap_kernel;
  j["dim_invariants"] = r.dim_invariants;
  j["slices_truncated"] = r.slices_truncated;
  nlohmann::json slices = nlohmann::json::array();
  for (auto& s : r.slices) {
    nlohmann::json js;
    js["index"] = s.coset_index;
    js["rep"] = s.rep;
    js["fixed_count"] = s.fixed_count;
    js["fixed_dim"] = s.fixed_dim;
    js["fixed_base"] = s.fixed_base;
    nlohmann::json orbits = nlohmann::json::array();
    for (auto& [id, qv] : s.nonfixed_orbits) orbits.push_back({id, qv});
    js["orbits"] = orbits;
    slices.push_back(js);
  }
  j["slices"] = slices;
  j["violations"] = r.violations;
  return j.dump(2);
}

XiForm xi_from_slice(const F2Form& f, F2Vec v) { return XiForm{f.omega_row(v)}; }

namespace {

// Distinct nonzero e, e' in the 64-element span of the witness with
// Q = xi = 0 on both and Omega(e, e') = 0.
bool find_isotropic_pair(const F2Form& f, const QForm& q, XiForm xi,
                         const std::vector<F2Vec>& espace, F2Vec& e, F2Vec& ep) {
  for (F2Vec a : espace) {
    if (a == 0 || q.value(a) != 0 || xi.value(a) != 0) continue;
    for (F2Vec b : espace) {
      if (b == 0 || b == a || q.value(b) != 0 || xi.value(b) != 0) continue;
      if (f.omega(a, b) == 0) {
        e = a;
        ep = b;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<F2Vec> weakly_orthogonal_decomposition(const F2Form& f, const QForm& q,
                                                   const std::vector<int>& B,
                                                   const std::vector<int>& e6_witness,
                                                   F2Vec u, XiForm xi) {
  F2Vec bmask = 0;
  for (int b : B) bmask |= F2Vec{1} << (b - 1);
  if (u == 0) throw InputError("u must be nonzero");
  if (u & ~bmask) throw InputError("u must lie in the generator span");
  if (q.value(u) != xi.value(u)) throw InputError("Q(u) and xi(u) must agree");
  if (e6_witness.size() != 6) throw InputError("an E6 witness is required");
  F2Subspace K = kernel_within(f, coordinate_subspace(f.m, B));
  F2Vec kappa_xi = 0;
  for (F2Vec kv : K.basis())
    if (xi.value(kv)) { kappa_xi = kv; break; }
  if (kappa_xi == 0) throw InputError("xi must be nonzero on the restricted kernel");

  std::vector<F2Vec> espace;
  for (uint32_t s = 0; s < 64; ++s) {
    F2Vec v = 0;
    for (int i = 0; i < 6; ++i)
      if ((s >> i) & 1u) v |= F2Vec{1} << (e6_witness[i] - 1);
    espace.push_back(v);
  }

  auto in_T = [&](F2Vec x) {
    return x != 0 && !(x & ~bmask) && !K.contains(x) && q.value(x) == 1 &&
           xi.value(x) == 1;
  };

  // Decomposition of a kernel vector with Q = xi = 1 into three members.
  auto kernel_q1_family = [&](F2Vec kv) -> std::vector<F2Vec> {
    F2Vec e = 0, ep = 0;
    if (!find_isotropic_pair(f, q, xi, espace, e, ep))
      throw VerificationError("no isotropic pair found in the witness span");
    return {kv ^ e, kv ^ ep, e ^ ep ^ kv};
  };

  std::vector<F2Vec> family;
  if (in_T(u)) {
    family = {u};
  } else if (K.contains(u)) {
    if (q.value(u) == 0) {
      F2Vec eb = 0;
      for (int b : B)
        if (xi.value(F2Vec{1} << (b - 1))) { eb = F2Vec{1} << (b - 1); break; }
      if (eb == 0) throw VerificationError("xi vanishes on every generator");
      family = {eb, u ^ eb};
    } else {
      family = kernel_q1_family(u);
    }
  } else {
    // u outside the kernel with Q(u) = xi(u) = 0.
    if (q.value(kappa_xi) == 1) {
      family = kernel_q1_family(kappa_xi);
      family.push_back(u ^ kappa_xi);
    } else {
      F2Vec e = 0;
      for (F2Vec cand : espace) {
        if (cand == 0 || q.value(cand) != 1) continue;
        if (f.omega(u, cand) != 0) continue;
        if (K.contains(u ^ cand)) continue;
        e = cand;
        break;
      }
      if (e == 0) throw VerificationError("no compatible witness vector found");
      if (xi.value(e) == 1)
        family = {e, u ^ e};
      else
        family = {e ^ kappa_xi, u ^ e ^ kappa_xi};
    }
  }

  F2Vec prefix = 0, sum = 0;
  for (size_t i = 0; i < family.size(); ++i) {
    if (!in_T(family[i]))
      throw VerificationError("family member " + std::to_string(family[i]) +
                              " is not an admissible summand");
    if (i > 0 && f.omega(prefix, family[i]) != 0)
      throw VerificationError("family is not weakly orthogonal");
    prefix ^= family[i];
    sum ^= family[i];
  }
  if (sum != u) throw VerificationError("family does not sum to u");
  return family;
}

JanssenReport check_janssen(const SkewForm& f, const std::vector<int>& B, size_t cap) {
  JanssenReport rep;
  int d = static_cast<int>(B.size());
  if (d > 20) {
    rep.skipped = true;
    rep.reason = "generator span too large to enumerate";
    return rep;
  }
  F2Form f2 = F2Form::of(f);
  GroupClosure closure = group_closure_small(f2, B, cap);
  rep.closure_size = closure.size();
  if (closure.truncated) {
    rep.skipped = true;
    rep.reason = "closure exceeds the cap";
    return rep;
  }
  QForm q = make_q_form(f, B);
  F2Subspace K = kernel_within(f2, coordinate_subspace(f.m, B));
  CoordPacker packB;
  for (int b : B) packB.pos.push_back(b - 1);

  uint64_t total = uint64_t{1} << d;
  for (uint64_t s = 0; s < total; ++s) {
    F2Vec u = packB.deposit(static_cast<uint32_t>(s));
    if (q.value(u) == 0) ++rep.level_q0;
    else ++rep.level_q1;
    if (K.contains(u)) continue;
    if (q.value(u) == 1) {
      ++rep.q1_vectors;
      if (!closure.contains(f2.tau_vector_matrix(u)))
        rep.check.violations.push_back("transvection at " + std::to_string(u) +
                                       " is outside the generated group");
    }
  }

  // Orbits of the group restricted to the span: singletons on the kernel,
  // one orbit per Q-level off it.
  Bitset visited(total);
  std::vector<F2Vec> stack;
  int orbits_q0 = 0, orbits_q1 = 0;
  for (uint64_t s = 0; s < total; ++s) {
    if (visited.test(s)) continue;
    F2Vec seed = packB.deposit(static_cast<uint32_t>(s));
    visited.test_set(s);
    stack.push_back(seed);
    uint64_t size = 0;
    while (!stack.empty()) {
      F2Vec x = stack.back();
      stack.pop_back();
      ++size;
      for (int b : B) {
        F2Vec y = f2.tau(b, x);
        if (y == x) continue;
        if (!visited.test_set(packB.extract(y))) stack.push_back(y);
      }
    }
    if (K.contains(seed)) {
      if (size != 1)
        rep.check.violations.push_back("kernel vector " + std::to_string(seed) +
                                       " is not fixed");
    } else {
      (q.value(seed) == 0 ? orbits_q0 : orbits_q1) += 1;
    }
  }
  if (orbits_q0 > 1)
    rep.check.violations.push_back("Q=0 level set splits into " +
                                   std::to_string(orbits_q0) + " orbits");
  if (orbits_q1 > 1)
    rep.check.violations.push_back("Q=1 level set splits into " +
                                   std::to_string(orbits_q1) + " orbits");
  return rep;
}

}  // namespace transvec
