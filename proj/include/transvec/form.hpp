#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "transvec/f2.hpp"
#include "transvec/sigma.hpp"
#include "transvec/zmatrix.hpp"

namespace transvec {

// Integer skew-symmetric form with entries in {-1,0,1}: entry(k,l) = +1 iff
// k->l is an edge of the source graph.
struct SkewForm {
  int m = 0;
  std::vector<int8_t> w;  // m*m

  int entry(int k, int l) const { return w[static_cast<size_t>(k - 1) * m + (l - 1)]; }

  static SkewForm of_sigma(const SigmaGraph& sg);
  static SkewForm from_directed_edges(int m, const std::vector<std::pair<int, int>>& edges);

  ZMatrix gram() const;  // as an integer matrix M with x^T M y = Omega(x,y)
};

// tau_k(v) = v - Omega(v, e_k) e_k. Only coordinate k changes.
std::vector<int64_t> transvection_apply(const SkewForm& f, int k,
                                        const std::vector<int64_t>& v);
ZMatrix transvection_matrix(const SkewForm& f, int k);
ZMatrix transvection_inverse_matrix(const SkewForm& f, int k);

// Mod-2 reduction as neighbor masks; requires m <= 32. In characteristic 2
// a transvection flips coordinate k by the parity of the neighbors of k.
struct F2Form {
  int m = 0;
  std::vector<F2Vec> adj;  // adj[k-1]: positions l with entry(k,l) nonzero

  static F2Form of(const SkewForm& f);

  int omega(F2Vec u, F2Vec v) const { return parity32(omega_row(u) & v); }
  // Mask r with parity(r & x) = Omega(u, x).
  F2Vec omega_row(F2Vec u) const {
    F2Vec r = 0;
    while (u) {
      r ^= adj[std::countr_zero(u)];
      u &= u - 1;
    }
    return r;
  }
  F2Vec tau(int k, F2Vec x) const {
    return x ^ (static_cast<F2Vec>(parity32(x & adj[k - 1])) << (k - 1));
  }
  F2Vec tau_vector(F2Vec u, F2Vec x) const {
    return parity32(omega_row(u) & x) ? x ^ u : x;
  }
  F2Matrix tau_matrix(int k) const;
  F2Matrix tau_vector_matrix(F2Vec u) const;
};

// Quadratic refinement of the mod-2 form: Q(x+y) = Q(x)+Q(y)+Omega(x,y),
// with Q = 1 on the generator coordinates. Off the generator span the
// values are a free extension (default 0).
struct QForm {
  int m = 0;
  std::vector<uint8_t> linear;  // linear[k-1] = Q(e_k)
  F2Form form;

  int value(F2Vec x) const {
    int q = 0;
    F2Vec rest = x;
    while (rest) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      q ^= linear[j];
      q ^= parity32(form.adj[j] & rest);  // pairs {j, later bit}
    }
    return q;
  }
};

QForm make_q_form(const SkewForm& f, const std::vector<int>& B,
                  const std::vector<uint8_t>* extension = nullptr);

// Verifies Q(tau_b x) = Q(x) for every generator b; exhaustive for m <= 16,
// sampled otherwise.
CheckReport q_invariance_check(const QForm& q, const std::vector<int>& B,
                               uint64_t samples, uint64_t seed);

F2Subspace coordinate_subspace(int m, const std::vector<int>& coords);

// Radical of the whole form: {v : Omega(v, e_k) = 0 for all k}.
F2Subspace full_kernel(const F2Form& f);

// Kernel of the form restricted to a subspace, as a bilinear form on it:
// {u in U : Omega(u, u') = 0 for all u' in U}. Distinct from
// full_kernel(f) intersected with U.
F2Subspace kernel_within(const F2Form& f, const F2Subspace& U);

F2Subspace intersect(const F2Subspace& a, const F2Subspace& b);

// {v : Omega(e_b, v) = 0 for all b in B} — the vectors fixed by every
// generator transvection.
F2Subspace invariant_space(const F2Form& f, const std::vector<int>& B);

// Undirected graph on the generator set: {b,b'} is an edge iff
// Omega(b,b') = 1.
struct BGraph {
  std::vector<int> vertices;   // ambient labels, sorted
  std::vector<uint64_t> adjm;  // adjacency over local indices

  static BGraph of(const F2Form& f, const std::vector<int>& B);
  int size() const { return static_cast<int>(vertices.size()); }
  bool connected() const;
};

struct E6Result {
  bool compatible = false;
  std::vector<int> witness;  // 6 ambient vertex labels when compatible
};

// Connected and containing an induced 6-vertex subgraph isomorphic to the
// E6 tree (path of five with a pendant at the middle vertex).
E6Result is_e6_compatible(const BGraph& g);

struct F2MatrixKey {
  size_t operator()(const std::vector<F2Vec>& v) const {
    size_t h = 1469598103934665603ull;
    for (F2Vec x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct GroupClosure {
  int m = 0;
  bool truncated = false;
  std::vector<F2Matrix> elements;
  std::unordered_set<std::vector<F2Vec>, F2MatrixKey> keys;

  bool contains(const F2Matrix& g) const { return keys.count(g.col) != 0; }
  size_t size() const { return elements.size(); }
};

// Breadth-first closure of the generator transvections under composition,
// aborted (truncated = true) once `cap` elements are exceeded.
GroupClosure group_closure_small(const F2Form& f, const std::vector<int>& generators,
                                 size_t cap);

// Directed E6 tree on 6 vertices with every vertex a generator: chain
// 1->2->3->4->5 plus 3->6.
SkewForm e6_fixture();

}  // namespace transvec
