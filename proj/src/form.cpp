#include "transvec/form.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace transvec {

SkewForm SkewForm::of_sigma(const SigmaGraph& sg) {
  SkewForm f;
  f.m = sg.m();
  f.w.assign(static_cast<size_t>(f.m) * f.m, 0);
  for (auto& e : sg.edges()) {
    f.w[static_cast<size_t>(e.from - 1) * f.m + (e.to - 1)] = 1;
    f.w[static_cast<size_t>(e.to - 1) * f.m + (e.from - 1)] = -1;
  }
  return f;
}

SkewForm SkewForm::from_directed_edges(int m, const std::vector<std::pair<int, int>>& edges) {
  SkewForm f;
  f.m = m;
  f.w.assign(static_cast<size_t>(m) * m, 0);
  for (auto [a, b] : edges) {
    if (a < 1 || a > m || b < 1 || b > m || a == b) throw InputError("bad directed edge");
    f.w[static_cast<size_t>(a - 1) * m + (b - 1)] = 1;
    f.w[static_cast<size_t>(b - 1) * m + (a - 1)] = -1;
  }
  return f;
}

ZMatrix SkewForm::gram() const {
  ZMatrix g(m, m);
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l) g.at(k - 1, l - 1) = entry(k, l);
  return g;
}

std::vector<int64_t> transvection_apply(const SkewForm& f, int k,
                                        const std::vector<int64_t>& v) {
  if (k < 1 || k > f.m) throw InputError("transvection index out of range");
  if (static_cast<int>(v.size()) != f.m) throw InputError("vector dimension mismatch");
  int64_t omega_v_ek = 0;
  for (int a = 1; a <= f.m; ++a)
    omega_v_ek = checked_add(omega_v_ek, checked_mul(v[a - 1], f.entry(a, k)));
  std::vector<int64_t> r = v;
  r[k - 1] = checked_sub(r[k - 1], omega_v_ek);
  return r;
}

ZMatrix transvection_matrix(const SkewForm& f, int k) {
  if (k < 1 || k > f.m) throw InputError("transvection index out of range");
  ZMatrix t = ZMatrix::identity(f.m);
  for (int a = 1; a <= f.m; ++a)
    if (a != k) t.at(k - 1, a - 1) = -f.entry(a, k);
  return t;
}

ZMatrix transvection_inverse_matrix(const SkewForm& f, int k) {
  if (k < 1 || k > f.m) throw InputError("transvection index out of range");
  ZMatrix t = ZMatrix::identity(f.m);
  for (int a = 1; a <= f.m; ++a)
    if (a != k) t.at(k - 1, a - 1) = f.entry(a, k);
  return t;
}

F2Form F2Form::of(const SkewForm& f) {
  if (f.m > 32) throw InputError("mod-2 machinery requires dimension <= 32");
  F2Form r;
  r.m = f.m;
  r.adj.assign(f.m, 0);
  for (int k = 1; k <= f.m; ++k)
    for (int l = 1; l <= f.m; ++l)
      if (f.entry(k, l) != 0) r.adj[k - 1] |= F2Vec{1} << (l - 1);
  return r;
}

F2Matrix F2Form::tau_matrix(int k) const {
  F2Matrix t = F2Matrix::identity(m);
  for (int j = 0; j < m; ++j)
    if ((adj[k - 1] >> j) & 1u) t.col[j] ^= F2Vec{1} << (k - 1);
  return t;
}

F2Matrix F2Form::tau_vector_matrix(F2Vec u) const {
  F2Matrix t = F2Matrix::identity(m);
  F2Vec row = omega_row(u);
  for (int j = 0; j < m; ++j)
    if ((row >> j) & 1u) t.col[j] ^= u;
  return t;
}

QForm make_q_form(const SkewForm& f, const std::vector<int>& B,
                  const std::vector<uint8_t>* extension) {
  QForm q;
  q.m = f.m;
  q.form = F2Form::of(f);
  q.linear.assign(f.m, 0);
  if (extension) {
    if (static_cast<int>(extension->size()) != f.m)
      throw InputError("extension must give one bit per vertex");
    for (int k = 0; k < f.m; ++k) q.linear[k] = (*extension)[k] & 1;
  }
  for (int b : B) {
    if (b < 1 || b > f.m) throw InputError("generator index out of range");
    q.linear[b - 1] = 1;
  }
  return q;
}

CheckReport q_invariance_check(const QForm& q, const std::vector<int>& B,
                               uint64_t samples, uint64_t seed) {
  CheckReport rep;
  auto check_one = [&](F2Vec x) {
    for (int b : B) {
      F2Vec y = q.form.tau(b, x);
      if (q.value(y) != q.value(x)) {
        rep.violations.push_back("Q changed under generator " + std::to_string(b) +
                                 " at vector " + std::to_string(x));
        return false;
      }
    }
    return true;
  };
  if (q.m <= 16) {
    for (F2Vec x = 0; x < (F2Vec{1} << q.m); ++x)
      if (!check_one(x)) return rep;
  } else {
    std::mt19937_64 rng(seed);
    F2Vec mask = (q.m == 32) ? ~F2Vec{0} : ((F2Vec{1} << q.m) - 1);
    for (uint64_t i = 0; i < samples; ++i)
      if (!check_one(static_cast<F2Vec>(rng()) & mask)) return rep;
  }
  return rep;
}

F2Subspace coordinate_subspace(int m, const std::vector<int>& coords) {
  F2Subspace u(m);
  for (int c : coords) {
    if (c < 1 || c > m) throw InputError("coordinate out of range");
    u.insert(F2Vec{1} << (c - 1));
  }
  return u;
}

F2Subspace full_kernel(const F2Form& f) { return nullspace(f.m, f.adj); }

F2Subspace kernel_within(const F2Form& f, const F2Subspace& U) {
  const auto& basis = U.basis();
  int d = static_cast<int>(basis.size());
  std::vector<F2Vec> rows(d, 0);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      if (f.omega(basis[i], basis[j])) rows[j] |= F2Vec{1} << i;
  F2Subspace coeffs = nullspace(d, rows);
  F2Subspace result(U.ambient());
  for (F2Vec c : coeffs.basis()) {
    F2Vec v = 0;
    for (int i = 0; i < d; ++i)
      if ((c >> i) & 1u) v ^= basis[i];
    result.insert(v);
  }
  return result;
}

F2Subspace intersect(const F2Subspace& a, const F2Subspace& b) {
  const auto& basis = a.basis();
  int d = static_cast<int>(basis.size());
  std::vector<F2Vec> reduced(d);
  for (int i = 0; i < d; ++i) reduced[i] = b.reduce(basis[i]);
  // Conditions over the coefficient space: the b-reductions must cancel.
  std::vector<F2Vec> rows;
  for (int t = 0; t < a.ambient(); ++t) {
    F2Vec row = 0;
    for (int i = 0; i < d; ++i)
      if ((reduced[i] >> t) & 1u) row |= F2Vec{1} << i;
    if (row) rows.push_back(row);
  }
  F2Subspace coeffs = nullspace(d, rows);
  F2Subspace result(a.ambient());
  for (F2Vec c : coeffs.basis()) {
    F2Vec v = 0;
    for (int i = 0; i < d; ++i)
      if ((c >> i) & 1u) v ^= basis[i];
    result.insert(v);
  }
  return result;
}

F2Subspace invariant_space(const F2Form& f, const std::vector<int>& B) {
  std::vector<F2Vec> rows;
  for (int b : B) rows.push_back(f.adj[b - 1]);
  return nullspace(f.m, rows);
}

BGraph BGraph::of(const F2Form& f, const std::vector<int>& B) {
  BGraph g;
  g.vertices = B;
  std::sort(g.vertices.begin(), g.vertices.end());
  int n = g.size();
  if (n > 64) throw InputError("generator graph: more than 64 vertices");
  g.adjm.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((f.adj[g.vertices[i] - 1] >> (g.vertices[j] - 1)) & 1u) {
        g.adjm[i] |= uint64_t{1} << j;
        g.adjm[j] |= uint64_t{1} << i;
      }
  return g;
}

bool BGraph::connected() const {
  int n = size();
  if (n <= 1) return true;
  uint64_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    uint64_t fresh = adjm[v] & ~seen;
    seen |= fresh;
    while (fresh) {
      stack.push_back(std::countr_zero(fresh));
      fresh &= fresh - 1;
    }
  }
  return seen == ((n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
}

namespace {

// Induced subgraph on 6 local indices isomorphic to the E6 tree: five edges,
// degrees {1,1,1,2,2,3}, and arms of lengths {1,2,2} from the branch vertex.
bool subset_is_e6(const BGraph& g, const std::array<int, 6>& pick) {
  uint64_t pmask = 0;
  for (int v : pick) pmask |= uint64_t{1} << v;
  int deg[6];
  int edge_count = 0;
  for (int i = 0; i < 6; ++i) {
    deg[i] = std::popcount(g.adjm[pick[i]] & pmask);
    edge_count += deg[i];
  }
  if (edge_count != 10) return false;  // twice the edge number
  int d3 = -1, ones = 0, twos = 0;
  for (int i = 0; i < 6; ++i) {
    if (deg[i] == 1) ++ones;
    else if (deg[i] == 2) ++twos;
    else if (deg[i] == 3) { if (d3 >= 0) return false; d3 = i; }
    else return false;
  }
  if (ones != 3 || twos != 2 || d3 < 0) return false;

  // Walk the three arms from the branch vertex; they must be disjoint paths
  // with lengths {1,2,2}.
  auto local_index = [&](int vertex) {
    for (int i = 0; i < 6; ++i)
      if (pick[i] == vertex) return i;
    return -1;
  };
  uint64_t visited = uint64_t{1} << pick[d3];
  std::vector<int> arm_lengths;
  uint64_t nbrs = g.adjm[pick[d3]] & pmask;
  while (nbrs) {
    int v = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    int len = 0, prev = pick[d3], cur = v;
    while (true) {
      if (visited & (uint64_t{1} << cur)) return false;
      visited |= uint64_t{1} << cur;
      ++len;
      int li = local_index(cur);
      if (deg[li] == 1) break;
      uint64_t next = g.adjm[cur] & pmask & ~(uint64_t{1} << prev);
      if (std::popcount(next) != 1) return false;
      prev = cur;
      cur = std::countr_zero(next);
      if (len > 5) return false;
    }
    arm_lengths.push_back(len);
  }
  std::sort(arm_lengths.begin(), arm_lengths.end());
  return arm_lengths == std::vector<int>{1, 2, 2} &&
         std::popcount(visited) == 6;
}

}  // namespace

E6Result is_e6_compatible(const BGraph& g) {
  E6Result r;
  int n = g.size();
  if (n < 6 || !g.connected()) return r;
  std::array<int, 6> pick;
  // All 6-subsets, lexicographic.
  std::vector<int> idx{0, 1, 2, 3, 4, 5};
  while (true) {
    for (int i = 0; i < 6; ++i) pick[i] = idx[i];
    if (subset_is_e6(g, pick)) {
      r.compatible = true;
      for (int i : pick) r.witness.push_back(g.vertices[i]);
      return r;
    }
    int i = 5;
    while (i >= 0 && idx[i] == n - 6 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
  }
  return r;
}

GroupClosure group_closure_small(const F2Form& f, const std::vector<int>& generators,
                                 size_t cap) {
  GroupClosure c;
  c.m = f.m;
  std::vector<F2Matrix> gens;
  for (int b : generators) gens.push_back(f.tau_matrix(b));
  F2Matrix id = F2Matrix::identity(f.m);
  c.elements.push_back(id);
  c.keys.insert(id.col);
  size_t head = 0;
  while (head < c.elements.size()) {
    F2Matrix g = c.elements[head++];
    for (const F2Matrix& t : gens) {
      F2Matrix ng = t.after(g);
      if (c.keys.count(ng.col)) continue;
      if (c.elements.size() >= cap) {
        c.truncated = true;
        return c;
      }
      c.keys.insert(ng.col);
      c.elements.push_back(ng);
    }
  }
  return c;
}

SkewForm e6_fixture() {
  return SkewForm::from_directed_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
}

}  // namespace transvec
