#include "transvec/f2.hpp"

namespace transvec {

F2Subspace nullspace(int m, std::vector<F2Vec> rows) {
  // Row-reduce the constraint rows, remember pivot columns.
  std::vector<F2Vec> reduced;
  for (F2Vec r : rows) {
    for (F2Vec q : reduced)
      if (r & (q & -q)) r ^= q;
    if (r) {
      F2Vec pivot = r & -r;
      for (F2Vec& q : reduced)
        if (q & pivot) q ^= r;
      reduced.push_back(r);
    }
  }
  F2Vec pivot_mask = 0;
  for (F2Vec q : reduced) pivot_mask |= q & -q;

  F2Subspace result(m);
  for (int f = 0; f < m; ++f) {
    F2Vec fbit = F2Vec{1} << f;
    if (pivot_mask & fbit) continue;
    F2Vec v = fbit;
    for (F2Vec q : reduced)
      if (q & fbit) v |= q & -q;
    result.insert(v);
  }
  return result;
}

std::optional<F2Vec> solve_affine(int m, std::vector<F2Vec> rows,
                                  std::vector<uint8_t> rhs) {
  // Gaussian elimination with the right-hand side carried along.
  std::vector<std::pair<F2Vec, uint8_t>> reduced;
  for (size_t i = 0; i < rows.size(); ++i) {
    F2Vec r = rows[i];
    uint8_t b = rhs[i] & 1;
    for (auto& [q, qb] : reduced)
      if (r & (q & -q)) { r ^= q; b ^= qb; }
    if (r == 0) {
      if (b) return std::nullopt;
      continue;
    }
    F2Vec pivot = r & -r;
    for (auto& [q, qb] : reduced)
      if (q & pivot) { q ^= r; qb ^= b; }
    reduced.emplace_back(r, b);
  }
  F2Vec x = 0;
  for (auto& [q, qb] : reduced)
    if (qb) x |= q & -q;
  (void)m;
  return x;
}

}  // namespace transvec
