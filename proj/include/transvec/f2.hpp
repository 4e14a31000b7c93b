#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "transvec/common.hpp"

namespace transvec {

// Vector in F2^m, m <= 32. Coordinate k (1-based) lives in bit k-1.
using F2Vec = uint32_t;

inline int parity32(uint32_t x) { return std::popcount(x) & 1; }

// Subspace of F2^m kept as a reduced row-echelon basis (pivot = lowest set
// bit, ascending, pivot bits cleared from all other rows). The basis is a
// canonical form, so equality of subspaces is equality of bases.
class F2Subspace {
 public:
  explicit F2Subspace(int ambient) : m_(ambient) {}

  static F2Subspace span(int ambient, const std::vector<F2Vec>& gens) {
    F2Subspace s(ambient);
    for (F2Vec g : gens) s.insert(g);
    return s;
  }

  int ambient() const { return m_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<F2Vec>& basis() const { return rows_; }

  // Canonical coset representative: v with all pivot coordinates cleared.
  F2Vec reduce(F2Vec v) const {
    for (F2Vec r : rows_)
      if (v & (r & -r)) v ^= r;
    return v;
  }

  bool contains(F2Vec v) const { return reduce(v) == 0; }

  void insert(F2Vec v) {
    v = reduce(v);
    if (v == 0) return;
    F2Vec pivot = v & -v;
    for (F2Vec& r : rows_)
      if (r & pivot) r ^= v;
    auto it = rows_.begin();
    while (it != rows_.end() && (*it & -*it) < pivot) ++it;
    rows_.insert(it, v);
  }

  bool operator==(const F2Subspace&) const = default;

 private:
  int m_;
  std::vector<F2Vec> rows_;
};

// Linear map on F2^m; col[j] is the image of basis vector e_{j+1}.
struct F2Matrix {
  int m = 0;
  std::vector<F2Vec> col;

  static F2Matrix identity(int m) {
    F2Matrix r;
    r.m = m;
    r.col.resize(m);
    for (int j = 0; j < m; ++j) r.col[j] = F2Vec{1} << j;
    return r;
  }

  F2Vec apply(F2Vec x) const {
    F2Vec r = 0;
    while (x) {
      int j = std::countr_zero(x);
      r ^= col[j];
      x &= x - 1;
    }
    return r;
  }

  // Composite this∘first.
  F2Matrix after(const F2Matrix& first) const {
    F2Matrix r;
    r.m = m;
    r.col.resize(m);
    for (int j = 0; j < m; ++j) r.col[j] = apply(first.col[j]);
    return r;
  }

  bool operator==(const F2Matrix&) const = default;
};

// Nullspace {x : parity(row & x) = 0 for every row} inside F2^m.
F2Subspace nullspace(int m, std::vector<F2Vec> rows);

// One solution of the affine system parity(rows[i] & x) = rhs[i], if any.
std::optional<F2Vec> solve_affine(int m, std::vector<F2Vec> rows,
                                  std::vector<uint8_t> rhs);

}  // namespace transvec
