#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transvec/common.hpp"

namespace transvec {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// Dense integer matrix with overflow-checked arithmetic. All values are
// exact; an overflow aborts the computation instead of wrapping.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static ZMatrix identity(int n) {
    ZMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  ZMatrix operator*(const ZMatrix& o) const;
  ZMatrix operator+(const ZMatrix& o) const;
  ZMatrix operator-(const ZMatrix& o) const;
  bool operator==(const ZMatrix& o) const = default;

  ZMatrix transposed() const;
  std::vector<int64_t> apply(const std::vector<int64_t>& v) const;
  bool is_identity() const;

  // One row per line, entries space-separated.
  std::string to_text() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<int64_t> a_;
};

// Exact determinant (fraction-free elimination).
int64_t det(ZMatrix m);

}  // namespace transvec
