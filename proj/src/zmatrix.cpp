#include "transvec/zmatrix.hpp"

#include <sstream>

namespace transvec {

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix dimension mismatch in product");
  ZMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      int64_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(x, o.at(k, j)));
      }
    }
  }
  return r;
}

ZMatrix ZMatrix::operator+(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch in sum");
  ZMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
  return r;
}

ZMatrix ZMatrix::operator-(const ZMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch in difference");
  ZMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_sub(a_[i], o.a_[i]);
  return r;
}

ZMatrix ZMatrix::transposed() const {
  ZMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<int64_t> ZMatrix::apply(const std::vector<int64_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("vector dimension mismatch");
  std::vector<int64_t> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
  return r;
}

bool ZMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string ZMatrix::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

// Bareiss elimination: every division below is exact.
int64_t det(ZMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  int64_t prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        int64_t num = checked_sub(checked_mul(m.at(i, j), m.at(k, k)),
                                  checked_mul(m.at(i, k), m.at(k, j)));
        m.at(i, j) = num / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : checked_sub(0, m.at(n - 1, n - 1));
}

}  // namespace transvec
