#include "gschur/exactmath/matrix.hpp"

#include "gschur/errors.hpp"

namespace gschur {

CycloVector zero_vector(int e, std::size_t n) { return CycloVector(n, CycloNum(e)); }

CycloVector unit_vector(int e, std::size_t n, std::size_t i) {
  CycloVector v = zero_vector(e, n);
  v[i] = CycloNum(e, 1L);
  return v;
}

bool is_zero(const CycloVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

CycloMatrix::CycloMatrix(int e, std::size_t rows, std::size_t cols)
    : e_(e), rows_(rows), cols_(cols), a_(rows * cols, CycloNum(e)) {}

CycloMatrix CycloMatrix::identity(int e, std::size_t n) {
  CycloMatrix m(e, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(e, 1L);
  return m;
}

CycloMatrix CycloMatrix::scalar(const CycloNum& c, std::size_t n) {
  CycloMatrix m(c.order(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

CycloMatrix CycloMatrix::from_rows(int e, const std::vector<CycloVector>& rows, std::size_t cols) {
  CycloMatrix m(e, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

CycloVector CycloMatrix::row(std::size_t i) const {
  return CycloVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void CycloMatrix::set_row(std::size_t i, const CycloVector& v) {
  if (v.size() != cols_) throw ShapeMismatch("row length does not match matrix");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shapes differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CycloMatrix& CycloMatrix::operator-=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shapes differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shapes differ");
  CycloMatrix r(a.e_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycloNum& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

CycloMatrix operator*(const CycloNum& c, const CycloMatrix& m) {
  CycloMatrix r = m;
  if (c.is_one()) return r;
  for (auto& x : r.a_)
    if (!x.is_zero()) x *= c;
  return r;
}

CycloVector operator*(const CycloVector& v, const CycloMatrix& m) {
  if (v.size() != m.rows_) throw ShapeMismatch("vector-matrix shapes differ");
  CycloVector r = zero_vector(m.e_, m.cols_);
  for (std::size_t k = 0; k < m.rows_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols_; ++j)
      if (!m(k, j).is_zero()) r[j] += v[k] * m(k, j);
  }
  return r;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix r(e_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CycloMatrix CycloMatrix::pow(unsigned k) const {
  if (!is_square()) throw ShapeMismatch("power of a non-square matrix");
  CycloMatrix result = identity(e_, rows_);
  CycloMatrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

CycloNum CycloMatrix::trace() const {
  CycloNum t(e_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool CycloMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

}  // namespace gschur
