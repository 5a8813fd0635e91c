#pragma once

#include <cstddef>
#include <vector>

#include "gschur/exactmath/cyclotomic.hpp"

namespace gschur {

using CycloVector = std::vector<CycloNum>;

CycloVector zero_vector(int e, std::size_t n);
CycloVector unit_vector(int e, std::size_t n, std::size_t i);
bool is_zero(const CycloVector& v);

/// Dense matrix over Q(z_e).  Modules in this library are right modules:
/// a matrix acts on row vectors from the right, so rho(ab) = rho(a) rho(b).
class CycloMatrix {
 public:
  CycloMatrix() : e_(1), rows_(0), cols_(0) {}
  CycloMatrix(int e, std::size_t rows, std::size_t cols);
  static CycloMatrix identity(int e, std::size_t n);
  static CycloMatrix scalar(const CycloNum& c, std::size_t n);
  static CycloMatrix from_rows(int e, const std::vector<CycloVector>& rows, std::size_t cols);

  int order() const { return e_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycloNum& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CycloNum& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  CycloVector row(std::size_t i) const;
  void set_row(std::size_t i, const CycloVector& v);

  CycloMatrix& operator+=(const CycloMatrix& o);
  CycloMatrix& operator-=(const CycloMatrix& o);
  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
  friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloNum& c, const CycloMatrix& m);
  friend CycloVector operator*(const CycloVector& v, const CycloMatrix& m);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

  CycloMatrix transpose() const;
  CycloMatrix pow(unsigned k) const;
  CycloNum trace() const;
  bool is_zero() const;
  bool is_diagonal() const;

 private:
  int e_;
  std::size_t rows_, cols_;
  std::vector<CycloNum> a_;
};

}  // namespace gschur
