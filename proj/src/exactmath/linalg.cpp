#include "gschur/exactmath/linalg.hpp"

#include "gschur/errors.hpp"

namespace gschur {

Echelon row_reduce(std::vector<CycloVector> rows, std::size_t ncols) {
  Echelon out;
  std::size_t cur = 0;
  for (std::size_t c = 0; c < ncols && cur < rows.size(); ++c) {
    std::size_t p = cur;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[cur]);
    CycloVector& piv = rows[cur];
    if (!piv[c].is_one()) {
      const CycloNum inv = piv[c].inverse();
      for (std::size_t k = c; k < ncols; ++k)
        if (!piv[k].is_zero()) piv[k] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == cur || rows[r][c].is_zero()) continue;
      const CycloNum f = rows[r][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!piv[k].is_zero()) rows[r][k] -= f * piv[k];
    }
    out.pivots.push_back(c);
    ++cur;
  }
  rows.resize(cur);
  out.rows = std::move(rows);
  return out;
}

Echelon row_reduce(const CycloMatrix& m) {
  std::vector<CycloVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return row_reduce(std::move(rows), m.cols());
}

RankNullspace matrix_rank_nullspace(const CycloMatrix& m) {
  const Echelon ech = row_reduce(m);
  RankNullspace out;
  out.rank = ech.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    CycloVector x = zero_vector(m.order(), m.cols());
    x[f] = CycloNum(m.order(), 1L);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = -ech.rows[i][f];
    out.nullspace.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const CycloMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<CycloVector> left_nullspace(const CycloMatrix& m) {
  return matrix_rank_nullspace(m.transpose()).nullspace;
}

std::vector<CycloVector> row_space(const CycloMatrix& m) { return row_reduce(m).rows; }

std::size_t span_dimension(const std::vector<CycloVector>& rows, std::size_t ncols) {
  return row_reduce(rows, ncols).pivots.size();
}

CycloMatrix inverse(const CycloMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const int e = m.order();
  std::vector<CycloVector> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = m.row(i);
    rows[i].resize(2 * n, CycloNum(e));
    rows[i][n + i] = CycloNum(e, 1L);
  }
  const Echelon ech = row_reduce(std::move(rows), 2 * n);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularError("matrix is singular");
  CycloMatrix inv(e, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.rows[i][n + j];
  return inv;
}

CycloMatrix generalized_eigenprojection(const CycloMatrix& m, const CycloNum& eigenvalue,
                                        const std::vector<CycloNum>& candidates,
                                        unsigned nilpotency_bound) {
  if (!m.is_square()) throw ShapeMismatch("eigenprojection of a non-square matrix");
  const std::size_t n = m.rows();
  const int e = m.order();
  const unsigned power = nilpotency_bound == 0 ? static_cast<unsigned>(n) : nilpotency_bound;
  if (n == 0) return m;
  if (!candidates.empty()) {
    std::size_t total = 0;
    for (const auto& c : candidates)
      total += left_nullspace((m - CycloMatrix::scalar(c, n)).pow(power)).size();
    if (total != n) throw SpectrumError("generalised eigenvalues outside the candidate set");
  }
  const CycloMatrix a = (m - CycloMatrix::scalar(eigenvalue, n)).pow(power);
  const std::vector<CycloVector> kernel = left_nullspace(a);
  if (kernel.empty()) return CycloMatrix(e, n, n);
  const std::vector<CycloVector> image = row_space(a);
  if (kernel.size() + image.size() != n)
    throw SpectrumError("generalised eigenspace and its complement do not span");
  std::vector<CycloVector> basis = kernel;
  basis.insert(basis.end(), image.begin(), image.end());
  const CycloMatrix b = CycloMatrix::from_rows(e, basis, n);
  CycloMatrix d(e, n, n);
  for (std::size_t i = 0; i < kernel.size(); ++i) d(i, i) = CycloNum(e, 1L);
  return inverse(b) * d * b;
}

bool is_nilpotent(const CycloMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("nilpotency of a non-square matrix");
  CycloMatrix p = m;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

CycloMatrix nilpotent_inverse(const CycloMatrix& u) {
  if (!u.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = u.rows();
  const int e = u.order();
  if (n == 0) return u;
  const CycloNum c = u.trace() / CycloNum(e, static_cast<long>(n));
  const CycloMatrix nil = u - CycloMatrix::scalar(c, n);
  if (c.is_zero() || !is_nilpotent(nil)) return inverse(u);
  // (cI + N)^{-1} = sum_k (-1)^k c^{-k-1} N^k
  const CycloNum cinv = c.inverse();
  const CycloMatrix step = (-cinv) * nil;
  CycloMatrix term = CycloMatrix::scalar(cinv, n);
  CycloMatrix sum = term;
  for (std::size_t k = 1; k < n; ++k) {
    term = term * step;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace gschur
