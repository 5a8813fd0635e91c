#pragma once

#include <cstddef>
#include <vector>

#include "gschur/exactmath/matrix.hpp"

namespace gschur {

/// Reduced row echelon form of a list of row vectors.
struct Echelon {
  std::vector<CycloVector> rows;  // nonzero rows only, pivot entries equal to 1
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<CycloVector> rows, std::size_t ncols);
Echelon row_reduce(const CycloMatrix& m);

struct RankNullspace {
  std::size_t rank = 0;
  /// Basis of {x : m x^T = 0}, i.e. the right nullspace.
  std::vector<CycloVector> nullspace;
};

RankNullspace matrix_rank_nullspace(const CycloMatrix& m);
std::size_t rank(const CycloMatrix& m);
/// Basis of {x : x m = 0}.
std::vector<CycloVector> left_nullspace(const CycloMatrix& m);
/// Basis of the span of the rows of m.
std::vector<CycloVector> row_space(const CycloMatrix& m);
/// Dimension of the span of a family of row vectors.
std::size_t span_dimension(const std::vector<CycloVector>& rows, std::size_t ncols);

/// Throws SingularError.
CycloMatrix inverse(const CycloMatrix& m);

/// Projection onto the generalised eigenspace of m for the given eigenvalue,
/// along the sum of the other generalised eigenspaces.  The result is a
/// polynomial in m.  When candidates is non-empty every generalised
/// eigenvalue of m must lie in it (SpectrumError otherwise).
CycloMatrix generalized_eigenprojection(const CycloMatrix& m, const CycloNum& eigenvalue,
                                        const std::vector<CycloNum>& candidates = {},
                                        unsigned nilpotency_bound = 0);

/// Inverse of u = c I + n with n nilpotent via a terminating geometric series;
/// falls back to Gaussian elimination when u is not of that shape.
CycloMatrix nilpotent_inverse(const CycloMatrix& u);

bool is_nilpotent(const CycloMatrix& m);

}  // namespace gschur
