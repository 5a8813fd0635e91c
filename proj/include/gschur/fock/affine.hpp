#pragma once

#include <vector>

#include "gschur/combinatorics/partition.hpp"

namespace gschur {

struct AffineNormalForm {
  std::vector<long> dominant;
  /// Length of the longest element of the stabilizer of `dominant`.
  int ell = 0;
};

/// Normal form of nu under the level e affine action of the affine Weyl
/// group of type A_{d-1}: nu_1 >= ... >= nu_d and nu_1 - nu_d <= e.
AffineNormalForm affine_normalize(std::vector<long> nu, int e);

/// d(d-1)/2 - ell(mu + rho_d), rho_d = (d-1, ..., 1, 0).
int shift_of(const Partition& mu, int e, int d);

}  // namespace gschur
