#pragma once

#include <utility>
#include <vector>

#include "gschur/combinatorics/partition.hpp"

namespace gschur {

struct EDecomposition {
  Composition restricted_part;  // mu0, length d, e-restricted
  std::vector<int> quotient;    // mu1, weakly decreasing, length d
};

/// mu = mu0 + e * mu1 with mu0 e-restricted, built from the bottom row up.
EDecomposition e_decompose(const Partition& mu, int e, int d);

/// 2(e-1) rho_d + (mu0_d, ..., mu0_1) + e mu1.
Partition hat(const Partition& mu, int e, int d);
/// lambda + (e-1)(d-1, ..., d-1) over d rows.
Partition tilde(const Partition& lambda, int e, int d);

struct HatTilde {
  Partition mu_hat;
  Partition lambda_tilde;
  Partition mu_tilde;
};

HatTilde hat_tilde(const Partition& lambda, const Partition& mu, int e, int d);

/// Divided-power instructions (residue, multiplicity) whose product, applied
/// to the empty partition in the listed order, gives the LLT starting vector.
std::vector<std::pair<int, int>> ladder_monomial(const Partition& mu, int e);

/// Ladder index of the node in row a, column b (both 1-based).
int ladder_of(int a, int b, int e);

}  // namespace gschur
