#pragma once

#include <map>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/fock/fock_space.hpp"

namespace gschur {

/// Memoized LLT computation of the canonical basis b^+_mu of the level 1
/// Fock space for one fixed e.  Columns of every rank share one cache.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(int e);

  int e() const { return e_; }

  /// A(mu): the ladder monomial of mu applied to the vacuum.
  FockVector ladder_vector(const Partition& mu) const;

  /// b^+_mu for e-restricted mu.  The reference stays valid for the
  /// lifetime of the engine.
  const FockVector& element(const Partition& mu);

 private:
  FockVector reduce(const Partition& mu);

  int e_;
  std::map<Partition, FockVector> cache_;
};

/// b^+_mu for every e-restricted mu of n.
std::map<Partition, FockVector> llt_canonical(int n, int e, int bound = kDefaultPartitionBound);

}  // namespace gschur
