#pragma once

#include <optional>
#include <vector>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/exactmath/laurent.hpp"
#include "gschur/fock/canonical_basis.hpp"

namespace gschur {

/// Square matrix indexed by the partitions of n, most dominant first.
/// entries[row][col] is the (lambda, mu) entry.
struct DecompositionMatrix {
  int n = 0;
  int e = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<LaurentPoly>> entries;

  int index_of(const Partition& lambda) const;
  const LaurentPoly& at(const Partition& lambda, const Partition& mu) const;
  std::vector<LaurentPoly> column(const Partition& mu) const;
  bool operator==(const DecompositionMatrix&) const = default;
};

struct EplusOptions {
  /// Padding length for non-restricted columns.  When unset each column
  /// uses max(length(mu), 2); when set, max(pad, length(mu)).
  std::optional<int> pad;
  /// Largest rank n + d(d-1)(e-1) the hat/tilde route may reach.
  int max_enlarged_rank = 40;
  int bound = kDefaultPartitionBound;
};

int padding_for(const Partition& mu, const EplusOptions& opts);

/// Column of e^+_{lambda mu}(v) over partitions_of(n), read through the
/// hat/tilde identity with padding d.  Works for any mu, restricted or not.
std::vector<LaurentPoly> eplus_column_hat_tilde(const Partition& mu, int d, CanonicalBasis& engine,
                                                const EplusOptions& opts = {});

/// The full e^+ matrix: LLT columns for restricted mu, hat/tilde columns otherwise.
DecompositionMatrix eplus_matrix(int n, int e, const EplusOptions& opts = {});
DecompositionMatrix eplus_matrix(int n, CanonicalBasis& engine, const EplusOptions& opts = {});

/// d_{lambda mu}(v) = e^+_{lambda mu}(v^-1).  e below 4 needs allow_small_e.
DecompositionMatrix graded_decomposition_matrix(int n, int e, bool allow_small_e = false,
                                                const EplusOptions& opts = {});
DecompositionMatrix bar_entries(const DecompositionMatrix& m);

}  // namespace gschur
