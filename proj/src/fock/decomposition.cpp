#include "gschur/fock/decomposition.hpp"

#include <algorithm>

#include "gschur/combinatorics/transforms.hpp"
#include "gschur/errors.hpp"
#include "gschur/fock/affine.hpp"

namespace gschur {

int DecompositionMatrix::index_of(const Partition& lambda) const {
  auto it = std::find(labels.begin(), labels.end(), lambda);
  if (it == labels.end()) throw SizeMismatch("(" + lambda.to_string() + ") is not a row label");
  return static_cast<int>(it - labels.begin());
}

const LaurentPoly& DecompositionMatrix::at(const Partition& lambda, const Partition& mu) const {
  return entries[index_of(lambda)][index_of(mu)];
}

std::vector<LaurentPoly> DecompositionMatrix::column(const Partition& mu) const {
  const int j = index_of(mu);
  std::vector<LaurentPoly> out;
  for (const auto& row : entries) out.push_back(row[j]);
  return out;
}

int padding_for(const Partition& mu, const EplusOptions& opts) {
  return std::max(opts.pad.value_or(2), mu.length());
}

std::vector<LaurentPoly> eplus_column_hat_tilde(const Partition& mu, int d, CanonicalBasis& engine,
                                                const EplusOptions& opts) {
  const int n = mu.size();
  const int e = engine.e();
  if (d < mu.length()) throw PreconditionViolation("padding length shorter than the partition");
  const int rank = n + d * (d - 1) * (e - 1);
  if (rank > opts.max_enlarged_rank)
    throw BoundExceeded("hat/tilde column of (" + mu.to_string() + ") needs rank " + std::to_string(rank) +
                        " > " + std::to_string(opts.max_enlarged_rank));

  const Partition mu_hat_conj = hat(mu, e, d).conjugate();
  if (!is_e_restricted(mu_hat_conj, e))
    throw AlgorithmInvariantError("conjugate hat transform of (" + mu.to_string() + ") is not restricted");
  const FockVector& b = engine.element(mu_hat_conj);
  const int shift = shift_of(mu, e, d);

  std::vector<LaurentPoly> col;
  for (const Partition& lambda : partitions_of(n, opts.bound)) {
    if (lambda.length() > d) {
      col.emplace_back();
      continue;
    }
    col.push_back(b.coeff(tilde(lambda, e, d).conjugate()).bar().shifted(shift));
  }
  return col;
}

DecompositionMatrix eplus_matrix(int n, CanonicalBasis& engine, const EplusOptions& opts) {
  DecompositionMatrix m;
  m.n = n;
  m.e = engine.e();
  m.labels = partitions_of(n, opts.bound);
  const std::size_t size = m.labels.size();
  m.entries.assign(size, std::vector<LaurentPoly>(size));

  for (std::size_t j = 0; j < size; ++j) {
    const Partition& mu = m.labels[j];
    if (is_e_restricted(mu, m.e)) {
      const FockVector& b = engine.element(mu);
      for (std::size_t i = 0; i < size; ++i) m.entries[i][j] = b.coeff(m.labels[i]);
    } else {
      auto col = eplus_column_hat_tilde(mu, padding_for(mu, opts), engine, opts);
      for (std::size_t i = 0; i < size; ++i) m.entries[i][j] = std::move(col[i]);
    }
    for (std::size_t i = 0; i < size; ++i) {
      const LaurentPoly& c = m.entries[i][j];
      if (i == j) {
        if (!c.is_one())
          throw AlgorithmInvariantError("diagonal entry at (" + mu.to_string() + ") is " + c.to_string());
      } else if (!c.is_zero() && (!c.in_positive_part() || !dominates(m.labels[i], mu))) {
        throw AlgorithmInvariantError("entry (" + m.labels[i].to_string() + "; " + mu.to_string() + ") = " +
                                      c.to_string() + " breaks unitriangularity");
      }
    }
  }
  return m;
}

DecompositionMatrix eplus_matrix(int n, int e, const EplusOptions& opts) {
  CanonicalBasis engine(e);
  return eplus_matrix(n, engine, opts);
}

DecompositionMatrix bar_entries(const DecompositionMatrix& m) {
  DecompositionMatrix out = m;
  for (auto& row : out.entries)
    for (auto& c : row) c = c.bar();
  return out;
}

DecompositionMatrix graded_decomposition_matrix(int n, int e, bool allow_small_e, const EplusOptions& opts) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  if (e < 4 && !allow_small_e)
    throw PreconditionViolation("e = " + std::to_string(e) + " is below 4; pass allow_small_e to proceed");
  return bar_entries(eplus_matrix(n, e, opts));
}

}  // namespace gschur
