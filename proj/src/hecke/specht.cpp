#include "gschur/hecke/specht.hpp"

#include <algorithm>
#include <set>

#include "gschur/errors.hpp"

namespace gschur {

namespace {

std::vector<int> row_word(const StandardTableau& t) {
  std::vector<int> w(t.size());
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int k : t.rows()[r]) w[k - 1] = static_cast<int>(r) + 1;
  return w;
}

// lambda(s): entry k of s replaced by the row of k in the initial lambda-tableau.
// Returns false unless the result is semistandard.
bool semistandard_type(const StandardTableau& s, const std::vector<int>& initial_rows,
                       std::vector<std::vector<int>>& out) {
  out.clear();
  for (const auto& row : s.rows()) {
    std::vector<int> r;
    for (int k : row) r.push_back(initial_rows[k - 1]);
    if (!std::is_sorted(r.begin(), r.end())) return false;
    if (!out.empty())
      for (std::size_t j = 0; j < r.size(); ++j)
        if (out.back()[j] >= r[j]) return false;
    out.push_back(std::move(r));
  }
  return true;
}

}  // namespace

PermutationModule::PermutationModule(const Partition& lambda, int e)
    : lambda_(lambda), e_(e), q_(CycloNum::zeta_power(e, 1)) {
  std::vector<int> w;
  for (int r = 0; r < lambda.length(); ++r) w.insert(w.end(), lambda[r], r + 1);
  do {
    index_.emplace(w, words_.size());
    words_.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::size_t PermutationModule::index_of(const StandardTableau& t) const { return index_.at(row_word(t)); }

CycloVector PermutationModule::apply(const CycloVector& v, int k) const {
  CycloVector out = zero_vector(e_, dim());
  const CycloNum qm1 = q_ - CycloNum(e_, 1);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    const std::vector<int>& w = words_[i];
    if (w[k - 1] == w[k]) {
      out[i] += q_ * v[i];
      continue;
    }
    std::vector<int> swapped = w;
    std::swap(swapped[k - 1], swapped[k]);
    const std::size_t j = index_.at(swapped);
    if (w[k - 1] < w[k]) {
      out[j] += v[i];
    } else {
      out[j] += q_ * v[i];
      out[i] += qm1 * v[i];
    }
  }
  return out;
}

CycloVector PermutationModule::apply_word(CycloVector v, const std::vector<int>& word) const {
  for (int k : word) v = apply(v, k);
  return v;
}

CycloVector PermutationModule::apply_x(const CycloVector& v) const {
  const int n = lambda_.size();
  std::vector<int> row_of;
  for (int r = 0; r < lambda_.length(); ++r) row_of.insert(row_of.end(), lambda_[r], r);
  std::vector<int> gens;
  for (int k = 1; k < n; ++k)
    if (row_of[k - 1] == row_of[k]) gens.push_back(k);

  std::map<Permutation, CycloVector> layer{{Permutation::identity(n), v}};
  CycloVector total = v;
  while (!layer.empty()) {
    std::map<Permutation, CycloVector> next;
    for (const auto& [u, y] : layer)
      for (int k : gens) {
        Permutation us = u.right_simple(k);
        if (us.length() <= u.length() || next.count(us)) continue;
        CycloVector z = apply(y, k);
        for (std::size_t i = 0; i < dim(); ++i) total[i] += z[i];
        next.emplace(std::move(us), std::move(z));
      }
    layer = std::move(next);
  }
  return total;
}

CycloVector PermutationModule::project(const HeckeElement& h, const HeckeAlgebra& alg) const {
  const SymmetricGroup& g = alg.group();
  std::vector<int> initial_row;
  for (int r = 0; r < lambda_.length(); ++r) initial_row.insert(initial_row.end(), lambda_[r], r + 1);
  CycloVector out = zero_vector(e_, dim());
  std::vector<bool> seen(dim(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Permutation w_inv = g.element(i).inverse();
    std::vector<int> w(lambda_.size());
    for (int m = 1; m <= lambda_.size(); ++m) w[m - 1] = initial_row[w_inv(m) - 1];
    const std::size_t j = index_.at(w);
    if (!seen[j]) {
      out[j] = h.coeffs[i];
      seen[j] = true;
    } else if (out[j] != h.coeffs[i]) {
      throw BasisError("element is not in x_lambda H_n (coefficients vary along a coset)");
    }
  }
  return out;
}

SpechtModel::SpechtModel(const Partition& lambda, int e, int bound)
    : module_(lambda, e), tableaux_(standard_tableaux(lambda, bound)) {
  const int n = lambda.size();
  if (n > bound) throw BoundExceeded("n = " + std::to_string(n) + " exceeds the Hecke bound");
  const HeckeAlgebra alg(std::max(n, 1), e, bound);

  std::set<std::size_t> standard;
  for (const auto& t : tableaux_) standard.insert(module_.index_of(t));
  for (std::size_t i = 0; i < module_.dim(); ++i)
    if (!standard.count(i)) column_order_.push_back(i);
  nonstandard_ = column_order_.size();
  for (const auto& t : tableaux_) column_order_.push_back(module_.index_of(t));

  std::vector<int> initial_rows;
  for (int r = 0; r < lambda.length(); ++r) initial_rows.insert(initial_rows.end(), lambda[r], r + 1);

  std::vector<CycloVector> spanning;
  if (n > 0) {
    for (const Partition& nu : partitions_of(n, bound)) {
      if (nu == lambda || !dominates(nu, lambda)) continue;
      const std::vector<StandardTableau> std_nu = standard_tableaux(nu, bound);
      const HeckeElement x_nu = alg.x_mu(nu);
      std::map<std::vector<std::vector<int>>, HeckeElement> h_by_type;
      std::vector<std::vector<int>> type;
      for (const auto& s : std_nu) {
        if (!semistandard_type(s, initial_rows, type)) continue;
        std::vector<int> ds = coset_word(s).word;
        std::reverse(ds.begin(), ds.end());
        HeckeElement term = alg.left_mul_word(ds, x_nu);
        auto [it, inserted] = h_by_type.try_emplace(type, term);
        if (!inserted) it->second = alg.add(it->second, term);
      }
      for (const auto& [S, h] : h_by_type) {
        const CycloVector base = module_.project(h, alg);
        for (const auto& t : std_nu) spanning.push_back(module_.apply_word(base, coset_word(t).word));
      }
    }
  }

  for (auto& v : spanning) {
    CycloVector permuted;
    permuted.reserve(v.size());
    for (std::size_t c : column_order_) permuted.push_back(v[c]);
    v = std::move(permuted);
  }
  kernel_ = row_reduce(std::move(spanning), module_.dim());
  if (kernel_.rows.size() != nonstandard_)
    throw RankError("kernel of M^lambda -> S^lambda has dimension " + std::to_string(kernel_.rows.size()) +
                    ", expected " + std::to_string(nonstandard_));
  for (std::size_t p : kernel_.pivots)
    if (p >= nonstandard_) throw RankError("standard images are linearly dependent in the quotient");

  for (int k = 1; k < n; ++k) {
    CycloMatrix m(e, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      m.set_row(i, reduce(module_.apply(unit_vector(e, module_.dim(), module_.index_of(tableaux_[i])), k)));
    t_.push_back(std::move(m));
  }
}

CycloVector SpechtModel::reduce(const CycloVector& m) const {
  CycloVector v;
  v.reserve(m.size());
  for (std::size_t c : column_order_) v.push_back(m[c]);
  for (std::size_t r = 0; r < kernel_.rows.size(); ++r) {
    const CycloNum c = v[kernel_.pivots[r]];
    if (c.is_zero()) continue;
    const CycloVector& row = kernel_.rows[r];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  return CycloVector(v.begin() + static_cast<std::ptrdiff_t>(nonstandard_), v.end());
}

CycloMatrix SpechtModel::gram() const {
  const int e = this->e();
  CycloMatrix g(e, dim(), dim());
  for (std::size_t s = 0; s < dim(); ++s) {
    const CycloVector y = unit_vector(e, module_.dim(), module_.index_of(tableaux_[s]));
    for (std::size_t t = 0; t < dim(); ++t) {
      std::vector<int> dt = coset_word(tableaux_[t]).word;
      std::reverse(dt.begin(), dt.end());
      const CycloVector z = reduce(module_.apply_x(module_.apply_word(y, dt)));
      for (std::size_t j = 1; j < z.size(); ++j)
        if (!z[j].is_zero()) throw AlgorithmInvariantError("x_lambda h x_lambda is not a multiple of z_lambda");
      g(s, t) = z[0];
    }
  }
  return g;
}

}  // namespace gschur
