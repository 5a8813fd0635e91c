#include "gschur/hecke/hecke_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "gschur/errors.hpp"

namespace gschur {

SymmetricGroup::SymmetricGroup(int n, int bound) : n_(n) {
  if (n < 1) throw PreconditionViolation("symmetric group needs n >= 1");
  if (n > bound) throw BoundExceeded("n = " + std::to_string(n) + " exceeds the Hecke bound " + std::to_string(bound));
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  do {
    index_.emplace(Permutation(img), elements_.size());
    elements_.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  right_.assign(n - 1, std::vector<std::size_t>(order()));
  left_.assign(n - 1, std::vector<std::size_t>(order()));
  for (std::size_t i = 0; i < order(); ++i) {
    const Permutation& w = elements_[i];
    length_.push_back(w.length());
    words_.push_back(w.reduced_word());
    for (int k = 1; k < n; ++k) {
      right_[k - 1][i] = index_.at(w.right_simple(k));
      left_[k - 1][i] = index_.at(w.left_simple(k));
    }
  }
}

std::size_t SymmetricGroup::index_of(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw SizeMismatch("permutation of the wrong degree");
  return it->second;
}

HeckeAlgebra::HeckeAlgebra(int n, int e, int bound)
    : group_(std::make_shared<SymmetricGroup>(n, bound)), e_(e), q_(CycloNum::zeta_power(e, 1)) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
}

HeckeElement HeckeAlgebra::zero() const { return {zero_vector(e_, group_->order())}; }

HeckeElement HeckeAlgebra::one() const { return basis(Permutation::identity(n())); }

HeckeElement HeckeAlgebra::basis(const Permutation& w) const {
  return {unit_vector(e_, group_->order(), group_->index_of(w))};
}

HeckeElement HeckeAlgebra::generator(int k) const { return basis(Permutation::simple(n(), k)); }

HeckeElement HeckeAlgebra::scaled(const CycloNum& c, const HeckeElement& h) const {
  HeckeElement out = h;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

HeckeElement HeckeAlgebra::right_mul(const HeckeElement& h, int k) const {
  const SymmetricGroup& g = *group_;
  HeckeElement out = zero();
  const CycloNum qm1 = q_ - CycloNum(e_, 1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const CycloNum& c = h.coeffs[i];
    if (c.is_zero()) continue;
    const std::size_t j = g.right(i, k);
    if (g.length(j) > g.length(i)) {
      out.coeffs[j] += c;
    } else {
      out.coeffs[j] += q_ * c;
      out.coeffs[i] += qm1 * c;
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::left_mul(int k, const HeckeElement& h) const {
  const SymmetricGroup& g = *group_;
  HeckeElement out = zero();
  const CycloNum qm1 = q_ - CycloNum(e_, 1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const CycloNum& c = h.coeffs[i];
    if (c.is_zero()) continue;
    const std::size_t j = g.left(i, k);
    if (g.length(j) > g.length(i)) {
      out.coeffs[j] += c;
    } else {
      out.coeffs[j] += q_ * c;
      out.coeffs[i] += qm1 * c;
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_mul_word(HeckeElement h, const std::vector<int>& word) const {
  for (int k : word) h = right_mul(h, k);
  return h;
}

HeckeElement HeckeAlgebra::left_mul_word(const std::vector<int>& word, HeckeElement h) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = left_mul(*it, h);
  return h;
}

HeckeElement HeckeAlgebra::t_mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out = zero();
  for (std::size_t i = 0; i < group_->order(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    out = add(out, scaled(a.coeffs[i], left_mul_word(group_->word(i), b)));
  }
  return out;
}

HeckeElement HeckeAlgebra::star(const HeckeElement& h) const {
  HeckeElement out = zero();
  for (std::size_t i = 0; i < group_->order(); ++i)
    out.coeffs[group_->index_of(group_->element(i).inverse())] = h.coeffs[i];
  return out;
}

HeckeElement HeckeAlgebra::psi(const HeckeElement& h) const {
  const CycloNum qm1 = q_ - CycloNum(e_, 1);
  HeckeElement out = zero();
  for (std::size_t i = 0; i < group_->order(); ++i) {
    if (h.coeffs[i].is_zero()) continue;
    HeckeElement x = one();
    for (int k : group_->word(i)) x = sub(scaled(qm1, x), right_mul(x, k));
    out = add(out, scaled(h.coeffs[i], x));
  }
  return out;
}

HeckeElement HeckeAlgebra::x_mu(const Partition& mu) const {
  if (mu.size() != n()) throw SizeMismatch("x_mu needs a partition of n");
  std::vector<int> row_of(n() + 1);
  int k = 1;
  for (int r = 0; r < mu.length(); ++r)
    for (int j = 0; j < mu[r]; ++j) row_of[k++] = r;
  HeckeElement out = zero();
  for (std::size_t i = 0; i < group_->order(); ++i) {
    const Permutation& w = group_->element(i);
    bool keeps_rows = true;
    for (int j = 1; j <= n() && keeps_rows; ++j) keeps_rows = row_of[w(j)] == row_of[j];
    if (keeps_rows) out.coeffs[i] = CycloNum(e_, 1);
  }
  return out;
}

HeckeElement HeckeAlgebra::murphy_m(const StandardTableau& s, const StandardTableau& t) const {
  if (s.shape() != t.shape()) throw ShapeMismatch("m_st needs tableaux of one shape");
  std::vector<int> ds = coset_word(s).word;
  std::reverse(ds.begin(), ds.end());
  return right_mul_word(left_mul_word(ds, x_mu(s.shape())), coset_word(t).word);
}

std::vector<CycloMatrix> HeckeAlgebra::regular_matrices() const {
  std::vector<CycloMatrix> out;
  for (int k = 1; k < n(); ++k) {
    CycloMatrix m(e_, group_->order(), group_->order());
    for (std::size_t i = 0; i < group_->order(); ++i)
      m.set_row(i, right_mul(HeckeElement{unit_vector(e_, group_->order(), i)}, k).coeffs);
    out.push_back(std::move(m));
  }
  return out;
}

HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b, const HeckeAlgebra& h) { return h.t_mul(a, b); }

}  // namespace gschur
