#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/combinatorics/permutation.hpp"
#include "gschur/combinatorics/tableau.hpp"
#include "gschur/exactmath/matrix.hpp"

namespace gschur {

inline constexpr int kDefaultHeckeBound = 6;

/// The elements of S_n in lexicographic order of their one-line notation,
/// with multiplication tables by simple transpositions.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n, int bound = kDefaultHeckeBound);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Permutation& w) const;
  int length(std::size_t i) const { return length_[i]; }
  /// Index of w * s_k and s_k * w.
  std::size_t right(std::size_t i, int k) const { return right_[k - 1][i]; }
  std::size_t left(std::size_t i, int k) const { return left_[k - 1][i]; }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::size_t>> right_, left_;
};

/// Element of H_n in the basis T_w, coefficients in Q(z_e), q = z_e.
struct HeckeElement {
  CycloVector coeffs;
  bool operator==(const HeckeElement& o) const { return coeffs == o.coeffs; }
};

class HeckeAlgebra {
 public:
  HeckeAlgebra(int n, int e, int bound = kDefaultHeckeBound);

  int n() const { return group_->degree(); }
  int e() const { return e_; }
  const CycloNum& q() const { return q_; }
  const SymmetricGroup& group() const { return *group_; }

  HeckeElement zero() const;
  HeckeElement one() const;
  HeckeElement basis(const Permutation& w) const;
  HeckeElement generator(int k) const;
  HeckeElement scaled(const CycloNum& c, const HeckeElement& h) const;
  HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement sub(const HeckeElement& a, const HeckeElement& b) const;

  /// h T_k and T_k h.
  HeckeElement right_mul(const HeckeElement& h, int k) const;
  HeckeElement left_mul(int k, const HeckeElement& h) const;
  /// h T_{w1} ... T_{wr} and T_{w1} ... T_{wr} h.
  HeckeElement right_mul_word(HeckeElement h, const std::vector<int>& word) const;
  HeckeElement left_mul_word(const std::vector<int>& word, HeckeElement h) const;

  HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b) const;
  /// The anti-involution T_w -> T_{w^-1}.
  HeckeElement star(const HeckeElement& h) const;
  /// The algebra involution T_i -> q - 1 - T_i.
  HeckeElement psi(const HeckeElement& h) const;

  /// Sum of T_w over the row stabilizer of the initial tableau of mu.
  HeckeElement x_mu(const Partition& mu) const;
  /// m_st = T*_{d(s)} x_mu T_{d(t)}; throws ShapeMismatch.
  HeckeElement murphy_m(const StandardTableau& s, const StandardTableau& t) const;

  /// Matrices of right multiplication by T_1..T_{n-1} on the basis T_w.
  std::vector<CycloMatrix> regular_matrices() const;

 private:
  std::shared_ptr<const SymmetricGroup> group_;
  int e_;
  CycloNum q_;
};

HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b, const HeckeAlgebra& h);

}  // namespace gschur
