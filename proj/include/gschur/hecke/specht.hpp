#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/combinatorics/tableau.hpp"
#include "gschur/exactmath/linalg.hpp"
#include "gschur/hecke/hecke_algebra.hpp"

namespace gschur {

/// M^lambda = x_lambda H_n with basis x_lambda T_d, d running over the
/// distinguished right coset representatives of the Young subgroup.  A basis
/// vector is recorded by its row word: r[k-1] is the row holding k in the
/// row-standard tableau t^lambda d.
class PermutationModule {
 public:
  PermutationModule(const Partition& lambda, int e);

  const Partition& shape() const { return lambda_; }
  int e() const { return e_; }
  std::size_t dim() const { return words_.size(); }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  std::size_t index_of_word(const std::vector<int>& w) const { return index_.at(w); }
  std::size_t index_of(const StandardTableau& t) const;

  /// v T_k and v T_{w1} ... T_{wr}.
  CycloVector apply(const CycloVector& v, int k) const;
  CycloVector apply_word(CycloVector v, const std::vector<int>& word) const;
  /// v x_lambda.
  CycloVector apply_x(const CycloVector& v) const;

  /// Coordinates of h in x_lambda H_n; throws BasisError if h is not there.
  CycloVector project(const HeckeElement& h, const HeckeAlgebra& alg) const;

 private:
  Partition lambda_;
  int e_;
  CycloNum q_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// S^lambda realised as M^lambda / (M^lambda cap N^{>lambda}) with basis the
/// images of x_lambda T_{d(t)}, t standard, in standard_tableaux order.
class SpechtModel {
 public:
  SpechtModel(const Partition& lambda, int e, int bound = kDefaultHeckeBound);

  const Partition& shape() const { return module_.shape(); }
  int e() const { return module_.e(); }
  std::size_t dim() const { return tableaux_.size(); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
  const PermutationModule& module() const { return module_; }
  std::size_t kernel_dim() const { return kernel_.rows.size(); }

  /// Coordinates in the Specht basis of the image of a vector of M^lambda.
  CycloVector reduce(const CycloVector& m) const;
  /// Matrices of T_1..T_{n-1}.
  const std::vector<CycloMatrix>& t_matrices() const { return t_; }
  /// G_st with x_lambda T_{d(s)} T_{d(t)^-1} x_lambda = G_st x_lambda mod N^{>lambda}.
  CycloMatrix gram() const;

 private:
  PermutationModule module_;
  std::vector<StandardTableau> tableaux_;
  std::vector<std::size_t> column_order_;  // non-standard coordinates first
  std::size_t nonstandard_ = 0;
  Echelon kernel_;                         // in column_order_ coordinates
  std::vector<CycloMatrix> t_;
};

}  // namespace gschur
