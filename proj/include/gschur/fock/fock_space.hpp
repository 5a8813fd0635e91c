#pragma once

#include <map>
#include <string>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/exactmath/laurent.hpp"

namespace gschur {

/// Finite Z[v,v^-1]-combination of Schur symbols s_lambda.
class FockVector {
 public:
  using Terms = std::map<Partition, LaurentPoly>;

  FockVector() = default;
  static FockVector basis(const Partition& lambda);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const LaurentPoly& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPoly& c, const FockVector& x);
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

  /// "v s_(2,1,1) + s_(1^4)", most dominant term first.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// f_i s_lambda = sum over addable i-nodes x of v^{N_i^b(x)} s_{lambda+x}.
FockVector f_apply(int i, const FockVector& x, int e);
/// e_i s_lambda = sum over removable i-nodes x of v^{-N_i^a(x)} s_{lambda-x}.
FockVector e_apply(int i, const FockVector& x, int e);
/// f_i^k / [k]!; throws DivisionError if a coefficient is not divisible.
FockVector f_divided(int i, int k, const FockVector& x, int e);

}  // namespace gschur
