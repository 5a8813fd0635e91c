#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gschur {

/// Laurent polynomial in one indeterminate v with arbitrary-precision
/// integer coefficients.  Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1);
  static LaurentPoly v() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Smallest / largest exponent with nonzero coefficient; 0 for the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  mpz_class coeff(int exponent) const;
  void add_term(int exponent, const mpz_class& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// v -> v^{-1}
  LaurentPoly bar() const;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  bool is_bar_symmetric() const { return bar() == *this; }
  /// True when every exponent is strictly positive (the zero polynomial qualifies).
  bool in_positive_part() const;
  /// True when every coefficient is nonnegative.
  bool has_nonnegative_coeffs() const;
  mpz_class at_one() const;

  /// Terms as (exponent, coefficient) with exponents descending.
  std::vector<std::pair<int, mpz_class>> descending() const;

  /// Human readable, e.g. "v^2-2+v^-1", "0" for zero.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  Terms terms_;
};

enum class LaurentOp { Add, Sub, Mul };

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);
LaurentPoly bar_involute(const LaurentPoly& p);

/// Balanced quantum integer [k] = v^{k-1} + v^{k-3} + ... + v^{1-k}; [0] = 0, [-k] = -[k].
LaurentPoly quantum_integer(int k);
/// [k]! = [1][2]...[k].
LaurentPoly quantum_factorial(int k);
/// a / b when the quotient is again a Laurent polynomial over Z.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gschur
