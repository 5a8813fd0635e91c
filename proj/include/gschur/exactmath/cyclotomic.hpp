#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gschur {

/// The field Q(z) with z a primitive e-th root of unity, presented as
/// Q[x]/Phi_e(x).  Instances are shared and immutable.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int e);

  int order() const { return e_; }
  int degree() const { return phi_; }
  /// Phi_e with coefficients listed from the constant term upwards.
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  /// Reduction of x^k for 0 <= k <= 2*degree()-2.
  const std::vector<mpz_class>& power(int k) const { return powers_[k]; }

  static std::vector<mpz_class> cyclotomic_polynomial(int e);

 private:
  explicit CyclotomicField(int e);
  int e_;
  int phi_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> powers_;
};

class CycloNum {
 public:
  /// Zero of Q(z_e).
  explicit CycloNum(int e);
  CycloNum(int e, long value);
  CycloNum(int e, const mpq_class& value);

  static CycloNum zeta_power(int e, long k);

  int order() const { return field_->order(); }
  const CyclotomicField& field() const { return *field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  CycloNum operator-() const;
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Throws DivisionByZero on zero.
  CycloNum inverse() const;

  /// Canonical text: integer polynomial in z, optionally over a positive
  /// denominator, e.g. "z+1", "-z", "(2z-1)/3".
  std::string to_string() const;
  static CycloNum parse(int e, std::string_view text);

 private:
  const CyclotomicField* field_;
  std::vector<mpq_class> c_;
};

enum class CycloOp { Add, Sub, Mul, Div };

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);

}  // namespace gschur
