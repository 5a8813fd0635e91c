#include "gschur/exactmath/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "gschur/errors.hpp"

namespace gschur {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial.
IntPoly poly_div_monic(IntPoly a, const IntPoly& b) {
  const size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    mpz_class c = a[k];
    q[k - db] = c;
    for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw AlgorithmInvariantError("cyclotomic factorisation left a remainder");
  return q;
}

}  // namespace

std::vector<mpz_class> CyclotomicField::cyclotomic_polynomial(int e) {
  if (e < 1) throw PreconditionViolation("cyclotomic order must be positive");
  IntPoly num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) num = poly_div_monic(num, cyclotomic_polynomial(d));
  return num;
}

CyclotomicField::CyclotomicField(int e) : e_(e), modulus_(cyclotomic_polynomial(e)) {
  phi_ = static_cast<int>(modulus_.size()) - 1;
  const int top = std::max(2 * phi_ - 1, phi_ + 1);
  powers_.assign(top, IntPoly(phi_, 0));
  for (int k = 0; k < phi_; ++k) powers_[k][k] = 1;
  for (int k = phi_; k < top; ++k) {
    const IntPoly& prev = powers_[k - 1];
    IntPoly& cur = powers_[k];
    const mpz_class carry = prev[phi_ - 1];
    for (int j = phi_ - 1; j > 0; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    for (int j = 0; j < phi_; ++j) cur[j] -= carry * modulus_[j];
  }
}

const CyclotomicField& CyclotomicField::get(int e) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it == cache.end()) {
    if (e < 1) throw PreconditionViolation("cyclotomic order must be positive");
    it = cache.emplace(e, std::unique_ptr<CyclotomicField>(new CyclotomicField(e))).first;
  }
  return *it->second;
}

CycloNum::CycloNum(int e) : field_(&CyclotomicField::get(e)), c_(field_->degree()) {}

CycloNum::CycloNum(int e, long value) : CycloNum(e) { c_[0] = value; }

CycloNum::CycloNum(int e, const mpq_class& value) : CycloNum(e) { c_[0] = value; }

CycloNum CycloNum::zeta_power(int e, long k) {
  CycloNum r(e);
  long m = k % e;
  if (m < 0) m += e;
  CycloNum z(e);
  if (r.field_->degree() == 1) {
    z.c_[0] = -r.field_->modulus()[0];
  } else {
    z.c_[1] = 1;
  }
  r.c_[0] = 1;
  for (long j = 0; j < m; ++j) r *= z;
  return r;
}

bool CycloNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

static void check_same(const CycloNum& a, const CycloNum& b) {
  if (&a.field() != &b.field()) throw PreconditionViolation("cyclotomic orders differ");
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  check_same(a, b);
  const int phi = a.field_->degree();
  CycloNum r(a.order());
  if (a.is_zero() || b.is_zero()) return r;
  if (phi == 1) {
    r.c_[0] = a.c_[0] * b.c_[0];
    return r;
  }
  std::vector<mpq_class> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  for (int k = 0; k < phi; ++k) r.c_[k] = prod[k];
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = a.field_->power(k);
    for (int j = 0; j < phi; ++j)
      if (red[j] != 0) r.c_[j] += prod[k] * red[j];
  }
  return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum CycloNum::operator-() const {
  CycloNum r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(z)");
  const int phi = field_->degree();
  // Column j of the multiplication-by-this matrix is this * x^j.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
  CycloNum col = *this;
  CycloNum x(order());
  if (phi > 1) x.c_[1] = 1;
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
    if (j + 1 < phi) col *= x;
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int p = c;
    while (p < phi && m[p][c] == 0) ++p;
    if (p == phi) throw AlgorithmInvariantError("multiplication matrix singular in a field");
    std::swap(m[p], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (int k = c; k <= phi; ++k) m[c][k] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (int k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycloNum r(order());
  for (int i = 0; i < phi; ++i) r.c_[i] = m[i][phi];
  return r;
}

std::string CycloNum::to_string() const {
  mpz_class den = 1;
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::string num;
  int terms = 0;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    mpz_class n = c_[k].get_num() * (den / c_[k].get_den());
    if (n < 0) {
      num += "-";
      n = -n;
    } else if (terms > 0) {
      num += "+";
    }
    ++terms;
    if (k == 0 || n != 1) num += n.get_str();
    if (k >= 1) num += "z";
    if (k >= 2) num += "^" + std::to_string(k);
  }
  if (terms == 0) return "0";
  if (den == 1) return num;
  if (terms > 1) num = "(" + num + ")";
  return num + "/" + den.get_str();
}

CycloNum CycloNum::parse(int e, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&]() { throw ParseError("malformed cyclotomic number: " + std::string(text)); };
  if (s.empty()) fail();
  mpz_class den = 1;
  const size_t slash = s.rfind('/');
  if (slash != std::string::npos) {
    const std::string d = s.substr(slash + 1);
    if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos) fail();
    den = mpz_class(d);
    if (den == 0) fail();
    s = s.substr(0, slash);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  CycloNum r(e);
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (i < s.size() && s[i] == '*') ++i;
    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
    long power = 0;
    if (i < s.size() && s[i] == 'z') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string pd;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) pd.push_back(s[i++]);
        if (pd.empty()) fail();
        power = std::stol(pd);
      }
    } else if (digits.empty()) {
      fail();
    }
    CycloNum term = zeta_power(e, power);
    r += CycloNum(e, mpq_class(sign * coeff)) * term;
  }
  return r * CycloNum(e, mpq_class(1, 1) / mpq_class(den));
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Sub: return a - b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Div: return a / b;
  }
  return CycloNum(a.order());
}

}  // namespace gschur
