#include "gschur/exactmath/laurent.hpp"

#include <cctype>

#include "gschur/errors.hpp"

namespace gschur {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [i, x] : a.terms_)
    for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k + s, c);
  return r;
}

bool LaurentPoly::in_positive_part() const { return terms_.empty() || terms_.begin()->first > 0; }

bool LaurentPoly::has_nonnegative_coeffs() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::descending() const {
  return {terms_.rbegin(), terms_.rend()};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    mpz_class c = it->second;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (k == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str();
    out += "v";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty Laurent polynomial");
  LaurentPoly p;
  size_t i = 0;
  auto fail = [&]() { throw ParseError("malformed Laurent polynomial: " + std::string(text)); };
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::string digits;
    read_int(digits);
    if (i < s.size() && s[i] == '*') ++i;
    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
    int exponent = 0;
    if (i < s.size() && s[i] == 'v') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        std::string ed;
        read_int(ed);
        if (ed.empty()) fail();
        exponent = esign * std::stoi(ed);
      }
    } else if (digits.empty()) {
      fail();
    }
    p.add_term(exponent, sign * coeff);
  }
  return p;
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return a + b;
    case LaurentOp::Sub: return a - b;
    case LaurentOp::Mul: return a * b;
  }
  return {};
}

LaurentPoly bar_involute(const LaurentPoly& p) { return p.bar(); }

LaurentPoly quantum_integer(int k) {
  LaurentPoly r;
  const int m = k < 0 ? -k : k;
  for (int j = 0; j < m; ++j) r.add_term(m - 1 - 2 * j, 1);
  return k < 0 ? -r : r;
}

LaurentPoly quantum_factorial(int k) {
  LaurentPoly r(1);
  for (int j = 2; j <= k; ++j) r *= quantum_integer(j);
  return r;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (a.is_zero()) return LaurentPoly();
  // Long division from the top degree down; b's leading coefficient must divide at every step.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int bmax = b.max_exponent();
  const int bspan = bmax - b.min_exponent();
  const mpz_class lead = b.coeff(bmax);
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < bspan) return std::nullopt;
    const int top = rem.max_exponent();
    const mpz_class c = rem.coeff(top);
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_class q = c / lead;
    LaurentPoly step = LaurentPoly::monomial(top - bmax, q);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

}  // namespace gschur
