#include "gschur/fock/fock_space.hpp"

#include "gschur/errors.hpp"

namespace gschur {

FockVector FockVector::basis(const Partition& lambda) {
  FockVector x;
  x.terms_.emplace(lambda, LaurentPoly(1));
  return x;
}

LaurentPoly FockVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add_term(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& x) {
  FockVector r;
  if (c.is_zero()) return r;
  for (const auto& [l, a] : x.terms_) r.add_term(l, c * a);
  return r;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const LaurentPoly& c = it->second;
    std::string coeff = c.to_string();
    const bool negative = coeff[0] == '-' && c.terms().size() == 1;
    if (negative) coeff = coeff.substr(1);
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (c.terms().size() > 1) s += "(" + coeff + ") ";
    else if (coeff != "1") s += coeff + " ";
    s += "s_(" + it->first.to_string() + ")";
  }
  return s;
}

FockVector f_apply(int i, const FockVector& x, int e) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) {
    const AddableRemovable ar = addable_removable(lambda, i, e);
    for (const Node& node : ar.addable) {
      int n_below = 0;
      for (const Node& a : ar.addable) n_below += a.row > node.row;
      for (const Node& r : ar.removable) n_below -= r.row > node.row;
      out.add_term(add_node(lambda, node.row), c.shifted(n_below));
    }
  }
  return out;
}

FockVector e_apply(int i, const FockVector& x, int e) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) {
    const AddableRemovable ar = addable_removable(lambda, i, e);
    for (const Node& node : ar.removable) {
      int n_above = 0;
      for (const Node& a : ar.addable) n_above += a.row < node.row;
      for (const Node& r : ar.removable) n_above -= r.row < node.row;
      out.add_term(remove_node(lambda, node.row), c.shifted(-n_above));
    }
  }
  return out;
}

FockVector f_divided(int i, int k, const FockVector& x, int e) {
  if (k < 1) throw PreconditionViolation("divided power needs k >= 1");
  FockVector y = x;
  for (int j = 0; j < k; ++j) y = f_apply(i, y, e);
  if (k == 1) return y;
  const LaurentPoly fact = quantum_factorial(k);
  FockVector out;
  for (const auto& [lambda, c] : y.terms()) {
    auto q = exact_divide(c, fact);
    if (!q) throw DivisionError("coefficient " + c.to_string() + " not divisible by [" + std::to_string(k) + "]!");
    out.add_term(lambda, *q);
  }
  return out;
}

}  // namespace gschur
