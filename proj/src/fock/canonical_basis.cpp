#include "gschur/fock/canonical_basis.hpp"

#include "gschur/combinatorics/transforms.hpp"
#include "gschur/errors.hpp"

namespace gschur {

namespace {

// alpha_0 + sum_{k>0} alpha_{-k} (v^k + v^-k)
LaurentPoly symmetrized_nonpositive_part(const LaurentPoly& alpha) {
  LaurentPoly p;
  for (const auto& [k, c] : alpha.terms()) {
    if (k > 0) break;
    p.add_term(k, c);
    if (k < 0) p.add_term(-k, c);
  }
  return p;
}

}  // namespace

CanonicalBasis::CanonicalBasis(int e) : e_(e) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
}

FockVector CanonicalBasis::ladder_vector(const Partition& mu) const {
  FockVector x = FockVector::basis(Partition());
  for (auto [i, k] : ladder_monomial(mu, e_)) x = f_divided(i, k, x, e_);
  return x;
}

const FockVector& CanonicalBasis::element(const Partition& mu) {
  if (auto it = cache_.find(mu); it != cache_.end()) return it->second;
  FockVector b = reduce(mu);
  return cache_.emplace(mu, std::move(b)).first->second;
}

FockVector CanonicalBasis::reduce(const Partition& mu) {
  FockVector x = ladder_vector(mu);
  if (!x.coeff(mu).is_one())
    throw AlgorithmInvariantError("ladder vector of " + mu.to_string() + " is not unitriangular");
  for (const auto& [lambda, c] : x.terms())
    if (lambda != mu && !dominates(lambda, mu))
      throw AlgorithmInvariantError("ladder vector of " + mu.to_string() + " has support " +
                                    lambda.to_string() + " not dominating it");

  // Lexicographic order refines dominance, so walking upwards from mu
  // visits less dominant partitions first.
  Partition cursor = mu;
  while (true) {
    auto it = x.terms().upper_bound(cursor);
    while (it != x.terms().end() && it->second.in_positive_part()) ++it;
    if (it == x.terms().end()) break;
    const Partition nu = it->first;
    const LaurentPoly p = symmetrized_nonpositive_part(it->second);
    if (!is_e_restricted(nu, e_))
      throw AlgorithmInvariantError("coefficient of s_(" + nu.to_string() + ") in b^+_(" + mu.to_string() +
                                    ") is " + it->second.to_string() + " at a non-restricted partition");
    x -= p * element(nu);
    cursor = nu;
  }

  for (const auto& [lambda, c] : x.terms()) {
    if (lambda == mu) {
      if (!c.is_one()) throw AlgorithmInvariantError("diagonal of b^+_(" + mu.to_string() + ") is not 1");
    } else if (!c.in_positive_part() || !dominates(lambda, mu)) {
      throw AlgorithmInvariantError("b^+_(" + mu.to_string() + ") fails triangularity at " + lambda.to_string());
    }
  }
  return x;
}

std::map<Partition, FockVector> llt_canonical(int n, int e, int bound) {
  CanonicalBasis engine(e);
  std::map<Partition, FockVector> out;
  for (const Partition& mu : partitions_of(n, bound))
    if (is_e_restricted(mu, e)) out.emplace(mu, engine.element(mu));
  return out;
}

}  // namespace gschur
