#include "gschur/combinatorics/transforms.hpp"

#include <map>

#include "gschur/errors.hpp"

namespace gschur {

EDecomposition e_decompose(const Partition& mu, int e, int d) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  if (d < mu.length()) throw PreconditionViolation("padding length shorter than the partition");
  EDecomposition out;
  std::vector<int>& m0 = out.restricted_part.parts;
  m0.assign(d, 0);
  out.quotient.assign(d, 0);
  for (int i = d - 1; i >= 0; --i) {
    const int below = i + 1 < d ? m0[i + 1] : 0;
    m0[i] = below + (mu[i] - mu[i + 1]) % e;
  }
  for (int i = 0; i < d; ++i) {
    const int diff = mu[i] - m0[i];
    if (diff < 0 || diff % e != 0) throw AlgorithmInvariantError("e-decomposition is not integral");
    out.quotient[i] = diff / e;
    if (i > 0 && out.quotient[i] > out.quotient[i - 1])
      throw AlgorithmInvariantError("e-quotient part is not weakly decreasing");
    if (m0[i] - (i + 1 < d ? m0[i + 1] : 0) > e - 1)
      throw AlgorithmInvariantError("restricted part is not e-restricted");
  }
  return out;
}

Partition hat(const Partition& mu, int e, int d) {
  const EDecomposition dec = e_decompose(mu, e, d);
  std::vector<int> h(d);
  for (int i = 0; i < d; ++i)
    h[i] = 2 * (e - 1) * (d - 1 - i) + dec.restricted_part.parts[d - 1 - i] + e * dec.quotient[i];
  return Partition(h);
}

Partition tilde(const Partition& lambda, int e, int d) {
  std::vector<int> t = lambda.padded(d);
  for (int& x : t) x += (e - 1) * (d - 1);
  return Partition(t);
}

HatTilde hat_tilde(const Partition& lambda, const Partition& mu, int e, int d) {
  if (d < lambda.length() || d < mu.length())
    throw PreconditionViolation("padding length shorter than a partition");
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  HatTilde out{hat(mu, e, d), tilde(lambda, e, d), tilde(mu, e, d)};
  if (out.mu_hat.size() != mu.size() + d * (d - 1) * (e - 1))
    throw AlgorithmInvariantError("hat transform has the wrong size");
  if (!is_e_restricted(out.mu_hat.conjugate(), e))
    throw AlgorithmInvariantError("conjugate of the hat transform is not e-restricted");
  return out;
}

int ladder_of(int a, int b, int e) { return b + (e - 1) * (a - 1); }

std::vector<std::pair<int, int>> ladder_monomial(const Partition& mu, int e) {
  if (!is_e_restricted(mu, e)) throw NotRestricted(mu.to_string() + " is not " + std::to_string(e) + "-restricted");
  std::map<int, int> counts;
  for (int a = 1; a <= mu.length(); ++a)
    for (int b = 1; b <= mu[a - 1]; ++b) ++counts[ladder_of(a, b, e)];
  std::vector<std::pair<int, int>> out;
  for (auto [ladder, k] : counts) out.emplace_back((ladder - 1) % e, k);
  return out;
}

}  // namespace gschur
