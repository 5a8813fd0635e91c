#include "gschur/fock/affine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gschur/errors.hpp"

namespace gschur {

namespace {

constexpr long kIterationCap = 1'000'000;

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

}  // namespace

AffineNormalForm affine_normalize(std::vector<long> nu, int e) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  if (nu.empty()) throw PreconditionViolation("affine action needs d >= 1");
  const int d = static_cast<int>(nu.size());

  long steps = 0;
  std::sort(nu.begin(), nu.end(), std::greater<>());
  while (d > 1 && nu.front() - nu.back() > e) {
    if (++steps > kIterationCap) throw NonTermination("affine normalization did not reach a normal form");
    const long first = nu.front();
    nu.front() = nu.back() + e;
    nu.back() = first - e;
    std::sort(nu.begin(), nu.end(), std::greater<>());
  }

  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i + 1 < d; ++i)
    if (nu[i] == nu[i + 1]) parent[find_root(parent, i)] = find_root(parent, i + 1);
  if (d > 1 && nu.front() - nu.back() == e) parent[find_root(parent, 0)] = find_root(parent, d - 1);

  std::vector<int> orbit(d, 0);
  for (int i = 0; i < d; ++i) ++orbit[find_root(parent, i)];
  AffineNormalForm out{std::move(nu), 0};
  for (int m : orbit) out.ell += m * (m - 1) / 2;
  return out;
}

int shift_of(const Partition& mu, int e, int d) {
  if (d < mu.length()) throw PreconditionViolation("padding length shorter than the partition");
  std::vector<long> nu(d);
  for (int i = 0; i < d; ++i) nu[i] = mu[i] + (d - 1 - i);
  return d * (d - 1) / 2 - affine_normalize(std::move(nu), e).ell;
}

}  // namespace gschur
