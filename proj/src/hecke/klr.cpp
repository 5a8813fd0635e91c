#include "gschur/hecke/klr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gschur/errors.hpp"
#include "gschur/exactmath/linalg.hpp"
#include "gschur/hecke/hecke_algebra.hpp"

namespace gschur {

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }


CycloNum q_power(int e, long k) { return CycloNum::zeta_power(e, k); }

}  // namespace

HeckeRep regular_representation(int n, int e) {
  HeckeAlgebra alg(n, e);
  HeckeRep rep{n, e, alg.group().order(), alg.regular_matrices()};
  return rep;
}

CycloMatrix KlrData::idempotent(const ResidueSequence& i, int e, std::size_t dim) const {
  auto it = std::find(blocks.begin(), blocks.end(), i);
  if (it == blocks.end()) return CycloMatrix(e, dim, dim);
  return E[static_cast<std::size_t>(it - blocks.begin())];
}

std::vector<CycloMatrix> jm_matrices(const HeckeRep& rep) {
  const CycloNum q_inv = q_power(rep.e, -1);
  std::vector<CycloMatrix> X{CycloMatrix::identity(rep.e, rep.dim)};
  for (int k = 1; k < rep.n; ++k) X.push_back(q_inv * (rep.T[k - 1] * X.back() * rep.T[k - 1]));
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = a + 1; b < X.size(); ++b)
      if (X[a] * X[b] != X[b] * X[a])
        throw AlgorithmInvariantError("X_" + std::to_string(a + 1) + " and X_" + std::to_string(b + 1) +
                                      " do not commute");
  for (const auto& x : X) inverse(x);
  return X;
}

std::vector<ResidueSequence> residue_candidates(const std::vector<Partition>& shapes, int e) {
  std::vector<ResidueSequence> out;
  for (const Partition& l : shapes)
    for (const auto& t : standard_tableaux(l, kDefaultHeckeBound)) out.push_back(residue_sequence(t, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void residue_idempotents(const HeckeRep& rep, const std::vector<ResidueSequence>& candidates, KlrData& klr) {
  const int e = rep.e;
  if (klr.X.empty()) klr.X = jm_matrices(rep);
  std::vector<CycloNum> spectrum;
  for (int j = 0; j < e; ++j) spectrum.push_back(q_power(e, j));

  std::map<std::pair<int, int>, CycloMatrix> projection;
  auto proj = [&](int a, int r) -> const CycloMatrix& {
    auto key = std::make_pair(a, r);
    auto it = projection.find(key);
    if (it == projection.end())
      it = projection.emplace(key, generalized_eigenprojection(klr.X[a], spectrum[r], spectrum)).first;
    return it->second;
  };

  klr.blocks.clear();
  klr.E.clear();
  CycloMatrix total(e, rep.dim, rep.dim);
  for (const ResidueSequence& i : candidates) {
    if (static_cast<int>(i.size()) != rep.n) throw SizeMismatch("residue sequence of the wrong length");
    CycloMatrix p = proj(0, mod(i[0], e));
    for (int a = 1; a < rep.n && !p.is_zero(); ++a) p = p * proj(a, mod(i[a], e));
    if (p.is_zero()) continue;
    if (i[0] != 0) throw AlgorithmInvariantError("nonzero idempotent with i_1 != 0");
    total += p;
    klr.blocks.push_back(i);
    klr.E.push_back(std::move(p));
  }
  if (total != CycloMatrix::identity(e, rep.dim))
    throw SpectrumError("residue idempotents do not sum to the identity");
  for (std::size_t a = 0; a < klr.E.size(); ++a)
    for (std::size_t b = 0; b < klr.E.size(); ++b) {
      const CycloMatrix prod = klr.E[a] * klr.E[b];
      if (a == b ? prod != klr.E[a] : !prod.is_zero())
        throw SpectrumError("residue idempotents are not orthogonal");
    }
}

void klr_generators(const HeckeRep& rep, KlrData& klr) {
  const int e = rep.e;
  const std::size_t dim = rep.dim;
  if (e == 2) throw E2Unsupported("the KLR presentation used here needs e >= 3");
  const CycloMatrix one = CycloMatrix::identity(e, dim);
  const CycloNum q = q_power(e, 1);

  klr.t.clear();
  for (int a = 0; a < rep.n; ++a) {
    CycloMatrix ta(e, dim, dim);
    for (std::size_t b = 0; b < klr.blocks.size(); ++b)
      ta += (one - q_power(e, -klr.blocks[b][a]) * klr.X[a]) * klr.E[b];
    if (!is_nilpotent(ta)) throw AlgorithmInvariantError("t_" + std::to_string(a + 1) + " is not nilpotent");
    klr.t.push_back(std::move(ta));
  }
  if (!klr.t[0].is_zero()) throw AlgorithmInvariantError("t_1 is not zero");

  klr.sigma.clear();
  for (int k = 1; k < rep.n; ++k) {
    const CycloMatrix u = one - klr.t[k - 1];  // 1 - t_k
    const CycloMatrix w = one - klr.t[k];      // 1 - t_{k+1}
    const CycloMatrix w_inv = nilpotent_inverse(w);
    CycloMatrix s(e, dim, dim);
    for (std::size_t b = 0; b < klr.blocks.size(); ++b) {
      const int ik = klr.blocks[b][k - 1];
      const int ik1 = klr.blocks[b][k];
      CycloMatrix p = one;
      CycloMatrix q_inv = one;
      if (ik == ik1) {
        const CycloMatrix qk = (one - q * one) + q * klr.t[k] - klr.t[k - 1];
        q_inv = nilpotent_inverse(qk);
      } else {
        p = (one - q * one) * nilpotent_inverse(one - q_power(e, ik - ik1) * (u * w_inv));
        const CycloMatrix num = q_power(e, ik) * u - q_power(e, ik1 + 1) * w;
        const CycloMatrix den = q_power(e, ik) * u - q_power(e, ik1) * w;
        if (mod(ik1 - ik, e) == e - 1) {
          q_inv = q_power(e, -ik) * one;
        } else if (mod(ik1 - ik, e) == 1) {
          q_inv = den * den * nilpotent_inverse(num);
        } else {
          q_inv = den * nilpotent_inverse(num);
        }
      }
      s += (rep.T[k - 1] + p) * q_inv * klr.E[b];
    }
    klr.sigma.push_back(std::move(s));
  }
}

KlrData build_klr(const HeckeRep& rep, const std::vector<ResidueSequence>& candidates) {
  if (rep.e == 2) throw E2Unsupported("the KLR presentation used here needs e >= 3");
  KlrData klr;
  klr.X = jm_matrices(rep);
  residue_idempotents(rep, candidates, klr);
  klr_generators(rep, klr);
  return klr;
}

int sigma_degree(const ResidueSequence& i, int k, int e) {
  const int diff = mod(i[k - 1] - i[k], e);
  if (diff == 0) return -2;
  if (diff == 1 || diff == e - 1) return 1;
  return 0;
}

bool KlrReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.ok; });
}

std::string KlrReport::failures() const {
  std::string out;
  for (const auto& c : checks)
    if (!c.ok) out += c.relation + (c.detail.empty() ? "" : " [" + c.detail + "]") + "\n";
  return out;
}

KlrReport check_klr_relations(const HeckeRep& rep, const KlrData& klr) {
  const int e = rep.e;
  const int n = rep.n;
  const std::size_t dim = rep.dim;
  if (e == 2) throw E2Unsupported("the KLR presentation used here needs e >= 3");
  const CycloMatrix one = CycloMatrix::identity(e, dim);
  const CycloMatrix zero(e, dim, dim);
  KlrReport report;
  auto record = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };
  auto block_sum = [&](auto pred) {
    CycloMatrix s = zero;
    for (std::size_t b = 0; b < klr.blocks.size(); ++b)
      if (pred(klr.blocks[b])) s += klr.E[b];
    return s;
  };
  auto diff = [&](const ResidueSequence& i, int k) { return mod(i[k - 1] - i[k], e); };

  {
    CycloMatrix total = zero;
    for (const auto& m : klr.E) total += m;
    record("sum of e(i) is 1", total == one);
    bool orth = true;
    std::string where;
    for (std::size_t a = 0; a < klr.E.size() && orth; ++a)
      for (std::size_t b = 0; b < klr.E.size() && orth; ++b) {
        const CycloMatrix p = klr.E[a] * klr.E[b];
        if (a == b ? p != klr.E[a] : !p.is_zero()) {
          orth = false;
          where = residue_label(klr.blocks[a]) + "," + residue_label(klr.blocks[b]);
        }
      }
    record("e(i)e(j) = delta e(i)", orth, where);
    bool first = true;
    for (const auto& i : klr.blocks) first = first && i[0] == 0;
    record("e(i) = 0 unless i_1 = 0", first);
    record("t_1 = 0", klr.t[0].is_zero());
  }

  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = a + 1; b < n; ++b) ok = ok && klr.t[a] * klr.t[b] == klr.t[b] * klr.t[a];
    record("t_" + std::to_string(a + 1) + " t_b = t_b t_" + std::to_string(a + 1), ok);
    bool central = true;
    for (const auto& m : klr.E) central = central && klr.t[a] * m == m * klr.t[a];
    record("t_" + std::to_string(a + 1) + " e(i) = e(i) t_" + std::to_string(a + 1), central);
  }

  for (int k = 1; k < n; ++k) {
    const std::string ks = std::to_string(k);
    const CycloMatrix& s = klr.sigma[k - 1];
    const CycloMatrix& tk = klr.t[k - 1];
    const CycloMatrix& tk1 = klr.t[k];

    bool swap_ok = true;
    std::string where;
    for (std::size_t b = 0; b < klr.blocks.size(); ++b) {
      ResidueSequence si = klr.blocks[b];
      std::swap(si[k - 1], si[k]);
      if (s * klr.E[b] != klr.idempotent(si, e, dim) * s) {
        swap_ok = false;
        where = residue_label(klr.blocks[b]);
      }
    }
    record("sigma_" + ks + " e(i) = e(s_" + ks + " i) sigma_" + ks, swap_ok, where);

    bool far = true;
    for (int a = 1; a <= n; ++a)
      if (a != k && a != k + 1) far = far && s * klr.t[a - 1] == klr.t[a - 1] * s;
    record("sigma_" + ks + " t_a = t_a sigma_" + ks + " (a != k, k+1)", far);

    const CycloMatrix same = block_sum([&](const ResidueSequence& i) { return diff(i, k) == 0; });
    record("sigma_" + ks + " t_" + std::to_string(k + 1) + " - t_" + ks + " sigma_" + ks + " = sum e(i), i_k = i_k+1",
           s * tk1 - tk * s == same);
    record("t_" + std::to_string(k + 1) + " sigma_" + ks + " - sigma_" + ks + " t_" + ks + " = sum e(i), i_k = i_k+1",
           tk1 * s - s * tk == same);

    for (int l = k + 2; l < n; ++l)
      record("sigma_" + ks + " sigma_" + std::to_string(l) + " = sigma_" + std::to_string(l) + " sigma_" + ks,
             s * klr.sigma[l - 1] == klr.sigma[l - 1] * s);

    CycloMatrix square = zero;
    for (std::size_t b = 0; b < klr.blocks.size(); ++b) {
      const int d = diff(klr.blocks[b], k);
      if (d == 0) continue;
      if (d == 1) square += (tk - tk1) * klr.E[b];
      else if (d == e - 1) square += (tk1 - tk) * klr.E[b];
      else square += klr.E[b];
    }
    record("sigma_" + ks + "^2", s * s == square);

    if (k + 1 < n) {
      const CycloMatrix& s1 = klr.sigma[k];
      CycloMatrix rhs = zero;
      for (std::size_t b = 0; b < klr.blocks.size(); ++b) {
        const ResidueSequence& i = klr.blocks[b];
        if (i[k + 1] != i[k - 1]) continue;
        if (diff(i, k) == e - 1) rhs += klr.E[b];
        else if (diff(i, k) == 1) rhs -= klr.E[b];
      }
      record("sigma_" + ks + " sigma_" + std::to_string(k + 1) + " sigma_" + ks + " braid deviation",
             s * s1 * s - s1 * s * s1 == rhs);
    }
  }
  return report;
}

}  // namespace gschur
