#include "gschur/hecke/graded_specht.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "gschur/errors.hpp"
#include "gschur/exactmath/linalg.hpp"

namespace gschur {

namespace {

CycloMatrix conjugate(const CycloMatrix& g, const CycloMatrix& v, const CycloMatrix& v_inv) { return v * g * v_inv; }

void check_homogeneous(const CycloMatrix& g, const std::vector<int>& degrees, const std::vector<StandardTableau>& tabs,
                       const std::string& name, auto shift_for_row) {
  for (std::size_t s = 0; s < g.rows(); ++s)
    for (std::size_t t = 0; t < g.cols(); ++t) {
      if (g(s, t).is_zero()) continue;
      const int expected = degrees[s] + shift_for_row(s);
      if (degrees[t] != expected)
        throw HomogeneityError(name + " sends v_" + tabs[s].label() + " (degree " + std::to_string(degrees[s]) +
                               ") to v_" + tabs[t].label() + " (degree " + std::to_string(degrees[t]) +
                               "), expected degree " + std::to_string(expected));
    }
}

// Reduced row echelon solve over Q; returns nullopt unless the solution is unique.
std::optional<std::vector<mpq_class>> solve_unique(std::vector<std::vector<mpq_class>> a, std::size_t vars) {
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < vars && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const mpq_class inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = col; c <= vars; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (a[r][vars] != 0) return std::nullopt;
  if (pivots.size() != vars) return std::nullopt;
  std::vector<mpq_class> x(vars);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][vars];
  return x;
}

std::pair<int, int> degree_range(const GradedCharacter& ch) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [i, p] : ch) {
    if (p.is_zero()) continue;
    if (first || p.min_exponent() < lo) lo = p.min_exponent();
    if (first || p.max_exponent() > hi) hi = p.max_exponent();
    first = false;
  }
  return {lo, hi};
}

}  // namespace

SpechtRep specht_matrices(const SpechtModel& model) {
  SpechtRep rep;
  rep.shape = model.shape();
  rep.e = model.e();
  rep.tableaux = model.tableaux();
  for (const auto& t : rep.tableaux) {
    rep.residues.push_back(residue_sequence(t, rep.e));
    rep.degrees.push_back(tableau_degree(t, rep.e));
  }
  rep.hecke = HeckeRep{model.shape().size(), model.e(), model.dim(), model.t_matrices()};
  return rep;
}

SpechtRep specht_klr(const SpechtModel& model) {
  SpechtRep rep = specht_matrices(model);
  std::vector<ResidueSequence> candidates = rep.residues;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  rep.klr = build_klr(rep.hecke, candidates);
  for (std::size_t b = 0; b < rep.klr.blocks.size(); ++b) {
    const auto count = std::count(rep.residues.begin(), rep.residues.end(), rep.klr.blocks[b]);
    if (rank(rep.klr.E[b]) != static_cast<std::size_t>(count))
      throw SpectrumError("rank of e(" + residue_label(rep.klr.blocks[b]) + ") differs from the tableau count");
  }
  return rep;
}

void verify_grading(SpechtRep& rep, WordChoice words) {
  if (rep.klr.sigma.size() + 1 != static_cast<std::size_t>(std::max(rep.hecke.n, 1)))
    throw PreconditionViolation("KLR generators are missing");
  const int e = rep.e;
  const std::size_t dim = rep.hecke.dim;

  CycloMatrix v(e, dim, dim);
  for (std::size_t t = 0; t < dim; ++t) {
    const CosetWord cw = coset_word(rep.tableaux[t]);
    const std::vector<int> word =
        words == WordChoice::SmallestDescent ? cw.word : cw.perm.reduced_word_largest();
    CycloVector row = unit_vector(e, dim, 0);
    for (int k : word) row = row * rep.klr.sigma[k - 1];
    v.set_row(t, row);
  }
  CycloMatrix v_inv;
  try {
    v_inv = inverse(v);
  } catch (const SingularError&) {
    throw BasisError("the vectors v_t of S^(" + rep.shape.to_string() + ") are linearly dependent");
  }

  HeckeRep hv = rep.hecke;
  for (auto& m : hv.T) m = conjugate(m, v, v_inv);
  KlrData kv = rep.klr;
  for (auto& m : kv.X) m = conjugate(m, v, v_inv);
  for (auto& m : kv.E) m = conjugate(m, v, v_inv);
  for (auto& m : kv.t) m = conjugate(m, v, v_inv);
  for (auto& m : kv.sigma) m = conjugate(m, v, v_inv);

  for (std::size_t b = 0; b < kv.blocks.size(); ++b) {
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t t = 0; t < dim; ++t) {
        const bool expect_one = s == t && rep.residues[s] == kv.blocks[b];
        if (kv.E[b](s, t) != CycloNum(e, expect_one ? 1 : 0))
          throw HomogeneityError("v_" + rep.tableaux[s].label() + " e(" + residue_label(kv.blocks[b]) +
                                 ") is not as its residue sequence predicts");
      }
  }
  for (std::size_t a = 0; a < kv.t.size(); ++a)
    check_homogeneous(kv.t[a], rep.degrees, rep.tableaux, "t_" + std::to_string(a + 1),
                      [](std::size_t) { return 2; });
  for (std::size_t k = 1; k <= kv.sigma.size(); ++k)
    check_homogeneous(kv.sigma[k - 1], rep.degrees, rep.tableaux, "sigma_" + std::to_string(k),
                      [&](std::size_t s) { return sigma_degree(rep.residues[s], static_cast<int>(k), e); });

  rep.V = std::move(v);
  rep.hecke_v = std::move(hv);
  rep.klr_v = std::move(kv);
  rep.graded = true;
}

GradedCharacter graded_character(const SpechtRep& rep) {
  if (!rep.graded) throw PreconditionViolation("grading has not been verified");
  GradedCharacter ch;
  for (std::size_t t = 0; t < rep.tableaux.size(); ++t)
    ch[rep.residues[t]] += LaurentPoly::monomial(rep.degrees[t]);

  std::set<int> degrees(rep.degrees.begin(), rep.degrees.end());
  for (std::size_t b = 0; b < rep.klr_v.blocks.size(); ++b) {
    const ResidueSequence& i = rep.klr_v.blocks[b];
    for (int k : degrees) {
      std::vector<CycloVector> rows;
      for (std::size_t t = 0; t < rep.tableaux.size(); ++t)
        if (rep.degrees[t] == k) rows.push_back(rep.klr_v.E[b].row(t));
      const std::size_t r = span_dimension(rows, rep.tableaux.size());
      const mpz_class expected = ch.count(i) ? ch.at(i).coeff(k) : mpz_class(0);
      if (mpz_class(static_cast<unsigned long>(r)) != expected)
        throw MismatchError("graded dimension of S^(" + rep.shape.to_string() + ") e(" + residue_label(i) +
                            ") in degree " + std::to_string(k) + " disagrees with the tableau count");
    }
  }
  for (const auto& [i, p] : ch)
    if (std::find(rep.klr_v.blocks.begin(), rep.klr_v.blocks.end(), i) == rep.klr_v.blocks.end())
      throw MismatchError("residue sequence " + residue_label(i) + " has tableaux but no idempotent");
  return ch;
}

GramAnalysis gram_form(const SpechtModel& model, const SpechtRep& rep) {
  if (!rep.graded) throw PreconditionViolation("grading has not been verified");
  const int e = rep.e;
  const std::size_t dim = rep.tableaux.size();
  GramAnalysis out;
  out.gram = model.gram();
  if (out.gram != out.gram.transpose()) throw AlgorithmInvariantError("Gram matrix is not symmetric");

  const CycloMatrix v_inv = inverse(rep.V);
  for (const CycloVector& r : left_nullspace(out.gram)) out.radical.push_back(r * v_inv);
  const std::size_t rad_dim = out.radical.size();

  for (const CycloMatrix& t : rep.hecke_v.T) {
    std::vector<CycloVector> rows = out.radical;
    for (const CycloVector& r : out.radical) rows.push_back(r * t);
    if (span_dimension(rows, dim) != rad_dim) throw AlgorithmInvariantError("radical is not a submodule");
  }

  std::map<std::pair<ResidueSequence, int>, std::vector<std::size_t>> pieces;
  for (std::size_t t = 0; t < dim; ++t) pieces[{rep.residues[t], rep.degrees[t]}].push_back(t);
  std::size_t total = 0;
  for (const auto& [key, idx] : pieces) {
    std::vector<CycloVector> rows = out.radical;
    for (std::size_t t : idx) rows.push_back(unit_vector(e, dim, t));
    const std::size_t meet = rad_dim + idx.size() - span_dimension(rows, dim);
    total += meet;
    if (meet > 0) out.radical_character[key.first] += LaurentPoly::monomial(key.second, meet);
  }
  if (total != rad_dim)
    throw GradednessError("radical of S^(" + rep.shape.to_string() + ") is not a graded subspace");

  out.simple_character = graded_character(rep);
  for (const auto& [i, p] : out.radical_character) {
    out.simple_character[i] -= p;
    if (out.simple_character[i].is_zero()) out.simple_character.erase(i);
  }
  return out;
}

bool klr_spans_image(const SpechtRep& rep) {
  if (!rep.graded) throw PreconditionViolation("grading has not been verified");
  const int e = rep.e;
  const int n = rep.hecke.n;
  const std::size_t dim = rep.hecke.dim;
  auto flatten = [&](const CycloMatrix& m) {
    CycloVector out;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out.push_back(m(i, j));
    return out;
  };
  const SymmetricGroup group(n);
  std::vector<CycloVector> image, klr;
  for (std::size_t w = 0; w < group.order(); ++w) {
    CycloMatrix tw = CycloMatrix::identity(e, dim);
    CycloMatrix sw = CycloMatrix::identity(e, dim);
    for (int k : group.word(w)) {
      tw = tw * rep.hecke_v.T[k - 1];
      sw = sw * rep.klr_v.sigma[k - 1];
    }
    image.push_back(flatten(tw));
    for (const CycloMatrix& eb : rep.klr_v.E) {
      std::vector<CycloMatrix> monomials{eb};
      for (int a = 0; a < n; ++a) {
        std::vector<CycloMatrix> grown;
        for (const CycloMatrix& m : monomials) {
          CycloMatrix p = m;
          while (!p.is_zero()) {
            grown.push_back(p);
            p = rep.klr_v.t[a] * p;
          }
        }
        monomials = std::move(grown);
      }
      for (const CycloMatrix& m : monomials) klr.push_back(flatten(m * sw));
    }
  }
  const std::size_t d_image = span_dimension(image, dim * dim);
  const std::size_t d_klr = span_dimension(klr, dim * dim);
  std::vector<CycloVector> both = image;
  both.insert(both.end(), klr.begin(), klr.end());
  return d_image == d_klr && span_dimension(both, dim * dim) == d_image;
}

LaurentPoly character_total(const GradedCharacter& ch) {
  LaurentPoly s;
  for (const auto& [i, p] : ch) s += p;
  return s;
}

std::string character_to_string(const GradedCharacter& ch) {
  std::string out;
  for (const auto& [i, p] : ch) {
    if (!out.empty()) out += ", ";
    out += residue_label(i) + ": " + p.to_string();
  }
  return out.empty() ? "0" : out;
}

CharacterDecomposition decomposition_from_characters(int n, int e, int bound) {
  if (e < 3) throw E2Unsupported("the Hecke route needs e >= 3");
  CharacterDecomposition out;
  const std::vector<Partition> shapes = partitions_of(n, bound);
  std::vector<Partition> restricted;
  for (const Partition& lambda : shapes) {
    SpechtModel model(lambda, e, bound);
    SpechtRep rep = specht_klr(model);
    verify_grading(rep);
    out.specht_characters[lambda] = graded_character(rep);
    if (is_e_restricted(lambda, e)) {
      restricted.push_back(lambda);
      out.simple_characters[lambda] = gram_form(model, rep).simple_character;
    }
  }

  DecompositionMatrix& m = out.matrix;
  m.n = n;
  m.e = e;
  m.labels = shapes;
  m.entries.assign(shapes.size(), std::vector<LaurentPoly>(shapes.size()));
  for (const Partition& mu : shapes) out.column_known.push_back(is_e_restricted(mu, e));

  for (std::size_t row = 0; row < shapes.size(); ++row) {
    const GradedCharacter& chs = out.specht_characters.at(shapes[row]);
    const auto [s_lo, s_hi] = degree_range(chs);
    struct Var {
      std::size_t mu;
      int k;
    };
    std::vector<Var> vars;
    for (std::size_t j = 0; j < restricted.size(); ++j) {
      const auto [d_lo, d_hi] = degree_range(out.simple_characters.at(restricted[j]));
      for (int k = s_lo - d_hi; k <= s_hi - d_lo; ++k) vars.push_back({j, k});
    }
    std::set<ResidueSequence> seqs;
    for (const auto& [i, p] : chs) seqs.insert(i);
    for (const auto& [mu, ch] : out.simple_characters)
      for (const auto& [i, p] : ch) seqs.insert(i);
    int lo = s_lo, hi = s_hi;
    for (const Var& var : vars) {
      const auto [d_lo, d_hi] = degree_range(out.simple_characters.at(restricted[var.mu]));
      lo = std::min(lo, var.k + d_lo);
      hi = std::max(hi, var.k + d_hi);
    }
    std::vector<std::vector<mpq_class>> a;
    for (const ResidueSequence& i : seqs)
      for (int deg = lo; deg <= hi; ++deg) {
        std::vector<mpq_class> eq(vars.size() + 1);
        for (std::size_t x = 0; x < vars.size(); ++x) {
          const GradedCharacter& chd = out.simple_characters.at(restricted[vars[x].mu]);
          auto it = chd.find(i);
          if (it != chd.end()) eq[x] = it->second.coeff(deg - vars[x].k);
        }
        auto it = chs.find(i);
        if (it != chs.end()) eq[vars.size()] = it->second.coeff(deg);
        a.push_back(std::move(eq));
      }
    const auto sol = solve_unique(std::move(a), vars.size());
    if (!sol) throw SolveError("characters of S^(" + shapes[row].to_string() + ") do not decompose uniquely");
    for (std::size_t x = 0; x < vars.size(); ++x) {
      const mpq_class& c = (*sol)[x];
      if (c == 0) continue;
      if (c.get_den() != 1 || c < 0)
        throw SolveError("non-integral or negative multiplicity in S^(" + shapes[row].to_string() + ")");
      const std::size_t col =
          static_cast<std::size_t>(std::find(shapes.begin(), shapes.end(), restricted[vars[x].mu]) - shapes.begin());
      // ch S = sum_mu d(v^-1) ch D, and D[k] contributes v^-k.
      m.entries[row][col].add_term(-vars[x].k, c.get_num());
    }
  }
  for (const Partition& mu : restricted) {
    const int j = m.index_of(mu);
    if (!m.entries[j][j].is_one()) throw SolveError("diagonal entry at (" + mu.to_string() + ") is not 1");
  }
  return out;
}

}  // namespace gschur
