#include <doctest.h>

#include <random>

#include "gschur/errors.hpp"
#include "gschur/exactmath/linalg.hpp"
#include "gschur/fock/decomposition.hpp"
#include "gschur/hecke/graded_specht.hpp"

using namespace gschur;

namespace {

std::size_t hook_count(const Partition& l) {
  const Partition c = l.conjugate();
  mpz_class num = 1, den = 1;
  for (int i = 1; i <= l.size(); ++i) num *= i;
  for (int r = 0; r < l.length(); ++r)
    for (int j = 0; j < l[r]; ++j) den *= (l[r] - j - 1) + (c[j] - r - 1) + 1;
  return mpz_class(num / den).get_ui();
}

CycloMatrix from_ints(int e, std::vector<std::vector<long>> rows) {
  CycloMatrix m(e, rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = CycloNum(e, rows[i][j]);
  return m;
}

bool satisfies_hecke_relations(const std::vector<CycloMatrix>& t, int e) {
  if (t.empty()) return true;
  const std::size_t d = t[0].rows();
  const CycloNum q = CycloNum::zeta_power(e, 1);
  const CycloMatrix one = CycloMatrix::identity(e, d);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!((t[k] - q * one) * (t[k] + one)).is_zero()) return false;
    if (k + 1 < t.size() && t[k] * t[k + 1] * t[k] != t[k + 1] * t[k] * t[k + 1]) return false;
    for (std::size_t l = k + 2; l < t.size(); ++l)
      if (t[k] * t[l] != t[l] * t[k]) return false;
  }
  return true;
}

HeckeElement random_element(const HeckeAlgebra& h, std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  HeckeElement x = h.zero();
  for (auto& c : x.coeffs) c = CycloNum(h.e(), coeff(rng)) + CycloNum(h.e(), coeff(rng)) * h.q();
  return x;
}

SpechtRep graded_rep(const Partition& l, int e) {
  SpechtRep rep = specht_klr(SpechtModel(l, e));
  verify_grading(rep);
  return rep;
}

}  // namespace

TEST_CASE("Hecke algebra products") {
  const HeckeAlgebra h2(2, 4);
  const CycloNum q = h2.q();
  const CycloNum one(4, 1);
  const HeckeElement t1 = h2.generator(1);
  CHECK(h2.t_mul(t1, t1) == h2.add(h2.scaled(q - one, t1), h2.scaled(q, h2.one())));
  const HeckeElement x2 = h2.x_mu({2});
  CHECK(h2.t_mul(x2, t1) == h2.scaled(q, x2));
  CHECK(x2 == h2.add(h2.one(), t1));

  const HeckeAlgebra h3(3, 5);
  const HeckeElement a = h3.generator(1), b = h3.generator(2);
  CHECK(h3.t_mul(h3.t_mul(a, b), a) == h3.t_mul(h3.t_mul(b, a), b));
  CHECK(h3.regular_matrices().size() == 2);
  CHECK(satisfies_hecke_relations(h3.regular_matrices(), 5));
  CHECK_THROWS_AS(HeckeAlgebra(7, 4), BoundExceeded);
}

TEST_CASE("Psi is an involutive algebra automorphism") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 4; ++n) {
    const HeckeAlgebra h(n, 4);
    for (int trial = 0; trial < 3; ++trial) {
      const HeckeElement a = random_element(h, rng), b = random_element(h, rng);
      CHECK(h.psi(h.psi(a)) == a);
      CHECK(h.psi(h.t_mul(a, b)) == h.t_mul(h.psi(a), h.psi(b)));
      CHECK(h.star(h.t_mul(a, b)) == h.t_mul(h.star(b), h.star(a)));
    }
  }
}

TEST_CASE("Murphy basis") {
  const HeckeAlgebra h2(2, 4);
  const StandardTableau t2 = StandardTableau::initial({2});
  CHECK(h2.murphy_m(t2, t2) == h2.add(h2.one(), h2.generator(1)));
  CHECK_THROWS_AS(h2.murphy_m(t2, StandardTableau::initial({1, 1})), ShapeMismatch);

  for (int n = 1; n <= 5; ++n) {
    const HeckeAlgebra h(n, 4);
    std::vector<CycloVector> rows;
    for (const Partition& l : partitions_of(n)) {
      CHECK(h.murphy_m(StandardTableau::initial(l), StandardTableau::initial(l)) == h.x_mu(l));
      const auto tabs = standard_tableaux(l);
      for (const auto& s : tabs)
        for (const auto& t : tabs) rows.push_back(h.murphy_m(s, t).coeffs);
    }
    CHECK(rows.size() == h.group().order());
    CHECK(span_dimension(rows, h.group().order()) == h.group().order());
  }
}

TEST_CASE("Specht modules") {
  for (int e : {3, 4, 5})
    for (int n = 1; n <= 5; ++n)
      for (const Partition& l : partitions_of(n)) {
        const SpechtModel model(l, e);
        CHECK(model.dim() == hook_count(l));
        CHECK(satisfies_hecke_relations(model.t_matrices(), e));
      }
  const CycloNum q = CycloNum::zeta_power(4, 1);
  const SpechtModel row({4}, 4), column({1, 1, 1, 1}, 4);
  for (const auto& m : row.t_matrices()) CHECK(m == CycloMatrix::scalar(q, 1));
  for (const auto& m : column.t_matrices()) CHECK(m == CycloMatrix::scalar(CycloNum(4, -1), 1));
  CHECK(SpechtModel({2, 2}, 4).dim() == 2);
}

TEST_CASE("Jucys-Murphy elements") {
  const SpechtRep r2 = specht_matrices(SpechtModel({2}, 4));
  const auto x2 = jm_matrices(r2.hecke);
  CHECK(x2[0] == CycloMatrix::identity(4, 1));
  CHECK(x2[1] == CycloMatrix::scalar(CycloNum::zeta_power(4, 1), 1));

  for (int e : {3, 4})
    for (const Partition& l : partitions_of(4)) {
      const SpechtRep rep = specht_matrices(SpechtModel(l, e));
      const auto x = jm_matrices(rep.hecke);
      CHECK(x[0] == CycloMatrix::identity(e, rep.hecke.dim));
      for (const auto& xa : x) {
        CycloMatrix p = CycloMatrix::identity(e, rep.hecke.dim);
        for (int j = 0; j < e; ++j) p = p * (xa - CycloMatrix::scalar(CycloNum::zeta_power(e, j), rep.hecke.dim));
        CHECK(is_nilpotent(p));
      }
    }
}

TEST_CASE("residue idempotents") {
  const SpechtRep rep = graded_rep({3, 1}, 4);
  CHECK(rep.klr.blocks == std::vector<ResidueSequence>{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 3, 1, 2}});
  CHECK(rep.klr_v.E[0] == from_ints(4, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(rep.klr_v.E[1] == from_ints(4, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  CHECK(rep.klr_v.E[2] == from_ints(4, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));

  for (int e : {3, 4, 5})
    for (const Partition& l : partitions_of(5)) {
      const SpechtRep r = specht_klr(SpechtModel(l, e));
      for (std::size_t b = 0; b < r.klr.blocks.size(); ++b) {
        CHECK(r.klr.blocks[b][0] == 0);
        CHECK(rank(r.klr.E[b]) == static_cast<std::size_t>(
                                      std::count(r.residues.begin(), r.residues.end(), r.klr.blocks[b])));
      }
    }
}

TEST_CASE("rank two example") {
  for (int e : {3, 4, 5}) {
    const HeckeRep reg = regular_representation(2, e);
    const KlrData klr = build_klr(reg, residue_candidates(partitions_of(2), e));
    CHECK(klr.blocks == std::vector<ResidueSequence>{{0, 1}, {0, e - 1}});
    CHECK(klr.t[0].is_zero());
    CHECK(klr.t[1].is_zero());
    CHECK(klr.sigma[0].is_zero());
    CHECK(check_klr_relations(reg, klr).ok());
  }
}

TEST_CASE("idempotents on M^(2) and M^(1,1) inside H_2") {
  for (int e : {3, 4, 5}) {
    const HeckeAlgebra h(2, e);
    const HeckeRep reg = regular_representation(2, e);
    const KlrData klr = build_klr(reg, residue_candidates(partitions_of(2), e));
    const CycloMatrix& e_plus = klr.E[0];
    const CycloMatrix& e_minus = klr.E[1];
    const CycloVector m2 = h.x_mu({2}).coeffs;
    const CycloVector m11 = h.x_mu({1, 1}).coeffs;
    const CycloNum inv = (h.q() + CycloNum(e, 1)).inverse();
    auto scale = [](const CycloNum& c, CycloVector v) {
      for (auto& x : v) x *= c;
      return v;
    };
    auto minus = [](CycloVector a, const CycloVector& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
      return a;
    };
    CHECK(m2 * e_plus == m2);
    CHECK(is_zero(m2 * e_minus));
    CHECK(m11 * e_plus == scale(inv, m2));
    CHECK(m11 * e_plus != scale(inv, m11));
    CHECK(m11 * e_minus == minus(m11, scale(inv, m2)));
  }
}

TEST_CASE("KLR generators on the worked example") {
  const SpechtRep a = graded_rep({3, 1}, 4);
  CHECK(a.klr_v.sigma[1] == from_ints(4, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  CHECK(a.klr_v.sigma[2] == from_ints(4, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  const SpechtRep b = graded_rep({2, 1, 1}, 4);
  CHECK(b.klr_v.sigma[1] == from_ints(4, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(b.klr_v.sigma[2] == from_ints(4, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(b.klr_v.E[0] == from_ints(4, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  for (const Partition& l : {Partition{4}, Partition{3, 1}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}}) {
    const SpechtRep r = graded_rep(l, 4);
    for (const auto& t : r.klr.t) CHECK(t.is_zero());
    CHECK(r.klr.sigma[0].is_zero());
  }
  const SpechtRep four = graded_rep({4}, 4);
  CHECK(four.klr.sigma[1].is_zero());
  CHECK(four.klr.sigma[2].is_zero());
}

TEST_CASE("KLR relations hold") {
  for (const Partition& l : partitions_of(4)) {
    const SpechtRep r = specht_klr(SpechtModel(l, 4));
    CHECK_MESSAGE(check_klr_relations(r.hecke, r.klr).ok(), l.to_string());
  }
  for (int e : {3, 4, 5})
    for (const Partition& l : partitions_of(5)) {
      const SpechtRep r = specht_klr(SpechtModel(l, e));
      const KlrReport report = check_klr_relations(r.hecke, r.klr);
      CHECK_MESSAGE(report.ok(), l.to_string() << " e=" << e << "\n" << report.failures());
      for (int a = 1; a <= std::min(e - 1, 5); ++a) CHECK(r.klr.t[a - 1].is_zero());
    }
  for (int n = 3; n <= 4; ++n) {
    const HeckeRep reg = regular_representation(n, 4);
    const KlrData klr = build_klr(reg, residue_candidates(partitions_of(n), 4));
    CHECK(check_klr_relations(reg, klr).ok());
  }
  const SpechtRep r2 = specht_matrices(SpechtModel({2, 1}, 2));
  CHECK_THROWS_AS(build_klr(r2.hecke, residue_candidates({Partition{2, 1}}, 2)), E2Unsupported);
}

TEST_CASE("grading") {
  CHECK(graded_rep({4}, 4).degrees == std::vector<int>{1});
  CHECK(graded_rep({3, 1}, 4).degrees == std::vector<int>{0, 1, 1});
  CHECK(graded_rep({2, 1, 1}, 4).degrees == std::vector<int>{0, 0, 1});
  CHECK(graded_rep({1, 1, 1, 1}, 4).degrees == std::vector<int>{0});
  CHECK(graded_rep({2, 2}, 4).degrees == std::vector<int>{0, 0});

  for (int e : {3, 4})
    for (int n = 3; n <= 5; ++n)
      for (const Partition& l : partitions_of(n)) {
        SpechtRep r = specht_klr(SpechtModel(l, e));
        CHECK_NOTHROW(verify_grading(r, WordChoice::LargestDescent));
        CHECK_NOTHROW(verify_grading(r, WordChoice::SmallestDescent));
      }
}

TEST_CASE("graded characters") {
  const GradedCharacter a = graded_character(graded_rep({3, 1}, 4));
  const LaurentPoly v = LaurentPoly::v();
  CHECK(a == GradedCharacter{{{0, 1, 2, 3}, 1}, {{0, 1, 3, 2}, v}, {{0, 3, 1, 2}, v}});
  CHECK(graded_character(graded_rep({1, 1, 1, 1}, 4)) == GradedCharacter{{{0, 3, 2, 1}, 1}});
  for (const Partition& l : partitions_of(5))
    CHECK(character_total(graded_character(graded_rep(l, 4))).at_one() == hook_count(l));
  CHECK_THROWS_AS(graded_character(specht_klr(SpechtModel({2, 1}, 4))), PreconditionViolation);
}

TEST_CASE("Gram form and radicals") {
  const LaurentPoly v = LaurentPoly::v();
  {
    const SpechtModel m({2, 2}, 4);
    const GramAnalysis g = gram_form(m, graded_rep({2, 2}, 4));
    CHECK(g.radical.empty());
    CHECK(g.simple_character == graded_character(graded_rep({2, 2}, 4)));
  }
  {
    const SpechtModel m({2, 1, 1}, 4);
    const GramAnalysis g = gram_form(m, graded_rep({2, 1, 1}, 4));
    CHECK(g.radical.size() == 1);
    CHECK(g.radical_character == GradedCharacter{{{0, 3, 2, 1}, v}});
    CHECK(g.simple_character == GradedCharacter{{{0, 1, 3, 2}, 1}, {{0, 3, 1, 2}, 1}});
  }
  for (int n = 1; n <= 5; ++n) {
    const Partition col(std::vector<int>(n, 1));
    CHECK(gram_form(SpechtModel(col, 4), graded_rep(col, 4)).radical.empty());
  }
  for (int e : {3, 4})
    for (const Partition& l : partitions_of(5)) {
      if (!is_e_restricted(l, e)) continue;
      const GramAnalysis g = gram_form(SpechtModel(l, e), graded_rep(l, e));
      for (const auto& [i, p] : g.simple_character) CHECK(p.is_bar_symmetric());
    }
}

TEST_CASE("KLR products span the image") {
  for (int n = 2; n <= 4; ++n)
    for (const Partition& l : partitions_of(n)) CHECK(klr_spans_image(graded_rep(l, 4)));
}

TEST_CASE("decomposition from characters") {
  const CharacterDecomposition cd = decomposition_from_characters(4, 4);
  const DecompositionMatrix fock = graded_decomposition_matrix(4, 4);
  for (std::size_t j = 0; j < cd.matrix.labels.size(); ++j) {
    if (!cd.column_known[j]) {
      CHECK_FALSE(is_e_restricted(cd.matrix.labels[j], 4));
      continue;
    }
    CHECK(cd.matrix.entries[j][j].is_one());
    for (std::size_t i = 0; i < cd.matrix.labels.size(); ++i) CHECK(cd.matrix.entries[i][j] == fock.entries[i][j]);
  }
  CHECK(cd.matrix.at({2, 1, 1}, {1, 1, 1, 1}) == LaurentPoly::monomial(-1));

  for (int e : {3, 4, 5}) {
    const CharacterDecomposition c5 = decomposition_from_characters(5, e);
    const DecompositionMatrix f5 = graded_decomposition_matrix(5, e, true);
    for (std::size_t j = 0; j < c5.matrix.labels.size(); ++j) {
      if (!c5.column_known[j]) continue;
      for (std::size_t i = 0; i < c5.matrix.labels.size(); ++i)
        CHECK_MESSAGE(c5.matrix.entries[i][j] == f5.entries[i][j],
                      "e=" << e << " (" << c5.matrix.labels[i].to_string() << "; " << c5.matrix.labels[j].to_string()
                           << ")");
    }
  }
  CHECK_THROWS_AS(decomposition_from_characters(3, 2), E2Unsupported);
}
