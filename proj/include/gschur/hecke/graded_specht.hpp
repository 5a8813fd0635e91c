#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gschur/combinatorics/tableau.hpp"
#include "gschur/exactmath/laurent.hpp"
#include "gschur/fock/decomposition.hpp"
#include "gschur/hecke/klr.hpp"
#include "gschur/hecke/specht.hpp"

namespace gschur {

using GradedCharacter = std::map<ResidueSequence, LaurentPoly>;

enum class WordChoice { SmallestDescent, LargestDescent };

/// A Specht module with its KLR generators.  `hecke` and `klr` are written
/// in the basis x_lambda T_{d(t)}; once graded, `hecke_v` and `klr_v` hold
/// the same generators in the homogeneous basis v_t = z_lambda sigma_{d(t)}.
struct SpechtRep {
  Partition shape;
  int e = 0;
  std::vector<StandardTableau> tableaux;
  std::vector<ResidueSequence> residues;
  std::vector<int> degrees;
  HeckeRep hecke;
  KlrData klr;
  bool graded = false;
  CycloMatrix V;  // row t is v_t in the x_lambda T_{d(t)} basis
  HeckeRep hecke_v;
  KlrData klr_v;
};

/// T_k matrices only.
SpechtRep specht_matrices(const SpechtModel& model);
/// T_k, X_a, e(i), t_a and sigma_k (e >= 3).
SpechtRep specht_klr(const SpechtModel& model);

/// Builds v_t along the chosen reduced words, rewrites every generator in
/// that basis and checks homogeneity against tableau degrees.  Throws
/// BasisError or HomogeneityError.
void verify_grading(SpechtRep& rep, WordChoice words = WordChoice::SmallestDescent);

/// Sum over standard t of v^deg(t) at res(t), cross-checked against the
/// ranks of e(i) on each degree component.  Throws MismatchError.
GradedCharacter graded_character(const SpechtRep& rep);

struct GramAnalysis {
  CycloMatrix gram;
  /// Radical of the form, in the v_t basis.
  std::vector<CycloVector> radical;
  GradedCharacter radical_character;
  GradedCharacter simple_character;
};

/// Gram matrix of the cellular form, its radical split into homogeneous
/// pieces (GradednessError if impossible) and ch D = ch S - ch Rad.
GramAnalysis gram_form(const SpechtModel& model, const SpechtRep& rep);

/// Span of the products t^a e(i) sigma_w equals the span of the T_w (image algebra).
bool klr_spans_image(const SpechtRep& rep);

struct CharacterDecomposition {
  DecompositionMatrix matrix;        // d_{lambda mu}(v); non-restricted columns zero
  std::vector<bool> column_known;    // true for e-restricted mu
  std::map<Partition, GradedCharacter> specht_characters;
  std::map<Partition, GradedCharacter> simple_characters;
};

/// Solves ch S^lambda = sum_mu d_{lambda mu}(v^-1) ch D^mu over Z[v, v^-1].
CharacterDecomposition decomposition_from_characters(int n, int e, int bound = kDefaultHeckeBound);

LaurentPoly character_total(const GradedCharacter& ch);
std::string character_to_string(const GradedCharacter& ch);

}  // namespace gschur
