#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/combinatorics/tableau.hpp"
#include "gschur/exactmath/matrix.hpp"

namespace gschur {

/// A finite dimensional right H_n-module given by the matrices of T_1..T_{n-1}.
struct HeckeRep {
  int n = 0;
  int e = 0;
  std::size_t dim = 0;
  std::vector<CycloMatrix> T;
};

/// The regular representation on the basis T_w (w in lexicographic order).
HeckeRep regular_representation(int n, int e);

/// Brundan-Kleshchev generators of a HeckeRep.  Only residue sequences with
/// a nonzero idempotent are kept in `blocks`.
struct KlrData {
  std::vector<CycloMatrix> X;              // X_1..X_n
  std::vector<ResidueSequence> blocks;
  std::vector<CycloMatrix> E;              // e(i) for i in blocks
  std::vector<CycloMatrix> t;              // t_1..t_n
  std::vector<CycloMatrix> sigma;          // sigma_1..sigma_{n-1}

  /// e(i), or the zero matrix when i is not a block.
  CycloMatrix idempotent(const ResidueSequence& i, int e, std::size_t dim) const;
};

/// X_1 = 1, X_{k+1} = q^-1 T_k X_k T_k; asserts commutation and invertibility.
std::vector<CycloMatrix> jm_matrices(const HeckeRep& rep);

/// e(i) as products of generalised eigenprojections of the X_a, for each
/// candidate sequence; asserts orthogonality and that they sum to 1.
void residue_idempotents(const HeckeRep& rep, const std::vector<ResidueSequence>& candidates, KlrData& klr);

/// t_a and sigma_k from T, X and e(i).  Throws E2Unsupported for e = 2.
void klr_generators(const HeckeRep& rep, KlrData& klr);

/// All of the above.
KlrData build_klr(const HeckeRep& rep, const std::vector<ResidueSequence>& candidates);

/// Residue sequences of all standard tableaux of the given shapes, sorted, unique.
std::vector<ResidueSequence> residue_candidates(const std::vector<Partition>& shapes, int e);

/// Degree of sigma_k e(i): -2, 1 or 0.
int sigma_degree(const ResidueSequence& i, int k, int e);

struct RelationCheck {
  std::string relation;
  bool ok = true;
  std::string detail;
};

struct KlrReport {
  std::vector<RelationCheck> checks;
  bool ok() const;
  /// Failed relations, one per line; empty when everything holds.
  std::string failures() const;
};

/// Verifies every defining relation of the KLR presentation as matrix identities.
KlrReport check_klr_relations(const HeckeRep& rep, const KlrData& klr);

}  // namespace gschur
