#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/combinatorics/permutation.hpp"

namespace gschur {

using ResidueSequence = std::vector<int>;

class StandardTableau {
 public:
  StandardTableau() = default;
  /// Rows of entries; throws PreconditionViolation unless standard.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  /// The tableau with 1..n entered along successive rows.
  static StandardTableau initial(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  /// Entries read along the rows from top to bottom.
  std::vector<int> reading_word() const;
  /// "1342"; entries are separated by '.' once n exceeds 9.
  std::string label() const;
  /// 1-based (row, col) of entry k.
  std::pair<int, int> position(int k) const;

  bool operator==(const StandardTableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the shape, ordered by reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda, int bound = kDefaultPartitionBound);

ResidueSequence residue_sequence(const StandardTableau& t, int e);
std::string residue_label(const ResidueSequence& r);

/// Sum over k of N^b_t(k).
int tableau_degree(const StandardTableau& t, int e);

struct CosetWord {
  Permutation perm;
  std::vector<int> word;
};

/// d(t) maps each entry of the initial tableau to the entry of t in the same
/// box; returned with its smallest-descent reduced word.
CosetWord coset_word(const StandardTableau& t);

}  // namespace gschur
