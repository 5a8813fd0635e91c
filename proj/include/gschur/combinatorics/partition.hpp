#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gschur {

inline constexpr int kDefaultPartitionBound = 12;

/// A partition: weakly decreasing positive parts, implicit trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws PreconditionViolation on anything
  /// that is not weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Accepts "3,1", "2,1^2", "1^4", "" or "0" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// 0-based row access; rows past the length read as 0.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// Parts padded with zeros to the given length.
  std::vector<int> padded(int len) const;

  std::string to_string() const;  // "3,1"
  std::string gap_label() const;  // "2,1^2"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// An ordered list of nonnegative integers, not sorted.
struct Composition {
  std::vector<int> parts;
  int length() const { return static_cast<int>(parts.size()); }
  bool operator==(const Composition&) const = default;
};

/// A box of a Young diagram, 1-based, with its residue col - row mod e.
struct Node {
  int row = 0;
  int col = 0;
  int residue = 0;
  bool operator==(const Node&) const = default;
};

int residue(int row, int col, int e);

enum class Dominance { Less, Greater, Equal, Incomparable };

/// Dominance relation of a against b; throws SizeMismatch on |a| != |b|.
Dominance dominance_leq(const Partition& a, const Partition& b);
/// a dominates or equals b.
bool dominates(const Partition& a, const Partition& b);

/// All partitions of n, most dominant first (reverse lexicographic order).
std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound);

bool is_e_restricted(const Partition& lambda, int e);

struct AddableRemovable {
  std::vector<Node> addable;
  std::vector<Node> removable;
};

/// Addable and removable nodes of residue i, top to bottom.
AddableRemovable addable_removable(const Partition& lambda, int i, int e);
/// All addable / removable nodes regardless of residue, top to bottom.
std::vector<Node> addable_nodes(const Partition& lambda, int e);
std::vector<Node> removable_nodes(const Partition& lambda, int e);

Partition add_node(const Partition& lambda, int row);
Partition remove_node(const Partition& lambda, int row);

}  // namespace gschur
