#pragma once

#include <vector>

namespace gschur {

/// Permutation of {1..n} in one-line notation.  Products compose left to
/// right: (u * w)(k) = w(u(k)), so s_{i_1} * ... * s_{i_r} is the element
/// whose Hecke basis vector is T_{i_1} ... T_{i_r}.
class Permutation {
 public:
  Permutation() = default;
  /// images[k-1] = w(k); throws PreconditionViolation if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple transposition s_k = (k, k+1).
  static Permutation simple(int n, int k);
  static Permutation from_word(int n, const std::vector<int>& word);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k - 1]; }
  const std::vector<int>& images() const { return img_; }

  friend Permutation operator*(const Permutation& u, const Permutation& w);
  Permutation inverse() const;
  int length() const;

  /// s_k * w: swaps the entries in positions k and k+1.
  Permutation left_simple(int k) const;
  /// w * s_k: swaps the values k and k+1.
  Permutation right_simple(int k) const;
  bool has_left_descent(int k) const { return img_[k - 1] > img_[k]; }
  bool has_right_descent(int k) const;

  /// Reduced word built by repeatedly extracting the smallest left descent.
  std::vector<int> reduced_word() const;
  /// Same, extracting the largest left descent.  Used to test independence
  /// of results from the choice of reduced expressions.
  std::vector<int> reduced_word_largest() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace gschur
