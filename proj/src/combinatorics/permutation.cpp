#include "gschur/combinatorics/permutation.hpp"

#include <algorithm>

#include "gschur/errors.hpp"

namespace gschur {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x]) throw PreconditionViolation("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  for (int k = 0; k < n; ++k) p.img_[k] = k + 1;
  return p;
}

Permutation Permutation::simple(int n, int k) { return identity(n).left_simple(k); }

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  for (int k : word) p = p.right_simple(k);
  return p;
}

Permutation operator*(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) throw SizeMismatch("permutation degrees differ");
  Permutation r;
  r.img_.resize(u.img_.size());
  for (size_t k = 0; k < u.img_.size(); ++k) r.img_[k] = w.img_[u.img_[k] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) r.img_[img_[k] - 1] = static_cast<int>(k) + 1;
  return r;
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

Permutation Permutation::left_simple(int k) const {
  Permutation r = *this;
  std::swap(r.img_[k - 1], r.img_[k]);
  return r;
}

Permutation Permutation::right_simple(int k) const {
  Permutation r = *this;
  for (int& x : r.img_) {
    if (x == k) x = k + 1;
    else if (x == k + 1) x = k;
  }
  return r;
}

bool Permutation::has_right_descent(int k) const {
  const auto a = std::find(img_.begin(), img_.end(), k);
  const auto b = std::find(img_.begin(), img_.end(), k + 1);
  return a > b;
}

namespace {

std::vector<int> extract_word(Permutation w, bool smallest) {
  std::vector<int> word;
  const int n = w.degree();
  while (true) {
    int pick = 0;
    for (int k = 1; k < n; ++k) {
      if (!w.has_left_descent(k)) continue;
      pick = k;
      if (smallest) break;
    }
    if (pick == 0) break;
    word.push_back(pick);
    w = w.left_simple(pick);
  }
  return word;
}

}  // namespace

std::vector<int> Permutation::reduced_word() const { return extract_word(*this, true); }
std::vector<int> Permutation::reduced_word_largest() const { return extract_word(*this, false); }

}  // namespace gschur
