#include "gschur/combinatorics/tableau.hpp"

#include <algorithm>

#include "gschur/errors.hpp"

namespace gschur {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Partition(parts);
  const int n = shape_.size();
  std::vector<bool> seen(n + 1, false);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      const int x = rows_[i][j];
      if (x < 1 || x > n || seen[x]) throw PreconditionViolation("tableau entries must be 1..n once each");
      seen[x] = true;
      if (j > 0 && rows_[i][j - 1] >= x) throw PreconditionViolation("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= x) throw PreconditionViolation("tableau columns must increase");
    }
}

StandardTableau StandardTableau::initial(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (int p : shape.parts()) {
    std::vector<int> r;
    for (int j = 0; j < p; ++j) r.push_back(++k);
    rows.push_back(r);
  }
  return StandardTableau(rows);
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string StandardTableau::label() const {
  std::string s;
  const bool dotted = size() > 9;
  for (int x : reading_word()) {
    if (dotted && !s.empty()) s += ".";
    s += std::to_string(x);
  }
  return s;
}

std::pair<int, int> StandardTableau::position(int k) const {
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == k) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw PreconditionViolation("entry not in tableau");
}

namespace {

void fill(const Partition& target, std::vector<std::vector<int>>& rows, int next, int n,
          std::vector<StandardTableau>& out) {
  if (next > n) {
    out.emplace_back(rows);
    return;
  }
  for (int r = 0; r < target.length(); ++r) {
    const int len = static_cast<int>(rows[r].size());
    if (len >= target[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(next);
    fill(target, rows, next + 1, n, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda, int bound) {
  const int n = lambda.size();
  if (n > bound) throw BoundExceeded("tableau size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(lambda.length());
  fill(lambda, rows, 1, n, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

ResidueSequence residue_sequence(const StandardTableau& t, int e) {
  ResidueSequence r(t.size());
  for (int k = 1; k <= t.size(); ++k) {
    auto [a, b] = t.position(k);
    r[k - 1] = residue(a, b, e);
  }
  return r;
}

std::string residue_label(const ResidueSequence& r) {
  std::string s;
  bool wide = false;
  for (int x : r) wide = wide || x > 9;
  for (int x : r) {
    if (wide && !s.empty()) s += ".";
    s += std::to_string(x);
  }
  return s;
}

int tableau_degree(const StandardTableau& t, int e) {
  const int n = t.size();
  std::vector<int> shape(t.shape().length(), 0);
  int degree = 0;
  for (int k = 1; k <= n; ++k) {
    auto [a, b] = t.position(k);
    ++shape[a - 1];
    const Partition sub(shape);
    const int res = residue(a, b, e);
    const AddableRemovable ar = addable_removable(sub, res, e);
    for (const Node& x : ar.addable)
      if (x.row > a) ++degree;
    for (const Node& x : ar.removable)
      if (x.row > a) --degree;
  }
  return degree;
}

CosetWord coset_word(const StandardTableau& t) {
  Permutation d(t.reading_word());
  std::vector<int> w = d.reduced_word();
  return {d, w};
}

}  // namespace gschur
