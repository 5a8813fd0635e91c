#include "gschur/combinatorics/partition.hpp"

#include <cctype>
#include <numeric>

#include "gschur/errors.hpp"

namespace gschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionViolation("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionViolation("partition parts must weakly decrease");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') s.push_back(ch);
  if (s.empty() || s == "0") return Partition();
  std::vector<int> parts;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const std::string tok = s.substr(start, comma - start);
    const size_t caret = tok.find('^');
    try {
      size_t used = 0;
      const int part = std::stoi(tok.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? tok.size() : caret)) throw ParseError("");
      int mult = 1;
      if (caret != std::string::npos) {
        const std::string ms = tok.substr(caret + 1);
        mult = std::stoi(ms, &used);
        if (used != ms.size() || mult < 0) throw ParseError("");
      }
      parts.insert(parts.end(), mult, part);
    } catch (const std::exception&) {
      throw ParseError("malformed partition: " + std::string(text));
    }
    start = comma + 1;
  }
  try {
    return Partition(parts);
  } catch (const PreconditionViolation&) {
    throw ParseError("not a partition: " + std::string(text));
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(c);
}

std::vector<int> Partition::padded(int len) const {
  std::vector<int> v = parts_;
  if (static_cast<int>(v.size()) > len) throw PreconditionViolation("partition longer than padding length");
  v.resize(len, 0);
  return v;
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::gap_label() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts_.size();) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!s.empty()) s += ",";
    s += std::to_string(parts_[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

int residue(int row, int col, int e) { return (((col - row) % e) + e) % e; }

Dominance dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch("dominance needs partitions of equal size");
  bool a_above = false, b_above = false;
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) a_above = true;
    if (sb > sa) b_above = true;
  }
  if (a_above && b_above) return Dominance::Incomparable;
  if (a_above) return Dominance::Greater;
  if (b_above) return Dominance::Less;
  return Dominance::Equal;
}

bool dominates(const Partition& a, const Partition& b) {
  const Dominance d = dominance_leq(a, b);
  return d == Dominance::Greater || d == Dominance::Equal;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) throw PreconditionViolation("negative partition size");
  if (n > bound) throw BoundExceeded("partition size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

bool is_e_restricted(const Partition& lambda, int e) {
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] - lambda[i + 1] > e - 1) return false;
  return true;
}

std::vector<Node> addable_nodes(const Partition& lambda, int e) {
  std::vector<Node> out;
  for (int r = 0; r <= lambda.length(); ++r)
    if (r == 0 || lambda[r - 1] > lambda[r]) out.push_back({r + 1, lambda[r] + 1, residue(r + 1, lambda[r] + 1, e)});
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda, int e) {
  std::vector<Node> out;
  for (int r = 0; r < lambda.length(); ++r)
    if (lambda[r] > lambda[r + 1]) out.push_back({r + 1, lambda[r], residue(r + 1, lambda[r], e)});
  return out;
}

AddableRemovable addable_removable(const Partition& lambda, int i, int e) {
  AddableRemovable ar;
  const int res = ((i % e) + e) % e;
  for (const Node& x : addable_nodes(lambda, e))
    if (x.residue == res) ar.addable.push_back(x);
  for (const Node& x : removable_nodes(lambda, e))
    if (x.residue == res) ar.removable.push_back(x);
  return ar;
}

Partition add_node(const Partition& lambda, int row) {
  std::vector<int> p = lambda.parts();
  if (row > static_cast<int>(p.size())) p.resize(row, 0);
  ++p[row - 1];
  return Partition(p);
}

Partition remove_node(const Partition& lambda, int row) {
  std::vector<int> p = lambda.parts();
  --p[row - 1];
  return Partition(p);
}

}  // namespace gschur
