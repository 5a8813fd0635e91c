#include <doctest.h>

#include <set>

#include "gschur/combinatorics/partition.hpp"
#include "gschur/combinatorics/permutation.hpp"
#include "gschur/combinatorics/tableau.hpp"
#include "gschur/combinatorics/transforms.hpp"
#include "gschur/errors.hpp"

using namespace gschur;

namespace {

// p(n) by the standard coin-change recurrence.
long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Hook length formula.
long hook_count(const Partition& l) {
  const Partition c = l.conjugate();
  long denom = 1;
  for (int i = 0; i < l.length(); ++i)
    for (int j = 0; j < l[i]; ++j) denom *= (l[i] - j - 1) + (c[j] - i - 1) + 1;
  return factorial(l.size()) / denom;
}

// Degree by scanning a boolean grid of the diagram filled up to k.
int grid_degree(const StandardTableau& t, int e) {
  const int n = t.size();
  const int R = n + 2, C = n + 2;
  std::vector<std::vector<int>> grid(R, std::vector<int>(C, 0));
  for (size_t i = 0; i < t.rows().size(); ++i)
    for (size_t j = 0; j < t.rows()[i].size(); ++j) grid[i][j] = t.rows()[i][j];
  auto in = [&](int r, int c, int k) { return r >= 0 && c >= 0 && grid[r][c] != 0 && grid[r][c] <= k; };
  auto res = [&](int r, int c) { return (((c - r) % e) + e) % e; };
  int deg = 0;
  for (int k = 1; k <= n; ++k) {
    int kr = -1, kc = -1;
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c)
        if (grid[r][c] == k) kr = r, kc = c;
    const int target = res(kr, kc);
    for (int r = kr + 1; r < R - 1; ++r)
      for (int c = 0; c < C - 1; ++c) {
        if (res(r, c) != target) continue;
        const bool here = in(r, c, k);
        const bool addable = !here && (r == 0 || in(r - 1, c, k)) && (c == 0 || in(r, c - 1, k));
        const bool removable = here && !in(r + 1, c, k) && !in(r, c + 1, k);
        deg += addable ? 1 : 0;
        deg -= removable ? 1 : 0;
      }
  }
  return deg;
}

StandardTableau find_tableau(const Partition& shape, const std::string& label) {
  for (const auto& t : standard_tableaux(shape))
    if (t.label() == label) return t;
  FAIL("no tableau " << label);
  return {};
}

std::vector<int> pv(const Partition& p) { return p.parts(); }

}  // namespace

TEST_CASE("partitions_of") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
  const auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].length() == 0);
  CHECK(partition_count(6) == 11);
  for (int n = 0; n <= 12; ++n) CHECK(long(partitions_of(n).size()) == partition_count(n));
  CHECK_THROWS_AS(partitions_of(13), BoundExceeded);
  CHECK(partitions_of(13, 13).size() == 101);
  // The order is a linear extension of dominance.
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) CHECK(dominance_leq(ps[i], ps[j]) != Dominance::Less);
  }
}

TEST_CASE("partition text") {
  CHECK(Partition::parse("3,1") == Partition{3, 1});
  CHECK(Partition::parse("2,1^2") == Partition{2, 1, 1});
  CHECK(Partition::parse("1^4") == Partition{1, 1, 1, 1});
  CHECK(Partition::parse("(2,2)") == Partition{2, 2});
  CHECK(Partition{2, 1, 1}.gap_label() == "2,1^2");
  CHECK(Partition{2, 2}.gap_label() == "2^2");
  CHECK(Partition{4}.gap_label() == "4");
  CHECK(Partition{3, 1}.to_string() == "3,1");
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), ParseError);
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(Partition::parse(p.gap_label()) == p);
      CHECK(Partition::parse(p.to_string()) == p);
    }
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition{4}, Partition{3, 1}) == Dominance::Greater);
  CHECK(dominance_leq(Partition{3, 1, 1}, Partition{2, 2, 1}) == Dominance::Greater);
  CHECK(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Dominance::Incomparable);
  CHECK(dominance_leq(Partition{2, 2}, Partition{2, 2}) == Dominance::Equal);
  CHECK(dominance_leq(Partition{1, 1}, Partition{2}) == Dominance::Less);
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{2, 1}), SizeMismatch);
  for (int n = 1; n <= 7; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(a.conjugate().conjugate() == a);
      CHECK(a.conjugate().size() == a.size());
      for (const auto& b : ps) CHECK(dominates(a, b) == dominates(b.conjugate(), a.conjugate()));
    }
  }
}

TEST_CASE("e-restricted") {
  CHECK_FALSE(is_e_restricted(Partition{4}, 4));
  CHECK(is_e_restricted(Partition{2, 1, 1}, 4));
  for (int n = 1; n <= 6; ++n)
    for (int e = 2; e <= 5; ++e) CHECK(is_e_restricted(Partition(std::vector<int>(n, 1)), e));
}

TEST_CASE("standard tableaux") {
  const auto t22 = standard_tableaux(Partition{2, 2});
  REQUIRE(t22.size() == 2);
  std::set<std::string> labels{t22[0].label(), t22[1].label()};
  CHECK(labels == std::set<std::string>{"1324", "1234"});
  CHECK(t22[0].label() == "1234");
  CHECK(standard_tableaux(Partition{5}).size() == 1);
  const auto t31 = standard_tableaux(Partition{3, 1});
  REQUIRE(t31.size() == 3);
  CHECK(t31[0].label() == "1234");
  CHECK(t31[1].label() == "1243");
  CHECK(t31[2].label() == "1342");
  for (int n = 1; n <= 6; ++n) {
    long total = 0;
    for (const auto& l : partitions_of(n)) {
      const auto ts = standard_tableaux(l);
      CHECK(long(ts.size()) == hook_count(l));
      CHECK(ts.front() == StandardTableau::initial(l));
      total += long(ts.size()) * long(ts.size());
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("residue sequences") {
  const int e = 4;
  CHECK(residue_sequence(StandardTableau::initial(Partition{1, 1, 1, 1}), e) == ResidueSequence{0, 3, 2, 1});
  CHECK(residue_sequence(StandardTableau::initial(Partition{4}), e) == ResidueSequence{0, 1, 2, 3});
  CHECK(residue_sequence(find_tableau(Partition{3, 1}, "1342"), e) == ResidueSequence{0, 3, 1, 2});
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& t : standard_tableaux(l)) CHECK(residue_sequence(t, 3)[0] == 0);
}

TEST_CASE("tableau degrees") {
  const int e = 4;
  CHECK(tableau_degree(StandardTableau::initial(Partition{4}), e) == 1);
  CHECK(tableau_degree(find_tableau(Partition{3, 1}, "1234"), e) == 0);
  CHECK(tableau_degree(find_tableau(Partition{3, 1}, "1243"), e) == 1);
  CHECK(tableau_degree(find_tableau(Partition{3, 1}, "1342"), e) == 1);
  CHECK(tableau_degree(find_tableau(Partition{2, 2}, "1324"), e) == 0);
  CHECK(tableau_degree(find_tableau(Partition{2, 2}, "1234"), e) == 0);
  CHECK(grid_degree(find_tableau(Partition{2, 2}, "1234"), e) == 0);
  for (int n = 1; n <= 6; ++n)
    for (int ee : {2, 3, 4, 5})
      for (const auto& l : partitions_of(n))
        for (const auto& t : standard_tableaux(l)) CHECK(tableau_degree(t, ee) == grid_degree(t, ee));
}

TEST_CASE("addable and removable nodes") {
  auto empty = addable_removable(Partition(), 0, 4);
  REQUIRE(empty.addable.size() == 1);
  CHECK(empty.addable[0] == Node{1, 1, 0});
  CHECK(empty.removable.empty());
  // (2,1): addable (1,3) res 2, (2,2) res 0, (3,1) res 2; removable (1,2) res 1, (2,1) res 3.
  auto r1 = addable_removable(Partition{2, 1}, 1, 4);
  CHECK(r1.addable.empty());
  REQUIRE(r1.removable.size() == 1);
  CHECK(r1.removable[0] == Node{1, 2, 1});
  auto r3 = addable_removable(Partition{2, 1}, 3, 4);
  CHECK(r3.addable.empty());
  REQUIRE(r3.removable.size() == 1);
  CHECK(r3.removable[0] == Node{2, 1, 3});
  auto r2 = addable_removable(Partition{2, 1}, 2, 4);
  REQUIRE(r2.addable.size() == 2);
  CHECK(r2.addable[0] == Node{1, 3, 2});
  CHECK(r2.addable[1] == Node{3, 1, 2});
}

TEST_CASE("e-decomposition") {
  auto d1 = e_decompose(Partition{4}, 4, 2);
  CHECK(d1.restricted_part.parts == std::vector<int>{0, 0});
  CHECK(d1.quotient == std::vector<int>{1, 0});
  auto d2 = e_decompose(Partition{2, 1, 1}, 4, 4);
  CHECK(d2.restricted_part.parts == std::vector<int>{2, 1, 1, 0});
  CHECK(d2.quotient == std::vector<int>{0, 0, 0, 0});
  auto d3 = e_decompose(Partition{5, 1}, 4, 2);
  CHECK(d3.restricted_part.parts == std::vector<int>{1, 1});
  CHECK(d3.quotient == std::vector<int>{1, 0});
  for (int n = 0; n <= 9; ++n)
    for (int e : {2, 3, 4})
      for (const auto& mu : partitions_of(n)) {
        const int d = std::max(mu.length(), 1) + 1;
        auto dec = e_decompose(mu, e, d);
        for (int i = 0; i < d; ++i) CHECK(dec.restricted_part.parts[i] + e * dec.quotient[i] == mu[i]);
        CHECK(is_e_restricted(Partition(dec.restricted_part.parts), e));
      }
}

TEST_CASE("hat and tilde") {
  auto ht = hat_tilde(Partition{4}, Partition{4}, 4, 2);
  CHECK(pv(ht.mu_hat) == std::vector<int>{10});
  CHECK(pv(ht.lambda_tilde) == std::vector<int>{7, 3});
  CHECK(ht.mu_hat.size() == 4 + 2 * 1 * 3);
  for (int e : {3, 4, 5})
    for (int d = 1; d <= 4; ++d) {
      Partition ones(std::vector<int>(d, 1));
      std::vector<int> expect(d);
      for (int i = 0; i < d; ++i) expect[i] = 2 * (e - 1) * (d - 1 - i) + 1;
      CHECK(pv(hat(ones, e, d)) == expect);
    }
  for (const auto& mu : partitions_of(4)) {
    auto h = hat_tilde(mu, mu, 4, 4);
    CHECK(is_e_restricted(h.mu_hat.conjugate(), 4));
    CHECK(h.mu_hat.size() == 4 + 4 * 3 * 3);
  }
  CHECK_THROWS_AS(hat_tilde(Partition{1, 1, 1}, Partition{3}, 4, 2), PreconditionViolation);
}

TEST_CASE("ladder monomials") {
  using M = std::vector<std::pair<int, int>>;
  CHECK(ladder_monomial(Partition{1, 1, 1, 1}, 4) == M{{0, 1}, {3, 1}, {2, 1}, {1, 1}});
  CHECK(ladder_monomial(Partition{3, 1}, 4) == M{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(ladder_monomial(Partition{2, 1, 1}, 4) == M{{0, 1}, {1, 1}, {3, 1}, {2, 1}});
  for (int e = 2; e <= 6; ++e) CHECK(ladder_monomial(Partition{1}, e) == M{{0, 1}});
  CHECK_THROWS_AS(ladder_monomial(Partition{4}, 4), NotRestricted);
  // Nodes on a ladder share a residue.
  for (int e = 2; e <= 5; ++e)
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) CHECK((ladder_of(a, b, e) - 1) % e == residue(a, b, e));
}

TEST_CASE("permutations") {
  const auto s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
  CHECK((s1 * s1) == Permutation::identity(3));
  // (u*w)(k) = w(u(k))
  const auto p = s1 * s2;
  for (int k = 1; k <= 3; ++k) CHECK(p(k) == s2(s1(k)));
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    do {
      Permutation w(img);
      const auto word = w.reduced_word();
      CHECK(int(word.size()) == w.length());
      CHECK(Permutation::from_word(n, word) == w);
      const auto alt = w.reduced_word_largest();
      CHECK(int(alt.size()) == w.length());
      CHECK(Permutation::from_word(n, alt) == w);
      CHECK((w * w.inverse()) == Permutation::identity(n));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("coset words") {
  const Partition shape{3, 1};
  auto c0 = coset_word(StandardTableau::initial(shape));
  CHECK(c0.perm == Permutation::identity(4));
  CHECK(c0.word.empty());
  CHECK(coset_word(find_tableau(shape, "1243")).word == std::vector<int>{3});
  CHECK(coset_word(find_tableau(shape, "1342")).word == std::vector<int>{3, 2});
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n)) {
      const auto init = StandardTableau::initial(l);
      for (const auto& t : standard_tableaux(l)) {
        auto cw = coset_word(t);
        for (int k = 1; k <= n; ++k) {
          auto [a, b] = init.position(k);
          CHECK(cw.perm(k) == t.rows()[a - 1][b - 1]);
        }
        CHECK(Permutation::from_word(n, cw.word) == cw.perm);
        CHECK(int(cw.word.size()) == cw.perm.length());
      }
    }
}
