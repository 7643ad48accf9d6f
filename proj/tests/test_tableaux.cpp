#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "rsklip/errors.hpp"
#include "rsklip/tableaux.hpp"

using namespace rsklip;

namespace {

// Independent longest-increasing-subsequence oracle (patience sorting piles).
int lis_length(const std::vector<int>& word) {
  std::vector<int> tails;
  for (int x : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return static_cast<int>(tails.size());
}

std::vector<int> random_word(int n, std::mt19937& gen) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), gen);
  return v;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do fn(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("partition validation and accessors") {
  Partition p({5, 5, 3, 2});
  CHECK(p.weight() == 15);
  CHECK(p.num_parts() == 4);
  CHECK(p.part(1) == 5);
  CHECK(p.part(4) == 2);
  CHECK(p.part(5) == 0);
  CHECK(Partition().weight() == 0);
  CHECK_THROWS_AS(Partition({3, 4}), ValidationError);
  CHECK_THROWS_AS(Partition({3, 0}), ValidationError);
  CHECK_THROWS_AS(Partition({-1}), ValidationError);
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition({5, 5, 3, 2}).conjugate() == Partition({4, 4, 3, 2, 2}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition().conjugate() == Partition());

  // involution on assorted shapes
  std::mt19937 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    Partition shape = shape_of(Permutation(random_word(20, gen)));
    CHECK(shape.conjugate().conjugate() == shape);
    CHECK(shape.conjugate().weight() == shape.weight());
  }
}

TEST_CASE("permutation validation, inverse, compose") {
  CHECK_THROWS_AS(Permutation({1, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 2}), ValidationError);
  CHECK_THROWS_AS(Permutation({2, 3}), ValidationError);

  Permutation pi({3, 1, 2});
  CHECK(pi.inverse() == Permutation({2, 3, 1}));
  CHECK(pi.inverse().inverse() == pi);
  CHECK(compose(pi, pi.inverse()) == Permutation::identity(3));
  CHECK(compose(pi.inverse(), pi) == Permutation::identity(3));
  // (outer ∘ inner)(x) = outer(inner(x))
  Permutation sigma({2, 1, 3});
  CHECK(compose(pi, sigma) == Permutation({1, 3, 2}));
  CHECK(pi.reversed() == Permutation({2, 1, 3}));
}

TEST_CASE("tableau validation catches each violation kind") {
  CHECK(validate_tableau({{1, 2}, {3}}).standard);
  CHECK_FALSE(validate_tableau({{2, 1}}).valid);          // row not increasing
  CHECK_FALSE(validate_tableau({{1, 2}, {1}}).valid);     // duplicate entry
  CHECK_FALSE(validate_tableau({{3, 4}, {1}}).valid);     // column decreasing
  CHECK_FALSE(validate_tableau({{1}, {2, 3}}).valid);     // shape not a partition
  CHECK(validate_tableau({{1, 5}, {3}}).valid);
  CHECK_FALSE(validate_tableau({{1, 5}, {3}}).standard);  // gap in 1..n
  CHECK_THROWS_AS(Tableau({{2, 1}}), ValidationError);
}

TEST_CASE("row insertion hand trace") {
  Tableau t({{1, 4}, {3}});
  RowInsertResult r = row_insert(t, 2);
  CHECK(r.tableau == Tableau({{1, 2}, {3, 4}}));
  CHECK(r.cell == Cell{2, 2});

  // appending to the first row creates a cell there
  RowInsertResult r2 = row_insert(r.tableau, 5);
  CHECK(r2.cell == Cell{1, 3});
  CHECK(r2.tableau.shape() == Partition({3, 2}));
}

TEST_CASE("insertion of a known word") {
  TableauPair pq = rsk(Permutation({3, 1, 2}));
  CHECK(pq.p == Tableau({{1, 2}, {3}}));
  CHECK(pq.q == Tableau({{1, 3}, {2}}));

  CHECK(shape_of(Permutation::identity(6)) == Partition({6}));
  CHECK(shape_of(Permutation({5, 4, 3, 2, 1})) == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("insertion and reverse insertion are mutually inverse on S_<=6") {
  for (int n = 1; n <= 6; ++n) {
    long long checked = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
      TableauPair pq = rsk(pi);
      CHECK(pq.p.shape() == pq.q.shape());
      CHECK(validate_tableau(pq.p.rows()).standard);
      CHECK(validate_tableau(pq.q.rows()).standard);
      CHECK(inverse_rsk(pq) == pi);
      ++checked;
    });
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    CHECK(checked == factorial);
  }
}

TEST_CASE("reversal conjugates the shape and inversion swaps the tableaux") {
  for_each_permutation(5, [&](const Permutation& pi) {
    CHECK(shape_of(pi.reversed()) == shape_of(pi).conjugate());
    TableauPair pq = rsk(pi);
    TableauPair qp = rsk(pi.inverse());
    CHECK(qp.p == pq.q);
    CHECK(qp.q == pq.p);
  });
  std::mt19937 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    Permutation pi(random_word(60, gen));
    CHECK(shape_of(pi.reversed()) == shape_of(pi).conjugate());
  }
}

TEST_CASE("first row length equals the longest increasing subsequence") {
  for_each_permutation(6, [&](const Permutation& pi) {
    CHECK(shape_of(pi).part(1) == lis_length(pi.values()));
  });
  std::mt19937 gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> word = random_word(40, gen);
    CHECK(shape_of(Permutation(word)).part(1) == lis_length(word));
  }
}

TEST_CASE("linear and binary bump scans agree") {
  for_each_permutation(5, [&](const Permutation& pi) {
    TableauPair a = rsk(pi, InsertScan::binary);
    TableauPair b = rsk(pi, InsertScan::linear);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
  });
  std::mt19937 gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    Permutation pi(random_word(50, gen));
    CHECK(rsk(pi, InsertScan::binary).p == rsk(pi, InsertScan::linear).p);
  }
}

TEST_CASE("inverse insertion rejects malformed pairs") {
  TableauPair pq = rsk(Permutation({3, 1, 2}));
  TableauPair mismatched{pq.p, Tableau({{1, 2, 3}})};
  CHECK_THROWS_AS(inverse_rsk(mismatched), ValidationError);
  TableauPair nonstandard{Tableau({{1, 5}, {3}}), Tableau({{1, 5}, {3}})};
  CHECK_THROWS_AS(inverse_rsk(nonstandard), ValidationError);
}
