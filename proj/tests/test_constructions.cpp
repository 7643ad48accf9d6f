#include <cmath>
#include <utility>
#include <vector>

#include <doctest.h>

#include "rsklip/constructions.hpp"
#include "rsklip/errors.hpp"
#include "rsklip/greene.hpp"
#include "rsklip/metrics.hpp"
#include "rsklip/tableaux.hpp"

using namespace rsklip;

namespace {

// Values of a position piece, in position order.
std::vector<int> values_of(const std::vector<int>& piece,
                           const Permutation& perm) {
  std::vector<int> vals;
  vals.reserve(piece.size());
  for (int pos : piece) vals.push_back(perm(pos));
  return vals;
}

std::vector<std::vector<int>> value_pieces(const Decomposition& d,
                                           const Permutation& perm) {
  std::vector<std::vector<int>> out;
  for (const auto& piece : d.pieces) out.push_back(values_of(piece, perm));
  return out;
}

void check_certified(const Permutation& perm, const Decomposition& inc,
                     const Decomposition& dec, const Partition& shape) {
  WitnessVerdict v = verify_witness(perm, inc, dec);
  CHECK(v.certified);
  CHECK(v.reason.empty());
  CHECK(v.shape == shape);
}

}  // namespace

TEST_CASE("the 18-element distance-1 pair, entry by entry") {
  T1Construction c = construct_t1(18);
  CHECK(c.k == 5);
  CHECK(c.core_n == 18);
  CHECK(c.pi.values() == std::vector<int>{7, 15, 16, 17, 18, 8, 13, 14, 9, 10,
                                          5, 6, 11, 1, 2, 3, 4, 12});
  CHECK(c.tau.values() == std::vector<int>{7, 15, 16, 17, 18, 8, 13, 14, 10, 9,
                                           5, 6, 11, 1, 2, 3, 4, 12});
  CHECK(c.lam == Partition({6, 4, 4, 2, 2}));
  CHECK(c.mu == Partition({5, 5, 3, 3, 1, 1}));
  CHECK(c.mu == c.lam.conjugate());
  CHECK(shape_of(c.pi) == c.lam);
  CHECK(shape_of(c.tau) == c.mu);
  CHECK(delta(c.lam, c.mu) == 3);
  CHECK(adjacent_distance(c.pi, c.tau, Side::left) == 1);

  REQUIRE(c.small_blocks.size() == 2);
  CHECK(c.small_blocks[0].lo == 5);  // s_1
  CHECK(c.small_blocks[0].hi == 6);
  CHECK(c.small_blocks[1].lo == 1);  // s_2
  CHECK(c.small_blocks[1].hi == 4);
  REQUIRE(c.big_blocks.size() == 2);
  CHECK(c.big_blocks[0].lo == 13);  // b_1
  CHECK(c.big_blocks[0].hi == 14);
  CHECK(c.big_blocks[1].lo == 15);  // b_2
  CHECK(c.big_blocks[1].hi == 18);
  CHECK(c.intermediates.lo == 7);
  CHECK(c.intermediates.hi == 12);
}

TEST_CASE("decompositions of the 18-element pair, piece by piece") {
  T1Construction c = construct_t1(18);
  ConstructionWitness w = construction_decompositions(5);
  CHECK(w.core_n == 18);

  CHECK(value_pieces(w.pi_increasing, c.pi) ==
        std::vector<std::vector<int>>{{7, 8, 9, 10, 11, 12},
                                      {5, 6},
                                      {1, 2, 3, 4},
                                      {13, 14},
                                      {15, 16, 17, 18}});
  CHECK(value_pieces(w.pi_decreasing, c.pi) ==
        std::vector<std::vector<int>>{{18, 14, 9, 6, 4},
                                      {17, 13, 10, 5, 3},
                                      {16, 8, 2},
                                      {15, 11, 1},
                                      {7},
                                      {12}});
  CHECK(value_pieces(w.tau_increasing, c.tau) ==
        std::vector<std::vector<int>>{{7, 15, 16, 17, 18},
                                      {8, 13, 14},
                                      {5, 6, 11},
                                      {1, 2, 3, 4, 12},
                                      {10},
                                      {9}});
  CHECK(value_pieces(w.tau_decreasing, c.tau) ==
        std::vector<std::vector<int>>{{18, 14, 10, 9, 6, 4},
                                      {17, 13, 11, 3},
                                      {16, 8, 5, 2},
                                      {15, 12},
                                      {7, 1}});

  check_certified(c.pi, w.pi_increasing, w.pi_decreasing, c.core_lam);
  check_certified(c.tau, w.tau_increasing, w.tau_decreasing, c.core_mu);
}

TEST_CASE("the whole family of exact-size cores") {
  for (int k : {3, 5, 7, 9, 11, 13}) {
    int n = (k + 1) * (k + 1) / 2;
    T1Construction c = construct_t1(n);
    CHECK(c.k == k);
    CHECK(c.core_n == n);
    CHECK(c.n == n);
    auto [lam, mu] = expected_shapes(k);
    CHECK(c.lam == lam);
    CHECK(c.mu == mu);
    CHECK(mu == lam.conjugate());
    CHECK(shape_of(c.pi) == lam);
    CHECK(shape_of(c.tau) == mu);
    CHECK(delta(lam, mu) == (k + 1) / 2);
    CHECK(adjacent_distance(c.pi, c.tau, Side::left) == 1);

    ConstructionWitness w = construction_decompositions(k);
    check_certified(c.pi, w.pi_increasing, w.pi_decreasing, c.core_lam);
    check_certified(c.tau, w.tau_increasing, w.tau_decreasing, c.core_mu);
  }
}

TEST_CASE("padding appends fixed points and stretches the first row") {
  struct Expect {
    int n, k, core_n, dist;
  };
  for (Expect e : {Expect{20, 5, 18, 3}, Expect{50, 9, 50, 5},
                   Expect{99, 13, 98, 7}}) {
    T1Construction c = construct_t1(e.n);
    CHECK(c.k == e.k);
    CHECK(c.core_n == e.core_n);
    // the chosen core is the largest odd-k core that fits
    CHECK((c.k + 1) * (c.k + 1) / 2 <= e.n);
    CHECK((c.k + 3) * (c.k + 3) / 2 > e.n);
    for (int v = c.core_n + 1; v <= c.n; ++v) CHECK(c.pi(v) == v);

    CHECK(delta(c.lam, c.mu) == e.dist);
    CHECK(adjacent_distance(c.pi, c.tau, Side::left) == 1);
    CHECK(shape_of(c.pi) == c.lam);
    CHECK(shape_of(c.tau) == c.mu);

    ConstructionWitness w = padded_decompositions(c);
    check_certified(c.pi, w.pi_increasing, w.pi_decreasing, c.lam);
    check_certified(c.tau, w.tau_increasing, w.tau_decreasing, c.mu);
  }

  T1Construction c20 = construct_t1(20);
  CHECK(c20.lam == Partition({8, 4, 4, 2, 2}));
  CHECK(c20.mu == Partition({7, 5, 3, 3, 1, 1}));
  CHECK(c20.core_lam == Partition({6, 4, 4, 2, 2}));

  // without padding the extended witness is just the core witness
  T1Construction c18 = construct_t1(18);
  ConstructionWitness a = padded_decompositions(c18);
  ConstructionWitness b = construction_decompositions(5);
  CHECK(a.pi_increasing.pieces == b.pi_increasing.pieces);
  CHECK(a.pi_decreasing.pieces == b.pi_decreasing.pieces);
  CHECK(a.tau_increasing.pieces == b.tau_increasing.pieces);
  CHECK(a.tau_decreasing.pieces == b.tau_decreasing.pieces);
}

TEST_CASE("the smallest pair is a single swap of 1 and 2") {
  T1Construction c = construct_t1(2);
  CHECK(c.k == 1);
  CHECK(c.pi == Permutation::identity(2));
  CHECK(c.tau == Permutation({2, 1}));
  CHECK(c.lam == Partition({2}));
  CHECK(c.mu == Partition({1, 1}));
  CHECK(c.small_blocks.empty());
  CHECK(c.big_blocks.empty());
  CHECK(delta(c.lam, c.mu) == 1);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(construct_t1(1), ValidationError);
  CHECK_THROWS_AS(construct_t1(0), ValidationError);
  CHECK_THROWS_AS(construction_decompositions(1), ValidationError);
  CHECK_THROWS_AS(construction_decompositions(2), ValidationError);
  CHECK_THROWS_AS(construction_decompositions(4), ValidationError);
  CHECK_THROWS_AS(expected_shapes(0), ValidationError);
  CHECK_THROWS_AS(expected_shapes(2), ValidationError);
  CHECK_THROWS_AS(construct_general_t(10, 0), ValidationError);
  CHECK_THROWS_AS(construct_general_t(10, 6), ValidationError);
}

TEST_CASE("stacked copies multiply the shape distance by the swap budget") {
  GeneralTConstruction g = construct_general_t(36, 2);
  CHECK(g.k == 5);
  CHECK(g.block_size == 18);
  CHECK(g.lam == Partition({12, 8, 8, 4, 4}));
  CHECK(g.mu == Partition({10, 10, 6, 6, 2, 2}));
  CHECK(shape_of(g.pi) == g.lam);
  CHECK(shape_of(g.tau) == g.mu);
  CHECK(delta(g.lam, g.mu) == 6);
  CHECK(adjacent_distance(g.pi, g.tau, Side::left) == 2);

  // the first copy is exactly the base pair, the second is shifted by 18
  T1Construction base = construct_t1(18);
  for (int pos = 1; pos <= 18; ++pos) {
    CHECK(g.pi(pos) == base.pi(pos));
    CHECK(g.pi(pos + 18) == base.pi(pos) + 18);
    CHECK(g.tau(pos) == base.tau(pos));
    CHECK(g.tau(pos + 18) == base.tau(pos) + 18);
  }

  GeneralTConstruction one = construct_general_t(18, 1);
  CHECK(one.pi == base.pi);
  CHECK(one.tau == base.tau);
  CHECK(one.lam == base.lam);
  CHECK(one.mu == base.mu);

  GeneralTConstruction padded = construct_general_t(40, 2);
  CHECK(padded.k == 5);
  CHECK(padded.lam == Partition({16, 8, 8, 4, 4}));
  CHECK(padded.mu == Partition({14, 10, 6, 6, 2, 2}));
  CHECK(shape_of(padded.pi) == padded.lam);
  CHECK(shape_of(padded.tau) == padded.mu);
  CHECK(delta(padded.lam, padded.mu) == 6);
  CHECK(adjacent_distance(padded.pi, padded.tau, Side::left) == 2);

  // tiny cores: t adjacent swaps of an identity permutation
  GeneralTConstruction tiny = construct_general_t(10, 5);
  CHECK(tiny.k == 1);
  CHECK(tiny.pi == Permutation::identity(10));
  CHECK(tiny.tau == Permutation({2, 1, 4, 3, 6, 5, 8, 7, 10, 9}));
  CHECK(delta(tiny.lam, tiny.mu) == 5);
  CHECK(adjacent_distance(tiny.pi, tiny.tau, Side::left) == 5);
  CHECK(shape_of(tiny.tau) == Partition({5, 5}));
}

TEST_CASE("realized ratio of the family meets the bound it was built for") {
  for (std::pair<int, int> nt :
       {std::pair<int, int>{18, 1}, {32, 1}, {36, 2}, {60, 3}, {98, 2}}) {
    GeneralTConstruction g = construct_general_t(nt.first, nt.second);
    int d = adjacent_distance(g.pi, g.tau, Side::left);
    CHECK(d == g.t);
    CHECK(delta(g.lam, g.mu) == g.t * (g.k + 1) / 2);
    // the exact guarantee the family provides at every size
    double guaranteed =
        std::sqrt(nt.first * nt.second / 2.0) - nt.second;
    CHECK(delta(g.lam, g.mu) > guaranteed);
  }
}
