#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "rsklip/errors.hpp"
#include "rsklip/metrics.hpp"
#include "rsklip/seq_lemma.hpp"
#include "rsklip/tableaux.hpp"

using namespace rsklip;

namespace {

std::vector<int> random_word(int n, std::mt19937& gen) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), gen);
  return v;
}

double tightness(int k) {
  SequencePair pair = tight_sequence(k);
  SequenceStats s = sequence_stats(pair);
  return s.delta * s.delta / (s.n_total * pair.cap * std::log(pair.cap));
}

}  // namespace

TEST_CASE("sequence statistics against direct summation") {
  SequencePair pair{{1, 2, 4}, {4, 2, 1}, 4};
  SequenceStats s = sequence_stats(pair);
  CHECK(s.delta == doctest::Approx(12));
  CHECK(s.n_total == doctest::Approx(17));
  CHECK(s.ratio == doctest::Approx(17.0 / 144.0));

  // recompute with the summation order swapped
  std::mt19937 gen(71);
  std::uniform_int_distribution<int> entry(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + trial % 4;
    SequencePair p;
    p.a.assign(k, 1);
    p.b.assign(k, 1);
    for (int i = 1; i < k; ++i) p.a[i] = entry(gen);
    for (int i = 0; i + 1 < k; ++i) p.b[i] = entry(gen);
    double max_prod = 0;
    for (int i = 0; i < k; ++i) max_prod = std::max(max_prod, p.a[i] * p.b[i]);
    p.cap = std::max(3.0, max_prod);
    validate_sequence_pair(p);

    SequenceStats st = sequence_stats(p);
    double d = 0, n = 0, prefix_a = 0;
    for (int j = 0; j < k; ++j) {
      d += p.a[j] * p.b[j];
      prefix_a += p.a[j];
      n += p.b[j] * prefix_a;
    }
    CHECK(st.delta == doctest::Approx(d));
    CHECK(st.n_total == doctest::Approx(n));
    CHECK(st.ratio == doctest::Approx(n / (d * d)));
  }
}

TEST_CASE("sequence pair validation names the broken requirement") {
  CHECK_THROWS_AS(validate_sequence_pair({{1}, {1}, 3}), ValidationError);
  CHECK_THROWS_AS(validate_sequence_pair({{1, 2}, {1}, 3}), ValidationError);
  CHECK_THROWS_AS(validate_sequence_pair({{1, 1}, {1, 1}, 2}), ValidationError);
  CHECK_THROWS_AS(validate_sequence_pair({{1, -1}, {1, 1}, 3}),
                  ValidationError);
  CHECK_THROWS_AS(validate_sequence_pair({{1, 4}, {1, 1}, 3}),
                  ValidationError);  // product above the cap
  CHECK_THROWS_AS(validate_sequence_pair({{2, 1}, {1, 1}, 3}),
                  ValidationError);  // a_1 != 1
  CHECK_THROWS_AS(validate_sequence_pair({{1, 1}, {1, 2}, 3}),
                  ValidationError);  // b_k != 1
  CHECK_NOTHROW(validate_sequence_pair({{1, 3}, {3, 1}, 3}));
}

TEST_CASE("envelope bound recomputed from its formula") {
  for (int k : {3, 5, 8}) {
    SequencePair pair = tight_sequence(k);
    SequenceStats s = sequence_stats(pair);
    BoundCheck b = check_bound(pair);
    double expected = std::sqrt(32.0 * s.n_total * pair.cap * std::log(pair.cap));
    CHECK(b.bound == doctest::Approx(expected).epsilon(1e-12));
    CHECK(b.slack == doctest::Approx(expected - s.delta).epsilon(1e-12));
    CHECK(b.holds);
  }
}

TEST_CASE("doubling family: every product sits on the cap") {
  for (int k = 3; k <= 12; ++k) {
    SequencePair pair = tight_sequence(k);
    CHECK(pair.cap == doctest::Approx(std::ldexp(1.0, k - 1)));
    for (int i = 0; i < k; ++i)
      CHECK(pair.a[i] * pair.b[i] == doctest::Approx(pair.cap));
    SequenceStats s = sequence_stats(pair);
    CHECK(s.delta == doctest::Approx(k * pair.cap));
  }
  CHECK_THROWS_AS(tight_sequence(2), ValidationError);
}

TEST_CASE("doubling family keeps the bound within a constant factor") {
  for (int k = 3; k <= 12; ++k) {
    CHECK(tightness(k) >= 0.85);
    CHECK(tightness(k) <= 32.0);  // i.e. the bound itself holds
  }
  // the slowly decreasing figure of merit, frozen at its k = 12 value
  CHECK(tightness(12) == doctest::Approx(0.858444).epsilon(1e-4));
}

TEST_CASE("exhaustive ratio minimization at the smallest sizes") {
  RatioMinimum m = minimize_ratio(2, 3);
  CHECK(m.candidates == 9);
  CHECK(m.pair.a == std::vector<double>{1, 3});
  CHECK(m.pair.b == std::vector<double>{3, 1});
  CHECK(m.stats.delta == doctest::Approx(6));
  CHECK(m.stats.n_total == doctest::Approx(7));
  CHECK(m.stats.ratio == doctest::Approx(7.0 / 36.0));

  // a longer budget can only improve the minimum
  RatioMinimum wider = minimize_ratio(3, 3);
  CHECK(wider.stats.ratio <= m.stats.ratio + 1e-12);
  CHECK(wider.candidates > m.candidates);

  CHECK_THROWS_AS(minimize_ratio(1, 3), ValidationError);
  CHECK_THROWS_AS(minimize_ratio(2, 2), ValidationError);
  CHECK_THROWS_AS(minimize_ratio(5, 3), ResourceRefusal);
  CHECK_THROWS_AS(minimize_ratio(4, 13), ResourceRefusal);
}

TEST_CASE("diagram reduction to boxed rows and columns") {
  ReducedPair r = reduce_pair(Partition({5, 4, 1}), Partition({3, 3, 3, 1}));
  CHECK(r.lam == Partition({4}));
  CHECK(r.mu == Partition({1, 1, 1, 1}));
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[0].area == 3);
  CHECK(r.blocks[1].area == 3);
  CHECK(r.boxes.a == std::vector<double>{1, 3});
  CHECK(r.boxes.b == std::vector<double>{3, 1});
  CHECK(r.boxes.cap == doctest::Approx(3));
  CHECK(delta(r.lam, r.mu) == delta(Partition({5, 4, 1}), Partition({3, 3, 3, 1})));

  // fully interleaved pair: nothing to reduce, all boxes are single cells
  ReducedPair stair =
      reduce_pair(Partition({6, 4, 4, 2, 2}), Partition({5, 5, 3, 3, 1, 1}));
  CHECK(stair.lam == Partition({6, 4, 4, 2, 2}));
  CHECK(stair.mu == Partition({5, 5, 3, 3, 1, 1}));
  REQUIRE(stair.blocks.size() == 6);
  CHECK(stair.boxes.a == std::vector<double>(6, 1.0));
  CHECK(stair.boxes.b == std::vector<double>(6, 1.0));
  CHECK(stair.boxes.cap == doctest::Approx(3));

  CHECK_THROWS_AS(reduce_pair(Partition({3, 1}), Partition({3, 1})),
                  ValidationError);
  // unequal weights can leave a single block, which has no box sequence
  CHECK_THROWS_AS(reduce_pair(Partition({2, 1}), Partition({1, 1})),
                  ValidationError);
}

TEST_CASE("reduction preserves block structure and shape distance") {
  std::mt19937 gen(73);
  int reduced_pairs = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Partition lam = shape_of(Permutation(random_word(22, gen)));
    Partition mu = shape_of(Permutation(random_word(22, gen)));
    if (lam == mu) continue;
    std::vector<Block> raw = decompose_blocks(lam, mu);
    REQUIRE(raw.size() >= 2);  // equal weights guarantee both kinds
    ReducedPair r = reduce_pair(lam, mu);
    ++reduced_pairs;

    REQUIRE(r.blocks.size() == raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      CHECK(r.blocks[i].area == raw[i].area);
      CHECK(r.blocks[i].kind == raw[i].kind);
    }
    CHECK(delta(r.lam, r.mu) == delta(lam, mu));

    CHECK_NOTHROW(validate_sequence_pair(r.boxes));
    CHECK(r.boxes.a.front() == 1);  // top block flattened to one row
    CHECK(r.boxes.b.back() == 1);   // bottom block flattened to one column
    for (size_t i = 0; i < r.blocks.size(); ++i) {
      // a reshaped block overfills its box by less than one row
      CHECK(r.boxes.a[i] * r.boxes.b[i] <= 2.0 * r.blocks[i].area);
    }
  }
  CHECK(reduced_pairs > 60);  // the guard above should almost never trigger
}

TEST_CASE("stationary sequences: golden case and residuals") {
  ContinuousOptimum opt = continuous_optimum(4, 2, 2, 2.0);
  CHECK(opt.cap == doctest::Approx(32));
  CHECK(opt.a == std::vector<double>{1, 1, 2, 4, 8, 16, 32, 32});
  CHECK(opt.b == std::vector<double>{32, 32, 16, 8, 4, 2, 1, 1});

  for (int k = 1; k <= 6; ++k)
    for (int ell1 = 1; ell1 <= 3; ++ell1)
      for (int ell2 = 1; ell2 <= 3; ++ell2)
        for (double c : {1.5, 2.0, 3.0}) {
          ContinuousOptimum o = continuous_optimum(k, ell1, ell2, c);
          CHECK(o.cap ==
                doctest::Approx(std::pow(c, k - 1) * (c - 1) * (c - 1) * ell1 *
                                ell2));
          for (double rel : kkt_residuals(o)) CHECK(std::abs(rel) <= 1e-9);
        }

  // a 1% dent in the first interior entry is clearly visible
  ContinuousOptimum bent = continuous_optimum(4, 2, 2, 2.0);
  bent.a[bent.ell1] *= 1.01;
  double worst = 0;
  for (double rel : kkt_residuals(bent)) worst = std::max(worst, std::abs(rel));
  CHECK(worst > 1e-3);

  CHECK_THROWS_AS(continuous_optimum(0, 1, 1, 2.0), ValidationError);
  CHECK_THROWS_AS(continuous_optimum(3, 0, 1, 2.0), ValidationError);
  CHECK_THROWS_AS(continuous_optimum(3, 1, 1, 1.0), ValidationError);
}

TEST_CASE("stationarity identity holds exactly in rational arithmetic") {
  const std::pair<long long, long long> ratios[] = {{3, 2}, {2, 1}, {3, 1}};
  for (int k = 1; k <= 6; ++k)
    for (int ell1 = 1; ell1 <= 3; ++ell1)
      for (int ell2 = 1; ell2 <= 3; ++ell2)
        for (const auto& r : ratios)
          CHECK(kkt_identity_exact(k, ell1, ell2, r.first, r.second));

  CHECK_THROWS_AS(kkt_identity_exact(0, 1, 1, 2, 1), ValidationError);
  CHECK_THROWS_AS(kkt_identity_exact(3, 1, 1, 1, 1), ValidationError);
  CHECK_THROWS_AS(kkt_identity_exact(3, 1, 1, 1, 2), ValidationError);
}
