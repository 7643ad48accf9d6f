#pragma once

#include <vector>

#include "rsklip/metrics.hpp"
#include "rsklip/tableaux.hpp"

namespace rsklip {

// Paired positive sequences a_1..a_k, b_1..b_k with a_1 = b_k = 1 and
// a_i * b_i <= cap for every i; requires k >= 2 and cap >= 3.
struct SequencePair {
  std::vector<double> a;
  std::vector<double> b;
  double cap = 0;  // T
};

// Throws ValidationError naming the first violated requirement.
void validate_sequence_pair(const SequencePair& pair);

struct SequenceStats {
  double delta = 0;    // sum_i a_i b_i
  double n_total = 0;  // sum_{i<=j} a_i b_j
  double ratio = 0;    // n_total / delta^2
};

SequenceStats sequence_stats(const SequencePair& pair);

struct BoundCheck {
  bool holds = false;
  double bound = 0;  // sqrt(32 * N * T * ln T), natural log
  double slack = 0;  // bound - delta
};

BoundCheck check_bound(const SequencePair& pair);

struct RatioMinimum {
  SequencePair pair;       // first minimizer in enumeration order
  SequenceStats stats;
  long long candidates = 0;
};

// Exhaustive integer enumeration over lengths 2..k_max with entries in
// 1..cap; refuses k_max > 4 or cap > 12 with a size estimate.
RatioMinimum minimize_ratio(int k_max, int cap);

// a_i = 2^(i-1), b_i = 2^(k-i), cap = 2^(k-1); every product equals the cap
// and delta = k * cap. Defined for k >= 3 so that cap >= 3 holds.
SequencePair tight_sequence(int k);

// Three-stage diagram reduction for a pair of distinct partitions:
//   1. repeatedly delete rows and columns of equal length in both diagrams;
//   2. reshape every block into rows of its box width (remainder last)
//      inside the block and the intersection region it shades;
//   3. flatten the top block to a single row and the bottom block to a
//      single column.
// Block count and individual block areas survive all three stages, so the
// shape distance of the reduced pair equals that of the input. The boxes
// field lists the final bounding boxes top to bottom: a = heights (a_1 = 1),
// b = widths (b_k = 1), cap = max(3, max_i a_i b_i).
struct ReducedPair {
  Partition lam, mu;
  std::vector<Block> blocks;
  SequencePair boxes;
};

ReducedPair reduce_pair(const Partition& lam, const Partition& mu);

// Stationary point of minimizing N subject to fixed delta when every product
// a_i b_i is pinned to the cap: the k interior entries form geometric
// progressions with ratio c, flanked by ell1 leading (1, T) entries and ell2
// trailing (T, 1) entries. Interior: a_i = (c-1) ell1 c^(i-1),
// b_i = (c-1) ell2 c^(k-i), cap = c^(k-1) (c-1)^2 ell1 ell2.
struct ContinuousOptimum {
  int k = 0;
  int ell1 = 0, ell2 = 0;
  double c = 0;
  double cap = 0;
  std::vector<double> a, b;  // extended sequences, length ell1 + k + ell2
};

ContinuousOptimum continuous_optimum(int k, int ell1, int ell2, double c);

// Relative residuals of the stationarity identity
//   a_i (b_i + ... + b_k + ell2) = b_i (ell1 + a_1 + ... + a_i)
// over the k interior indices.
std::vector<double> kkt_residuals(const ContinuousOptimum& opt);

// Same identity evaluated in exact rational arithmetic for c = c_num/c_den;
// true iff every interior residual is exactly zero.
bool kkt_identity_exact(int k, int ell1, int ell2, long long c_num,
                        long long c_den);

}  // namespace rsklip
