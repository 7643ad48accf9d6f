#pragma once

#include <utility>
#include <vector>

#include "rsklip/greene.hpp"
#include "rsklip/tableaux.hpp"

namespace rsklip {

// Closed interval of consecutive values.
struct ValueInterval {
  int lo = 1;
  int hi = 0;
  int size() const { return hi - lo + 1; }
};

// Distance-1 pair (pi, tau) whose shapes differ by (k+1)/2 cells, built on a
// core of size core_n = (k+1)^2/2 for the largest odd k that fits, with
// values core_n+1..n appended as fixed points.
//
// Core layout, with h = (k-1)/2: values split into small (lowest), a run of
// k+1 intermediates around the midpoint, and big (highest); small values form
// blocks s_h..s_1 in order and big values blocks b_1..b_h, |s_i| = |b_i| = 2i.
// One-line order: m_1 B_h m_2 B_{h-1} ... m_h B_1 m_{h+1} m_{h+2} S_1 m_{h+3}
// S_2 ... S_h m_{k+1}. tau swaps the two middle values.
struct T1Construction {
  int n = 0;
  int k = 0;
  int core_n = 0;
  Permutation pi;
  Permutation tau;
  Partition core_lam, core_mu;  // mutually conjugate
  Partition lam, mu;            // core shapes with the padding added to row 1
  std::vector<ValueInterval> small_blocks;  // index i-1 holds s_i
  std::vector<ValueInterval> big_blocks;    // index i-1 holds b_i
  ValueInterval intermediates;
};

T1Construction construct_t1(int n);

// lam = (k+1, k-1, k-1, ..., 2, 2), mu = (k, k, k-2, k-2, ..., 1, 1).
std::pair<Partition, Partition> expected_shapes(int k);

// Monotone decompositions certifying the core shapes for odd k >= 3:
// increasing pieces with sizes lam / mu and decreasing pieces d_1..d_{k+1}
// (sizes mu) resp. f_1..f_k (sizes lam). Piece index order matches the
// assignment rules, not the sorted sizes.
struct ConstructionWitness {
  int k = 0;
  int core_n = 0;
  Decomposition pi_increasing, pi_decreasing;
  Decomposition tau_increasing, tau_decreasing;
};

ConstructionWitness construction_decompositions(int k);

// The core witness extended to a padded construction: every appended fixed
// point prolongs the first increasing piece (its value exceeds and its
// position follows everything before it) and forms a singleton decreasing
// piece, matching the conjugate of the padded shape.
ConstructionWitness padded_decompositions(const T1Construction& c);

// t value-shifted copies of the largest core that fits t times, concatenated
// in increasing value ranges, with tau applying the middle swap inside every
// copy: left distance exactly t and shape distance t(k+1)/2.
struct GeneralTConstruction {
  int n = 0;
  int t = 0;
  int k = 0;
  int block_size = 0;  // core size m = (k+1)^2/2
  Permutation pi;
  Permutation tau;
  Partition lam, mu;  // expected shapes (rowwise t-fold sums, padded row 1)
};

GeneralTConstruction construct_general_t(int n, int t);

}  // namespace rsklip
