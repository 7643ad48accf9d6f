#pragma once

#include <string>
#include <vector>

#include "rsklip/tableaux.hpp"

namespace rsklip {

// mu[j-1] = largest total size of a union of j disjoint increasing
// subsequences; derived_shape holds the consecutive differences. Computed by
// min-cost flow, with no row insertion anywhere in the derivation.
struct GreeneProfile {
  std::vector<int> mu;      // strictly increasing, ends at n
  Partition derived_shape;  // mu[0], mu[1]-mu[0], ...
};

GreeneProfile greene_profile(const Permutation& pi);

// Profile entry for one j (1 <= j <= n); constant n once j reaches the number
// of parts of the derived shape.
int max_union_increasing(const Permutation& pi, int j);

// Exhaustive chain assignment with memoization; refuses n > 10.
int brute_force_max_union(const Permutation& pi, int j);

Partition greene_shape(const Permutation& pi);

enum class Direction { increasing, decreasing };

// Disjoint monotone subsequences of a permutation, stored as 1-based position
// lists in increasing position order.
struct Decomposition {
  std::vector<std::vector<int>> pieces;
  Direction direction = Direction::increasing;
  Partition sizes;  // piece cardinalities, sorted decreasingly
};

Decomposition make_decomposition(std::vector<std::vector<int>> pieces,
                                 Direction direction);

struct WitnessVerdict {
  bool certified = false;
  Partition shape;     // the shape the witness pair certifies
  std::string reason;  // first failure, empty when certified
};

// An increasing decomposition with sizes lam together with a decreasing
// decomposition with sizes conjugate(lam) pins the derived shape of pi to
// exactly lam; the verdict reports whether the pair of decompositions is such
// a certificate.
WitnessVerdict verify_witness(const Permutation& pi, const Decomposition& inc,
                              const Decomposition& dec);

}  // namespace rsklip
