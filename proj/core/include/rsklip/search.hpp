#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsklip/metrics.hpp"
#include "rsklip/tableaux.hpp"

namespace rsklip {

struct Witness {
  std::vector<int> pi, tau;  // one-line notation
  Partition lam, mu;
  int delta = 0;
};

struct ExhaustiveResult {
  int n = 0;
  Side side = Side::left;
  bool pruned = false;
  int max_delta = 0;
  double bound = 0;               // sqrt(n/2)
  long long evaluated = 0;        // (permutation, swap) pairs scanned
  long long attaining = 0;        // scanned pairs reaching max_delta
  long long rowcol_violations = 0;  // unions with >1 surplus cell in a line
  std::vector<Witness> witnesses;   // canonical maximizers, sorted, deduped
};

// Scans every pair (pi, adjacent swap of pi) for the given side; refuses
// n > 9. Witnesses are stored up to the symmetries that preserve the swap
// relation (reverse both, complement both, exchange the pair).
ExhaustiveResult exhaustive_t1(int n, Side side, bool prune_symmetry = false,
                               int workers = 1);

// Lexicographically least pair in the orbit under reversing both words,
// inverting both, complementing all values, and exchanging pi with tau. The
// shape distance is invariant under each of these.
std::pair<Permutation, Permutation> canonicalize_pair(const Permutation& pi,
                                                      const Permutation& tau);

struct TrialRecord {
  long long trial = 0;
  int realized_d = 0;  // distance between endpoints (<= step count)
  int delta = 0;
  double ratio = 0;  // delta / realized_d, 0 when the walk closes
};

struct SweepParams {
  int n = 0;
  int t = 0;                 // steps per trial
  long long trials = 0;
  Side side = Side::left;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct SweepReport {
  SweepParams params;
  std::string walk_kind;  // "adjacent" or "general"
  int max_delta = 0;
  double mean_delta = 0;
  double max_envelope_ratio = 0;  // delta / sqrt(n t ln(max(t,3)))
  long long cap_violations = 0;       // delta > t sqrt(n/2) (adjacent only)
  long long prefix_violations = 0;    // running-sum inequality failures
  long long triangle_violations = 0;  // delta(start,end) > sum of step deltas
  long long block_area_violations = 0;  // some block area > t (adjacent only)
  long long box_violations = 0;  // reduced box with a*b > 2t (adjacent only)
  std::vector<TrialRecord> trials;
};

// Seeded random walks of t adjacent swaps. Each trial checks the running-sum
// inequalities with the observed split of swap directions, the per-block area
// bound, the reduced bounding boxes, the walk cap t*sqrt(n/2), and the
// triangle inequality of the shape metric.
SweepReport random_walk_sweep(const SweepParams& params);

// Walks of t uniformly random value transpositions (not necessarily
// adjacent). Only the relaxed prefix bound |prefix difference| <= 2t and the
// metric triangle inequality are exact claims here; everything else is
// reported as statistics.
SweepReport general_transposition_sweep(const SweepParams& params);

struct RecordedExampleReport {
  Permutation pi, tau;
  Partition lam, mu;
  int delta = 0;
  int right_distance = 0;
  bool delta_is_three = false;
  bool distance_is_one = false;
  // Recorded observations, not assertions: this maximizer lies outside the
  // constructed family.
  bool shapes_mutually_conjugate = false;
  std::string observation;
};

// The recorded n = 18 simulation maximizer: a position-10/11 swap at right
// distance 1 whose shapes are 3 cells apart.
RecordedExampleReport verify_recorded_example();

}  // namespace rsklip
