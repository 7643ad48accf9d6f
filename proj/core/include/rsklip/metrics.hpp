#pragma once

#include <vector>

#include "rsklip/tableaux.hpp"

namespace rsklip {

enum class Side { left, right };

// Number of cells in the symmetric difference of the two diagrams, i.e.
// sum_i |lam_i - mu_i|. Always an integer.
int twice_delta(const Partition& lam, const Partition& mu);

// Half the symmetric-difference cell count. Integral whenever
// |lam| = |mu|; throws ValidationError otherwise (the metric contract is
// only claimed for equal weights — use delta_half for the general value).
int delta(const Partition& lam, const Partition& mu);

// twice_delta / 2 with no weight requirement; callers flag the half-integer
// case themselves.
double delta_half(const Partition& lam, const Partition& mu);

// Inversion count via merge sort.
long long inversions(std::vector<int> values);

// Distance in the Cayley graph generated by adjacent transpositions acting
// on values (left side, (i, i+1) ∘ pi) or on positions (right side,
// pi ∘ (i, i+1)): the inversion count of tau∘pi⁻¹ resp. pi⁻¹∘tau.
int adjacent_distance(const Permutation& pi, const Permutation& tau, Side side);

// One generator step: swap values i, i+1 (left) or positions i, i+1 (right).
Permutation apply_adjacent(const Permutation& pi, int i, Side side);

struct DiagramPairAnatomy {
  Partition union_shape;
  int intersection_area = 0;           // A(W)
  std::vector<Cell> sym_diff_cells;    // row-major order
  std::vector<int> lambda_only;        // per-row surplus (lam_i - mu_i)+
  std::vector<int> mu_only;            // per-row surplus (mu_i - lam_i)+
};

DiagramPairAnatomy anatomy(const Partition& lam, const Partition& mu);

enum class BlockKind { lambda_side, mu_side };

// A maximal group of same-kind surplus rows, where rows with lam_i = mu_i
// inside the group separate it into pre-blocks but do not end it. Consecutive
// blocks alternate in kind. The bounding box is the exact height/width of the
// block's symmetric-difference cells.
struct Block {
  BlockKind kind = BlockKind::lambda_side;
  int first_row = 0;  // first row containing block cells (1-based)
  int last_row = 0;   // last row containing block cells
  int area = 0;       // number of symmetric-difference cells
  int box_height = 0;
  int box_width = 0;
};

std::vector<Block> decompose_blocks(const Partition& lam, const Partition& mu);

struct PrefixCheck {
  bool holds = true;
  int first_violation = 0;  // smallest violated prefix length, 0 if none
  int max_upper_slack = 0;  // max_j (prefix_lam - prefix_mu); must be <= s
  int min_lower_slack = 0;  // min_j (prefix_lam - prefix_mu); must be >= -r
};

// Running-sum inequalities: for every prefix j,
//   sum_{i<=j} mu_i - r  <=  sum_{i<=j} lam_i  <=  sum_{i<=j} mu_i + s.
PrefixCheck check_prefix_inequalities(const Partition& lam, const Partition& mu,
                                      int r, int s);

struct RatioValue {
  int delta = 0;
  int distance = 0;
  double value() const { return static_cast<double>(delta) / distance; }
};

// delta(shape(pi), shape(tau)) over adjacent_distance(pi, tau, side).
RatioValue lipschitz_ratio(const Permutation& pi, const Permutation& tau,
                           Side side);

}  // namespace rsklip
