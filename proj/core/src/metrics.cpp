#include "rsklip/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace rsklip {

int twice_delta(const Partition& lam, const Partition& mu) {
  const int len = std::max(lam.num_parts(), mu.num_parts());
  int total = 0;
  for (int i = 1; i <= len; ++i) total += std::abs(lam.part(i) - mu.part(i));
  return total;
}

int delta(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight())
    throw ValidationError(
        "delta requires partitions of equal weight (use delta_half for the "
        "flagged half-integer value)");
  return twice_delta(lam, mu) / 2;
}

double delta_half(const Partition& lam, const Partition& mu) {
  return twice_delta(lam, mu) / 2.0;
}

namespace {

long long merge_count(std::vector<int>& v, std::vector<int>& tmp, std::size_t lo,
                      std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long long cnt = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t a = lo, b = mid, o = lo;
  while (a < mid && b < hi) {
    if (v[b] < v[a]) {
      cnt += static_cast<long long>(mid - a);
      tmp[o++] = v[b++];
    } else {
      tmp[o++] = v[a++];
    }
  }
  while (a < mid) tmp[o++] = v[a++];
  while (b < hi) tmp[o++] = v[b++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return cnt;
}

}  // namespace

long long inversions(std::vector<int> values) {
  std::vector<int> tmp(values.size());
  return merge_count(values, tmp, 0, values.size());
}

int adjacent_distance(const Permutation& pi, const Permutation& tau, Side side) {
  if (pi.size() != tau.size())
    throw ValidationError("distance requires permutations of equal size");
  const Permutation word = side == Side::left ? compose(tau, pi.inverse())
                                              : compose(pi.inverse(), tau);
  return static_cast<int>(inversions(word.values()));
}

Permutation apply_adjacent(const Permutation& pi, int i, Side side) {
  if (i < 1 || i >= pi.size())
    throw ValidationError("adjacent transposition index out of range");
  std::vector<int> v = pi.values();
  if (side == Side::right) {
    std::swap(v[i - 1], v[i]);
  } else {
    int pa = -1, pb = -1;
    for (int p = 0; p < pi.size(); ++p) {
      if (v[p] == i) pa = p;
      if (v[p] == i + 1) pb = p;
    }
    std::swap(v[pa], v[pb]);
  }
  return Permutation(std::move(v));
}

DiagramPairAnatomy anatomy(const Partition& lam, const Partition& mu) {
  DiagramPairAnatomy out;
  const int len = std::max(lam.num_parts(), mu.num_parts());
  std::vector<int> union_parts;
  union_parts.reserve(len);
  out.lambda_only.assign(len, 0);
  out.mu_only.assign(len, 0);
  for (int i = 1; i <= len; ++i) {
    const int a = lam.part(i), b = mu.part(i);
    union_parts.push_back(std::max(a, b));
    out.intersection_area += std::min(a, b);
    out.lambda_only[i - 1] = std::max(a - b, 0);
    out.mu_only[i - 1] = std::max(b - a, 0);
    for (int c = std::min(a, b) + 1; c <= std::max(a, b); ++c)
      out.sym_diff_cells.push_back({i, c});
  }
  while (!union_parts.empty() && union_parts.back() == 0) union_parts.pop_back();
  out.union_shape = Partition(std::move(union_parts));
  return out;
}

std::vector<Block> decompose_blocks(const Partition& lam, const Partition& mu) {
  const int len = std::max(lam.num_parts(), mu.num_parts());
  std::vector<Block> blocks;
  std::vector<int> right_edge;  // rightmost cell column per block
  for (int i = 1; i <= len; ++i) {
    const int a = lam.part(i), b = mu.part(i);
    if (a == b) continue;  // equal rows never end a block
    const BlockKind kind = a > b ? BlockKind::lambda_side : BlockKind::mu_side;
    const int lo = std::min(a, b) + 1, hi = std::max(a, b);
    if (!blocks.empty() && blocks.back().kind == kind) {
      Block& blk = blocks.back();
      blk.last_row = i;
      blk.area += hi - lo + 1;
      blk.box_height = blk.last_row - blk.first_row + 1;
      // Parts weakly decrease, so later rows only extend the box leftward.
      blk.box_width = right_edge.back() - lo + 1;
    } else {
      Block blk;
      blk.kind = kind;
      blk.first_row = blk.last_row = i;
      blk.area = hi - lo + 1;
      blk.box_height = 1;
      blk.box_width = hi - lo + 1;
      blocks.push_back(blk);
      right_edge.push_back(hi);
    }
  }
  return blocks;
}

PrefixCheck check_prefix_inequalities(const Partition& lam, const Partition& mu,
                                      int r, int s) {
  if (r < 0 || s < 0)
    throw ValidationError("transposition counts must be nonnegative");
  PrefixCheck out;
  const int len = std::max(lam.num_parts(), mu.num_parts());
  int plam = 0, pmu = 0;
  for (int j = 1; j <= len; ++j) {
    plam += lam.part(j);
    pmu += mu.part(j);
    const int diff = plam - pmu;
    out.max_upper_slack = std::max(out.max_upper_slack, diff);
    out.min_lower_slack = std::min(out.min_lower_slack, diff);
    if ((diff > s || diff < -r) && out.first_violation == 0) {
      out.holds = false;
      out.first_violation = j;
    }
  }
  return out;
}

RatioValue lipschitz_ratio(const Permutation& pi, const Permutation& tau,
                           Side side) {
  const int dist = adjacent_distance(pi, tau, side);
  if (dist == 0)
    throw ValidationError("Lipschitz ratio needs distinct permutations");
  return {delta(shape_of(pi), shape_of(tau)), dist};
}

}  // namespace rsklip
