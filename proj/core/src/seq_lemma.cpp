#include "rsklip/seq_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rsklip {

void validate_sequence_pair(const SequencePair& pair) {
  const std::size_t k = pair.a.size();
  if (k < 2 || pair.b.size() != k)
    throw ValidationError("sequence pair needs equal lengths k >= 2");
  if (pair.cap < 3)
    throw ValidationError("sequence cap must be at least 3");
  for (std::size_t i = 0; i < k; ++i) {
    if (pair.a[i] <= 0 || pair.b[i] <= 0)
      throw ValidationError("sequence entries must be positive");
    if (pair.a[i] * pair.b[i] > pair.cap * (1 + 1e-12))
      throw ValidationError("a_i * b_i exceeds the cap");
  }
  if (pair.a.front() != 1 || pair.b.back() != 1)
    throw ValidationError("boundary condition a_1 = b_k = 1 violated");
}

SequenceStats sequence_stats(const SequencePair& pair) {
  SequenceStats st;
  const std::size_t k = pair.a.size();
  double suffix = 0;
  for (std::size_t j = 0; j < k; ++j) suffix += pair.b[j];
  for (std::size_t i = 0; i < k; ++i) {
    st.delta += pair.a[i] * pair.b[i];
    st.n_total += pair.a[i] * suffix;  // suffix = b_i + ... + b_k
    suffix -= pair.b[i];
  }
  st.ratio = st.n_total / (st.delta * st.delta);
  return st;
}

BoundCheck check_bound(const SequencePair& pair) {
  validate_sequence_pair(pair);
  const SequenceStats st = sequence_stats(pair);
  BoundCheck out;
  out.bound = std::sqrt(32.0 * st.n_total * pair.cap * std::log(pair.cap));
  out.slack = out.bound - st.delta;
  out.holds = st.delta <= out.bound * (1 + 1e-12);
  return out;
}

namespace {

void enumerate_pairs(int k, int cap, int idx, SequencePair& cur,
                     RatioMinimum& best) {
  if (idx == k) {
    ++best.candidates;
    const SequenceStats st = sequence_stats(cur);
    if (best.pair.a.empty() || st.ratio < best.stats.ratio) {
      best.pair = cur;
      best.stats = st;
    }
    return;
  }
  // a_1 and b_k are pinned to 1; every other entry ranges over 1..cap
  // subject to a_i * b_i <= cap.
  const int a_max = idx == 0 ? 1 : cap;
  for (int a = 1; a <= a_max; ++a) {
    const int b_cap = cap / a;
    const int b_max = idx == k - 1 ? 1 : b_cap;
    if (b_max < 1) break;
    cur.a[idx] = a;
    for (int b = 1; b <= b_max; ++b) {
      cur.b[idx] = b;
      enumerate_pairs(k, cap, idx + 1, cur, best);
    }
  }
}

}  // namespace

RatioMinimum minimize_ratio(int k_max, int cap) {
  if (k_max < 2) throw ValidationError("length cap must be at least 2");
  if (cap < 3) throw ValidationError("cap must be at least 3");
  if (k_max > 4 || cap > 12) {
    double pairs_per_index = 0;
    for (int a = 1; a <= cap; ++a) pairs_per_index += cap / a;
    double total = 0, level = static_cast<double>(cap) * cap;
    for (int k = 2; k <= k_max; ++k, level *= pairs_per_index) total += level;
    throw ResourceRefusal(
        "refusing enumeration beyond k_max = 4, cap = 12 (requested space has "
        "about " + std::to_string(static_cast<long long>(total)) +
        " candidates)");
  }
  RatioMinimum best;
  for (int k = 2; k <= k_max; ++k) {
    SequencePair cur;
    cur.a.assign(k, 1);
    cur.b.assign(k, 1);
    cur.cap = cap;
    enumerate_pairs(k, cap, 0, cur, best);
  }
  return best;
}

SequencePair tight_sequence(int k) {
  if (k < 3)
    throw ValidationError("tight sequence needs k >= 3 so the cap reaches 3");
  SequencePair pair;
  pair.cap = std::ldexp(1.0, k - 1);
  for (int i = 1; i <= k; ++i) {
    pair.a.push_back(std::ldexp(1.0, i - 1));
    pair.b.push_back(std::ldexp(1.0, k - i));
  }
  return pair;
}

// ---------------------------------------------------------------------------
// Diagram reductions
// ---------------------------------------------------------------------------

namespace {

using Parts = std::vector<int>;  // padded with zeros past the last part

void strip_zeros(Parts& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Parts conj_parts(const Parts& v) {
  Parts in = v;
  strip_zeros(in);
  if (in.empty()) return {};
  Parts out;
  out.reserve(in[0]);
  int i = static_cast<int>(in.size());
  for (int j = 1; j <= in[0]; ++j) {
    while (i > 0 && in[i - 1] < j) --i;
    out.push_back(i);
  }
  return out;
}

int part_at(const Parts& v, std::size_t r) {
  return r < v.size() ? v[r] : 0;
}

// Delete every row with equal lengths in both diagrams.
bool delete_equal_rows(Parts& l, Parts& m) {
  Parts nl, nm;
  const std::size_t len = std::max(l.size(), m.size());
  bool changed = false;
  for (std::size_t r = 0; r < len; ++r) {
    const int a = part_at(l, r), b = part_at(m, r);
    if (a == b) {
      changed = changed || a != 0;
      continue;
    }
    nl.push_back(a);
    nm.push_back(b);
  }
  strip_zeros(nl);
  strip_zeros(nm);
  l = std::move(nl);
  m = std::move(nm);
  return changed;
}

// Rows, then columns, until neither pass changes anything.
void equal_line_fixpoint(Parts& l, Parts& m) {
  for (;;) {
    const bool rows = delete_equal_rows(l, m);
    Parts lc = conj_parts(l), mc = conj_parts(m);
    const bool cols = delete_equal_rows(lc, mc);
    if (cols) {
      l = conj_parts(lc);
      m = conj_parts(mc);
    }
    if (!rows && !cols) return;
  }
}

struct RawBlock {
  bool lam_long = false;  // whether l holds the longer rows
  std::size_t first = 0, last = 0;  // row range, contiguous after the fixpoint
};

std::vector<RawBlock> scan_blocks(const Parts& l, const Parts& m) {
  std::vector<RawBlock> blocks;
  const std::size_t len = std::max(l.size(), m.size());
  for (std::size_t r = 0; r < len; ++r) {
    const int a = part_at(l, r), b = part_at(m, r);
    if (a == b) continue;
    const bool lam_long = a > b;
    if (!blocks.empty() && blocks.back().lam_long == lam_long &&
        blocks.back().last + 1 == r) {
      blocks.back().last = r;
    } else {
      blocks.push_back({lam_long, r, r});
    }
  }
  return blocks;
}

// Reshape one block: every row gets the box width, except a remainder row,
// and the shorter diagram is cut back to the block's leftmost column within
// those rows (removing shaded intersection cells only).
void reshape_block(Parts& l, Parts& m, const RawBlock& blk) {
  Parts& longer = blk.lam_long ? l : m;
  Parts& shorter = blk.lam_long ? m : l;
  if (longer.size() <= blk.last) longer.resize(blk.last + 1, 0);
  if (shorter.size() <= blk.last) shorter.resize(blk.last + 1, 0);

  const int base = shorter[blk.last];
  const int width = longer[blk.first] - base;
  int area = 0;
  for (std::size_t r = blk.first; r <= blk.last; ++r)
    area += longer[r] - shorter[r];

  const int full_rows = area / width;
  const int remainder = area % width;
  for (std::size_t r = blk.first; r <= blk.last; ++r) {
    const int row_index = static_cast<int>(r - blk.first);
    int w = 0;
    if (row_index < full_rows) w = width;
    else if (row_index == full_rows) w = remainder;
    shorter[r] = base;
    longer[r] = base + w;
  }
}

// Move all cells of the topmost block into its first row; the vacated rows
// become equal-length and fall to the next fixpoint pass.
void flatten_top_block(Parts& l, Parts& m) {
  const auto blocks = scan_blocks(l, m);
  if (blocks.empty()) return;
  const RawBlock blk = blocks.front();
  if (blk.first == blk.last) return;
  Parts& longer = blk.lam_long ? l : m;
  Parts& shorter = blk.lam_long ? m : l;
  if (shorter.size() <= blk.last) shorter.resize(blk.last + 1, 0);
  int area = 0;
  for (std::size_t r = blk.first; r <= blk.last; ++r)
    area += part_at(longer, r) - part_at(shorter, r);
  longer[blk.first] = shorter[blk.first] + area;
  for (std::size_t r = blk.first + 1; r <= blk.last; ++r)
    longer[r] = shorter[r];
  strip_zeros(longer);
  strip_zeros(shorter);
}

}  // namespace

ReducedPair reduce_pair(const Partition& lam, const Partition& mu) {
  if (lam == mu)
    throw ValidationError("reduction needs two distinct partitions");
  Parts l = lam.parts(), m = mu.parts();

  equal_line_fixpoint(l, m);
  for (const RawBlock& blk : scan_blocks(l, m)) reshape_block(l, m, blk);
  equal_line_fixpoint(l, m);
  flatten_top_block(l, m);
  equal_line_fixpoint(l, m);
  {  // the bottom block is the top block of the conjugate pair
    Parts lc = conj_parts(l), mc = conj_parts(m);
    flatten_top_block(lc, mc);
    l = conj_parts(lc);
    m = conj_parts(mc);
  }
  equal_line_fixpoint(l, m);

  ReducedPair out;
  out.lam = Partition(l);
  out.mu = Partition(m);
  out.blocks = decompose_blocks(out.lam, out.mu);
  if (out.blocks.size() < 2)
    throw ValidationError(
        "reduction produced fewer than two blocks; the box sequences need at "
        "least two (equal-weight inputs always have them)");
  double max_prod = 0;
  for (const Block& blk : out.blocks) {
    out.boxes.a.push_back(blk.box_height);
    out.boxes.b.push_back(blk.box_width);
    max_prod = std::max(
        max_prod, static_cast<double>(blk.box_height) * blk.box_width);
  }
  out.boxes.cap = std::max(3.0, max_prod);
  return out;
}

// ---------------------------------------------------------------------------
// Continuous optimum and stationarity residuals
// ---------------------------------------------------------------------------

ContinuousOptimum continuous_optimum(int k, int ell1, int ell2, double c) {
  if (k < 1) throw ValidationError("interior length k must be positive");
  if (ell1 < 1 || ell2 < 1)
    throw ValidationError("boundary multiplicities must be positive");
  if (c <= 1) throw ValidationError("geometric ratio must exceed 1");
  ContinuousOptimum opt;
  opt.k = k;
  opt.ell1 = ell1;
  opt.ell2 = ell2;
  opt.c = c;
  opt.cap = std::pow(c, k - 1) * (c - 1) * (c - 1) * ell1 * ell2;
  for (int i = 0; i < ell1; ++i) {
    opt.a.push_back(1);
    opt.b.push_back(opt.cap);
  }
  for (int i = 1; i <= k; ++i) {
    opt.a.push_back((c - 1) * ell1 * std::pow(c, i - 1));
    opt.b.push_back((c - 1) * ell2 * std::pow(c, k - i));
  }
  for (int i = 0; i < ell2; ++i) {
    opt.a.push_back(opt.cap);
    opt.b.push_back(1);
  }
  return opt;
}

std::vector<double> kkt_residuals(const ContinuousOptimum& opt) {
  std::vector<double> res;
  res.reserve(opt.k);
  const int off = opt.ell1;  // interior entries start here
  double suffix_b = opt.ell2;
  for (int i = opt.k - 1; i >= 0; --i) suffix_b += opt.b[off + i];
  double prefix_a = opt.ell1;
  for (int i = 0; i < opt.k; ++i) {
    prefix_a += opt.a[off + i];
    const double lhs = opt.a[off + i] * suffix_b;
    const double rhs = opt.b[off + i] * prefix_a;
    res.push_back(std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
    suffix_b -= opt.b[off + i];
  }
  return res;
}

namespace {

long long gcd_ll(long long a, long long b) {
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

struct Rational {
  long long num = 0, den = 1;
  Rational(long long n = 0, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = gcd_ll(num == 0 ? 1 : num, den);
    num /= g;
    den /= g;
  }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return {x.num * y.den + y.num * x.den, x.den * y.den};
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return {x.num * y.den - y.num * x.den, x.den * y.den};
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {x.num * y.num, x.den * y.den};
  }
  bool is_zero() const { return num == 0; }
};

}  // namespace

bool kkt_identity_exact(int k, int ell1, int ell2, long long c_num,
                        long long c_den) {
  if (k < 1 || ell1 < 1 || ell2 < 1 || c_den <= 0 || c_num <= c_den)
    throw ValidationError("exact identity check needs k, ell >= 1 and c > 1");
  const Rational c(c_num, c_den);
  const Rational cm1 = c - Rational(1);
  std::vector<Rational> a(k), b(k);
  for (int i = 0; i < k; ++i) {
    Rational pa = cm1 * Rational(ell1), pb = cm1 * Rational(ell2);
    for (int p = 0; p < i; ++p) pa = pa * c;
    for (int p = 0; p < k - 1 - i; ++p) pb = pb * c;
    a[i] = pa;
    b[i] = pb;
  }
  Rational suffix_b(ell2);
  for (int i = 0; i < k; ++i) suffix_b = suffix_b + b[i];
  Rational prefix_a(ell1);
  for (int i = 0; i < k; ++i) {
    prefix_a = prefix_a + a[i];
    const Rational lhs = a[i] * suffix_b;
    const Rational rhs = b[i] * prefix_a;
    if (!(lhs - rhs).is_zero()) return false;
    suffix_b = suffix_b - b[i];
  }
  return true;
}

}  // namespace rsklip
