#include "rsklip/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "rsklip/metrics.hpp"

namespace rsklip {

namespace {

struct CoreLayout {
  int k = 0;
  int n0 = 0;
  std::vector<ValueInterval> small;  // small[i-1] = s_i, |s_i| = 2i
  std::vector<ValueInterval> big;    // big[i-1] = b_i
  std::vector<int> inter;            // k+1 consecutive values, ascending
  std::vector<int> order;            // core one-line notation
};

// Largest odd k with (k+1)^2/2 <= cap.
int largest_odd_k(int cap) {
  int k = 1;
  while ((k + 3) * (k + 3) / 2 <= cap) k += 2;
  return k;
}

CoreLayout build_core(int k) {
  CoreLayout core;
  core.k = k;
  core.n0 = (k + 1) * (k + 1) / 2;
  const int h = (k - 1) / 2;
  const int mid = core.n0 / 2;

  core.small.resize(h);
  int cursor = 1;
  for (int i = h; i >= 1; --i) {  // ascending values fill s_h first
    core.small[i - 1] = {cursor, cursor + 2 * i - 1};
    cursor += 2 * i;
  }
  for (int v = mid - h; v <= mid + h + 1; ++v) core.inter.push_back(v);
  cursor = mid + h + 2;
  for (int i = 1; i <= h; ++i) {
    core.big.push_back({cursor, cursor + 2 * i - 1});
    cursor += 2 * i;
  }

  auto push_interval = [&core](const ValueInterval& iv) {
    for (int v = iv.lo; v <= iv.hi; ++v) core.order.push_back(v);
  };
  for (int i = 1; i <= h; ++i) {
    core.order.push_back(core.inter[i - 1]);
    push_interval(core.big[h - i]);
  }
  core.order.push_back(core.inter[h]);
  core.order.push_back(core.inter[h + 1]);
  for (int i = 1; i <= h; ++i) {
    push_interval(core.small[i - 1]);
    core.order.push_back(core.inter[h + 1 + i]);
  }
  return core;
}

Partition pad_first_row(const Partition& p, int extra) {
  if (extra == 0) return p;
  std::vector<int> parts = p.parts();
  parts[0] += extra;
  return Partition(std::move(parts));
}

}  // namespace

std::pair<Partition, Partition> expected_shapes(int k) {
  if (k < 1 || k % 2 == 0)
    throw ValidationError("expected shapes are defined for odd k >= 1");
  std::vector<int> lam{k + 1}, mu;
  for (int v = k - 1; v >= 2; v -= 2) {
    lam.push_back(v);
    lam.push_back(v);
  }
  for (int v = k; v >= 1; v -= 2) {
    mu.push_back(v);
    mu.push_back(v);
  }
  return {Partition(std::move(lam)), Partition(std::move(mu))};
}

T1Construction construct_t1(int n) {
  if (n < 2) throw ValidationError("construction needs n >= 2");
  const int k = largest_odd_k(n);
  CoreLayout core = build_core(k);

  std::vector<int> values = core.order;
  for (int v = core.n0 + 1; v <= n; ++v) values.push_back(v);
  Permutation pi(std::move(values));
  Permutation tau = apply_adjacent(pi, core.n0 / 2, Side::left);

  auto [core_lam, core_mu] = expected_shapes(k);
  Partition lam = pad_first_row(core_lam, n - core.n0);
  Partition mu = pad_first_row(core_mu, n - core.n0);

  return T1Construction{.n = n,
                        .k = k,
                        .core_n = core.n0,
                        .pi = std::move(pi),
                        .tau = std::move(tau),
                        .core_lam = std::move(core_lam),
                        .core_mu = std::move(core_mu),
                        .lam = std::move(lam),
                        .mu = std::move(mu),
                        .small_blocks = std::move(core.small),
                        .big_blocks = std::move(core.big),
                        .intermediates = {core.inter.front(), core.inter.back()}};
}

namespace {

// Positions (1-based) of each value in a one-line word.
std::vector<int> position_index(const std::vector<int>& word) {
  std::vector<int> pos(word.size() + 1);
  for (std::size_t i = 0; i < word.size(); ++i) pos[word[i]] = static_cast<int>(i) + 1;
  return pos;
}

Decomposition pieces_from_values(const std::vector<std::vector<int>>& by_value,
                                 const std::vector<int>& pos,
                                 Direction direction) {
  std::vector<std::vector<int>> pieces;
  for (const auto& vals : by_value) {
    if (vals.empty()) continue;
    std::vector<int> piece;
    piece.reserve(vals.size());
    for (int v : vals) piece.push_back(pos[v]);
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return make_decomposition(std::move(pieces), direction);
}

}  // namespace

ConstructionWitness construction_decompositions(int k) {
  if (k < 3 || k % 2 == 0)
    throw ValidationError(
        "decompositions are defined for odd k >= 3 (the k = 1 pair has no "
        "small/big blocks)");
  CoreLayout core = build_core(k);
  const int h = (k - 1) / 2;
  const auto pos_pi = position_index(core.order);
  std::vector<int> tau_order = core.order;
  {  // the middle swap acts on values, so positions of all others are shared
    auto a = std::find(tau_order.begin(), tau_order.end(), core.n0 / 2);
    auto b = std::find(tau_order.begin(), tau_order.end(), core.n0 / 2 + 1);
    std::iter_swap(a, b);
  }
  const auto pos_tau = position_index(tau_order);

  auto interval_values = [](const ValueInterval& iv) {
    std::vector<int> vals(iv.size());
    std::iota(vals.begin(), vals.end(), iv.lo);
    return vals;
  };

  // Increasing pieces for pi: all intermediates in one run, plus every small
  // and big block.
  std::vector<std::vector<int>> pi_inc{core.inter};
  for (const auto& iv : core.small) pi_inc.push_back(interval_values(iv));
  for (const auto& iv : core.big) pi_inc.push_back(interval_values(iv));

  // Increasing pieces for tau: each m_i rides with the big block after it,
  // each small block with the intermediate after it; the two middle values
  // stand alone.
  std::vector<std::vector<int>> tau_inc;
  for (int i = 1; i <= h; ++i) {
    std::vector<int> piece{core.inter[i - 1]};
    for (int v : interval_values(core.big[h - i])) piece.push_back(v);
    tau_inc.push_back(std::move(piece));
  }
  for (int i = 1; i <= h; ++i) {
    std::vector<int> piece = interval_values(core.small[i - 1]);
    piece.push_back(core.inter[h + 1 + i]);
    tau_inc.push_back(std::move(piece));
  }
  tau_inc.push_back({core.inter[h + 1]});
  tau_inc.push_back({core.inter[h]});

  // Decreasing pieces d_1..d_{k+1} for pi: the i-th largest element of every
  // small and big block joins d_i; the lower half of the intermediates goes
  // to d_k, d_{k-2}, ..., d_1 and the upper half to d_2, d_4, ..., d_{k+1}.
  std::vector<std::vector<int>> d(k + 1);
  auto spread_desc = [](const ValueInterval& iv, std::vector<std::vector<int>>& out) {
    for (int rank = 1; rank <= iv.size(); ++rank)
      out[rank - 1].push_back(iv.hi - rank + 1);
  };
  for (const auto& iv : core.small) spread_desc(iv, d);
  for (const auto& iv : core.big) spread_desc(iv, d);
  for (int i = 1; i <= h + 1; ++i) d[k - 2 * (i - 1) - 1].push_back(core.inter[i - 1]);
  for (int i = 1; i <= h + 1; ++i) d[2 * i - 1].push_back(core.inter[h + i]);

  // Decreasing pieces f_1..f_k for tau: big blocks spread as before; the
  // smallest element of s_j drops to f_{2j+1} and the rest spread from f_1;
  // lower intermediates go to f_k, f_{k-2}, ..., f_3, upper ones to
  // f_2, f_4, ..., f_{k-1}, and the two middle values join f_1.
  std::vector<std::vector<int>> f(k);
  for (const auto& iv : core.big) spread_desc(iv, f);
  for (int j = 1; j <= h; ++j) {
    const ValueInterval& iv = core.small[j - 1];
    f[2 * j].push_back(iv.lo);
    for (int rank = 1; rank < iv.size(); ++rank)
      f[rank - 1].push_back(iv.hi - rank + 1);
  }
  for (int i = 1; i <= h; ++i) f[k - 2 * (i - 1) - 1].push_back(core.inter[i - 1]);
  for (int i = 1; i <= h; ++i) f[2 * i - 1].push_back(core.inter[h + 1 + i]);
  f[0].push_back(core.inter[h + 1]);
  f[0].push_back(core.inter[h]);

  return ConstructionWitness{
      .k = k,
      .core_n = core.n0,
      .pi_increasing = pieces_from_values(pi_inc, pos_pi, Direction::increasing),
      .pi_decreasing = pieces_from_values(d, pos_pi, Direction::decreasing),
      .tau_increasing = pieces_from_values(tau_inc, pos_tau, Direction::increasing),
      .tau_decreasing = pieces_from_values(f, pos_tau, Direction::decreasing)};
}

ConstructionWitness padded_decompositions(const T1Construction& c) {
  ConstructionWitness w = construction_decompositions(c.k);
  if (c.n == c.core_n) return w;

  // Padding values sit at positions core_n+1..n and equal their positions.
  auto extend_first = [&](Decomposition& dec) {
    std::vector<std::vector<int>> pieces = dec.pieces;
    for (int p = c.core_n + 1; p <= c.n; ++p) pieces.front().push_back(p);
    dec = make_decomposition(std::move(pieces), dec.direction);
  };
  auto add_singletons = [&](Decomposition& dec) {
    std::vector<std::vector<int>> pieces = dec.pieces;
    for (int p = c.core_n + 1; p <= c.n; ++p) pieces.push_back({p});
    dec = make_decomposition(std::move(pieces), dec.direction);
  };
  extend_first(w.pi_increasing);
  extend_first(w.tau_increasing);
  add_singletons(w.pi_decreasing);
  add_singletons(w.tau_decreasing);
  return w;
}

GeneralTConstruction construct_general_t(int n, int t) {
  if (t < 1 || 2 * t > n)
    throw ValidationError("swap budget t must lie in 1..n/2");
  const int k = largest_odd_k(n / t);
  const int m = (k + 1) * (k + 1) / 2;
  CoreLayout core = build_core(k);

  std::vector<int> pi_vals, tau_vals;
  pi_vals.reserve(n);
  for (int copy = 0; copy < t; ++copy)
    for (int v : core.order) pi_vals.push_back(v + copy * m);
  for (int v = m * t + 1; v <= n; ++v) pi_vals.push_back(v);
  tau_vals = pi_vals;
  for (int copy = 0; copy < t; ++copy) {
    const int lo_val = copy * m + m / 2;
    for (int& v : tau_vals) {
      if (v == lo_val) v = lo_val + 1;
      else if (v == lo_val + 1) v = lo_val;
    }
  }

  auto [core_lam, core_mu] = expected_shapes(k);
  auto scale = [](const Partition& p, int factor) {
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= factor;
    return Partition(std::move(parts));
  };
  Partition lam = pad_first_row(scale(core_lam, t), n - m * t);
  Partition mu = pad_first_row(scale(core_mu, t), n - m * t);

  return GeneralTConstruction{.n = n,
                              .t = t,
                              .k = k,
                              .block_size = m,
                              .pi = Permutation(std::move(pi_vals)),
                              .tau = Permutation(std::move(tau_vals)),
                              .lam = std::move(lam),
                              .mu = std::move(mu)};
}

}  // namespace rsklip
