#include "rsklip/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "rsklip/rng.hpp"
#include "rsklip/seq_lemma.hpp"

namespace rsklip {

namespace {

// ---- permutation ranking (factorial number system), n <= 12 ----

const long long kFactorial[13] = {1,      1,       2,        6,        24,
                                  120,    720,     5040,     40320,    362880,
                                  3628800, 39916800, 479001600};

long long rank_of(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  long long r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += v[j] < v[i];
    r += smaller * kFactorial[n - 1 - i];
  }
  return r;
}

std::vector<int> unrank(int n, long long r) {
  std::vector<int> pool(n), out;
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const long long f = kFactorial[i];
    const int idx = static_cast<int>(r / f);
    r %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return out;
}

// ---- packed shapes (parts and counts <= 15) ----

std::uint64_t pack_shape(const Partition& p) {
  std::uint64_t key = 0;
  for (int part : p.parts()) key = (key << 4) | static_cast<std::uint64_t>(part);
  return key;
}

int unpack_shape(std::uint64_t key, int* parts) {
  int len = 0;
  while (key) {
    parts[len++] = static_cast<int>(key & 0xf);
    key >>= 4;
  }
  std::reverse(parts, parts + len);
  return len;
}

int packed_twice_delta(std::uint64_t ka, std::uint64_t kb) {
  int a[16], b[16];
  const int la = unpack_shape(ka, a), lb = unpack_shape(kb, b);
  int total = 0;
  for (int i = 0; i < std::max(la, lb); ++i)
    total += std::abs((i < la ? a[i] : 0) - (i < lb ? b[i] : 0));
  return total;
}

// At most one surplus cell per row and per column of the union.
bool rowcol_within_one(std::uint64_t ka, std::uint64_t kb) {
  int a[16], b[16];
  const int la = unpack_shape(ka, a), lb = unpack_shape(kb, b);
  const int len = std::max(la, lb);
  for (int i = 0; i < len; ++i)
    if (std::abs((i < la ? a[i] : 0) - (i < lb ? b[i] : 0)) > 1) return false;
  // Column check via conjugates.
  const int w = std::max(la ? a[0] : 0, lb ? b[0] : 0);
  int ia = la, ib = lb;
  for (int j = 1; j <= w; ++j) {
    while (ia > 0 && a[ia - 1] < j) --ia;
    while (ib > 0 && b[ib - 1] < j) --ib;
    if (std::abs(ia - ib) > 1) return false;
  }
  return true;
}

// ---- pair symmetries ----

std::vector<int> reverse_word(const std::vector<int>& v) {
  return {v.rbegin(), v.rend()};
}

std::vector<int> complement_word(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = n + 1 - v[i];
  return out;
}

std::vector<int> invert_word(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[v[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

using WordPair = std::pair<std::vector<int>, std::vector<int>>;

WordPair orbit_min(const WordPair& start, bool include_inverse) {
  std::set<WordPair> seen{start};
  std::vector<WordPair> frontier{start};
  while (!frontier.empty()) {
    std::vector<WordPair> next;
    for (const WordPair& wp : frontier) {
      std::vector<WordPair> images{
          {reverse_word(wp.first), reverse_word(wp.second)},
          {complement_word(wp.first), complement_word(wp.second)},
          {wp.second, wp.first}};
      if (include_inverse)
        images.push_back({invert_word(wp.first), invert_word(wp.second)});
      for (WordPair& im : images)
        if (seen.insert(im).second) next.push_back(std::move(im));
    }
    frontier = std::move(next);
  }
  return *seen.begin();
}

}  // namespace

std::pair<Permutation, Permutation> canonicalize_pair(const Permutation& pi,
                                                      const Permutation& tau) {
  if (pi.size() != tau.size())
    throw ValidationError("canonical form needs permutations of equal size");
  WordPair canon = orbit_min({pi.values(), tau.values()}, true);
  return {Permutation(std::move(canon.first)), Permutation(std::move(canon.second))};
}

namespace {

struct ChunkOutcome {
  int max_delta = -1;
  long long evaluated = 0;
  long long attaining = 0;
  long long rowcol_violations = 0;
  std::set<WordPair> witnesses;  // canonical, only for the current max
};

// True when v is the lexicographic minimum of its orbit under reversing,
// complementing, and both combined (the symmetries that fix the swap set).
bool is_orbit_min_single(const std::vector<int>& v) {
  const std::vector<int> r = reverse_word(v);
  const std::vector<int> c = complement_word(v);
  if (r < v || c < v) return false;
  return reverse_word(c) >= v;
}

void scan_range(int n, Side side, bool prune, long long lo, long long hi,
                const std::vector<std::uint64_t>& shapes, ChunkOutcome& out) {
  std::vector<int> perm = unrank(n, lo);
  std::vector<int> tau(n);
  for (long long r = lo; r < hi; ++r) {
    if (!prune || is_orbit_min_single(perm)) {
      const std::uint64_t sp = shapes[r];
      for (int i = 1; i < n; ++i) {
        tau = perm;
        if (side == Side::right) {
          std::swap(tau[i - 1], tau[i]);
        } else {
          int pa = -1, pb = -1;
          for (int p = 0; p < n; ++p) {
            if (tau[p] == i) pa = p;
            if (tau[p] == i + 1) pb = p;
          }
          std::swap(tau[pa], tau[pb]);
        }
        const std::uint64_t st = shapes[rank_of(tau)];
        const int d = packed_twice_delta(sp, st) / 2;
        ++out.evaluated;
        if (!rowcol_within_one(sp, st)) ++out.rowcol_violations;
        if (d > out.max_delta) {
          out.max_delta = d;
          out.attaining = 0;
          out.witnesses.clear();
        }
        if (d == out.max_delta) {
          ++out.attaining;
          if (out.witnesses.size() < 4096)
            out.witnesses.insert(orbit_min({perm, tau}, false));
        }
      }
    }
    std::next_permutation(perm.begin(), perm.end());
  }
}

}  // namespace

ExhaustiveResult exhaustive_t1(int n, Side side, bool prune_symmetry,
                               int workers) {
  if (n < 2) throw ValidationError("exhaustive scan needs n >= 2");
  if (n > 9)
    throw ResourceRefusal(
        "exhaustive scan is capped at n = 9 (n! * (n-1) pair evaluations; "
        "n = 10 already needs ~3.3e7 insertions per sweep times 9 swaps)");
  const long long total = kFactorial[n];

  // Shape of every permutation, indexed by rank.
  std::vector<std::uint64_t> shapes(total);
  {
    std::vector<int> perm = unrank(n, 0);
    for (long long r = 0; r < total; ++r) {
      shapes[r] = pack_shape(shape_of(Permutation(perm)));
      std::next_permutation(perm.begin(), perm.end());
    }
  }

  workers = std::max(1, std::min<int>(workers, 16));
  std::vector<ChunkOutcome> outcomes(workers);
  {
    std::vector<std::thread> pool;
    const long long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long long lo = std::min<long long>(w * chunk, total);
      const long long hi = std::min<long long>(lo + chunk, total);
      pool.emplace_back([&, lo, hi, w] {
        scan_range(n, side, prune_symmetry, lo, hi, shapes, outcomes[w]);
      });
    }
    for (auto& th : pool) th.join();
  }

  ExhaustiveResult res;
  res.n = n;
  res.side = side;
  res.pruned = prune_symmetry;
  res.bound = std::sqrt(n / 2.0);
  std::set<WordPair> merged;
  for (const ChunkOutcome& oc : outcomes) {
    res.evaluated += oc.evaluated;
    res.rowcol_violations += oc.rowcol_violations;
    if (oc.max_delta > res.max_delta) {
      res.max_delta = oc.max_delta;
      res.attaining = 0;
      merged.clear();
    }
    if (oc.max_delta == res.max_delta) {
      res.attaining += oc.attaining;
      merged.insert(oc.witnesses.begin(), oc.witnesses.end());
    }
  }
  for (const WordPair& wp : merged) {
    Witness w;
    w.pi = wp.first;
    w.tau = wp.second;
    w.lam = shape_of(Permutation(wp.first));
    w.mu = shape_of(Permutation(wp.second));
    w.delta = res.max_delta;
    res.witnesses.push_back(std::move(w));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Walk sweeps
// ---------------------------------------------------------------------------

namespace {

int cayley_distance(const Permutation& pi, const Permutation& tau) {
  const std::vector<int> word = compose(tau, pi.inverse()).values();
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(n + 1, 0);
  int cycles = 0;
  for (int v = 1; v <= n; ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (int u = v; !seen[u]; u = word[u - 1]) seen[u] = 1;
  }
  return n - cycles;
}

struct StepOutcome {
  int increasing_steps = 0;  // swaps leaving the pair in increasing order
  int decreasing_steps = 0;
  int sum_step_delta = 0;
  Permutation end;
};

StepOutcome walk_adjacent(const Permutation& start, int t, Side side,
                          SplitRng& rng) {
  Permutation cur = start;
  Partition prev = shape_of(cur);
  StepOutcome out{0, 0, 0, cur};
  for (int step = 0; step < t; ++step) {
    const int i = 1 + rng.below(start.size() - 1);
    bool increasing_before;
    if (side == Side::right) {
      increasing_before = cur(i) < cur(i + 1);
    } else {
      int pa = 0, pb = 0;
      for (int p = 1; p <= cur.size(); ++p) {
        if (cur(p) == i) pa = p;
        if (cur(p) == i + 1) pb = p;
      }
      increasing_before = pa < pb;
    }
    // A swap of an increasing pair leaves it decreasing, and vice versa.
    if (increasing_before) ++out.decreasing_steps;
    else ++out.increasing_steps;
    cur = apply_adjacent(cur, i, side);
    Partition next = shape_of(cur);
    out.sum_step_delta += delta(prev, next);
    prev = std::move(next);
  }
  out.end = std::move(cur);
  return out;
}

StepOutcome walk_general(const Permutation& start, int t, SplitRng& rng) {
  Permutation cur = start;
  Partition prev = shape_of(cur);
  StepOutcome out{0, 0, 0, cur};
  const int n = start.size();
  for (int step = 0; step < t; ++step) {
    int u = 1 + rng.below(n);
    int v = 1 + rng.below(n - 1);
    if (v >= u) ++v;
    std::vector<int> word = cur.values();
    for (int& x : word) {
      if (x == u) x = v;
      else if (x == v) x = u;
    }
    cur = Permutation(std::move(word));
    Partition next = shape_of(cur);
    out.sum_step_delta += delta(prev, next);
    prev = std::move(next);
  }
  out.end = std::move(cur);
  return out;
}

SweepReport run_sweep(const SweepParams& params, bool adjacent) {
  if (params.n < 2) throw ValidationError("sweep needs n >= 2");
  if (params.t < 0) throw ValidationError("step count must be nonnegative");
  if (params.trials < 1) throw ValidationError("sweep needs at least 1 trial");

  SweepReport rep;
  rep.params = params;
  rep.walk_kind = adjacent ? "adjacent" : "general";
  rep.trials.resize(params.trials);

  const double cap = params.t * std::sqrt(params.n / 2.0);
  const double envelope = std::sqrt(
      static_cast<double>(params.n) * std::max(params.t, 1) *
      std::log(std::max(params.t, 3)));

  const int workers = std::max(1, std::min(params.workers, 64));
  std::vector<SweepReport> partial(workers);
  auto run_chunk = [&](long long lo, long long hi, SweepReport& acc) {
    for (long long trial = lo; trial < hi; ++trial) {
      SplitRng rng(params.seed, static_cast<std::uint64_t>(trial));
      const Permutation start = random_permutation(params.n, rng);
      const StepOutcome walk =
          adjacent ? walk_adjacent(start, params.t, params.side, rng)
                   : walk_general(start, params.t, rng);
      const Partition lam = shape_of(start), mu = shape_of(walk.end);
      const int d = delta(lam, mu);

      if (adjacent) {
        if (d > cap + 1e-9) ++acc.cap_violations;
        if (!check_prefix_inequalities(lam, mu, walk.increasing_steps,
                                       walk.decreasing_steps)
                 .holds)
          ++acc.prefix_violations;
        const std::vector<Block> raw_blocks = decompose_blocks(lam, mu);
        for (const Block& blk : raw_blocks)
          if (blk.area > params.t) ++acc.block_area_violations;
        // The reduction keeps the block count, so two raw blocks guarantee
        // the reduced pair meets reduce_pair's two-block requirement.
        if (raw_blocks.size() >= 2) {
          const ReducedPair red = reduce_pair(lam, mu);
          for (const Block& blk : red.blocks)
            if (blk.box_height * blk.box_width > 2 * params.t)
              ++acc.box_violations;
        }
      } else {
        if (!check_prefix_inequalities(lam, mu, 2 * params.t, 2 * params.t)
                 .holds)
          ++acc.prefix_violations;
      }
      if (d > walk.sum_step_delta) ++acc.triangle_violations;

      const int realized = adjacent
                               ? adjacent_distance(start, walk.end, params.side)
                               : cayley_distance(start, walk.end);
      TrialRecord& rec = rep.trials[trial];
      rec.trial = trial;
      rec.realized_d = realized;
      rec.delta = d;
      rec.ratio = realized > 0 ? static_cast<double>(d) / realized : 0.0;
    }
  };

  {
    std::vector<std::thread> pool;
    const long long chunk = (params.trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long long lo = std::min<long long>(w * chunk, params.trials);
      const long long hi = std::min<long long>(lo + chunk, params.trials);
      pool.emplace_back([&, lo, hi, w] { run_chunk(lo, hi, partial[w]); });
    }
    for (auto& th : pool) th.join();
  }
  for (const SweepReport& p : partial) {
    rep.cap_violations += p.cap_violations;
    rep.prefix_violations += p.prefix_violations;
    rep.triangle_violations += p.triangle_violations;
    rep.block_area_violations += p.block_area_violations;
    rep.box_violations += p.box_violations;
  }
  double sum = 0;
  for (const TrialRecord& rec : rep.trials) {
    rep.max_delta = std::max(rep.max_delta, rec.delta);
    sum += rec.delta;
    rep.max_envelope_ratio =
        std::max(rep.max_envelope_ratio, rec.delta / envelope);
  }
  rep.mean_delta = sum / static_cast<double>(params.trials);
  return rep;
}

}  // namespace

SweepReport random_walk_sweep(const SweepParams& params) {
  return run_sweep(params, true);
}

SweepReport general_transposition_sweep(const SweepParams& params) {
  return run_sweep(params, false);
}

RecordedExampleReport verify_recorded_example() {
  Permutation pi(std::vector<int>{13, 14, 10, 15, 6, 1, 18, 2, 16, 9, 11, 12,
                                  3, 7, 17, 8, 4, 5});
  Permutation tau = apply_adjacent(pi, 10, Side::right);
  Partition lam = shape_of(pi), mu = shape_of(tau);
  RecordedExampleReport rep{.pi = std::move(pi),
                         .tau = std::move(tau),
                         .lam = lam,
                         .mu = mu};
  rep.delta = delta(lam, mu);
  rep.right_distance = adjacent_distance(rep.pi, rep.tau, Side::right);
  rep.delta_is_three = rep.delta == 3;
  rep.distance_is_one = rep.right_distance == 1;
  rep.shapes_mutually_conjugate = lam == mu.conjugate();
  rep.observation =
      rep.shapes_mutually_conjugate
          ? "shapes are mutually conjugate like the constructed family"
          : "shapes are not mutually conjugate, so this maximizer does not "
            "carry the constructed conjugate increasing/decreasing witness";
  return rep;
}

}  // namespace rsklip
