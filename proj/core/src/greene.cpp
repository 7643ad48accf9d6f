#include "rsklip/greene.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>

namespace rsklip {

namespace {

// Unit-capacity min-cost flow, SPFA-based successive shortest paths. Small
// graphs only; every augmentation pushes exactly one unit.
struct MinCostFlow {
  struct Edge {
    int to;
    int cap;
    int cost;
  };
  std::vector<Edge> edges;  // reverse edge at index ^ 1
  std::vector<std::vector<int>> adj;

  explicit MinCostFlow(int n) : adj(n) {}

  void add_edge(int u, int v, int cap, int cost) {
    adj[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap, cost});
    adj[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, 0, -cost});
  }

  // Sends one unit along a cheapest s→t path; returns its cost, or INT_MAX
  // when t is unreachable.
  int augment_unit(int s, int t) {
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(adj.size(), inf), from(adj.size(), -1);
    std::vector<char> inq(adj.size(), 0);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      inq[u] = 0;
      for (int id : adj[u]) {
        const Edge& e = edges[id];
        if (e.cap <= 0 || dist[u] == inf) continue;
        if (dist[u] + e.cost < dist[e.to]) {
          dist[e.to] = dist[u] + e.cost;
          from[e.to] = id;
          if (!inq[e.to]) {
            inq[e.to] = 1;
            queue.push_back(e.to);
          }
        }
      }
    }
    if (dist[t] == inf) return inf;
    for (int v = t; v != s;) {
      const int id = from[v];
      --edges[id].cap;
      ++edges[id ^ 1].cap;
      v = edges[id ^ 1].to;
    }
    return dist[t];
  }
};

}  // namespace

GreeneProfile greene_profile(const Permutation& pi) {
  const int n = pi.size();
  // Node layout: 0 source, 1..n entry side of each position, n+1..2n exit
  // side, 2n+1 sink. Each position's internal edge carries reward 1 (cost -1),
  // capacity 1, so one unit of flow traces one increasing subsequence and
  // j units trace j disjoint ones.
  MinCostFlow mcf(2 * n + 2);
  const int sink = 2 * n + 1;
  for (int i = 1; i <= n; ++i) {
    mcf.add_edge(0, i, 1, 0);
    mcf.add_edge(i, n + i, 1, -1);
    mcf.add_edge(n + i, sink, 1, 0);
  }
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      if (pi(i) < pi(k)) mcf.add_edge(n + i, k, 1, 0);

  GreeneProfile out;
  int total = 0;
  while (total < n) {
    const int cost = mcf.augment_unit(0, sink);
    if (cost == std::numeric_limits<int>::max()) break;
    total += -cost;
    out.mu.push_back(total);
  }
  std::vector<int> parts;
  parts.reserve(out.mu.size());
  for (std::size_t j = 0; j < out.mu.size(); ++j)
    parts.push_back(out.mu[j] - (j ? out.mu[j - 1] : 0));
  out.derived_shape = Partition(std::move(parts));
  return out;
}

int max_union_increasing(const Permutation& pi, int j) {
  if (j < 1 || j > pi.size())
    throw ValidationError("subsequence count j must lie in 1..n");
  const GreeneProfile prof = greene_profile(pi);
  return j <= static_cast<int>(prof.mu.size()) ? prof.mu[j - 1] : pi.size();
}

Partition greene_shape(const Permutation& pi) {
  return greene_profile(pi).derived_shape;
}

namespace {

// State: position index plus the sorted multiset of chain tails (0 = unused
// chain), packed into nibbles.
std::uint64_t pack_state(int pos, const std::vector<int>& tails) {
  std::uint64_t key = static_cast<std::uint64_t>(pos);
  for (int t : tails) key = (key << 4) | static_cast<std::uint64_t>(t);
  return key;
}

int best_assignment(const Permutation& pi, int pos, std::vector<int>& tails,
                    std::unordered_map<std::uint64_t, int>& memo) {
  const int n = pi.size();
  if (pos == n) return 0;
  const std::uint64_t key = pack_state(pos, tails);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int best = best_assignment(pi, pos + 1, tails, memo);  // skip this element
  const int v = pi(pos + 1);
  int prev_tail = -1;
  for (std::size_t c = 0; c < tails.size(); ++c) {
    if (tails[c] >= v || tails[c] == prev_tail) continue;
    prev_tail = tails[c];
    const int saved = tails[c];
    tails[c] = v;
    std::sort(tails.begin(), tails.end());
    best = std::max(best, 1 + best_assignment(pi, pos + 1, tails, memo));
    // Restore: remove v, reinsert saved, resort.
    *std::find(tails.begin(), tails.end(), v) = saved;
    std::sort(tails.begin(), tails.end());
  }
  memo.emplace(key, best);
  return best;
}

}  // namespace

int brute_force_max_union(const Permutation& pi, int j) {
  const int n = pi.size();
  if (n > 10)
    throw ResourceRefusal(
        "brute-force chain assignment is capped at n = 10 (state space grows "
        "past ~10^7 beyond that); use max_union_increasing instead");
  if (j < 1 || j > n)
    throw ValidationError("subsequence count j must lie in 1..n");
  std::vector<int> tails(j, 0);
  std::unordered_map<std::uint64_t, int> memo;
  return best_assignment(pi, 0, tails, memo);
}

Decomposition make_decomposition(std::vector<std::vector<int>> pieces,
                                 Direction direction) {
  std::vector<int> sizes;
  for (const auto& piece : pieces) {
    if (piece.empty())
      throw ValidationError("decomposition pieces must be nonempty");
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (piece[i] < 1)
        throw ValidationError("decomposition positions are 1-based");
      if (i > 0 && piece[i] <= piece[i - 1])
        throw ValidationError(
            "decomposition pieces must list positions in increasing order");
    }
    sizes.push_back(static_cast<int>(piece.size()));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  Decomposition d;
  d.pieces = std::move(pieces);
  d.direction = direction;
  d.sizes = Partition(std::move(sizes));
  return d;
}

namespace {

bool covers_exactly(const Decomposition& d, int n, std::string* why) {
  std::vector<char> seen(n + 1, 0);
  for (const auto& piece : d.pieces)
    for (int pos : piece) {
      if (pos > n) {
        *why = "piece position exceeds n";
        return false;
      }
      if (seen[pos]) {
        *why = "pieces overlap";
        return false;
      }
      seen[pos] = 1;
    }
  for (int pos = 1; pos <= n; ++pos)
    if (!seen[pos]) {
      *why = "pieces do not cover every position";
      return false;
    }
  return true;
}

bool monotone_pieces(const Permutation& pi, const Decomposition& d,
                     std::string* why) {
  for (const auto& piece : d.pieces)
    for (std::size_t i = 1; i < piece.size(); ++i) {
      const bool up = pi(piece[i - 1]) < pi(piece[i]);
      if (d.direction == Direction::increasing && !up) {
        *why = "an increasing piece decreases";
        return false;
      }
      if (d.direction == Direction::decreasing && up) {
        *why = "a decreasing piece increases";
        return false;
      }
    }
  return true;
}

}  // namespace

WitnessVerdict verify_witness(const Permutation& pi, const Decomposition& inc,
                              const Decomposition& dec) {
  WitnessVerdict v;
  v.shape = inc.sizes;
  auto fail = [&v](std::string why) {
    v.certified = false;
    v.reason = std::move(why);
    return v;
  };
  if (inc.direction != Direction::increasing ||
      dec.direction != Direction::decreasing)
    return fail("witness needs one increasing and one decreasing decomposition");
  std::string why;
  if (!covers_exactly(inc, pi.size(), &why))
    return fail("increasing decomposition: " + why);
  if (!covers_exactly(dec, pi.size(), &why))
    return fail("decreasing decomposition: " + why);
  if (!monotone_pieces(pi, inc, &why)) return fail(why);
  if (!monotone_pieces(pi, dec, &why)) return fail(why);
  if (dec.sizes != inc.sizes.conjugate())
    return fail("decreasing sizes are not the conjugate of increasing sizes");
  // Each increasing piece meets each decreasing piece in at most one element,
  // so the two partitions dominate each other's bounds cell by cell and the
  // derived shape is pinned to inc.sizes exactly.
  v.certified = true;
  return v;
}

}  // namespace rsklip
