#include "trn/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <string>

#include "trn/rng.hpp"

namespace trn {

Tournament rotational_regular(int n) {
  if (n < 1)
    throw Error(Errc::precondition_violated,
                "rotational construction needs n >= 1");
  int p = 2 * n + 1;
  if (p > kMaxOrder)
    throw Error(Errc::order_too_large,
                "order " + std::to_string(p) + " exceeds the maximum " +
                    std::to_string(kMaxOrder));
  std::vector<VertexSet> out(static_cast<size_t>(p), 0);
  for (int i = 0; i < p; ++i)
    for (int j = 1; j <= n; ++j)
      out[static_cast<size_t>(i)] |= vbit((i + j) % p);
  return Tournament::from_out_sets(p, std::move(out));
}

Tournament random_tournament(int p, std::uint64_t seed) {
  if (p < 1)
    throw Error(Errc::precondition_violated, "order must be at least 1");
  if (p > kMaxOrder)
    throw Error(Errc::order_too_large,
                "order " + std::to_string(p) + " exceeds the maximum " +
                    std::to_string(kMaxOrder));
  Rng rng(seed);
  std::vector<VertexSet> out(static_cast<size_t>(p), 0);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      if (rng.coin())
        out[static_cast<size_t>(i)] |= vbit(j);
      else
        out[static_cast<size_t>(j)] |= vbit(i);
    }
  return Tournament::from_out_sets(p, std::move(out));
}

namespace {

bool arc_in_rows(const std::vector<VertexSet>& rows, int u, int v) {
  return set_contains(rows[static_cast<size_t>(u)], v);
}

void flip_arc(std::vector<VertexSet>& rows, int u, int v) {
  // u -> v becomes v -> u
  rows[static_cast<size_t>(u)] &= ~vbit(v);
  rows[static_cast<size_t>(v)] |= vbit(u);
}

// Reverses one uniformly random directed 3-cycle (sampled by rejection over
// vertex triples; every cyclic triangle is equally likely). Returns false
// when the sampled triple was transitive.
bool try_three_cycle_reversal(std::vector<VertexSet>& rows, int p, Rng& rng) {
  int a = rng.below(p), b = rng.below(p), c = rng.below(p);
  if (a == b || b == c || a == c) return false;
  bool ab = arc_in_rows(rows, a, b);
  bool bc = arc_in_rows(rows, b, c);
  bool ca = arc_in_rows(rows, c, a);
  if (ab != bc || bc != ca) return false;  // transitive triple
  if (ab) {
    flip_arc(rows, a, b);
    flip_arc(rows, b, c);
    flip_arc(rows, c, a);
  } else {
    flip_arc(rows, b, a);
    flip_arc(rows, c, b);
    flip_arc(rows, a, c);
  }
  return true;
}

}  // namespace

Tournament random_regular(int n, const SamplerConfig& cfg) {
  Tournament start = rotational_regular(n);
  int p = start.order();
  std::vector<VertexSet> rows(static_cast<size_t>(p));
  for (int v = 0; v < p; ++v) rows[static_cast<size_t>(v)] = start.out_set(v);

  int steps = cfg.mix_steps >= 0 ? cfg.mix_steps : 10 * p * p;
  Rng rng(cfg.seed);
  int accepted = 0;
  while (accepted < steps)
    if (try_three_cycle_reversal(rows, p, rng)) ++accepted;
  return Tournament::from_out_sets(p, std::move(rows));
}

namespace {

// Any tournament on m vertices whose outdegrees are as balanced as parity
// allows; used for the completion block of an embedding.
std::vector<VertexSet> near_regular_rows(int m) {
  std::vector<VertexSet> rows(static_cast<size_t>(m), 0);
  if (m <= 1) return rows;
  if (m % 2 == 1) {
    int half = (m - 1) / 2;
    for (int i = 0; i < m; ++i)
      for (int j = 1; j <= half; ++j)
        rows[static_cast<size_t>(i)] |= vbit((i + j) % m);
    return rows;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 1; j < m / 2; ++j)
      rows[static_cast<size_t>(i)] |= vbit((i + j) % m);
  for (int i = 0; i < m / 2; ++i)
    rows[static_cast<size_t>(i)] |= vbit(i + m / 2);
  return rows;
}

// Plain BFS max-flow on a dense integer capacity matrix; the networks here
// have at most 2 + 2 * kMaxOrder nodes.
struct MaxFlow {
  int n;
  std::vector<std::vector<int>> cap;

  explicit MaxFlow(int nodes)
      : n(nodes), cap(static_cast<size_t>(nodes),
                      std::vector<int>(static_cast<size_t>(nodes), 0)) {}

  void add(int u, int v, int c) { cap[static_cast<size_t>(u)][static_cast<size_t>(v)] += c; }

  int run(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<int> prev(static_cast<size_t>(n), -1);
      prev[static_cast<size_t>(s)] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && prev[static_cast<size_t>(t)] < 0) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
          if (prev[static_cast<size_t>(v)] < 0 &&
              cap[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0) {
            prev[static_cast<size_t>(v)] = u;
            q.push(v);
          }
      }
      if (prev[static_cast<size_t>(t)] < 0) return total;
      int bottleneck = INT32_MAX;
      for (int v = t; v != s; v = prev[static_cast<size_t>(v)])
        bottleneck = std::min(
            bottleneck, cap[static_cast<size_t>(prev[static_cast<size_t>(v)])]
                           [static_cast<size_t>(v)]);
      for (int v = t; v != s; v = prev[static_cast<size_t>(v)]) {
        int u = prev[static_cast<size_t>(v)];
        cap[static_cast<size_t>(u)][static_cast<size_t>(v)] -= bottleneck;
        cap[static_cast<size_t>(v)][static_cast<size_t>(u)] += bottleneck;
      }
      total += bottleneck;
    }
  }
};

// Tries to finish the embedding with the given block on the added vertices.
// Returns empty rows when the orientation problem is infeasible.
std::vector<VertexSet> complete_with_block(const Tournament& h, int q,
                                           const std::vector<VertexSet>& block) {
  int p = h.order();
  int m = q - p;
  int s = (q - 1) / 2;

  std::vector<int> need_out(static_cast<size_t>(p));  // old -> added arcs
  for (int i = 0; i < p; ++i) {
    need_out[static_cast<size_t>(i)] = s - h.outdegree(i);
    if (need_out[static_cast<size_t>(i)] < 0 ||
        need_out[static_cast<size_t>(i)] > m)
      return {};
  }
  std::vector<int> need_in(static_cast<size_t>(m));  // old -> this added vertex
  for (int a = 0; a < m; ++a) {
    int within = std::popcount(block[static_cast<size_t>(a)]);
    int toward_old = s - within;
    if (toward_old < 0 || toward_old > p) return {};
    need_in[static_cast<size_t>(a)] = p - toward_old;
  }

  int total = std::accumulate(need_out.begin(), need_out.end(), 0);
  if (total != std::accumulate(need_in.begin(), need_in.end(), 0)) return {};

  // source -> old vertex -> added vertex -> sink
  int src = p + m, snk = p + m + 1;
  MaxFlow flow(p + m + 2);
  for (int i = 0; i < p; ++i) flow.add(src, i, need_out[static_cast<size_t>(i)]);
  for (int i = 0; i < p; ++i)
    for (int a = 0; a < m; ++a) flow.add(i, p + a, 1);
  for (int a = 0; a < m; ++a) flow.add(p + a, snk, need_in[static_cast<size_t>(a)]);
  if (flow.run(src, snk) != total) return {};

  std::vector<VertexSet> rows(static_cast<size_t>(q), 0);
  for (int i = 0; i < p; ++i) rows[static_cast<size_t>(i)] = h.out_set(i);
  for (int a = 0; a < m; ++a)
    for (VertexSet w = block[static_cast<size_t>(a)]; w; w &= w - 1)
      rows[static_cast<size_t>(p + a)] |= vbit(p + std::countr_zero(w));
  for (int i = 0; i < p; ++i)
    for (int a = 0; a < m; ++a) {
      // saturated unit edge <=> arc old -> added
      if (flow.cap[static_cast<size_t>(i)][static_cast<size_t>(p + a)] == 0)
        rows[static_cast<size_t>(i)] |= vbit(p + a);
      else
        rows[static_cast<size_t>(p + a)] |= vbit(i);
    }
  return rows;
}

}  // namespace

MoonEmbedding moon_embed(const Tournament& h) {
  int p = h.order();
  if (p < 2)
    throw Error(Errc::precondition_violated, "embedding needs order >= 2");
  int m = degree_summary(h).irregularity;

  MoonEmbedding result{h, {}, 0};
  result.embed.resize(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) result.embed[static_cast<size_t>(i)] = i;
  if (m == 0) return result;  // already regular, identity embedding

  int q = p + m;
  if (q % 2 == 0) ++q;  // regular tournaments exist only at odd orders
  if (q > kMaxOrder)
    throw Error(Errc::order_too_large,
                "embedding order " + std::to_string(q) + " exceeds the maximum " +
                    std::to_string(kMaxOrder));
  int added = q - p;

  std::vector<std::vector<VertexSet>> blocks;
  blocks.push_back(near_regular_rows(added));
  for (std::uint64_t j = 0; j < 16; ++j) {
    if (added < 2) break;
    Tournament alt = random_tournament(added, derive_seed(0x6d6f6f6eull, j));
    std::vector<VertexSet> rows(static_cast<size_t>(added));
    for (int v = 0; v < added; ++v) rows[static_cast<size_t>(v)] = alt.out_set(v);
    blocks.push_back(std::move(rows));
  }

  for (const auto& block : blocks) {
    auto rows = complete_with_block(h, q, block);
    if (rows.empty()) continue;
    Tournament t = Tournament::from_out_sets(q, std::move(rows));
    if (degree_summary(t).irregularity != 0) continue;
    VertexSet added_set = full_set(q) & ~full_set(p);
    if (induced_minus(t, added_set).t != h) continue;
    result.t = std::move(t);
    result.added = added_set;
    return result;
  }
  throw Error(Errc::embed_failed, "completion search exhausted its options");
}

Tournament semidegree_window_sample(int p, int lo, int hi,
                                    const SamplerConfig& cfg) {
  if (p < 1 || p > kMaxOrder)
    throw Error(p > kMaxOrder ? Errc::order_too_large
                              : Errc::precondition_violated,
                "bad order " + std::to_string(p));
  if (lo > hi || 2 * lo > p - 1 || 2 * hi < p - 1)
    throw Error(Errc::precondition_violated,
                "window [" + std::to_string(lo) + "," + std::to_string(hi) +
                    "] must straddle (p-1)/2");

  // Both semidegrees in [lo, hi] <=> outdegree in [out_lo, out_hi].
  int out_lo = std::max(lo, p - 1 - hi);
  int out_hi = std::min(hi, p - 1 - lo);

  const int retries = 32;
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Tournament start = random_tournament(p, derive_seed(cfg.seed, attempt));
    std::vector<VertexSet> rows(static_cast<size_t>(p));
    std::vector<int> deg(static_cast<size_t>(p));
    for (int v = 0; v < p; ++v) {
      rows[static_cast<size_t>(v)] = start.out_set(v);
      deg[static_cast<size_t>(v)] = std::popcount(rows[static_cast<size_t>(v)]);
    }

    long budget = 200L * p * p;
    while (budget-- > 0) {
      std::vector<int> high, low;
      for (int v = 0; v < p; ++v) {
        if (deg[static_cast<size_t>(v)] > out_hi) high.push_back(v);
        if (deg[static_cast<size_t>(v)] < out_lo) low.push_back(v);
      }
      if (high.empty() && low.empty())
        return Tournament::from_out_sets(p, std::move(rows));

      // A flip u -> v with u over the window and v strictly below u's degree
      // reduces the total excess; pick the smallest-degree out-neighbor.
      bool flipped = false;
      auto relieve = [&](int u) {
        int best = -1;
        for (VertexSet w = rows[static_cast<size_t>(u)]; w; w &= w - 1) {
          int v = std::countr_zero(w);
          if (best < 0 || deg[static_cast<size_t>(v)] <
                              deg[static_cast<size_t>(best)])
            best = v;
        }
        if (best >= 0 &&
            deg[static_cast<size_t>(best)] + 1 < deg[static_cast<size_t>(u)]) {
          flip_arc(rows, u, best);
          --deg[static_cast<size_t>(u)];
          ++deg[static_cast<size_t>(best)];
          flipped = true;
        }
      };
      auto feed = [&](int v) {
        int best = -1;
        for (VertexSet w = start.vertices() & ~rows[static_cast<size_t>(v)] &
                           ~vbit(v);
             w; w &= w - 1) {
          int u = std::countr_zero(w);  // u -> v at the moment
          if (best < 0 || deg[static_cast<size_t>(u)] >
                              deg[static_cast<size_t>(best)])
            best = u;
        }
        if (best >= 0 &&
            deg[static_cast<size_t>(best)] > deg[static_cast<size_t>(v)] + 1) {
          flip_arc(rows, best, v);
          --deg[static_cast<size_t>(best)];
          ++deg[static_cast<size_t>(v)];
          flipped = true;
        }
      };
      if (!high.empty()) relieve(high[static_cast<size_t>(rng.below(
          static_cast<int>(high.size())))]);
      if (!flipped && !low.empty())
        feed(low[static_cast<size_t>(rng.below(static_cast<int>(low.size())))]);
      if (!flipped) try_three_cycle_reversal(rows, p, rng);
    }
  }
  throw Error(Errc::window_infeasible,
              "window [" + std::to_string(lo) + "," + std::to_string(hi) +
                  "] not reached within the retry budget at order " +
                  std::to_string(p));
}

}  // namespace trn
