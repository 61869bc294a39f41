#include "trn/path_spectrum.hpp"

#include <algorithm>
#include <string>

#include "trn/generators.hpp"
#include "trn/rng.hpp"

namespace trn {

namespace {

void check_pair(const Tournament& t, int x, int y) {
  if (x < 0 || x >= t.order() || y < 0 || y >= t.order())
    throw Error(Errc::index_out_of_range,
                "pair (" + std::to_string(x) + "," + std::to_string(y) +
                    ") out of range for order " + std::to_string(t.order()));
  if (x == y)
    throw Error(Errc::same_vertex,
                "spectrum endpoints must differ, got " + std::to_string(x));
}

// Compact view of the non-source vertices: the DP indexes subsets of
// V \ {source}, so the table has 2^(p-1) single-word entries.
struct CompactDp {
  int m = 0;                             // p - 1
  std::vector<int> vertex;               // compact index -> vertex
  std::vector<std::uint32_t> in_c;       // compact in-neighborhoods
  std::uint32_t source_out = 0;          // compact out-set of the source
  std::vector<std::uint32_t> endpoints;  // endpoints[M] over compact subsets

  CompactDp(const Tournament& t, int source) {
    int p = t.order();
    m = p - 1;
    vertex.reserve(static_cast<size_t>(m));
    std::vector<int> compact_of(static_cast<size_t>(p), -1);
    for (int v = 0; v < p; ++v) {
      if (v == source) continue;
      compact_of[static_cast<size_t>(v)] = static_cast<int>(vertex.size());
      vertex.push_back(v);
    }
    in_c.assign(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      VertexSet ins = t.in_set(vertex[static_cast<size_t>(j)]) & ~vbit(source);
      for (VertexSet w = ins; w; w &= w - 1)
        in_c[static_cast<size_t>(j)] |=
            std::uint32_t{1}
            << compact_of[static_cast<size_t>(std::countr_zero(w))];
    }
    for (VertexSet w = t.out_set(source); w; w &= w - 1)
      source_out |= std::uint32_t{1}
                    << compact_of[static_cast<size_t>(std::countr_zero(w))];

    // endpoints[M] = vertices reachable from the source by a path visiting
    // exactly {source} u M. Subsets in increasing numeric order suffice:
    // every M \ {j} precedes M.
    endpoints.assign(std::size_t{1} << m, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
      std::uint32_t e = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        std::uint32_t prev = mask & ~(std::uint32_t{1} << j);
        if (prev == 0) {
          if ((source_out >> j) & 1u) e |= std::uint32_t{1} << j;
        } else if (endpoints[prev] & in_c[static_cast<size_t>(j)]) {
          e |= std::uint32_t{1} << j;
        }
      }
      endpoints[mask] = e;
    }
  }
};

}  // namespace

std::vector<int> PathSpectrum::to_vector() const {
  std::vector<int> ks;
  for (std::uint32_t m = lengths; m; m &= m - 1)
    ks.push_back(std::countr_zero(m));
  return ks;
}

std::vector<std::uint32_t> all_spectra_from(const Tournament& t, int source) {
  int p = t.order();
  if (source < 0 || source >= p)
    throw Error(Errc::index_out_of_range,
                "source " + std::to_string(source) + " out of range");
  std::vector<std::uint32_t> spectra(static_cast<size_t>(p), 0);
  if (p == 1) return spectra;

  CompactDp dp(t, source);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << dp.m); ++mask) {
    std::uint32_t e = dp.endpoints[mask];
    if (!e) continue;
    int len = std::popcount(mask);
    for (std::uint32_t rest = e; rest; rest &= rest - 1)
      spectra[static_cast<size_t>(
          dp.vertex[static_cast<size_t>(std::countr_zero(rest))])] |=
          std::uint32_t{1} << len;
  }
  return spectra;
}

PathSpectrum path_spectrum(const Tournament& t, int x, int y) {
  check_pair(t, x, y);
  auto spectra = all_spectra_from(t, x);
  return PathSpectrum{x, y, spectra[static_cast<size_t>(y)]};
}

namespace {

void brute_force_dfs(const Tournament& t, int v, int y, VertexSet visited,
                     int len, std::uint32_t& lengths) {
  for (VertexSet w = t.out_set(v) & ~visited; w; w &= w - 1) {
    int u = std::countr_zero(w);
    if (u == y) {
      lengths |= std::uint32_t{1} << (len + 1);
      continue;  // a simple path cannot leave y and come back
    }
    brute_force_dfs(t, u, y, visited | vbit(u), len + 1, lengths);
  }
}

}  // namespace

PathSpectrum brute_force_spectrum(const Tournament& t, int x, int y) {
  if (t.order() > 10)
    throw Error(Errc::order_too_large,
                "brute-force spectrum is guarded at order 10, got " +
                    std::to_string(t.order()));
  check_pair(t, x, y);
  std::uint32_t lengths = 0;
  brute_force_dfs(t, x, y, vbit(x), 0, lengths);
  return PathSpectrum{x, y, lengths};
}

std::optional<std::vector<int>> witness_path(const Tournament& t, int x, int y,
                                             int k) {
  check_pair(t, x, y);
  int p = t.order();
  if (k < 1 || k > p - 1) return std::nullopt;
  if (k == 1)
    return t.has_arc(x, y) ? std::optional<std::vector<int>>({x, y})
                           : std::nullopt;

  CompactDp dp(t, x);
  int jy = -1;
  for (int j = 0; j < dp.m; ++j)
    if (dp.vertex[static_cast<size_t>(j)] == y) jy = j;

  std::uint32_t found = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << dp.m); ++mask) {
    if (std::popcount(mask) != k) continue;
    if ((dp.endpoints[mask] >> jy) & 1u) {
      found = mask;
      break;
    }
  }
  if (!found) return std::nullopt;

  std::vector<int> rev{y};
  std::uint32_t mask = found;
  int cur = jy;
  while (std::popcount(mask) > 1) {
    std::uint32_t prev = mask & ~(std::uint32_t{1} << cur);
    std::uint32_t preds =
        dp.endpoints[prev] & dp.in_c[static_cast<size_t>(cur)];
    cur = std::countr_zero(preds);
    rev.push_back(dp.vertex[static_cast<size_t>(cur)]);
    mask = prev;
  }
  rev.push_back(x);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::uint32_t cycle_spectrum_through_arc(const Tournament& t, int u, int v) {
  if (!t.has_arc(u, v))
    throw Error(Errc::no_such_arc, "no arc (" + std::to_string(u) + "," +
                                       std::to_string(v) + ")");
  int p = t.order();
  std::uint32_t back_paths = path_spectrum(t, v, u).lengths;
  std::uint32_t cycles = back_paths << 1;
  std::uint32_t valid = 0;
  for (int k = 3; k <= p; ++k) valid |= std::uint32_t{1} << k;
  return cycles & valid;
}

ArcPancyclicResult is_d_arc_pancyclic(const Tournament& t, int d) {
  int p = t.order();
  if (d < 3 || d > p)
    throw Error(Errc::precondition_violated,
                "d must lie in [3, p], got " + std::to_string(d));
  std::uint32_t needed = 0;  // path lengths k-1 for k in [d, p]
  for (int k = d; k <= p; ++k) needed |= std::uint32_t{1} << (k - 1);
  for (int v = 0; v < p; ++v) {
    auto spectra = all_spectra_from(t, v);
    for (VertexSet m = t.in_set(v); m; m &= m - 1) {
      int u = std::countr_zero(m);  // arc u -> v, cycles close via v ~> u
      std::uint32_t missing = needed & ~spectra[static_cast<size_t>(u)];
      if (missing) return {false, u, v, std::countr_zero(missing) + 1};
    }
  }
  return {};
}

PanconnectedResult is_d_strongly_panconnected(const Tournament& t, int d) {
  int p = t.order();
  if (d < 3 || d > p - 1)
    throw Error(Errc::precondition_violated,
                "d must lie in [3, p-1], got " + std::to_string(d));
  std::uint32_t needed = 0;
  for (int k = d; k <= p - 1; ++k) needed |= std::uint32_t{1} << k;
  for (int x = 0; x < p; ++x) {
    auto spectra = all_spectra_from(t, x);
    for (int y = 0; y < p; ++y) {
      if (y == x) continue;
      std::uint32_t missing = needed & ~spectra[static_cast<size_t>(y)];
      if (missing) return {false, x, y, std::countr_zero(missing)};
    }
  }
  return {};
}

namespace {

std::uint32_t minus_spectrum(const Tournament& t, VertexSet s, int x, int y) {
  if (set_contains(s, x) || set_contains(s, y))
    throw Error(Errc::precondition_violated,
                "spectrum endpoints must lie outside the removed set");
  auto ind = induced_minus(t, s);
  return path_spectrum(ind.t, ind.old_to_new[static_cast<size_t>(x)],
                       ind.old_to_new[static_cast<size_t>(y)])
      .lengths;
}

void require_regular_odd(const Tournament& t, const char* who) {
  if (t.order() % 2 == 0 || degree_summary(t).irregularity != 0)
    throw Error(Errc::precondition_violated,
                std::string(who) + " needs a regular tournament");
}

}  // namespace

ExtensionResult extension_holds(const ExtensionInstance& inst) {
  require_regular_odd(inst.t, "extension check");
  int n = (inst.t.order() - 1) / 2;
  int rmax = 2 * n - set_size(inst.s) - 1;
  if (inst.r < 3 || inst.r > rmax)
    throw Error(Errc::precondition_violated,
                "r must lie in [3, " + std::to_string(rmax) + "], got " +
                    std::to_string(inst.r));
  std::uint32_t sp = minus_spectrum(inst.t, inst.s, inst.x, inst.y);
  ExtensionResult res;
  if (!((sp >> inst.r) & 1u)) return res;  // vacuous
  res.applied = true;
  if (!((sp >> (inst.r + 1)) & 1u)) {
    res.holds = false;
    res.failing_r = inst.r;
  }
  return res;
}

ExtensionResult extension_holds_all(const Tournament& t, VertexSet s, int x,
                                    int y) {
  require_regular_odd(t, "extension check");
  int n = (t.order() - 1) / 2;
  int rmax = 2 * n - set_size(s) - 1;
  std::uint32_t sp = minus_spectrum(t, s, x, y);
  ExtensionResult res;
  for (int r = 3; r <= rmax; ++r) {
    if (!((sp >> r) & 1u)) continue;
    res.applied = true;
    if (!((sp >> (r + 1)) & 1u)) {
      res.holds = false;
      res.failing_r = r;
      return res;
    }
  }
  return res;
}

Lemma32Result lemma32_check(const Tournament& t, VertexSet s, int x, int y,
                            Lemma32Part part) {
  require_regular_odd(t, "lemma 3.2 check");
  int n = (t.order() - 1) / 2;
  int k = set_size(s);
  if (part == Lemma32Part::i) {
    if (n < 3 || 3 * k > n - 1)
      throw Error(Errc::precondition_violated,
                  "part (i) needs n >= 3 and |S| <= (n-1)/3");
  } else {
    if (n < 5 || 2 * k > n)
      throw Error(Errc::precondition_violated,
                  "part (ii) needs n >= 5 and |S| <= n/2");
  }
  std::uint32_t sp = minus_spectrum(t, s, x, y);
  Lemma32Result res;
  res.path3 = (sp >> 3) & 1u;
  res.path4 = (sp >> 4) & 1u;
  if (part == Lemma32Part::i) {
    res.holds = res.path3;
    res.g_candidate = !res.path3;
  } else {
    res.holds = res.path3 || res.path4;
  }
  return res;
}

namespace {

void validate_configuration(const LemmaConfiguration& cfg) {
  const Tournament& t = cfg.t;
  const auto& path = cfg.path;
  int r = static_cast<int>(path.size()) - 1;
  if (r < 5)
    throw Error(Errc::precondition_violated,
                "configuration path needs length >= 5");
  VertexSet on_path = 0;
  for (int v : path) {
    if (v < 0 || v >= t.order() || set_contains(on_path, v))
      throw Error(Errc::precondition_violated,
                  "configuration path is not a simple vertex sequence");
    on_path |= vbit(v);
  }
  for (int i = 0; i < r; ++i)
    if (!t.has_arc(path[static_cast<size_t>(i)],
                   path[static_cast<size_t>(i + 1)]))
      throw Error(Errc::precondition_violated,
                  "configuration path is not a directed path");
  if (cfg.z < 0 || cfg.z >= t.order() || set_contains(on_path, cfg.z))
    throw Error(Errc::precondition_violated,
                "z must be a vertex outside the path");
  if (cfg.alpha < 2 || cfg.alpha > r - 3)
    throw Error(Errc::precondition_violated, "alpha must lie in [2, r-3]");
  for (int i = 0; i <= cfg.alpha; ++i)
    if (!t.has_arc(cfg.z, path[static_cast<size_t>(i)]))
      throw Error(Errc::precondition_violated,
                  "z must dominate the head of the path");
  for (int i = cfg.alpha + 1; i <= r; ++i)
    if (!t.has_arc(path[static_cast<size_t>(i)], cfg.z))
      throw Error(Errc::precondition_violated,
                  "the tail of the path must dominate z");
  // No (x0,xr)-path of length r+1 on {z} u V(P); decided exactly by the DP on
  // the induced subtournament, never heuristically.
  VertexSet removed = t.vertices() & ~(on_path | vbit(cfg.z));
  auto ind = induced_minus(t, removed);
  auto sp = path_spectrum(ind.t,
                          ind.old_to_new[static_cast<size_t>(path.front())],
                          ind.old_to_new[static_cast<size_t>(path.back())]);
  if (sp.contains(r + 1))
    throw Error(Errc::precondition_violated,
                "an extended path on {z} u V(P) exists");
}

}  // namespace

LemmaCheck lemma33_property(const LemmaConfiguration& cfg) {
  validate_configuration(cfg);
  const Tournament& t = cfg.t;
  const auto& p = cfg.path;
  int r = static_cast<int>(p.size()) - 1;
  int alpha = cfg.alpha;
  LemmaCheck res;
  for (int s = 1; s <= alpha - 1; ++s) {
    for (int tt = alpha + 3; tt <= r; ++tt) {
      if (!t.has_arc(p[static_cast<size_t>(s)], p[static_cast<size_t>(tt)]))
        continue;
      res.vacuous = false;
      if (s >= 3) {
        for (int a = 0; a <= s - 2; ++a)
          for (int b = alpha + 2; b <= tt - 1; ++b)
            if (t.has_arc(p[static_cast<size_t>(a)],
                          p[static_cast<size_t>(b)])) {
              res.holds = false;
              res.violation = LemmaViolation{1, s, tt, a, b};
              return res;
            }
      }
      if (tt - s != 5) {
        for (int b = alpha + 2; b <= tt - 1; ++b)
          if (t.has_arc(p[static_cast<size_t>(s - 1)],
                        p[static_cast<size_t>(b)])) {
            res.holds = false;
            res.violation = LemmaViolation{2, s, tt, s - 1, b};
            return res;
          }
      }
    }
  }
  return res;
}

LemmaCheck lemma34_property(const LemmaConfiguration& cfg) {
  validate_configuration(cfg);
  const Tournament& t = cfg.t;
  const auto& p = cfg.path;
  int r = static_cast<int>(p.size()) - 1;
  int alpha = cfg.alpha;
  LemmaCheck res;
  for (int s = alpha; s <= r - 2; ++s) {
    for (int tt = s + 2; tt <= r; ++tt) {
      if (!t.has_arc(p[static_cast<size_t>(s)], p[static_cast<size_t>(tt)]))
        continue;
      res.vacuous = false;
      int k = (tt - s) / 2;
      for (int a = 0; a <= alpha - 1; ++a)
        for (int b = s + 1; b <= s + k; ++b)
          if (t.has_arc(p[static_cast<size_t>(a)],
                        p[static_cast<size_t>(b)])) {
            res.holds = false;
            res.violation = LemmaViolation{1, s, tt, a, b};
            return res;
          }
    }
  }
  return res;
}

std::vector<int> hamiltonian_path(const Tournament& t) {
  std::vector<int> path{0};
  for (int v = 1; v < t.order(); ++v) {
    size_t pos = 0;
    while (pos < path.size() && !t.has_arc(v, path[pos])) ++pos;
    // Scan order guarantees the predecessor (if any) beats v.
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(pos), v);
  }
  return path;
}

ConfigSample sample_lemma_configuration(std::uint64_t seed) {
  Rng rng(seed);
  int p = 8 + rng.below(5);  // order in [8, 12]
  Tournament t = random_tournament(p, derive_seed(seed, 1));
  std::vector<int> ham = hamiltonian_path(t);
  int r = 5 + rng.below(p - 2 - 5 + 1);  // prefix length in [5, p-2]
  std::vector<int> path(ham.begin(), ham.begin() + r + 1);
  VertexSet on_path = set_from_vector(path);

  std::vector<int> outside = set_to_vector(t.vertices() & ~on_path);
  std::vector<int> alphas;
  for (int a = 2; a <= r - 3; ++a) alphas.push_back(a);
  rng.shuffle(outside.begin(), outside.end());
  rng.shuffle(alphas.begin(), alphas.end());

  for (int z : outside) {
    VertexSet beats_z = t.in_set(z);   // vertices dominating z
    VertexSet beaten = t.out_set(z);   // vertices z dominates
    for (int alpha : alphas) {
      VertexSet head = 0, tail = 0;
      for (int i = 0; i <= alpha; ++i) head |= vbit(path[static_cast<size_t>(i)]);
      for (int i = alpha + 1; i <= r; ++i)
        tail |= vbit(path[static_cast<size_t>(i)]);
      if ((head & ~beaten) || (tail & ~beats_z)) continue;

      LemmaConfiguration cfg{t, path, z, alpha};
      VertexSet removed = t.vertices() & ~(on_path | vbit(z));
      auto ind = induced_minus(t, removed);
      auto sp = path_spectrum(
          ind.t, ind.old_to_new[static_cast<size_t>(path.front())],
          ind.old_to_new[static_cast<size_t>(path.back())]);
      if (sp.contains(r + 1))
        return {ConfigSampleStatus::q_exists, std::move(cfg)};
      return {ConfigSampleStatus::conforming, std::move(cfg)};
    }
  }
  return {ConfigSampleStatus::no_pattern, std::nullopt};
}

}  // namespace trn
