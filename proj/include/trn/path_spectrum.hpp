#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trn/tournament.hpp"

namespace trn {

// Set of path lengths realized between one ordered vertex pair. Lengths are
// arc counts, stored as a bitmask: bit k set <=> some (source,target)-path of
// exactly k arcs exists, k in [1, p-1].
struct PathSpectrum {
  int source = -1;
  int target = -1;
  std::uint32_t lengths = 0;

  bool contains(int k) const { return k >= 0 && ((lengths >> k) & 1u); }
  std::vector<int> to_vector() const;
};

// Exact spectra from one source to every target in a single pass: a dynamic
// program over vertex subsets M (the vertices visited so far, source
// excluded) maintaining the set of possible path endpoints per subset.
// O(2^(p-1) * p) word operations, one word of state per subset.
std::vector<std::uint32_t> all_spectra_from(const Tournament& t, int source);

PathSpectrum path_spectrum(const Tournament& t, int x, int y);

// Independent oracle: exhaustive DFS over all simple paths. Kept free of the
// subset DP so the two can check each other. Guarded at order <= 10.
PathSpectrum brute_force_spectrum(const Tournament& t, int x, int y);

// A concrete path of exactly k arcs, or nullopt when k is not in the
// spectrum. The sequence has k+1 distinct vertices and endpoints (x, y).
std::optional<std::vector<int>> witness_path(const Tournament& t, int x, int y,
                                             int k);

// Cycle lengths through the arc u->v, as a bitmask over k in [3, p]. A
// k-cycle through u->v is exactly a (k-1)-path from v back to u.
std::uint32_t cycle_spectrum_through_arc(const Tournament& t, int u, int v);

struct ArcPancyclicResult {
  bool holds = true;
  int u = -1, v = -1, k = -1;  // first failing arc and cycle length
};

// Every arc on a k-cycle for every k in [d, p].
ArcPancyclicResult is_d_arc_pancyclic(const Tournament& t, int d);

struct PanconnectedResult {
  bool holds = true;
  int x = -1, y = -1, k = -1;  // first failing ordered pair and length
};

// Every ordered pair joined by paths of every length in [d, p-1].
PanconnectedResult is_d_strongly_panconnected(const Tournament& t, int d);

// Path-extension instance: a regular tournament minus a vertex set, an
// ordered pair outside it and one candidate length r.
struct ExtensionInstance {
  Tournament t;  // regular, order 2n+1
  VertexSet s = 0;
  int x = -1, y = -1;
  int r = 0;
};

struct ExtensionResult {
  bool holds = true;
  bool applied = false;  // false <=> vacuous (no path of length r at all)
  std::optional<int> failing_r;
};

// Does "path of length r implies path of length r+1" hold in t - s?
ExtensionResult extension_holds(const ExtensionInstance& inst);

// Campaign variant: scan every r in [3, 2n-|S|-1] at once.
ExtensionResult extension_holds_all(const Tournament& t, VertexSet s, int x,
                                    int y);

enum class Lemma32Part { i, ii };

struct Lemma32Result {
  bool path3 = false;
  bool path4 = false;
  bool holds = false;
  bool g_candidate = false;  // part (i) only: no length-3 path found
};

// Part (i):  regular order 2n+1, n >= 3, |S| <= (n-1)/3: a length-3 path must
//            exist unless the tournament has the exceptional block structure
//            (the caller decides membership).
// Part (ii): n >= 5, |S| <= n/2: a length-3 or length-4 path must exist.
// Violated bounds throw Error(precondition_violated).
Lemma32Result lemma32_check(const Tournament& t, VertexSet s, int x, int y,
                            Lemma32Part part);

// Configuration shared by the two path-rerouting lemmas: a path P, an outside
// vertex z dominated by the tail of P and dominating its head, and the
// guarantee that no (x0,xr)-path of length r+1 on {z} u V(P) exists.
struct LemmaConfiguration {
  Tournament t;
  std::vector<int> path;  // x_0 .. x_r
  int z = -1;
  int alpha = -1;
};

struct LemmaViolation {
  int clause = 0;  // 1 or 2 (lemma33); always 1 for lemma34
  int s = -1, t = -1;  // the qualifying arc, as path positions
  int a = -1, b = -1;  // the forbidden arc found, as path positions
};

struct LemmaCheck {
  bool holds = true;
  bool vacuous = true;  // no qualifying arc at all
  std::optional<LemmaViolation> violation;
};

// For every arc x_s -> x_t with s in [1,alpha-1], t in [alpha+3,r]:
//   clause 1 (s >= 3):    no arc from {x_0..x_{s-2}} into {x_{alpha+2}..x_{t-1}}
//   clause 2 (t-s != 5):  no arc from x_{s-1}       into {x_{alpha+2}..x_{t-1}}
LemmaCheck lemma33_property(const LemmaConfiguration& cfg);

// For every arc x_s -> x_t with s in [alpha,r-2], t in [s+2,r] and
// k = floor((t-s)/2): no arc from {x_0..x_{alpha-1}} into {x_{s+1}..x_{s+k}}.
LemmaCheck lemma34_property(const LemmaConfiguration& cfg);

// Every tournament has a hamiltonian path; found by insertion.
std::vector<int> hamiltonian_path(const Tournament& t);

enum class ConfigSampleStatus { conforming, no_pattern, q_exists };

struct ConfigSample {
  ConfigSampleStatus status = ConfigSampleStatus::no_pattern;
  std::optional<LemmaConfiguration> config;
};

// One sampling attempt: random tournament of order 8..12, a random
// hamiltonian-path prefix, then a seeded scan for a (z, alpha) domination
// pattern. Nonconforming attempts report why. Deterministic per seed.
ConfigSample sample_lemma_configuration(std::uint64_t seed);

}  // namespace trn
