#pragma once

#include <cstdint>
#include <vector>

#include "trn/tournament.hpp"

namespace trn {

struct SamplerConfig {
  std::uint64_t seed = 0;
  int mix_steps = -1;  // accepted switch moves; negative means 10*p^2
  int count = 1;
};

// Vertices Z_{2n+1} with arc i -> i+j (mod 2n+1) for j in [1, n]; the
// canonical regular tournament of order 2n+1.
Tournament rotational_regular(int n);

// Every unordered pair oriented by one fair pseudo-random bit.
Tournament random_tournament(int p, std::uint64_t seed);

// Regular tournament of order 2n+1: start rotational, then repeat accepted
// switch moves that reverse a uniformly random directed 3-cycle. Each move
// preserves every semidegree, so the output stays regular for any seed.
Tournament random_regular(int n, const SamplerConfig& cfg);

struct MoonEmbedding {
  Tournament t;             // regular supertournament
  std::vector<int> embed;   // vertex i of the input -> embed[i] of t
  VertexSet added = 0;      // the completion vertices
};

// Embeds an m-irregular tournament of order p into a regular tournament of
// order p+m (p+m+1 when that is even): the new block gets a near-regular
// tournament and the new-vs-old arcs come from a max-flow orientation that
// gives every vertex semidegree (order-1)/2, backtracking over alternative
// new blocks on infeasibility. The result is verified post hoc: regular, and
// removing the added vertices returns the input exactly.
MoonEmbedding moon_embed(const Tournament& h);

// Tournament of order p with every semidegree in [lo, hi]: a random
// tournament repaired toward the window by single-arc flips, with random
// 3-cycle reversals to break plateaus, retrying from a fresh sample when a
// repair stalls. Throws Error(window_infeasible) after the retry budget.
Tournament semidegree_window_sample(int p, int lo, int hi,
                                    const SamplerConfig& cfg);

}  // namespace trn
