#pragma once

#include <cstdint>
#include <optional>

#include "trn/tournament.hpp"

namespace trn {

// Family parameters for the exceptional block construction: order 6k+3 with
// |A| = |C| = 2k-1, |B| = k+2, |S| = k. The three required regular blocks
// default to rotational tournaments; a seed swaps in sampled regular blocks.
struct GParams {
  int k = 1;
  std::optional<std::uint64_t> block_seed;
};

// Regular tournament of order 6k+3 (every semidegree 3k+1) with roles
// x, y, z, A, B, C, S and the dominance pattern
//   A -> B u S -> C,  C -> A,  C -> z -> A,
//   x -> {y,z} u A u S,  {x,z} u C u S -> y,  y -> A u B,  B u C -> x,
// and regular induced subtournaments on A, C and {z} u B u S. Removing S
// leaves no (x,y)-path of length 3.
LabeledTournament build_G(const GParams& params);

// The order-11 regular sharpness example: roles x0..x3, u1..u4, z, v1, v2;
// removing {v1,v2} leaves an (x0,x3)-path of length 3 but none of length 4.
LabeledTournament remark3_T11();

// The order-9 example with roles x, y, u, v, z and blocks A, B; removing {z}
// leaves an (x,y)-path of length 3 but none of length 4.
LabeledTournament remark4_H9();

// The four explicit counterexamples around the length-3/4 lemma:
//   7, 9:  removing S kills lengths 3 and 4 entirely
//   11:    removing S kills every length >= 3
//   15:    removing S kills lengths 3 and 4 but keeps every length in [5,10]
// For variants 7/9/11 the seed picks the regular tournament on the big block;
// for variant 15 it picks one of the four 3-cycle orientation combinations
// (bit 0 reverses block A, bit 1 reverses block B).
LabeledTournament lemma32_counterexample(
    int variant, std::optional<std::uint64_t> block_seed = {});

}  // namespace trn
