#include "trn/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "trn/generators.hpp"
#include "trn/rng.hpp"

namespace trn {

namespace {

// Arc accumulator that tolerates a dominance being stated twice but turns any
// contradictory transcription into a build error.
struct ArcSet {
  std::set<std::pair<int, int>> arcs;

  void arc(int u, int v) { arcs.insert({u, v}); }

  void dominate(int u, const std::vector<int>& vs) {
    for (int v : vs) arc(u, v);
  }
  void dominated_by(int u, const std::vector<int>& vs) {
    for (int v : vs) arc(v, u);
  }
  void block_dominates(const std::vector<int>& from,
                       const std::vector<int>& to) {
    for (int u : from)
      for (int v : to) arc(u, v);
  }

  Tournament build(int order) const {
    return build_tournament(
        order, std::vector<std::pair<int, int>>(arcs.begin(), arcs.end()));
  }
};

// Regular tournament on the given vertices, rotational by default or sampled
// when a seed is provided. The block order must be odd.
void overlay_regular_block(ArcSet& out, const std::vector<int>& block,
                           std::optional<std::uint64_t> seed) {
  int sz = static_cast<int>(block.size());
  if (sz <= 1) return;
  Tournament inner = seed ? random_regular((sz - 1) / 2, SamplerConfig{*seed})
                          : rotational_regular((sz - 1) / 2);
  for (int i = 0; i < sz; ++i)
    for (VertexSet w = inner.out_set(i); w; w &= w - 1)
      out.arc(block[static_cast<size_t>(i)],
              block[static_cast<size_t>(std::countr_zero(w))]);
}

std::vector<int> range_vec(int first, int count) {
  std::vector<int> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<size_t>(i)] = first + i;
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

LabeledTournament build_G(const GParams& params) {
  int k = params.k;
  if (k < 1)
    throw Error(Errc::precondition_violated, "family parameter k must be >= 1");
  int order = 6 * k + 3;
  if (order > kMaxOrder)
    throw Error(Errc::order_too_large,
                "order " + std::to_string(order) + " exceeds the maximum " +
                    std::to_string(kMaxOrder));

  int x = 0, y = 1, z = 2;
  std::vector<int> a = range_vec(3, 2 * k - 1);
  std::vector<int> b = range_vec(3 + (2 * k - 1), k + 2);
  std::vector<int> c = range_vec(3 + (2 * k - 1) + (k + 2), 2 * k - 1);
  std::vector<int> s = range_vec(order - k, k);

  ArcSet arcs;
  arcs.arc(x, y);
  arcs.arc(x, z);
  arcs.arc(z, y);
  arcs.dominate(x, a);
  arcs.dominate(x, s);
  arcs.dominated_by(x, b);
  arcs.dominated_by(x, c);
  arcs.dominate(y, a);
  arcs.dominate(y, b);
  arcs.dominated_by(y, c);
  arcs.dominated_by(y, s);
  arcs.dominate(z, a);
  arcs.dominated_by(z, c);
  arcs.block_dominates(a, b);
  arcs.block_dominates(a, s);
  arcs.block_dominates(b, c);
  arcs.block_dominates(s, c);
  arcs.block_dominates(c, a);

  overlay_regular_block(arcs, a,
                        params.block_seed
                            ? std::optional(derive_seed(*params.block_seed, 1))
                            : std::nullopt);
  overlay_regular_block(arcs, c,
                        params.block_seed
                            ? std::optional(derive_seed(*params.block_seed, 2))
                            : std::nullopt);
  overlay_regular_block(arcs, concat({z}, concat(b, s)),
                        params.block_seed
                            ? std::optional(derive_seed(*params.block_seed, 3))
                            : std::nullopt);

  LabeledTournament lt{arcs.build(order),
                       {{"x", {x}},
                        {"y", {y}},
                        {"z", {z}},
                        {"A", a},
                        {"B", b},
                        {"C", c},
                        {"S", s}}};
  validate_roles(lt);
  return lt;
}

LabeledTournament remark3_T11() {
  // x0..x3 = 0..3, u1..u4 = 4..7, z = 8, v1 = 9, v2 = 10.
  // Transcribed from the defining in-neighborhood lists.
  const int x0 = 0, x1 = 1, x2 = 2, x3 = 3;
  const int u1 = 4, u2 = 5, u3 = 6, u4 = 7;
  const int z = 8, v1 = 9, v2 = 10;

  ArcSet arcs;
  arcs.dominated_by(x0, {u1, u2, u3, u4, z});
  arcs.dominated_by(x1, {x0, z, u3, u4, v2});
  arcs.dominated_by(x2, {x0, x1, z, u3, u4});
  arcs.dominated_by(x3, {x0, x1, x2, v1, v2});
  arcs.dominated_by(z, {x3, u1, u2, u3, u4});
  arcs.dominated_by(u1, {x1, x2, x3, u4, v2});
  arcs.dominated_by(u2, {x1, x2, x3, u1, v1});
  arcs.dominated_by(u3, {x3, u1, u2, v1, v2});
  arcs.dominated_by(u4, {x3, u2, u3, v1, v2});
  arcs.dominated_by(v1, {x0, x1, x2, z, u1});
  arcs.dominated_by(v2, {x0, x2, z, v1, u2});

  LabeledTournament lt{arcs.build(11),
                       {{"x0", {x0}},
                        {"x1", {x1}},
                        {"x2", {x2}},
                        {"x3", {x3}},
                        {"u1", {u1}},
                        {"u2", {u2}},
                        {"u3", {u3}},
                        {"u4", {u4}},
                        {"z", {z}},
                        {"v1", {v1}},
                        {"v2", {v2}}}};
  validate_roles(lt);
  return lt;
}

LabeledTournament remark4_H9() {
  const int x = 0, y = 1, u = 2, v = 3, z = 4;
  std::vector<int> a = {5, 6};  // a1, a2
  std::vector<int> b = {7, 8};  // b1, b2

  ArcSet arcs;
  arcs.dominate(x, {u, v, z});
  arcs.block_dominates({u, v, z}, {y});
  arcs.block_dominates(b, {u, v});
  arcs.block_dominates({u, v}, a);
  arcs.dominate(y, concat(a, b));
  arcs.dominated_by(x, concat(a, b));
  arcs.block_dominates(a, {z});
  arcs.dominate(z, b);
  arcs.arc(x, y);
  arcs.arc(u, v);
  arcs.arc(v, z);
  arcs.arc(z, u);
  arcs.arc(a[0], a[1]);
  arcs.arc(b[0], b[1]);
  arcs.arc(a[0], b[0]);
  arcs.arc(a[1], b[1]);
  arcs.arc(b[1], a[0]);
  arcs.arc(a[1], b[0]);

  LabeledTournament lt{arcs.build(9),
                       {{"x", {x}},
                        {"y", {y}},
                        {"u", {u}},
                        {"v", {v}},
                        {"z", {z}},
                        {"A", a},
                        {"B", b}}};
  validate_roles(lt);
  return lt;
}

namespace {

LabeledTournament small_counterexample(int order, int big_block_size,
                                       int s_size, bool block_is_a,
                                       std::optional<std::uint64_t> seed) {
  // x, y, z then the block then S; pattern xy, xz, zy, x -> S -> y,
  // y -> block -> x, with a regular tournament on {z} u block u S.
  int x = 0, y = 1, z = 2;
  std::vector<int> blk = range_vec(3, big_block_size);
  std::vector<int> s = range_vec(3 + big_block_size, s_size);

  ArcSet arcs;
  arcs.arc(x, y);
  arcs.arc(x, z);
  arcs.arc(z, y);
  arcs.dominate(x, s);
  arcs.block_dominates(s, {y});
  arcs.dominate(y, blk);
  arcs.block_dominates(blk, {x});
  overlay_regular_block(arcs, concat({z}, concat(blk, s)), seed);

  LabeledTournament lt{arcs.build(order),
                       {{"x", {x}},
                        {"y", {y}},
                        {"z", {z}},
                        {block_is_a ? "A" : "B", blk},
                        {"S", s}}};
  validate_roles(lt);
  return lt;
}

void overlay_three_cycle(ArcSet& arcs, const std::vector<int>& blk,
                         bool reversed) {
  if (!reversed) {
    arcs.arc(blk[0], blk[1]);
    arcs.arc(blk[1], blk[2]);
    arcs.arc(blk[2], blk[0]);
  } else {
    arcs.arc(blk[0], blk[2]);
    arcs.arc(blk[2], blk[1]);
    arcs.arc(blk[1], blk[0]);
  }
}

LabeledTournament order15_counterexample(std::optional<std::uint64_t> seed) {
  const int x = 0, y = 1, z = 2, u = 3, v = 4;
  std::vector<int> a = range_vec(5, 3);
  std::vector<int> b = range_vec(8, 3);
  const int a1 = 11, a2 = 12, b1 = 13, b2 = 14;
  std::vector<int> s = {a1, a2, b1, b2};

  ArcSet arcs;
  for (auto [p, q] : std::initializer_list<std::pair<int, int>>{
           {x, y}, {x, z}, {z, y}, {x, u}, {v, y}, {v, u}, {v, z}, {z, u},
           {a1, a2}, {b1, b2}, {a2, b2}, {a2, b1}, {a1, b1}, {b2, a1}})
    arcs.arc(p, q);
  arcs.dominate(x, s);
  arcs.block_dominates(s, {y});
  arcs.block_dominates({y, z, u, v}, a);
  arcs.block_dominates(b, {x, u, v, z});
  arcs.dominate(y, concat({u}, b));
  arcs.block_dominates(a, concat({x}, b));
  arcs.dominate(v, concat({x}, a));
  arcs.block_dominates(s, {v});
  arcs.dominate(u, concat(a, s));
  arcs.block_dominates({b1, b2}, a);
  arcs.block_dominates(a, {a1, a2});
  arcs.block_dominates({a1, a2}, b);
  arcs.block_dominates(b, {b1, b2});
  arcs.block_dominates({b1, b2}, {z});
  arcs.dominate(z, {a1, a2});

  // The two 3-vertex blocks are forward cycles by default; the seed's low two
  // bits pick the other orientation combinations.
  std::uint64_t combo = seed.value_or(0) & 3;
  overlay_three_cycle(arcs, a, combo & 1);
  overlay_three_cycle(arcs, b, combo & 2);

  LabeledTournament lt{arcs.build(15),
                       {{"x", {x}},
                        {"y", {y}},
                        {"z", {z}},
                        {"u", {u}},
                        {"v", {v}},
                        {"A", a},
                        {"B", b},
                        {"S", s}}};
  validate_roles(lt);
  return lt;
}

}  // namespace

LabeledTournament lemma32_counterexample(int variant,
                                         std::optional<std::uint64_t> seed) {
  switch (variant) {
    case 7:
      return small_counterexample(7, 3, 1, false, seed);
    case 9:
      return small_counterexample(9, 4, 2, false, seed);
    case 11:
      return small_counterexample(11, 5, 3, true, seed);
    case 15:
      return order15_counterexample(seed);
    default:
      throw Error(Errc::invalid_variant,
                  "no counterexample variant " + std::to_string(variant));
  }
}

}  // namespace trn
