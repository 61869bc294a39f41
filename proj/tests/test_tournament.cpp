#include <fstream>
#include <sstream>

#include "doctest.h"
#include "trn/constructions.hpp"
#include "trn/generators.hpp"
#include "trn/rng.hpp"
#include "trn/tournament.hpp"

using namespace trn;

namespace {

Tournament transitive(int p) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) arcs.push_back({i, j});
  return build_tournament(p, arcs);
}

Tournament three_cycle() {
  return build_tournament(3, {{0, 1}, {1, 2}, {2, 0}});
}

// All labeled tournaments of order p, one bit per pair (i < j): bit set means
// i -> j. Order 6 gives 2^15 instances.
Tournament from_pair_bits(int p, std::uint32_t bits) {
  std::vector<VertexSet> rows(static_cast<size_t>(p), 0);
  int bit = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j, ++bit) {
      if ((bits >> bit) & 1u)
        rows[static_cast<size_t>(i)] |= vbit(j);
      else
        rows[static_cast<size_t>(j)] |= vbit(i);
    }
  return Tournament::from_out_sets(p, rows);
}

std::vector<int> random_permutation(int p, Rng& rng) {
  std::vector<int> perm(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm.begin(), perm.end());
  return perm;
}

}  // namespace

TEST_CASE("build_tournament basic shapes") {
  Tournament tri = build_tournament(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.outdegree(0) == 2);
  CHECK(tri.outdegree(1) == 1);
  CHECK(tri.outdegree(2) == 0);

  Tournament cyc = three_cycle();
  for (int v = 0; v < 3; ++v) CHECK(cyc.outdegree(v) == 1);
  CHECK(degree_summary(cyc).irregularity == 0);
}

TEST_CASE("build_tournament rejects malformed arc lists") {
  CHECK_THROWS_WITH_AS(build_tournament(3, {{0, 1}, {1, 2}, {0, 2}, {2, 0}}),
                       doctest::Contains("(2,0)"), Error);
  try {
    build_tournament(3, {{0, 1}, {1, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_pair);
  }
  try {
    build_tournament(3, {{0, 0}, {1, 2}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::self_loop);
  }
  try {
    build_tournament(3, {{0, 3}, {1, 2}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::index_out_of_range);
  }
  CHECK_THROWS_AS(build_tournament(27, {}), Error);
}

TEST_CASE("has_arc is checked") {
  Tournament tri = transitive(3);
  CHECK(tri.has_arc(0, 2));
  CHECK_FALSE(tri.has_arc(2, 0));
  CHECK_THROWS_AS(tri.has_arc(1, 1), Error);
  CHECK_THROWS_AS(tri.has_arc(0, 5), Error);
}

TEST_CASE("remark3 fixture arcs match its defining in-neighborhoods") {
  auto t11 = remark3_T11();
  // x0 is an in-neighbor of x1
  CHECK(t11.t.has_arc(t11.role_vertex("x0"), t11.role_vertex("x1")));
  for (int v = 0; v < 11; ++v) CHECK(t11.t.indegree(v) == 5);
}

TEST_CASE("degree_summary irregularity") {
  CHECK(degree_summary(rotational_regular(3)).irregularity == 0);
  CHECK(degree_summary(transitive(4)).irregularity == 3);

  auto emb = moon_embed(transitive(3));
  CHECK(emb.t.order() == 5);
  CHECK(degree_summary(emb.t).irregularity == 0);
}

TEST_CASE("converse reverses arcs and is an involution") {
  Tournament tri = transitive(3);
  Tournament conv = converse(tri);
  CHECK(conv.outdegree(0) == 0);
  CHECK(conv.outdegree(1) == 1);
  CHECK(conv.outdegree(2) == 2);
  CHECK(converse(conv) == tri);

  Tournament cyc = three_cycle();
  CHECK(degree_summary(converse(cyc)).irregularity == 0);

  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Tournament t = random_tournament(9, rng.next_u64());
    auto ds = degree_summary(t);
    auto dsc = degree_summary(converse(t));
    CHECK(dsc.outdegree == ds.indegree);
    CHECK(dsc.indegree == ds.outdegree);
    CHECK(dsc.irregularity == ds.irregularity);
  }
}

TEST_CASE("semidegrees sum to p-1 and irregularity has the parity of p-1") {
  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    int p = 1 + rng.below(12);
    Tournament t = random_tournament(p, rng.next_u64());
    auto ds = degree_summary(t);
    for (int v = 0; v < p; ++v)
      CHECK(ds.outdegree[v] + ds.indegree[v] == p - 1);
    if (p > 1) CHECK(ds.irregularity % 2 == (p - 1) % 2);
  }
}

TEST_CASE("induced_minus") {
  Tournament t = random_tournament(8, 5);
  auto same = induced_minus(t, 0);
  CHECK(same.t == t);
  for (int v = 0; v < 8; ++v) CHECK(same.old_to_new[v] == v);

  auto t11 = remark3_T11();
  VertexSet s = vbit(t11.role_vertex("v1")) | vbit(t11.role_vertex("v2"));
  CHECK(induced_minus(t11.t, s).t.order() == 9);

  auto h9 = remark4_H9();
  CHECK(induced_minus(h9.t, vbit(h9.role_vertex("z"))).t.order() == 8);

  auto sub = induced_minus(t, vbit(2) | vbit(5));
  for (int i = 0; i < sub.t.order(); ++i)
    for (int j = 0; j < sub.t.order(); ++j) {
      if (i == j) continue;
      CHECK(sub.t.has_arc(i, j) ==
            t.has_arc(sub.new_to_old[i], sub.new_to_old[j]));
    }

  CHECK_THROWS_AS(induced_minus(t, full_set(8)), Error);
  CHECK_THROWS_AS(induced_minus(t, vbit(9)), Error);
}

TEST_CASE("degree facts hold unconditionally") {
  auto report = check_degree_facts(rotational_regular(4));
  bool has2 = false;
  for (int c : report.applicable) has2 |= c == 2;
  CHECK(has2);

  auto report3 = check_degree_facts(transitive(4));
  bool has3 = false;
  for (int c : report3.applicable) has3 |= c == 3;
  CHECK(has3);

  // exhaustive at small order
  for (int p = 2; p <= 6; ++p) {
    int pairs = p * (p - 1) / 2;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << pairs); ++bits)
      CHECK_NOTHROW(check_degree_facts(from_pair_bits(p, bits)));
  }

  // random at order 10
  for (std::uint64_t i = 0; i < 1000; ++i)
    CHECK_NOTHROW(check_degree_facts(random_tournament(10, derive_seed(7, i))));
}

TEST_CASE("relabeling commutes with the basic transforms") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Tournament t = random_tournament(9, rng.next_u64());
    auto perm = random_permutation(9, rng);
    Tournament rt = relabel(t, perm);

    auto ds = degree_summary(t);
    auto rds = degree_summary(rt);
    CHECK(ds.irregularity == rds.irregularity);
    for (int v = 0; v < 9; ++v)
      CHECK(rds.outdegree[perm[v]] == ds.outdegree[v]);

    CHECK(relabel(converse(t), perm) == converse(rt));

    for (int u = 0; u < 9; ++u)
      for (int v = 0; v < 9; ++v)
        if (u != v) CHECK(t.has_arc(u, v) == rt.has_arc(perm[u], perm[v]));

    // induced subtournaments commute with the relabeling
    VertexSet s = vbit(rng.below(9)) | vbit(rng.below(9));
    VertexSet ps = 0;
    for (VertexSet m = s; m; m &= m - 1) ps |= vbit(perm[std::countr_zero(m)]);
    auto a = induced_minus(t, s);
    auto b = induced_minus(rt, ps);
    REQUIRE(a.t.order() == b.t.order());
    for (int u = 0; u < a.t.order(); ++u)
      for (int v = 0; v < a.t.order(); ++v) {
        if (u == v) continue;
        int bu = b.old_to_new[perm[a.new_to_old[u]]];
        int bv = b.old_to_new[perm[a.new_to_old[v]]];
        CHECK(a.t.has_arc(u, v) == b.t.has_arc(bu, bv));
      }
  }
}

TEST_CASE("pair orientation is exclusive") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Tournament t = random_tournament(11, rng.next_u64());
    for (int u = 0; u < 11; ++u)
      for (int v = u + 1; v < 11; ++v)
        CHECK(t.has_arc(u, v) != t.has_arc(v, u));
  }
}

TEST_CASE("serialize / parse round trip") {
  auto cyc = three_cycle();
  auto back = parse(serialize(cyc));
  CHECK(back.t == cyc);
  CHECK(back.roles.empty());

  auto g = build_G(GParams{1, {}});
  auto gb = parse(serialize(g));
  CHECK(gb == g);

  std::string missing =
      "tournament 3\n"
      "-00\n"
      "0-1\n"
      "00-\n";
  try {
    parse(missing);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_pair);
  }

  std::string bad_char =
      "tournament 3\n"
      "-10\n"
      "0-x\n"
      "10-\n";
  try {
    parse(bad_char);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("3:3") != std::string::npos);
  }

  // whitespace-insensitive matrix section
  auto spaced = parse("tournament  3   -10\n\n  0-1\n  10-  \n");
  CHECK(spaced.t == parse("tournament 3\n-10\n0-1\n10-\n").t);
}

TEST_CASE("golden fixture files match the builders") {
  auto check_fixture = [](const std::string& name,
                          const LabeledTournament& built) {
    std::ifstream is(std::string(TRN_SOURCE_DIR) + "/tests/fixtures/" + name);
    REQUIRE(is);
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str() == serialize(built));
    CHECK(parse(ss.str()) == built);
  };
  check_fixture("remark3_T11.trn", remark3_T11());
  check_fixture("remark4_H9.trn", remark4_H9());
  check_fixture("G_k1.trn", build_G(GParams{1, {}}));
}
