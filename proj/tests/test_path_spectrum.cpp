#include <queue>

#include "doctest.h"
#include "trn/constructions.hpp"
#include "trn/generators.hpp"
#include "trn/path_spectrum.hpp"
#include "trn/rng.hpp"

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

bool reaches_all(const Tournament& t, int start, bool forward) {
  VertexSet seen = vbit(start);
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    VertexSet next = (forward ? t.out_set(v) : t.in_set(v)) & ~seen;
    for (VertexSet m = next; m; m &= m - 1) {
      seen |= vbit(std::countr_zero(m));
      q.push(std::countr_zero(m));
    }
  }
  return seen == t.vertices();
}

bool strongly_connected(const Tournament& t) {
  return reaches_all(t, 0, true) && reaches_all(t, 0, false);
}

std::uint32_t mask_of(std::initializer_list<int> ks) {
  std::uint32_t m = 0;
  for (int k : ks) m |= std::uint32_t{1} << k;
  return m;
}

}  // namespace

TEST_CASE("spectra of the tiny fixtures") {
  Tournament tri = transitive(3);
  CHECK(path_spectrum(tri, 0, 2).lengths == mask_of({1, 2}));

  Tournament cyc = three_cycle();
  CHECK(path_spectrum(cyc, 0, 1).lengths == mask_of({1}));
  CHECK(path_spectrum(cyc, 0, 2).lengths == mask_of({2}));
  CHECK(brute_force_spectrum(cyc, 0, 2).lengths == mask_of({2}));

  CHECK(brute_force_spectrum(transitive(4), 0, 3).lengths ==
        mask_of({1, 2, 3}));

  Tournament r7 = rotational_regular(3);
  CHECK(path_spectrum(r7, 0, 1).lengths == brute_force_spectrum(r7, 0, 1).lengths);

  CHECK_THROWS_AS(path_spectrum(tri, 1, 1), Error);
  CHECK_THROWS_AS(brute_force_spectrum(random_tournament(11, 1), 0, 1), Error);
}

TEST_CASE("oracle equivalence: exhaustive order 5, random order 10") {
  for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
    Tournament t = from_pair_bits(5, bits);
    for (int x = 0; x < 5; ++x) {
      auto spectra = all_spectra_from(t, x);
      for (int y = 0; y < 5; ++y) {
        if (x == y) continue;
        CHECK(spectra[y] == brute_force_spectrum(t, x, y).lengths);
      }
    }
  }

  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Tournament t = random_tournament(10, rng.next_u64());
    int x = rng.below(10);
    int y = (x + 1 + rng.below(9)) % 10;
    CHECK(path_spectrum(t, x, y).lengths ==
          brute_force_spectrum(t, x, y).lengths);
  }
}

TEST_CASE("duality and relabeling invariance of spectra") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int p = 6 + rng.below(5);
    Tournament t = random_tournament(p, rng.next_u64());
    Tournament conv = converse(t);
    int x = rng.below(p);
    int y = (x + 1 + rng.below(p - 1)) % p;
    CHECK(path_spectrum(t, x, y).lengths == path_spectrum(conv, y, x).lengths);

    std::vector<int> perm(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) perm[static_cast<size_t>(i)] = i;
    rng.shuffle(perm.begin(), perm.end());
    Tournament rt = relabel(t, perm);
    CHECK(path_spectrum(rt, perm[x], perm[y]).lengths ==
          path_spectrum(t, x, y).lengths);
  }
}

TEST_CASE("monotone sanity of spectra") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int p = 2 + rng.below(9);
    Tournament t = random_tournament(p, rng.next_u64());
    for (int x = 0; x < p; ++x) {
      auto spectra = all_spectra_from(t, x);
      for (int y = 0; y < p; ++y) {
        if (x == y) continue;
        CHECK((spectra[y] & ~(full_set(p) ^ 1u)) == 0);  // lengths <= p-1
        CHECK(((spectra[y] >> 1) & 1u) == (t.has_arc(x, y) ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("witness paths certify the spectrum") {
  Tournament tri = transitive(3);
  auto w = witness_path(tri, 0, 2, 2);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{0, 1, 2});
  CHECK_FALSE(witness_path(three_cycle(), 0, 1, 2).has_value());

  auto t11 = remark3_T11();
  auto ind = induced_minus(
      t11.t, vbit(t11.role_vertex("v1")) | vbit(t11.role_vertex("v2")));
  auto path = witness_path(ind.t, ind.old_to_new[t11.role_vertex("x0")],
                           ind.old_to_new[t11.role_vertex("x3")], 3);
  REQUIRE(path.has_value());
  CHECK(path->size() == 4);
  for (size_t i = 0; i + 1 < path->size(); ++i)
    CHECK(ind.t.has_arc((*path)[i], (*path)[i + 1]));

  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int p = 5 + rng.below(5);
    Tournament t = random_tournament(p, rng.next_u64());
    int x = rng.below(p);
    auto spectra = all_spectra_from(t, x);
    for (int y = 0; y < p; ++y) {
      if (y == x) continue;
      for (int k = 1; k <= p - 1; ++k) {
        auto wp = witness_path(t, x, y, k);
        CHECK(wp.has_value() == ((spectra[y] >> k) & 1u));
        if (!wp) continue;
        CHECK(static_cast<int>(wp->size()) == k + 1);
        CHECK(wp->front() == x);
        CHECK(wp->back() == y);
        VertexSet seen = 0;
        for (size_t i = 0; i < wp->size(); ++i) {
          CHECK_FALSE(set_contains(seen, (*wp)[i]));
          seen |= vbit((*wp)[i]);
          if (i + 1 < wp->size()) CHECK(t.has_arc((*wp)[i], (*wp)[i + 1]));
        }
      }
    }
  }
}

TEST_CASE("cycle spectrum through an arc") {
  CHECK(cycle_spectrum_through_arc(three_cycle(), 0, 1) == mask_of({3}));
  CHECK(cycle_spectrum_through_arc(transitive(3), 0, 1) == 0);
  CHECK_THROWS_AS(cycle_spectrum_through_arc(transitive(3), 2, 0), Error);

  // a regular tournament is arc pancyclic
  Tournament reg = rotational_regular(5);
  std::uint32_t all_cycles = 0;
  for (int k = 3; k <= 11; ++k) all_cycles |= 1u << k;
  for (int u = 0; u < 11; ++u)
    for (VertexSet m = reg.out_set(u); m; m &= m - 1)
      CHECK((cycle_spectrum_through_arc(reg, u, std::countr_zero(m)) &
             all_cycles) == all_cycles);
}

TEST_CASE("vertex pancyclicity of strongly connected tournaments") {
  Rng rng(53);
  int tested = 0;
  for (int trial = 0; tested < 40 && trial < 400; ++trial) {
    int p = 5 + rng.below(6);
    Tournament t = random_tournament(p, rng.next_u64());
    if (!strongly_connected(t)) continue;
    ++tested;
    for (int v = 0; v < p; ++v) {
      std::uint32_t through_v = 0;
      for (VertexSet m = t.out_set(v); m; m &= m - 1)
        through_v |= cycle_spectrum_through_arc(t, v, std::countr_zero(m));
      for (int k = 3; k <= p; ++k) CHECK(((through_v >> k) & 1u));
    }
  }
  CHECK(tested == 40);
}

TEST_CASE("pancyclicity predicates") {
  CHECK(is_d_arc_pancyclic(rotational_regular(4), 3).holds);
  auto bad = is_d_arc_pancyclic(transitive(5), 3);
  CHECK_FALSE(bad.holds);
  CHECK(bad.k == 3);

  CHECK(is_d_strongly_panconnected(rotational_regular(3), 3).holds);
  CHECK_FALSE(is_d_strongly_panconnected(transitive(5), 3).holds);

  // almost regular tournaments of order 10 are 4-arc pancyclic
  for (std::uint64_t i = 0; i < 20; ++i) {
    Tournament t =
        semidegree_window_sample(10, 4, 5, SamplerConfig{derive_seed(61, i)});
    CHECK(degree_summary(t).irregularity == 1);
    CHECK(is_d_arc_pancyclic(t, 4).holds);
  }

  auto g1 = build_G(GParams{1, {}});
  auto ind = induced_minus(g1.t, g1.role_set("S"));
  auto res = is_d_strongly_panconnected(ind.t, 3);
  CHECK_FALSE(res.holds);
  CHECK(res.k == 3);
}

TEST_CASE("path extension property") {
  // vacuous when no path of length r exists: (x0,x3) has no length-4 path
  auto t11 = remark3_T11();
  VertexSet s = vbit(t11.role_vertex("v1")) | vbit(t11.role_vertex("v2"));
  ExtensionInstance vac{t11.t, s, t11.role_vertex("x0"),
                        t11.role_vertex("x3"), 4};
  auto vres = extension_holds(vac);
  CHECK(vres.holds);
  CHECK_FALSE(vres.applied);

  // the sharpness fixture fails at r = 3 for (x0, x3)
  ExtensionInstance sharp{t11.t, s, t11.role_vertex("x0"),
                          t11.role_vertex("x3"), 3};
  auto sres = extension_holds(sharp);
  CHECK_FALSE(sres.holds);
  CHECK(sres.failing_r == 3);

  // inside the bound the property holds for every pair, set and r
  Tournament t = random_regular(5, SamplerConfig{9});
  for (int removed = 0; removed < 11; ++removed) {
    for (int x = 0; x < 11; ++x) {
      if (x == removed) continue;
      for (int y = 0; y < 11; ++y) {
        if (y == removed || y == x) continue;
        CHECK(extension_holds_all(t, vbit(removed), x, y).holds);
      }
    }
  }

  CHECK_THROWS_AS(extension_holds_all(transitive(5), 0, 0, 1), Error);
}

TEST_CASE("length-3-or-4 lemma checks") {
  auto g2 = build_G(GParams{2, {}});
  auto res = lemma32_check(g2.t, g2.role_set("S"), g2.role_vertex("x"),
                           g2.role_vertex("y"), Lemma32Part::i);
  CHECK_FALSE(res.holds);
  CHECK(res.g_candidate);

  Tournament t = random_regular(5, SamplerConfig{1});
  auto generic =
      lemma32_check(t, vbit(0), 1, 2, Lemma32Part::i);
  CHECK(generic.holds);

  auto cex7 = lemma32_counterexample(7);
  CHECK_THROWS_AS(lemma32_check(cex7.t, cex7.role_set("S"),
                                cex7.role_vertex("x"), cex7.role_vertex("y"),
                                Lemma32Part::ii),
                  Error);
}

TEST_CASE("hamiltonian path insertion") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    int p = 2 + rng.below(11);
    Tournament t = random_tournament(p, rng.next_u64());
    auto ham = hamiltonian_path(t);
    CHECK(static_cast<int>(ham.size()) == p);
    VertexSet seen = 0;
    for (int v : ham) seen |= vbit(v);
    CHECK(seen == t.vertices());
    for (size_t i = 0; i + 1 < ham.size(); ++i)
      CHECK(t.has_arc(ham[i], ham[i + 1]));
  }
}

TEST_CASE("configuration sampling and the rerouting lemmas") {
  int conforming = 0, q_exists = 0;
  for (std::uint64_t seed = 0; conforming < 60 && seed < 120000; ++seed) {
    auto sample = sample_lemma_configuration(derive_seed(101, seed));
    if (sample.status == ConfigSampleStatus::no_pattern) continue;
    if (sample.status == ConfigSampleStatus::q_exists) {
      ++q_exists;
      // the precondition gate must fire on these
      CHECK_THROWS_AS(lemma33_property(*sample.config), Error);
      continue;
    }
    ++conforming;
    auto r33 = lemma33_property(*sample.config);
    auto r34 = lemma34_property(*sample.config);
    CHECK(r33.holds);
    CHECK(r34.holds);
  }
  CHECK(conforming == 60);
  CHECK(q_exists > 0);

  // replaying a seed reproduces the configuration exactly
  auto a = sample_lemma_configuration(424242);
  auto b = sample_lemma_configuration(424242);
  CHECK(a.status == b.status);
  if (a.config && b.config) {
    CHECK(a.config->t == b.config->t);
    CHECK(a.config->path == b.config->path);
    CHECK(a.config->z == b.config->z);
    CHECK(a.config->alpha == b.config->alpha);
  }
}

TEST_CASE("misplaced configuration pieces are rejected") {
  // build a conforming configuration, then break the domination pattern
  std::optional<LemmaConfiguration> cfg;
  for (std::uint64_t seed = 0; !cfg && seed < 20000; ++seed) {
    auto sample = sample_lemma_configuration(derive_seed(131, seed));
    if (sample.status == ConfigSampleStatus::conforming) cfg = sample.config;
  }
  REQUIRE(cfg.has_value());
  LemmaConfiguration broken = *cfg;
  broken.alpha = 0;
  CHECK_THROWS_AS(lemma33_property(broken), Error);
  LemmaConfiguration broken2 = *cfg;
  broken2.z = broken2.path[0];
  CHECK_THROWS_AS(lemma34_property(broken2), Error);
}
