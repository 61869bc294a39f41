#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trn {

// A tournament is an orientation of a complete graph: exactly one arc between
// every pair of distinct vertices. Vertices are dense 0-based integers and
// every vertex set (including adjacency rows) is a bitmask, so neighborhood
// queries and dominance tests are single word operations. The order cap keeps
// the subset DP tables in one machine word per state.
inline constexpr int kMaxOrder = 26;

using VertexSet = std::uint32_t;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr VertexSet full_set(int p) { return (VertexSet{1} << p) - 1; }
constexpr bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }

std::vector<int> set_to_vector(VertexSet s);
VertexSet set_from_vector(const std::vector<int>& vs);

enum class Errc {
  duplicate_pair,
  missing_pair,
  self_loop,
  index_out_of_range,
  order_too_large,
  same_vertex,
  s_out_of_range,
  s_is_everything,
  parse_error,
  no_such_arc,
  invalid_variant,
  window_infeasible,
  embed_failed,
  fact_violated,
  precondition_violated,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

class Tournament {
 public:
  // Validates all type invariants: no self-arcs, exactly one arc per pair.
  static Tournament from_out_sets(int order, std::vector<VertexSet> out_sets);

  int order() const { return order_; }
  VertexSet vertices() const { return full_set(order_); }

  // Checked arc query; throws on a self-pair or out-of-range index.
  bool has_arc(int u, int v) const;

  VertexSet out_set(int v) const { return out_[static_cast<size_t>(v)]; }
  VertexSet in_set(int v) const {
    return full_set(order_) & ~out_[static_cast<size_t>(v)] & ~vbit(v);
  }
  int outdegree(int v) const { return std::popcount(out_set(v)); }
  int indegree(int v) const { return order_ - 1 - outdegree(v); }

  bool operator==(const Tournament&) const = default;

 private:
  Tournament(int order, std::vector<VertexSet> out)
      : order_(order), out_(std::move(out)) {}

  int order_ = 0;
  std::vector<VertexSet> out_;
};

// Builds from an explicit arc list; every unordered pair must appear exactly
// once. Error messages name the offending pair.
Tournament build_tournament(int order,
                            const std::vector<std::pair<int, int>>& arcs);

struct DegreeSummary {
  std::vector<int> outdegree;
  std::vector<int> indegree;
  int irregularity = 0;  // max |d+(v) - d-(v)|

  bool is_regular() const { return irregularity == 0; }
  bool is_almost_regular() const { return irregularity == 1; }
};

DegreeSummary degree_summary(const Tournament& t);

// All arcs reversed. Involution: converse(converse(t)) == t.
Tournament converse(const Tournament& t);

struct InducedSubtournament {
  Tournament t;
  std::vector<int> new_to_old;  // vertex of t -> vertex of the parent
  std::vector<int> old_to_new;  // -1 for removed vertices
};

// Subtournament induced by the complement of s, with the relabeling map.
InducedSubtournament induced_minus(const Tournament& t, VertexSet s);

// Vertex v of t becomes perm[v] of the result.
Tournament relabel(const Tournament& t, const std::vector<int>& perm);

// Unconditional degree facts every tournament of order >= 2 satisfies:
//   1  some vertex has indegree <= (p-1)/2 and another >= (p-1)/2
//      (and the outdegree twin)
//   2  regular implies odd order with all semidegrees (p-1)/2
//   3  non-regular implies vertices with indegree <= (p-2)/2 and >= p/2
//      (and the outdegree twin)
//   4  almost regular implies p = 2n with an n/n split of semidegree-n
//      vertices
//   5  non-regular with all indegrees (or all outdegrees) < (p+1)/2 implies
//      almost regular
//   6  all indegrees (or all outdegrees) < p/2 implies regular
// Returns the clauses whose hypotheses applied; a failed clause throws
// Error(fact_violated), which signals a representation or generator bug.
struct DegreeFactReport {
  std::vector<int> applicable;
};

DegreeFactReport check_degree_facts(const Tournament& t);

// A tournament plus named vertices/blocks for fixture claims. Role targets
// are disjoint and need not cover all vertices.
struct LabeledTournament {
  Tournament t;
  std::map<std::string, std::vector<int>> roles;

  int role_vertex(const std::string& name) const;
  VertexSet role_set(const std::string& name) const;

  bool operator==(const LabeledTournament&) const = default;
};

// Throws Error(precondition_violated) when roles overlap or leave [0, p).
void validate_roles(const LabeledTournament& lt);

// Text format (".trn"):
//   line 1:        tournament <p>
//   lines 2..p+1:  row i as p characters in {0,1,-}; position j is 1 iff
//                  arc i->j, '-' on the diagonal
//   then optionally one `role <name> <index...>` line per role
// The header and matrix section are whitespace-insensitive between tokens;
// role lines are line-structured. Round trips are bit-exact.
std::string serialize(const Tournament& t);
std::string serialize(const LabeledTournament& lt);
LabeledTournament parse(const std::string& text);

}  // namespace trn
