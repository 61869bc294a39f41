#include "trn/tournament.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace trn {

std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  for (VertexSet m = s; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexSet set_from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_pair: return "DuplicatePair";
    case Errc::missing_pair: return "MissingPair";
    case Errc::self_loop: return "SelfLoop";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::same_vertex: return "SameVertex";
    case Errc::s_out_of_range: return "SOutOfRange";
    case Errc::s_is_everything: return "SIsEverything";
    case Errc::parse_error: return "ParseError";
    case Errc::no_such_arc: return "NoSuchArc";
    case Errc::invalid_variant: return "InvalidVariant";
    case Errc::window_infeasible: return "WindowInfeasible";
    case Errc::embed_failed: return "EmbedFailed";
    case Errc::fact_violated: return "FactViolated";
    case Errc::precondition_violated: return "PreconditionViolated";
  }
  return "UnknownError";
}

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_order(int order) {
  if (order < 1)
    throw Error(Errc::precondition_violated,
                "order must be at least 1, got " + std::to_string(order));
  if (order > kMaxOrder)
    throw Error(Errc::order_too_large,
                "order " + std::to_string(order) + " exceeds the maximum " +
                    std::to_string(kMaxOrder));
}

}  // namespace

Tournament Tournament::from_out_sets(int order, std::vector<VertexSet> out) {
  check_order(order);
  if (static_cast<int>(out.size()) != order)
    throw Error(Errc::precondition_violated,
                "expected " + std::to_string(order) + " adjacency rows, got " +
                    std::to_string(out.size()));
  VertexSet full = full_set(order);
  for (int i = 0; i < order; ++i) {
    if (out[static_cast<size_t>(i)] & ~full)
      throw Error(Errc::index_out_of_range,
                  "row " + std::to_string(i) + " has bits outside [0," +
                      std::to_string(order) + ")");
    if (set_contains(out[static_cast<size_t>(i)], i))
      throw Error(Errc::self_loop, "self-arc at vertex " + std::to_string(i));
  }
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      bool ij = set_contains(out[static_cast<size_t>(i)], j);
      bool ji = set_contains(out[static_cast<size_t>(j)], i);
      if (ij && ji)
        throw Error(Errc::duplicate_pair,
                    "both directions present for pair " + pair_str(i, j));
      if (!ij && !ji)
        throw Error(Errc::missing_pair,
                    "no arc between pair " + pair_str(i, j));
    }
  }
  return Tournament(order, std::move(out));
}

bool Tournament::has_arc(int u, int v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_)
    throw Error(Errc::index_out_of_range,
                "vertex pair " + pair_str(u, v) + " out of range for order " +
                    std::to_string(order_));
  if (u == v)
    throw Error(Errc::same_vertex, "arc query on the self-pair " + pair_str(u, v));
  return set_contains(out_[static_cast<size_t>(u)], v);
}

Tournament build_tournament(int order,
                            const std::vector<std::pair<int, int>>& arcs) {
  check_order(order);
  std::vector<VertexSet> out(static_cast<size_t>(order), 0);
  std::vector<VertexSet> seen(static_cast<size_t>(order), 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw Error(Errc::index_out_of_range,
                  "arc " + pair_str(u, v) + " out of range for order " +
                      std::to_string(order));
    if (u == v) throw Error(Errc::self_loop, "self-arc " + pair_str(u, v));
    if (set_contains(seen[static_cast<size_t>(u)], v))
      throw Error(Errc::duplicate_pair,
                  "pair " + pair_str(u, v) + " listed more than once");
    seen[static_cast<size_t>(u)] |= vbit(v);
    seen[static_cast<size_t>(v)] |= vbit(u);
    out[static_cast<size_t>(u)] |= vbit(v);
  }
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (!set_contains(seen[static_cast<size_t>(i)], j))
        throw Error(Errc::missing_pair, "pair " + pair_str(i, j) + " missing");
  return Tournament::from_out_sets(order, std::move(out));
}

DegreeSummary degree_summary(const Tournament& t) {
  DegreeSummary ds;
  int p = t.order();
  ds.outdegree.resize(static_cast<size_t>(p));
  ds.indegree.resize(static_cast<size_t>(p));
  for (int v = 0; v < p; ++v) {
    ds.outdegree[static_cast<size_t>(v)] = t.outdegree(v);
    ds.indegree[static_cast<size_t>(v)] = t.indegree(v);
    ds.irregularity =
        std::max(ds.irregularity, std::abs(t.outdegree(v) - t.indegree(v)));
  }
  return ds;
}

Tournament converse(const Tournament& t) {
  int p = t.order();
  std::vector<VertexSet> out(static_cast<size_t>(p), 0);
  for (int v = 0; v < p; ++v) out[static_cast<size_t>(v)] = t.in_set(v);
  return Tournament::from_out_sets(p, std::move(out));
}

InducedSubtournament induced_minus(const Tournament& t, VertexSet s) {
  int p = t.order();
  if (s & ~t.vertices())
    throw Error(Errc::s_out_of_range, "removed set has bits outside [0," +
                                          std::to_string(p) + ")");
  if (s == t.vertices())
    throw Error(Errc::s_is_everything, "cannot remove every vertex");
  InducedSubtournament res{Tournament::from_out_sets(1, {0}), {}, {}};
  res.old_to_new.assign(static_cast<size_t>(p), -1);
  for (int v = 0; v < p; ++v) {
    if (set_contains(s, v)) continue;
    res.old_to_new[static_cast<size_t>(v)] =
        static_cast<int>(res.new_to_old.size());
    res.new_to_old.push_back(v);
  }
  int q = static_cast<int>(res.new_to_old.size());
  std::vector<VertexSet> out(static_cast<size_t>(q), 0);
  for (int i = 0; i < q; ++i) {
    VertexSet keep = t.out_set(res.new_to_old[static_cast<size_t>(i)]) & ~s;
    for (VertexSet m = keep; m; m &= m - 1)
      out[static_cast<size_t>(i)] |=
          vbit(res.old_to_new[static_cast<size_t>(std::countr_zero(m))]);
  }
  res.t = Tournament::from_out_sets(q, std::move(out));
  return res;
}

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  int p = t.order();
  if (static_cast<int>(perm.size()) != p)
    throw Error(Errc::precondition_violated, "permutation size mismatch");
  std::vector<VertexSet> out(static_cast<size_t>(p), 0);
  for (int v = 0; v < p; ++v) {
    VertexSet row = 0;
    for (VertexSet m = t.out_set(v); m; m &= m - 1)
      row |= vbit(perm[static_cast<size_t>(std::countr_zero(m))]);
    out[static_cast<size_t>(perm[static_cast<size_t>(v)])] = row;
  }
  return Tournament::from_out_sets(p, std::move(out));
}

namespace {

[[noreturn]] void fact_fail(int clause, const std::string& detail) {
  throw Error(Errc::fact_violated,
              "degree fact clause " + std::to_string(clause) + " failed: " + detail);
}

}  // namespace

DegreeFactReport check_degree_facts(const Tournament& t) {
  int p = t.order();
  if (p < 2)
    throw Error(Errc::precondition_violated,
                "degree facts need order >= 2, got " + std::to_string(p));
  DegreeSummary ds = degree_summary(t);
  DegreeFactReport report;

  auto count_if_deg = [&](const std::vector<int>& deg, auto pred) {
    return static_cast<int>(std::count_if(deg.begin(), deg.end(), pred));
  };
  // Doubled-degree comparisons keep the half-integer bounds exact.
  auto has_two_distinct = [&](const std::vector<int>& deg, int low2,
                              int high2) {
    int lo = -1, hi = -1;
    for (int v = 0; v < p; ++v) {
      int d2 = 2 * deg[static_cast<size_t>(v)];
      if (d2 <= low2 && lo < 0) lo = v;
      if (d2 >= high2 && hi < 0 && v != lo) hi = v;
    }
    if (lo >= 0 && hi >= 0) return true;
    // retry allowing the witnesses in either order
    lo = hi = -1;
    for (int v = p - 1; v >= 0; --v) {
      int d2 = 2 * deg[static_cast<size_t>(v)];
      if (d2 >= high2 && hi < 0) hi = v;
      if (d2 <= low2 && lo < 0 && v != hi) lo = v;
    }
    return lo >= 0 && hi >= 0;
  };

  // clause 1, unconditional
  report.applicable.push_back(1);
  if (!has_two_distinct(ds.indegree, p - 1, p - 1) ||
      !has_two_distinct(ds.outdegree, p - 1, p - 1))
    fact_fail(1, "no indegree/outdegree split around (p-1)/2");

  if (ds.is_regular()) {
    report.applicable.push_back(2);
    if (p % 2 == 0) fact_fail(2, "regular tournament with even order");
    for (int v = 0; v < p; ++v)
      if (2 * ds.indegree[static_cast<size_t>(v)] != p - 1 ||
          2 * ds.outdegree[static_cast<size_t>(v)] != p - 1)
        fact_fail(2, "vertex " + std::to_string(v) + " is not balanced");
  } else {
    report.applicable.push_back(3);
    if (!has_two_distinct(ds.indegree, p - 2, p) ||
        !has_two_distinct(ds.outdegree, p - 2, p))
      fact_fail(3, "no indegree/outdegree split around p/2");
  }

  if (ds.is_almost_regular()) {
    report.applicable.push_back(4);
    if (p % 2 != 0) fact_fail(4, "almost regular tournament with odd order");
    int n = p / 2;
    int in_n = count_if_deg(ds.indegree, [&](int d) { return d == n; });
    int out_n = count_if_deg(ds.outdegree, [&](int d) { return d == n; });
    if (in_n != n || out_n != n)
      fact_fail(4, "semidegree-n split is " + std::to_string(in_n) + "/" +
                       std::to_string(out_n));
  }

  if (!ds.is_regular()) {
    // Both semidegrees below (p+1)/2; the one-sided variant admits
    // counterexamples (a dominant vertex over a regular block).
    bool bounded = true;
    for (int v = 0; v < p; ++v)
      bounded = bounded && 2 * ds.indegree[static_cast<size_t>(v)] < p + 1 &&
                2 * ds.outdegree[static_cast<size_t>(v)] < p + 1;
    if (bounded) {
      report.applicable.push_back(5);
      if (!ds.is_almost_regular())
        fact_fail(5, "bounded semidegrees but irregularity " +
                         std::to_string(ds.irregularity));
    }
  }

  {
    bool all_in =
        count_if_deg(ds.indegree, [&](int d) { return 2 * d < p; }) == p;
    bool all_out =
        count_if_deg(ds.outdegree, [&](int d) { return 2 * d < p; }) == p;
    if (all_in || all_out) {
      report.applicable.push_back(6);
      if (!ds.is_regular())
        fact_fail(6, "all semidegrees below p/2 but not regular");
    }
  }

  return report;
}

int LabeledTournament::role_vertex(const std::string& name) const {
  auto it = roles.find(name);
  if (it == roles.end() || it->second.size() != 1)
    throw Error(Errc::precondition_violated,
                "no singleton role named '" + name + "'");
  return it->second.front();
}

VertexSet LabeledTournament::role_set(const std::string& name) const {
  auto it = roles.find(name);
  if (it == roles.end())
    throw Error(Errc::precondition_violated, "no role named '" + name + "'");
  return set_from_vector(it->second);
}

void validate_roles(const LabeledTournament& lt) {
  VertexSet taken = 0;
  for (const auto& [name, targets] : lt.roles) {
    if (targets.empty())
      throw Error(Errc::precondition_violated, "role '" + name + "' is empty");
    for (int v : targets) {
      if (v < 0 || v >= lt.t.order())
        throw Error(Errc::precondition_violated,
                    "role '" + name + "' target " + std::to_string(v) +
                        " out of range");
      if (set_contains(taken, v))
        throw Error(Errc::precondition_violated,
                    "vertex " + std::to_string(v) + " has two roles");
      taken |= vbit(v);
    }
  }
}

std::string serialize(const LabeledTournament& lt) {
  const Tournament& t = lt.t;
  int p = t.order();
  std::string out = "tournament " + std::to_string(p) + "\n";
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j)
        out += '-';
      else
        out += set_contains(t.out_set(i), j) ? '1' : '0';
    }
    out += '\n';
  }
  for (const auto& [name, targets] : lt.roles) {
    out += "role " + name;
    for (int v : targets) out += " " + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string serialize(const Tournament& t) {
  return serialize(LabeledTournament{t, {}});
}

namespace {

struct Token {
  std::string text;
  int line = 0;  // 1-based
  int col = 0;   // 1-based
};

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  throw Error(Errc::parse_error, "parse error at " + std::to_string(line) +
                                     ":" + std::to_string(col) + ": " + msg);
}

}  // namespace

LabeledTournament parse(const std::string& text) {
  // Tokenize the header and matrix section; remember where the matrix ends so
  // the role section can be read line by line.
  std::vector<Token> tokens;
  size_t pos = 0;
  int line = 1, col = 1;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };

  auto next_token = [&]() -> Token {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      advance(text[pos]);
      ++pos;
    }
    if (pos >= text.size()) parse_fail(line, col, "unexpected end of input");
    Token tok{"", line, col};
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      tok.text += text[pos];
      advance(text[pos]);
      ++pos;
    }
    return tok;
  };

  Token header = next_token();
  if (header.text != "tournament")
    parse_fail(header.line, header.col,
               "expected 'tournament', got '" + header.text + "'");
  Token order_tok = next_token();
  int p = 0;
  try {
    size_t used = 0;
    p = std::stoi(order_tok.text, &used);
    if (used != order_tok.text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    parse_fail(order_tok.line, order_tok.col,
               "expected an order, got '" + order_tok.text + "'");
  }
  if (p < 1) parse_fail(order_tok.line, order_tok.col, "order must be >= 1");
  if (p > kMaxOrder)
    throw Error(Errc::order_too_large,
                "order " + std::to_string(p) + " exceeds the maximum " +
                    std::to_string(kMaxOrder));

  std::vector<VertexSet> rows(static_cast<size_t>(p), 0);
  for (int i = 0; i < p; ++i) {
    Token row = next_token();
    if (static_cast<int>(row.text.size()) != p)
      parse_fail(row.line, row.col,
                 "row " + std::to_string(i) + " must have exactly " +
                     std::to_string(p) + " characters");
    for (int j = 0; j < p; ++j) {
      char c = row.text[static_cast<size_t>(j)];
      if (i == j) {
        if (c != '-')
          parse_fail(row.line, row.col + j, "expected '-' on the diagonal");
      } else if (c == '1') {
        rows[static_cast<size_t>(i)] |= vbit(j);
      } else if (c != '0') {
        parse_fail(row.line, row.col + j,
                   std::string("unexpected character '") + c + "'");
      }
    }
  }

  // Anything left on the current line after the matrix is an error; role
  // lines start on the following line.
  while (pos < text.size() && text[pos] != '\n') {
    if (!std::isspace(static_cast<unsigned char>(text[pos])))
      parse_fail(line, col, "unexpected content after the adjacency matrix");
    advance(text[pos]);
    ++pos;
  }
  if (pos < text.size()) {
    advance(text[pos]);
    ++pos;
  }

  LabeledTournament lt{Tournament::from_out_sets(p, std::move(rows)), {}};

  VertexSet taken = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string raw = text.substr(pos, eol - pos);
    int role_line = line;
    pos = eol < text.size() ? eol + 1 : eol;
    ++line;
    col = 1;

    std::istringstream is(raw);
    std::string keyword;
    if (!(is >> keyword)) continue;  // blank line
    if (keyword != "role")
      parse_fail(role_line, 1, "expected 'role', got '" + keyword + "'");
    std::string name;
    if (!(is >> name)) parse_fail(role_line, 1, "role line without a name");
    if (lt.roles.count(name))
      parse_fail(role_line, 1, "role '" + name + "' defined twice");
    std::vector<int> targets;
    int v = 0;
    while (is >> v) {
      if (v < 0 || v >= p)
        parse_fail(role_line, 1,
                   "role '" + name + "' target " + std::to_string(v) +
                       " out of range");
      if (set_contains(taken, v))
        parse_fail(role_line, 1,
                   "vertex " + std::to_string(v) + " has two roles");
      taken |= vbit(v);
      targets.push_back(v);
    }
    if (!is.eof())
      parse_fail(role_line, 1, "role '" + name + "' has a non-numeric target");
    if (targets.empty())
      parse_fail(role_line, 1, "role '" + name + "' has no targets");
    std::sort(targets.begin(), targets.end());
    lt.roles.emplace(name, std::move(targets));
  }

  return lt;
}

}  // namespace trn
