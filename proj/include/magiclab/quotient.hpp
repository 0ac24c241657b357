#pragma once

/// \file quotient.hpp
/// \brief Quotients of non-degenerate self-reverse labelings as Z2-voltage graphs.
///
/// Quotient vertices are the nonnegative labels. A solid edge {a, b} lifts to
/// {+a,+b} and {-a,-b}; a dashed edge to {+a,-b} and {-a,+b}; a semiedge at a
/// to {+a,-a}; an edge {0, a} at the central vertex to {0,+a} and {0,-a}.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

enum class EdgeStyle { solid, dashed };

inline const char* to_string(EdgeStyle s) { return s == EdgeStyle::solid ? "solid" : "dashed"; }

struct QuotientEdge {
  Label a = 0;  // a < b
  Label b = 0;
  EdgeStyle style = EdgeStyle::solid;

  auto operator<=>(const QuotientEdge&) const = default;
};

struct QuotientGraph {
  int n = 0;                         // order of the covering graph
  std::vector<Label> vertices;       // nonnegative labels, ascending
  std::vector<QuotientEdge> edges;   // sorted
  std::vector<Label> semiedges;      // ascending
  bool central = false;              // label 0 present (odd n)

  bool operator==(const QuotientGraph&) const = default;

  bool has_semiedge(Label a) const { return std::binary_search(semiedges.begin(), semiedges.end(), a); }

  /// The edge between a and b, if any.
  const QuotientEdge* find_edge(Label a, Label b) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges)
      if (e.a == a && e.b == b) return &e;
    return nullptr;
  }
};

/// Raised when a quotient cannot be formed or is malformed.
class QuotientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws QuotientError naming the first violated invariant.
inline void validate(const QuotientGraph& q) {
  auto fail = [](const std::string& what) { throw QuotientError("invalid quotient: " + what); };
  if (q.n < 1) fail("order must be positive");
  const MagicLabelSet set(q.n);
  if (q.vertices != set.nonnegative()) fail("vertices must be exactly the nonnegative labels");
  if (q.central != set.has_zero()) fail("central flag must be set exactly for odd order");

  std::map<Label, int> degree;
  std::map<Label, long> balance;
  for (Label a : q.vertices) degree[a] = 0, balance[a] = 0;
  std::vector<std::pair<Label, Label>> seen;
  for (const auto& e : q.edges) {
    if (e.a >= e.b) fail("edge endpoints must satisfy a < b with no loops");
    if (!degree.contains(e.a) || !degree.contains(e.b)) fail("edge endpoint is not a vertex");
    seen.emplace_back(e.a, e.b);
    if (e.a == 0) {
      if (e.style != EdgeStyle::solid) fail("edges at the central vertex must be solid");
    } else {
      const int sign = e.style == EdgeStyle::solid ? 1 : -1;
      balance[e.a] += sign * e.b;
      balance[e.b] += sign * e.a;
    }
    ++degree[e.a];
    ++degree[e.b];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("parallel edges");
  if (!std::is_sorted(q.semiedges.begin(), q.semiedges.end()) ||
      std::adjacent_find(q.semiedges.begin(), q.semiedges.end()) != q.semiedges.end())
    fail("semiedges must be ascending and distinct");
  for (Label a : q.semiedges) {
    if (!degree.contains(a)) fail("semiedge at a non-vertex");
    if (a == 0) fail("semiedge at the central vertex");
    ++degree[a];
    balance[a] -= a;
  }
  for (Label a : q.vertices) {
    if (a == 0) {
      if (degree[a] != 2) fail("central vertex must have exactly 2 edges");
      continue;
    }
    if (degree[a] != 4) fail("vertex " + std::to_string(a) + " has degree " + std::to_string(degree[a]));
    if (balance[a] != 0) fail("signed balance fails at vertex " + std::to_string(a));
  }
}

inline QuotientGraph quotient(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  if (!is_regular(g, 4)) throw QuotientError("graph is not tetravalent");
  if (!is_distance_magic(g, l)) throw QuotientError("labeling is not distance magic");
  if (!is_self_reverse(g, l)) throw QuotientError("labeling is not self-reverse");
  if (is_degenerate(g, l)) throw QuotientError("degenerate labeling has no simple quotient");

  QuotientGraph q;
  q.n = g.order();
  q.vertices = MagicLabelSet(q.n).nonnegative();
  q.central = MagicLabelSet(q.n).has_zero();
  for (auto [u, v] : g.edges()) {
    const Label lu = l[u], lv = l[v];
    if (lu == -lv) {
      if (lu != 0) q.semiedges.push_back(std::abs(lu));
      continue;
    }
    const Label a = std::min(std::abs(lu), std::abs(lv));
    const Label b = std::max(std::abs(lu), std::abs(lv));
    const bool same_sign = (lu >= 0) == (lv >= 0) || lu == 0 || lv == 0;
    q.edges.push_back({a, b, same_sign ? EdgeStyle::solid : EdgeStyle::dashed});
  }
  std::sort(q.edges.begin(), q.edges.end());
  q.edges.erase(std::unique(q.edges.begin(), q.edges.end()), q.edges.end());
  std::sort(q.semiedges.begin(), q.semiedges.end());
  q.semiedges.erase(std::unique(q.semiedges.begin(), q.semiedges.end()), q.semiedges.end());
  validate(q);
  return q;
}

struct Lift {
  Graph graph;
  Labeling labeling;
};

/// Double cover of q. Vertex i carries the i-th smallest label.
inline Lift lift(const QuotientGraph& q) {
  validate(q);
  const MagicLabelSet set(q.n);
  auto at = [&](Label a) { return set.index_of(a); };
  std::vector<Edge> edges;
  for (const auto& e : q.edges) {
    if (e.a == 0) {
      edges.emplace_back(at(0), at(e.b));
      edges.emplace_back(at(0), at(-e.b));
    } else if (e.style == EdgeStyle::solid) {
      edges.emplace_back(at(e.a), at(e.b));
      edges.emplace_back(at(-e.a), at(-e.b));
    } else {
      edges.emplace_back(at(e.a), at(-e.b));
      edges.emplace_back(at(-e.a), at(e.b));
    }
  }
  for (Label a : q.semiedges) edges.emplace_back(at(a), at(-a));
  return {Graph(q.n, edges), Labeling(set.values())};
}

/// Graphviz rendering; semiedges point at invisible anchors `_se_<label>`.
inline std::string export_dot(const QuotientGraph& q) {
  std::ostringstream out;
  out << "graph quotient {\n";
  out << "  node [shape=circle];\n";
  for (Label a : q.vertices) {
    out << "  \"" << a << "\"";
    if (a == 0 && q.central) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (Label a : q.semiedges)
    out << "  \"_se_" << a << "\" [shape=point, width=0, height=0, style=invis];\n";
  for (const auto& e : q.edges)
    out << "  \"" << e.a << "\" -- \"" << e.b << "\" [style=" << to_string(e.style) << "];\n";
  for (Label a : q.semiedges) out << "  \"" << a << "\" -- \"_se_" << a << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace magiclab
