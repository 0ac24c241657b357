#pragma once

/// \file merge.hpp
/// \brief Merging two graphs along cyclets, and the merged labeling.
///
/// merge(g, C, h, C') takes the disjoint union (h's vertex i becomes
/// g.order() + i), deletes the d edges of each cyclet and adds
/// u_i v_{i+1} and v_i u_{i+1} for every i mod d.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magiclab/cyclet.hpp"
#include "magiclab/families.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/quotient.hpp"

namespace magiclab {

struct MergeReport {
  bool balanced = false;      // sign bipartition of the right labeling is balanced
  bool alternating = false;   // right cyclet alternates links and non-links
  bool sums_match = false;    // l(u_{i-1}) + l(u_{i+1}) = l'(v_{i-1}) + l'(v_{i+1}) for all i
  bool sr_condition_i = false;   // u_{i+d/2} = partner(u_i), same on the right
  bool sr_condition_ii = false;  // u_{i+d/2} = partner(u_{d/2-1-i}), same on the right

  /// The merged labeling is then guaranteed distance magic.
  bool mergeable() const { return balanced && alternating && sums_match; }
  /// Mergeable, and self-reverse inputs give a self-reverse result.
  bool preserves_self_reverse() const { return mergeable() && (sr_condition_i || sr_condition_ii); }

  bool operator==(const MergeReport&) const = default;
};

namespace detail {
inline void require_cyclet_in(const Graph& g, const Cyclet& c, const char* side) {
  if (c.host_order() != g.order())
    throw std::invalid_argument(std::string("merge: ") + side + " cyclet belongs to a graph of another order");
  for (auto [a, b] : c.edges())
    if (!g.adjacent(a, b))
      throw std::invalid_argument(std::string("merge: ") + side + " cyclet edge missing from graph");
}

inline Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
}  // namespace detail

inline Graph merge(const Graph& g, const Cyclet& c, const Graph& h, const Cyclet& c2) {
  if (c.length() != c2.length())
    throw std::invalid_argument("merge: cyclet lengths differ (" + std::to_string(c.length()) + " vs " +
                                std::to_string(c2.length()) + ")");
  detail::require_cyclet_in(g, c, "left");
  detail::require_cyclet_in(h, c2, "right");
  const int offset = g.order();
  const int d = c.length();

  std::set<Edge> removed;
  for (auto [a, b] : c.edges()) removed.insert(detail::ordered(a, b));
  for (auto [a, b] : c2.edges()) removed.insert(detail::ordered(offset + a, offset + b));

  std::vector<Edge> edges;
  for (auto e : disjoint_union(g, h).edges())
    if (!removed.contains(e)) edges.push_back(e);
  for (int i = 0; i < d; ++i) {
    edges.emplace_back(c.at(i), offset + c2.at(i + 1));
    edges.emplace_back(offset + c2.at(i), c.at(i + 1));
  }
  return Graph(g.order() + h.order(), edges);
}

/// Labels of g kept; h's label x becomes x + n when x >= 0 and x - n otherwise.
inline Labeling merged_labeling(const Graph& g, const Labeling& l, const Graph& h, const Labeling& l2) {
  detail::require_same_order(g, l);
  detail::require_same_order(h, l2);
  if (!is_balanced(h, l2))
    throw std::invalid_argument("merged_labeling: right labeling's sign bipartition is not balanced");
  const int n = g.order();
  std::vector<Label> values(l.values());
  for (Label x : l2.values()) values.push_back(x >= 0 ? x + n : x - n);
  return Labeling(std::move(values));
}

inline MergeReport check_merge_conditions(const Graph& g, const Labeling& l, const Cyclet& c, const Graph& h,
                                          const Labeling& l2, const Cyclet& c2) {
  detail::require_same_order(g, l);
  detail::require_same_order(h, l2);
  detail::require_cyclet_in(g, c, "left");
  detail::require_cyclet_in(h, c2, "right");
  if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("merge conditions: empty graph");
  const int valence = g.degree(0);
  if (!is_regular(g, valence) || !is_regular(h, valence))
    throw std::invalid_argument("merge conditions: graphs must be regular of equal valence");
  if (valence < 4 || valence % 2 != 0)
    throw std::invalid_argument("merge conditions: valence must be even and at least 4");
  if (!is_distance_magic(g, l) || !is_distance_magic(h, l2))
    throw std::invalid_argument("merge conditions: both labelings must be distance magic");
  if (c.length() != c2.length()) throw std::invalid_argument("merge conditions: cyclet lengths differ");
  const int d = c.length();
  if (d % 2 != 0) throw std::invalid_argument("merge conditions: cyclets must have even length");
  const int half = d / 2;

  MergeReport r;
  r.balanced = is_balanced(h, l2);
  r.alternating = is_alternating(h, l2, c2);
  r.sums_match = true;
  r.sr_condition_i = true;
  r.sr_condition_ii = true;
  for (int i = 0; i < d; ++i) {
    if (l[c.at(i - 1)] + l[c.at(i + 1)] != l2[c2.at(i - 1)] + l2[c2.at(i + 1)]) r.sums_match = false;
    if (c.at(i + half) != partner(l, c.at(i)) || c2.at(i + half) != partner(l2, c2.at(i)))
      r.sr_condition_i = false;
    if (c.at(i + half) != partner(l, c.at(half - 1 - i)) || c2.at(i + half) != partner(l2, c2.at(half - 1 - i)))
      r.sr_condition_ii = false;
  }
  return r;
}

/// First of the 2d rotations/reflections of c2 (rotations of the given
/// orientation first, then of the reversed one) that makes the pair mergeable.
inline std::optional<Cyclet> align_cyclets(const Graph& g, const Labeling& l, const Cyclet& c, const Graph& h,
                                           const Labeling& l2, const Cyclet& c2) {
  const int d = c2.length();
  for (int reflect = 0; reflect < 2; ++reflect)
    for (int shift = 0; shift < d; ++shift) {
      std::vector<Vertex> seq(d);
      for (int i = 0; i < d; ++i) seq[i] = reflect ? c2.at(shift - i) : c2.at(shift + i);
      Cyclet candidate = make_cyclet(h, std::move(seq));
      if (check_merge_conditions(g, l, c, h, l2, candidate).mergeable()) return candidate;
    }
  return std::nullopt;
}

/// The 4-cyclet through the vertices labeled a, b, -b, -a, for a solid
/// quotient edge {a, b} with semiedges at both ends.
inline Cyclet cyclet_from_quotient_edge(const Graph& g, const Labeling& l, Label a, Label b) {
  if (a <= 0 || b <= 0)
    throw std::invalid_argument("cyclet_from_quotient_edge: labels must be positive (central vertex excluded)");
  const QuotientGraph q = quotient(g, l);
  const QuotientEdge* e = q.find_edge(a, b);
  if (e == nullptr)
    throw std::invalid_argument("cyclet_from_quotient_edge: no quotient edge {" + std::to_string(a) + "," +
                                std::to_string(b) + "}");
  if (e->style != EdgeStyle::solid)
    throw std::invalid_argument("cyclet_from_quotient_edge: quotient edge {" + std::to_string(a) + "," +
                                std::to_string(b) + "} is dashed");
  if (!q.has_semiedge(a) || !q.has_semiedge(b))
    throw std::invalid_argument("cyclet_from_quotient_edge: both ends need a semiedge");
  return make_cyclet(g, {l.vertex_of(a), l.vertex_of(b), l.vertex_of(-b), l.vertex_of(-a)});
}

/// Solid quotient edges {a, b}, a < b, with semiedges at both ends and b - a = 4.
inline std::vector<std::pair<Label, Label>> extensible_edges(const QuotientGraph& q) {
  std::vector<std::pair<Label, Label>> out;
  for (const auto& e : q.edges)
    if (e.a > 0 && e.style == EdgeStyle::solid && e.b - e.a == 4 && q.has_semiedge(e.a) && q.has_semiedge(e.b))
      out.emplace_back(e.a, e.b);
  return out;
}

struct Extension {
  Graph graph;
  Labeling labeling;
};

/// Merges a copy of W(4), with its non-degenerate labeling and the cyclet of
/// its quotient edge {1, 5}, along the cyclet of the quotient edge {a, b}.
/// The result has order n + 8 and the extensible edge {n + 3, n + 7}.
inline Extension extend_by_w4(const Graph& g, const Labeling& l, Label a, Label b) {
  if (a > b) std::swap(a, b);
  if (b - a != 4)
    throw std::invalid_argument("extend_by_w4: labels " + std::to_string(a) + " and " + std::to_string(b) +
                                " do not differ by 4");
  const Cyclet left = cyclet_from_quotient_edge(g, l, a, b);
  const Graph w4 = wreath(4);
  const Labeling w4_labeling = wreath_nondegenerate_labeling(4);
  const Cyclet right = cyclet_from_quotient_edge(w4, w4_labeling, 1, 5);
  const MergeReport report = check_merge_conditions(g, l, left, w4, w4_labeling, right);
  if (!report.preserves_self_reverse())
    throw std::logic_error("extend_by_w4: merge conditions unexpectedly fail");
  return {merge(g, left, w4, right), merged_labeling(g, l, w4, w4_labeling)};
}

/// Applies extend_by_w4 `times` times, starting at edge {a, b} and then
/// continuing along the freshly created {n + 3, n + 7} edge.
inline Extension extend_by_w4_repeatedly(const Graph& g, const Labeling& l, Label a, Label b, int times) {
  if (times < 0) throw std::invalid_argument("extend_by_w4: negative repetition count");
  Extension current{g, l};
  for (int k = 0; k < times; ++k) {
    const int n = current.graph.order();
    current = extend_by_w4(current.graph, current.labeling, a, b);
    a = n + 3;
    b = n + 7;
  }
  return current;
}

}  // namespace magiclab
