#pragma once

/// \file labeling.hpp
/// \brief Signed distance magic labelings and the predicates defined on them.
///
/// Labels of an order-n graph are the n integers 1-n, 3-n, ..., n-1. A
/// labeling is distance magic when every vertex's neighbor labels sum to 0.

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magiclab/cyclet.hpp"
#include "magiclab/graph.hpp"

namespace magiclab {

using Label = int;

/// The arithmetic progression 1-n, 3-n, ..., n-1.
class MagicLabelSet {
 public:
  explicit MagicLabelSet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("label set: order must be positive");
  }

  int order() const { return n_; }
  bool contains(Label a) const { return a >= 1 - n_ && a <= n_ - 1 && ((a + n_ - 1) % 2 == 0); }
  /// Position of a in ascending order.
  int index_of(Label a) const { return (a + n_ - 1) / 2; }
  Label at(int index) const { return 2 * index + 1 - n_; }
  bool has_zero() const { return n_ % 2 == 1; }

  std::vector<Label> values() const {
    std::vector<Label> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = at(i);
    return out;
  }

  /// The members >= 0, ascending.
  std::vector<Label> nonnegative() const {
    std::vector<Label> out;
    for (int i = 0; i < n_; ++i)
      if (at(i) >= 0) out.push_back(at(i));
    return out;
  }

 private:
  int n_;
};

inline MagicLabelSet label_set(int n) { return MagicLabelSet(n); }

/// Bijection from vertices 0..n-1 onto the magic label set of order n.
class Labeling {
 public:
  Labeling() = default;

  explicit Labeling(std::vector<Label> values) : values_(std::move(values)) {
    const int n = order();
    if (n == 0) throw std::invalid_argument("labeling: empty");
    const MagicLabelSet set(n);
    vertex_of_.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      const Label a = values_[v];
      if (!set.contains(a))
        throw std::invalid_argument("labeling: " + std::to_string(a) +
                                    " is not a label for order " + std::to_string(n));
      int& slot = vertex_of_[set.index_of(a)];
      if (slot >= 0) throw std::invalid_argument("labeling: label " + std::to_string(a) + " repeated");
      slot = v;
    }
  }

  int order() const { return static_cast<int>(values_.size()); }
  Label operator[](Vertex v) const { return values_.at(v); }
  const std::vector<Label>& values() const { return values_; }

  Vertex vertex_of(Label a) const {
    const MagicLabelSet set(order());
    if (!set.contains(a)) throw std::invalid_argument("labeling: no vertex carries " + std::to_string(a));
    return vertex_of_[set.index_of(a)];
  }

  bool operator==(const Labeling& other) const { return values_ == other.values_; }

 private:
  std::vector<Label> values_;
  std::vector<Vertex> vertex_of_;
};

/// Graph on the label set: an edge {a, b} for every edge whose ends carry a and b.
/// Two labelings are equivalent exactly when their label graphs coincide.
struct LabelGraph {
  int order = 0;
  std::vector<std::pair<Label, Label>> edges;  // a < b, sorted

  auto operator<=>(const LabelGraph&) const = default;
};

/// Vertex u, v^l for each pair; central holds the label-0 vertex for odd order.
struct PairPartition {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // first carries the positive label
  std::optional<Vertex> central;
};

namespace detail {
inline void require_same_order(const Graph& g, const Labeling& l) {
  if (g.order() != l.order())
    throw std::invalid_argument("labeling order " + std::to_string(l.order()) +
                                " does not match graph order " + std::to_string(g.order()));
}
}  // namespace detail

/// Conversion to labels 1..n.
inline std::vector<int> to_classical(const Labeling& l) {
  std::vector<int> out(l.order());
  for (Vertex v = 0; v < l.order(); ++v) out[v] = (1 + l.order() + l[v]) / 2;
  return out;
}

inline bool is_distance_magic(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  for (Vertex v = 0; v < g.order(); ++v) {
    long sum = 0;
    for (Vertex u : g.neighbors(v)) sum += l[u];
    if (sum != 0) return false;
  }
  return true;
}

inline Vertex partner(const Labeling& l, Vertex v) { return l.vertex_of(-l[v]); }

inline Permutation partner_permutation(const Labeling& l) {
  std::vector<Vertex> images(l.order());
  for (Vertex v = 0; v < l.order(); ++v) images[v] = partner(l, v);
  return Permutation(std::move(images));
}

inline PairPartition pair_partition(const Labeling& l) {
  PairPartition out;
  for (Label a : MagicLabelSet(l.order()).nonnegative()) {
    if (a == 0)
      out.central = l.vertex_of(0);
    else
      out.pairs.emplace_back(l.vertex_of(a), l.vertex_of(-a));
  }
  return out;
}

inline Labeling reverse(const Labeling& l) {
  std::vector<Label> values(l.values());
  for (auto& a : values) a = -a;
  return Labeling(std::move(values));
}

/// Partner involution is an automorphism.
inline bool is_self_reverse(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  return is_automorphism(g, partner_permutation(l));
}

/// Same predicate, checked set-pair by set-pair: between any two classes of
/// the pair partition there are no edges, all edges, or two disjoint edges.
inline bool is_self_reverse_by_pairs(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  std::vector<std::vector<Vertex>> classes;
  for (Label a : MagicLabelSet(l.order()).nonnegative()) {
    if (a == 0)
      classes.push_back({l.vertex_of(0)});
    else
      classes.push_back({l.vertex_of(a), l.vertex_of(-a)});
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      std::vector<Edge> between;
      for (Vertex u : classes[i])
        for (Vertex v : classes[j])
          if (g.adjacent(u, v)) between.emplace_back(u, v);
      const std::size_t full = classes[i].size() * classes[j].size();
      if (between.empty() || between.size() == full) continue;
      const bool disjoint_pair = between.size() == 2 && between[0].first != between[1].first &&
                                 between[0].second != between[1].second;
      if (!disjoint_pair) return false;
    }
  return true;
}

/// Some non-central u is adjacent to both members of another pair.
inline bool is_degenerate(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (l[u] == 0) continue;
    for (Vertex v : g.neighbors(u)) {
      if (l[v] == 0) continue;
      if (g.adjacent(u, partner(l, v))) return true;
    }
  }
  return false;
}

inline LabelGraph label_graph(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  LabelGraph out{g.order(), {}};
  for (auto [u, v] : g.edges()) out.edges.emplace_back(std::min(l[u], l[v]), std::max(l[u], l[v]));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

inline bool are_equivalent(const Graph& g1, const Labeling& l1, const Graph& g2, const Labeling& l2) {
  if (g1.order() != g2.order()) throw std::invalid_argument("are_equivalent: order mismatch");
  return label_graph(g1, l1) == label_graph(g2, l2);
}

/// Vertex i of the result carries the i-th smallest label.
inline std::pair<Graph, Labeling> realize(const LabelGraph& lg) {
  const MagicLabelSet set(lg.order);
  std::vector<Edge> edges;
  for (auto [a, b] : lg.edges) {
    if (!set.contains(a) || !set.contains(b) || a == b)
      throw std::invalid_argument("label graph: bad edge {" + std::to_string(a) + "," +
                                  std::to_string(b) + "}");
    edges.emplace_back(set.index_of(a), set.index_of(b));
  }
  return {Graph(lg.order, edges), Labeling(set.values())};
}

/// A = {v : l(v) >= 0}, B = the rest; both ascending.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> bipartition(const Labeling& l) {
  std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
  for (Vertex v = 0; v < l.order(); ++v) (l[v] >= 0 ? out.first : out.second).push_back(v);
  return out;
}

inline bool is_link(const Graph& g, const Labeling& l, Edge e) {
  detail::require_same_order(g, l);
  if (!g.adjacent(e.first, e.second))
    throw std::invalid_argument("is_link: (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") is not an edge");
  return (l[e.first] < 0) != (l[e.second] < 0);
}

inline bool is_balanced(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("is_balanced: vertex " + std::to_string(v) + " has odd degree");
  for (Vertex v = 0; v < g.order(); ++v) {
    int in_a = 0;
    for (Vertex u : g.neighbors(v))
      if (l[u] >= 0) ++in_a;
    if (2 * in_a != g.degree(v)) return false;
  }
  return true;
}

inline bool is_alternating(const Graph& g, const Labeling& l, const Cyclet& c) {
  detail::require_same_order(g, l);
  const int d = c.length();
  if (d % 2 != 0) throw std::invalid_argument("is_alternating: cyclet length must be even");
  bool previous = is_link(g, l, {c.at(d - 1), c.at(0)});
  for (int i = 0; i < d; ++i) {
    const bool current = is_link(g, l, {c.at(i), c.at(i + 1)});
    if (current == previous) return false;
    previous = current;
  }
  return true;
}

}  // namespace magiclab
