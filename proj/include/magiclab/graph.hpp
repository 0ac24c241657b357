#pragma once

/// \file graph.hpp
/// \brief Simple undirected graphs on dense 0-based vertex indices.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magiclab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Bijection on 0..n-1, stored as the image of each point.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Vertex v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw std::invalid_argument("permutation: images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<Vertex> id(n);
    std::iota(id.begin(), id.end(), 0);
    return Permutation(std::move(id));
  }

  int size() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  Vertex operator[](Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Vertex> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (this * other)(v) = this(other(v)).
  Permutation operator*(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("permutation: size mismatch");
    std::vector<Vertex> out(images_.size());
    for (int i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
    return Permutation(std::move(out));
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// Finite simple undirected graph. Neighbor lists are sorted and duplicate-free.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : adj_(checked_order(order)) {}

  Graph(int order, std::span<const Edge> edges) : adj_(checked_order(order)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order)
        throw std::invalid_argument("graph: vertex out of range in edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
      if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(int order, const std::vector<Edge>& edges) : Graph(order, std::span<const Edge>(edges)) {}

  int order() const { return static_cast<int>(adj_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  static int checked_order(int order) {
    if (order < 0) throw std::invalid_argument("graph: negative order");
    return order;
  }

  std::vector<std::vector<Vertex>> adj_;
};

inline bool is_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex u : g.neighbors(members[head]))
        if (comp[u] < 0) {
          comp[u] = id;
          members.push_back(u);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Subgraph induced on `vertices`; vertex vertices[i] becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex u : g.neighbors(vertices[i]))
      if (index[u] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[u]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

/// The graph with vertex v renamed to p(v).
inline Graph permuted(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw std::invalid_argument("permuted: size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return Graph(g.order(), edges);
}

/// True iff p maps edges to edges (for a bijection this makes it an automorphism).
inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

/// h's vertex i becomes g.order() + i.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(g.order() + u, g.order() + v);
  return Graph(g.order() + h.order(), edges);
}

}  // namespace magiclab
