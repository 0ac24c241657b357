#pragma once

/// \file cyclet.hpp
/// \brief Rooted oriented cycles in a host graph.

#include <stdexcept>
#include <string>
#include <vector>

#include "magiclab/graph.hpp"

namespace magiclab {

/// Ordered sequence (v_0, ..., v_{d-1}) of distinct vertices with
/// v_i ~ v_{i+1} for every i mod d. Only constructible through make_cyclet.
class Cyclet {
 public:
  int length() const { return static_cast<int>(vertices_.size()); }
  int host_order() const { return host_order_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// v_{i mod d}, accepting any integer i.
  Vertex at(int i) const {
    const int d = length();
    return vertices_[((i % d) + d) % d];
  }

  /// The d cycle edges as (v_i, v_{i+1}).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < length(); ++i) out.emplace_back(at(i), at(i + 1));
    return out;
  }

  bool operator==(const Cyclet&) const = default;

 private:
  friend Cyclet make_cyclet(const Graph& g, std::vector<Vertex> seq);
  Cyclet(int host_order, std::vector<Vertex> vertices)
      : host_order_(host_order), vertices_(std::move(vertices)) {}

  int host_order_ = 0;
  std::vector<Vertex> vertices_;
};

inline Cyclet make_cyclet(const Graph& g, std::vector<Vertex> seq) {
  const int d = static_cast<int>(seq.size());
  if (d < 3) throw std::invalid_argument("cyclet: length must be at least 3");
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : seq) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("cyclet: vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("cyclet: repeated vertex " + std::to_string(v));
    seen[v] = 1;
  }
  for (int i = 0; i < d; ++i) {
    const Vertex a = seq[i], b = seq[(i + 1) % d];
    if (!g.adjacent(a, b))
      throw std::invalid_argument("cyclet: " + std::to_string(a) + " and " + std::to_string(b) +
                                  " are not adjacent");
  }
  return Cyclet(g.order(), std::move(seq));
}

}  // namespace magiclab
