#pragma once

/// \file families.hpp
/// \brief Named tetravalent graph families and explicit wreath labelings.
///
/// Index conventions:
///   wreath(m):            x_i -> i, y_i -> m + i
///   cartesian_cycles(m,k), direct_cycles(m,k): (i, j) -> i * k + j

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

namespace detail {
inline int mod(int a, int m) { return ((a % m) + m) % m; }

inline void require_wreath_order(int m) {
  if (m < 3) throw std::invalid_argument("wreath: m must be at least 3, got " + std::to_string(m));
}

inline void require_multiple_of_four(int m, int minimum) {
  if (m < minimum || m % 4 != 0)
    throw std::invalid_argument("wreath labeling: m must be a multiple of 4 with m >= " +
                                std::to_string(minimum) + ", got " + std::to_string(m));
}
}  // namespace detail

/// W(m): x_i and y_i are each adjacent to x_{i-1}, y_{i-1}, x_{i+1}, y_{i+1}.
inline Graph wreath(int m) {
  detail::require_wreath_order(m);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    edges.emplace_back(i, j);
    edges.emplace_back(i, m + j);
    edges.emplace_back(m + i, j);
    edges.emplace_back(m + i, m + j);
  }
  return Graph(2 * m, edges);
}

/// l(x_i) = 2i+1, l(y_i) = -(2i+1).
inline Labeling wreath_natural_labeling(int m) {
  detail::require_wreath_order(m);
  std::vector<Label> values(2 * m);
  for (int i = 0; i < m; ++i) {
    values[i] = 2 * i + 1;
    values[m + i] = -(2 * i + 1);
  }
  return Labeling(std::move(values));
}

/// {l(x_i), l(y_i)} = {2i-2m+1, 2m-2i-1}; x_i takes the smaller value.
inline Labeling wreath_degenerate_labeling(int m) {
  detail::require_multiple_of_four(m, 4);
  std::vector<Label> values(2 * m);
  for (int i = 0; i < m; ++i) {
    values[i] = 2 * i - 2 * m + 1;
    values[m + i] = 2 * m - 2 * i - 1;
  }
  return Labeling(std::move(values));
}

namespace detail {
inline std::vector<Label> nondegenerate_wreath_values(int m) {
  const int m0 = m / 4;
  std::vector<Label> values(2 * m);
  auto put = [&](int position, Label x, Label y) {
    const int i = mod(position, m);
    values[i] = x;
    values[m + i] = y;
  };
  for (int i = 0; i < m0; ++i) {
    const int s = (i % 2 == 0) ? 1 : -1;
    put(2 * i, s * (8 * i + 1), -s * (8 * i + 3));
    put(-1 - 2 * i, -s * (8 * i + 1), s * (8 * i + 3));
    put(2 * i + 1, s * (8 * i + 5), -s * (8 * i + 7));
    put(-2 - 2 * i, -s * (8 * i + 5), s * (8 * i + 7));
  }
  return values;
}
}  // namespace detail

/// Non-degenerate self-reverse labeling of W(m), 4 | m.
inline Labeling wreath_nondegenerate_labeling(int m) {
  detail::require_multiple_of_four(m, 4);
  return Labeling(detail::nondegenerate_wreath_values(m));
}

/// The non-degenerate labeling with positions 0 and 1 re-labeled
/// {5, -7} and {1, -3}; distance magic but not self-reverse. Needs m >= 8.
inline Labeling wreath_non_sr_labeling(int m) {
  detail::require_multiple_of_four(m, 8);
  auto values = detail::nondegenerate_wreath_values(m);
  values[0] = 5;
  values[m] = -7;
  values[1] = 1;
  values[m + 1] = -3;
  return Labeling(std::move(values));
}

/// Circ(n; S): i ~ j iff (j - i) mod n lies in S. S must be closed under negation.
inline Graph circulant(int n, const std::vector<int>& connections) {
  if (n < 1) throw std::invalid_argument("circulant: order must be positive");
  std::set<int> s;
  for (int c : connections) {
    const int r = detail::mod(c, n);
    if (r == 0) throw std::invalid_argument("circulant: connection set contains 0 mod n");
    s.insert(r);
  }
  for (int r : s)
    if (!s.contains(detail::mod(-r, n)))
      throw std::invalid_argument("circulant: connection set is not closed under negation (" +
                                  std::to_string(r) + ")");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int r : s) edges.emplace_back(i, (i + r) % n);
  return Graph(n, edges);
}

inline Graph cartesian_cycles(int m, int k) {
  if (m < 3 || k < 3) throw std::invalid_argument("cartesian_cycles: both cycle lengths must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      edges.emplace_back(i * k + j, i * k + (j + 1) % k);
      edges.emplace_back(i * k + j, ((i + 1) % m) * k + j);
    }
  return Graph(m * k, edges);
}

/// Direct (tensor) product C_m x C_k; may be disconnected.
inline Graph direct_cycles(int m, int k) {
  if (m < 3 || k < 3) throw std::invalid_argument("direct_cycles: both cycle lengths must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      const int i1 = (i + 1) % m;
      edges.emplace_back(i * k + j, i1 * k + (j + 1) % k);
      edges.emplace_back(i * k + j, i1 * k + (j + k - 1) % k);
    }
  return Graph(m * k, edges);
}

}  // namespace magiclab
