#pragma once

/// \file canonical.hpp
/// \brief Canonical forms, isomorphism and automorphism queries for small graphs.
///
/// Everything here is built on one individualization-refinement engine:
/// ordered partitions are refined to the coarsest equitable partition,
/// then the first smallest non-singleton cell is split by individualizing
/// each of its vertices in turn. The canonical form is the leaf with the
/// lexicographically least permuted adjacency matrix; automorphisms found
/// along the way prune children that lie in the same orbit of the pointwise
/// stabilizer of the current individualization prefix.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magiclab/graph.hpp"

namespace magiclab {

/// Largest order accepted by canonical_code / are_isomorphic.
inline constexpr int kMaxCanonicalOrder = 64;
/// Largest order accepted by the automorphism queries.
inline constexpr int kMaxAutomorphismOrder = 48;

/// Order-invariant encoding of an isomorphism class.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 15]);
    }
    return out;
  }

  auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

// Ordered partition of 0..n-1 into cells. A cell is identified by the
// position of its first element; cell_end[start] is one past its last.
class OrderedPartition {
 public:
  explicit OrderedPartition(int n) : elems_(n), pos_(n), cell_(n, 0), end_(n, n) {
    std::iota(elems_.begin(), elems_.end(), 0);
    std::iota(pos_.begin(), pos_.end(), 0);
  }

  int size() const { return static_cast<int>(elems_.size()); }
  int cell_of(Vertex v) const { return cell_[v]; }
  int cell_end(int start) const { return end_[start]; }
  Vertex at(int position) const { return elems_[position]; }
  std::span<const Vertex> elements() const { return elems_; }

  bool is_discrete() const {
    for (int p = 0; p < size(); p = end_[p])
      if (end_[p] - p > 1) return false;
    return true;
  }

  /// First cell of minimum size > 1, or -1 when discrete.
  int target_cell() const {
    int best = -1;
    int best_size = 0;
    for (int p = 0; p < size(); p = end_[p]) {
      const int sz = end_[p] - p;
      if (sz > 1 && (best < 0 || sz < best_size)) {
        best = p;
        best_size = sz;
      }
    }
    return best;
  }

  std::vector<Vertex> cell_members(int start) const {
    std::vector<Vertex> out(elems_.begin() + start, elems_.begin() + end_[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Splits v off the front of its cell; returns the new singleton's start.
  int individualize(Vertex v) {
    const int c = cell_[v];
    const int e = end_[c];
    if (e - c == 1) return c;
    const int p = pos_[v];
    std::swap(elems_[p], elems_[c]);
    pos_[elems_[p]] = p;
    pos_[elems_[c]] = c;
    end_[c] = c + 1;
    end_[c + 1] = e;
    for (int q = c + 1; q < e; ++q) cell_[elems_[q]] = c + 1;
    return c;
  }

  /// Refines to the coarsest equitable partition finer than the current one,
  /// using the given cells as initial splitters. Appends an isomorphism-
  /// invariant record of every split to `trace`.
  void refine(const Graph& g, std::vector<int> splitters, std::vector<int>& trace) {
    const int n = size();
    std::vector<char> queued(n, 0);
    for (int s : splitters) queued[s] = 1;
    std::vector<int> cnt(n, 0);
    std::vector<Vertex> touched;
    std::vector<int> touched_cells;
    for (std::size_t head = 0; head < splitters.size(); ++head) {
      const int s = splitters[head];
      queued[s] = 0;
      touched.clear();
      for (int p = s; p < end_[s]; ++p)
        for (Vertex u : g.neighbors(elems_[p]))
          if (cnt[u]++ == 0) touched.push_back(u);
      touched_cells.clear();
      for (Vertex u : touched) touched_cells.push_back(cell_[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                          touched_cells.end());
      for (int c : touched_cells) {
        const int e = end_[c];
        if (e - c == 1) {
          trace.push_back(cnt[elems_[c]]);
          continue;
        }
        std::sort(elems_.begin() + c, elems_.begin() + e, [&](Vertex a, Vertex b) {
          return cnt[a] != cnt[b] ? cnt[a] < cnt[b] : a < b;
        });
        for (int p = c; p < e; ++p) pos_[elems_[p]] = p;
        int start = c;
        int fragments = 0;
        for (int p = c + 1; p <= e; ++p) {
          if (p == e || cnt[elems_[p]] != cnt[elems_[start]]) {
            end_[start] = p;
            for (int q = start; q < p; ++q) cell_[elems_[q]] = start;
            trace.push_back(cnt[elems_[start]]);
            trace.push_back(p - start);
            ++fragments;
            start = p;
          }
        }
        trace.push_back(-fragments);
        if (fragments > 1)
          for (int f = c; f < e; f = end_[f])
            if (!queued[f]) {
              queued[f] = 1;
              splitters.push_back(f);
            }
      }
      trace.push_back(-1000 - s);
      for (Vertex u : touched) cnt[u] = 0;
    }
  }

 private:
  std::vector<Vertex> elems_;
  std::vector<int> pos_;
  std::vector<int> cell_;
  std::vector<int> end_;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline void check_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw std::length_error(std::string(what) + ": order " + std::to_string(g.order()) +
                            " exceeds supported limit " + std::to_string(limit));
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    OrderedPartition p(n_);
    std::vector<int> trace;
    if (n_ > 0) p.refine(g_, {0}, trace);
    std::vector<Vertex> prefix;
    dfs(p, prefix);
  }

  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }
  const std::vector<Vertex>& best_order() const { return best_lab_; }
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  void dfs(const OrderedPartition& p, std::vector<Vertex>& prefix) {
    const int target = p.target_cell();
    if (target < 0) {
      leaf(p);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex w : p.cell_members(target)) {
      if (!explored.empty() && same_orbit_as_explored(w, explored, prefix)) continue;
      explored.push_back(w);
      OrderedPartition q = p;
      const int single = q.individualize(w);
      std::vector<int> trace;
      q.refine(g_, {single}, trace);
      prefix.push_back(w);
      dfs(q, prefix);
      prefix.pop_back();
    }
  }

  bool same_orbit_as_explored(Vertex w, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& prefix) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (Vertex v : prefix)
        if (gamma(v) != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, gamma(v));
    }
    if (!any) return false;
    const int root = uf.find(w);
    for (Vertex e : explored)
      if (uf.find(e) == root) return true;
    return false;
  }

  void leaf(const OrderedPartition& p) {
    std::vector<Vertex> lab(p.elements().begin(), p.elements().end());
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[lab[i]] = i;
    std::vector<std::uint64_t> rows(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (Vertex u : g_.neighbors(lab[i])) rows[i] |= std::uint64_t{1} << position[u];

    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_rows_ = rows;
    } else if (rows == first_rows_) {
      record_automorphism(first_lab_, lab);
    }
    if (best_lab_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_lab_ = std::move(lab);
    } else if (rows == best_rows_) {
      record_automorphism(best_lab_, lab);
    }
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> images(n_);
    for (int i = 0; i < n_; ++i) images[from[i]] = to[i];
    Permutation gamma(std::move(images));
    if (gamma.is_identity()) return;
    if (std::find(gens_.begin(), gens_.end(), gamma) == gens_.end()) gens_.push_back(gamma);
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> first_lab_;
  std::vector<std::uint64_t> first_rows_;
  std::vector<Vertex> best_lab_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Permutation> gens_;
};

// Enumerates isomorphisms g -> h compatible with the given forced pairs.
// The left side always follows a fixed path, so each isomorphism is reached
// at exactly one leaf. `on_match` returns false to stop the search.
template <class OnMatch>
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h, OnMatch& on_match)
      : g_(g), h_(h), on_match_(on_match) {}

  void run(std::span<const std::pair<Vertex, Vertex>> forced) {
    const int n = g_.order();
    if (h_.order() != n) return;
    OrderedPartition pg(n), ph(n);
    if (n > 0 && !refine_pair(pg, ph, {0})) return;
    for (auto [a, b] : forced) {
      if (pg.cell_of(a) != ph.cell_of(b)) return;
      const int sa = pg.individualize(a);
      const int sb = ph.individualize(b);
      if (sa != sb || !refine_pair(pg, ph, {sa})) return;
    }
    dfs(pg, ph);
  }

 private:
  bool refine_pair(OrderedPartition& pg, OrderedPartition& ph, const std::vector<int>& splitters) {
    std::vector<int> tg, th;
    pg.refine(g_, splitters, tg);
    ph.refine(h_, splitters, th);
    return tg == th;
  }

  bool dfs(const OrderedPartition& pg, const OrderedPartition& ph) {
    const int target = pg.target_cell();
    if (target < 0) return leaf(pg, ph);
    const Vertex v = pg.cell_members(target).front();
    for (Vertex w : ph.cell_members(target)) {
      OrderedPartition qg = pg, qh = ph;
      const int s = qg.individualize(v);
      qh.individualize(w);
      if (!refine_pair(qg, qh, {s})) continue;
      if (!dfs(qg, qh)) return false;
    }
    return true;
  }

  bool leaf(const OrderedPartition& pg, const OrderedPartition& ph) {
    const int n = pg.size();
    std::vector<Vertex> images(n);
    for (int i = 0; i < n; ++i) images[pg.at(i)] = ph.at(i);
    for (auto [u, v] : g_.edges())
      if (!h_.adjacent(images[u], images[v])) return true;
    if (g_.edge_count() != h_.edge_count()) return true;
    return on_match_(Permutation(std::move(images)));
  }

  const Graph& g_;
  const Graph& h_;
  OnMatch& on_match_;
};

template <class OnMatch>
void for_each_isomorphism(const Graph& g, const Graph& h,
                          std::span<const std::pair<Vertex, Vertex>> forced, OnMatch&& on_match) {
  IsomorphismSearch<std::remove_reference_t<OnMatch>> search(g, h, on_match);
  search.run(forced);
}

}  // namespace detail

/// Canonical relabeling: returns p such that permuted(g, p) is the canonical
/// representative of g's isomorphism class.
inline Permutation canonical_labeling(const Graph& g) {
  detail::check_order(g, kMaxCanonicalOrder, "canonical_labeling");
  detail::CanonicalSearch search(g);
  search.run();
  std::vector<Vertex> images(g.order());
  const auto& order = search.best_order();
  for (int i = 0; i < g.order(); ++i) images[order[i]] = i;
  return Permutation(std::move(images));
}

inline CanonicalCode canonical_code(const Graph& g) {
  detail::check_order(g, kMaxCanonicalOrder, "canonical_code");
  detail::CanonicalSearch search(g);
  search.run();
  const int n = g.order();
  const auto& rows = search.best_rows();
  CanonicalCode code;
  code.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((rows[i] >> j) & 1));
      if (++bits == 8) {
        code.bytes.push_back(acc);
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) code.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - bits)));
  return code;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_code(g) == canonical_code(h);
}

/// One isomorphism g -> h, or an empty permutation when none exists.
inline Permutation find_isomorphism(const Graph& g, const Graph& h,
                                    std::span<const std::pair<Vertex, Vertex>> forced = {}) {
  detail::check_order(g, kMaxCanonicalOrder, "find_isomorphism");
  Permutation found;
  detail::for_each_isomorphism(g, h, forced, [&](Permutation p) {
    found = std::move(p);
    return false;
  });
  return found;
}

/// Every automorphism of g, identity first, then in search order.
inline std::vector<Permutation> automorphism_group(const Graph& g) {
  detail::check_order(g, kMaxAutomorphismOrder, "automorphism_group");
  std::vector<Permutation> out;
  detail::for_each_isomorphism(g, g, {}, [&](Permutation p) {
    out.push_back(std::move(p));
    return true;
  });
  auto id = std::find_if(out.begin(), out.end(), [](const Permutation& p) { return p.is_identity(); });
  if (id != out.end()) std::rotate(out.begin(), id, id + 1);
  return out;
}

/// Vertex orbits of Aut(g), each sorted, ordered by least element.
inline std::vector<std::vector<Vertex>> vertex_orbits(const Graph& g) {
  detail::check_order(g, kMaxAutomorphismOrder, "vertex_orbits");
  const int n = g.order();
  detail::UnionFind uf(n);
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < n; ++v) {
    bool placed = false;
    for (Vertex r : reps) {
      if (uf.find(r) == uf.find(v)) {
        placed = true;
        break;
      }
      const std::pair<Vertex, Vertex> forced[] = {{r, v}};
      Permutation phi = find_isomorphism(g, g, forced);
      if (phi.size() == n) {
        for (Vertex x = 0; x < n; ++x) uf.unite(x, phi(x));
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(v);
  }
  std::vector<std::vector<Vertex>> orbits;
  std::vector<int> index(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (index[root] < 0) {
      index[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[index[root]].push_back(v);
  }
  return orbits;
}

/// True iff the Aut(g)-orbit of vertex 0 is the whole vertex set.
inline bool is_vertex_transitive(const Graph& g) {
  detail::check_order(g, kMaxAutomorphismOrder, "is_vertex_transitive");
  const int n = g.order();
  if (n <= 1) return true;
  if (!is_regular(g, g.degree(0))) return false;
  detail::UnionFind uf(n);
  for (Vertex v = 1; v < n; ++v) {
    if (uf.find(v) == uf.find(0)) continue;
    const std::pair<Vertex, Vertex> forced[] = {{0, v}};
    Permutation phi = find_isomorphism(g, g, forced);
    if (phi.size() != n) return false;
    for (Vertex x = 0; x < n; ++x) uf.unite(x, phi(x));
  }
  return true;
}

/// True iff Aut(g) has a single orbit on edges.
inline bool is_edge_transitive(const Graph& g) {
  detail::check_order(g, kMaxAutomorphismOrder, "is_edge_transitive");
  const auto edges = g.edges();
  if (edges.size() <= 1) return true;
  const int m = static_cast<int>(edges.size());
  auto edge_index = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), Edge{a, b}) - edges.begin());
  };
  detail::UnionFind uf(m);
  const auto [a, b] = edges.front();
  for (int k = 1; k < m; ++k) {
    if (uf.find(k) == uf.find(0)) continue;
    const auto [c, d] = edges[k];
    Permutation phi;
    for (auto target : {std::pair{c, d}, std::pair{d, c}}) {
      const std::pair<Vertex, Vertex> forced[] = {{a, target.first}, {b, target.second}};
      phi = find_isomorphism(g, g, forced);
      if (phi.size() == g.order()) break;
    }
    if (phi.size() != g.order()) return false;
    for (int e = 0; e < m; ++e) uf.unite(e, edge_index(phi(edges[e].first), phi(edges[e].second)));
  }
  return true;
}

}  // namespace magiclab
