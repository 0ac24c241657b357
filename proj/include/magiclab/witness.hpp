#pragma once

/// \file witness.hpp
/// \brief Explicit self-reverse labelings for every order where one exists.
///
/// Odd orders and most non-degenerate cases come from a small base graph of
/// order b <= n with b = n (mod 8), extended (n - b) / 8 times by W(4).
/// Bases are found by search and cached as JSON, one file per order.

#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclab/canonical.hpp"
#include "magiclab/enumerate.hpp"
#include "magiclab/families.hpp"
#include "magiclab/io.hpp"
#include "magiclab/merge.hpp"
#include "magiclab/quotient.hpp"

#ifndef MAGICLAB_DEFAULT_BASE_CACHE
#define MAGICLAB_DEFAULT_BASE_CACHE "data/bases"
#endif

namespace magiclab {

struct Witness {
  Graph graph;
  Labeling labeling;
};

/// Connected, non-degenerate, not a wreath graph, with an extensible quotient edge {a, a + 4}.
struct Base {
  Graph graph;
  Labeling labeling;
  Label a = 0;
  Label b = 0;
};

inline constexpr int kOddBaseOrders[] = {21, 23, 25, 27};
inline constexpr int kEvenBaseOrders[] = {18, 20, 24, 30};

inline bool is_wreath(const Graph& g) {
  return g.order() % 2 == 0 && g.order() >= 6 && are_isomorphic(g, wreath(g.order() / 2));
}

/// Throws std::logic_error unless `base` has every property a base needs.
inline void check_base(const Base& base) {
  const Graph& g = base.graph;
  const Labeling& l = base.labeling;
  if (!is_regular(g, 4) || !is_connected(g) || !is_distance_magic(g, l) || !is_self_reverse(g, l) ||
      is_degenerate(g, l))
    throw std::logic_error("base of order " + std::to_string(g.order()) + " fails verification");
  if (is_wreath(g)) throw std::logic_error("base of order " + std::to_string(g.order()) + " is a wreath graph");
  const auto edges = extensible_edges(quotient(g, l));
  if (std::find(edges.begin(), edges.end(), std::pair{base.a, base.b}) == edges.end())
    throw std::logic_error("base of order " + std::to_string(g.order()) + " lacks its extensible edge");
}

/// First base of order n in enumeration order, or nothing.
inline std::optional<Base> search_base(int n, const SearchOptions& opts = {}) {
  SearchOptions o = opts;
  o.require_self_reverse = true;
  o.require_non_degenerate = true;
  o.require_connected = true;
  std::optional<Base> found;
  for_each_sr_label_graph(n, o, [&](const LabelGraph& lg) {
    auto [g, l] = realize(lg);
    const auto edges = extensible_edges(quotient(g, l));
    if (edges.empty() || is_wreath(g)) return true;
    found = Base{std::move(g), std::move(l), edges.front().first, edges.front().second};
    return false;
  });
  return found;
}

inline Json to_json(const Base& base) {
  return {{"graph", to_json(base.graph)}, {"labeling", to_json(base.labeling)}, {"edge", {base.a, base.b}}};
}

inline Base base_from_json(const Json& j) {
  return detail::parse_guard("base", [&] {
    return Base{graph_from_json(j.at("graph")), labeling_from_json(j.at("labeling")), j.at("edge").at(0).get<Label>(),
                j.at("edge").at(1).get<Label>()};
  });
}

/// Directory from MAGICLAB_BASE_CACHE, else the compiled-in default.
inline std::filesystem::path default_base_cache_dir() {
  if (const char* env = std::getenv("MAGICLAB_BASE_CACHE"); env != nullptr && *env != '\0') return env;
  return MAGICLAB_DEFAULT_BASE_CACHE;
}

/// Loads bases from `dir`, searching for and writing any that are missing.
/// A cache file that fails verification is an error, not silently replaced.
class BaseCache {
 public:
  explicit BaseCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const { return dir_; }

  std::filesystem::path file_for(int n) const { return dir_ / ("base_" + std::to_string(n) + ".json"); }

  const Base& get(int n) {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    const auto path = file_for(n);
    std::optional<Base> base;
    if (std::filesystem::exists(path)) {
      base = base_from_json(read_json_file(path));
      if (base->graph.order() != n) throw ParseError(path.string() + ": wrong order");
    } else {
      base = search_base(n);
      if (!base) throw std::logic_error("no base of order " + std::to_string(n) + " exists");
      std::error_code ec;
      std::filesystem::create_directories(dir_, ec);
      if (!ec) write_json_file(path, to_json(*base));
    }
    check_base(*base);
    return memo_.emplace(n, std::move(*base)).first->second;
  }

 private:
  std::filesystem::path dir_;
  std::mutex mutex_;
  std::map<int, Base> memo_;
};

inline BaseCache& default_base_cache() {
  static BaseCache cache(default_base_cache_dir());
  return cache;
}

namespace detail {
inline void require_witness_order(int n) {
  if (n < 5) throw std::invalid_argument("witness: order must be at least 5, got " + std::to_string(n));
}

template <class Orders>
std::optional<int> base_order_for(int n, const Orders& orders) {
  for (int b : orders)
    if (b <= n && (n - b) % 8 == 0) return b;
  return std::nullopt;
}

inline Witness extend_base(BaseCache& cache, int b, int n) {
  const Base& base = cache.get(b);
  auto ext = extend_by_w4_repeatedly(base.graph, base.labeling, base.a, base.b, (n - b) / 8);
  return {std::move(ext.graph), std::move(ext.labeling)};
}
}  // namespace detail

/// Connected tetravalent graph of order n with a self-reverse labeling.
/// Present iff n is even and n >= 6, or n is odd and n >= 21.
inline std::optional<Witness> witness(int n, BaseCache& cache = default_base_cache()) {
  detail::require_witness_order(n);
  if (n % 2 == 0) return Witness{wreath(n / 2), wreath_natural_labeling(n / 2)};
  if (auto b = detail::base_order_for(n, kOddBaseOrders)) return detail::extend_base(cache, *b, n);
  return std::nullopt;
}

/// As witness, with a non-degenerate labeling.
/// Present iff n >= 23 or n is one of 8, 16, 18, 20, 21.
inline std::optional<Witness> witness_nondegenerate(int n, BaseCache& cache = default_base_cache()) {
  detail::require_witness_order(n);
  if (n == 8) return Witness{wreath(4), wreath_nondegenerate_labeling(4)};
  if (n == 16) return Witness{wreath(8), wreath_nondegenerate_labeling(8)};
  constexpr int orders[] = {18, 20, 21, 23, 24, 25, 27, 30};
  if (auto b = detail::base_order_for(n, orders)) return detail::extend_base(cache, *b, n);
  return std::nullopt;
}

/// As witness, on a graph that is not a wreath graph.
/// Present iff n >= 18 and n is neither 19 nor 22.
inline std::optional<Witness> witness_non_wreath(int n, BaseCache& cache = default_base_cache()) {
  detail::require_witness_order(n);
  constexpr int orders[] = {18, 20, 21, 23, 24, 25, 27, 30};
  auto b = detail::base_order_for(n, orders);
  if (!b) return std::nullopt;
  Witness w = detail::extend_base(cache, *b, n);
  if (is_wreath(w.graph))
    throw std::logic_error("extension of order " + std::to_string(n) + " unexpectedly produced a wreath graph");
  return w;
}

}  // namespace magiclab
