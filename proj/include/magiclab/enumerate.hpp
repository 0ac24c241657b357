#pragma once

/// \file enumerate.hpp
/// \brief Exhaustive search for distance magic label graphs and labelings.
///
/// Self-reverse enumeration runs over quotients: for every positive label
/// (largest first) it picks a semiedge, an edge to the central vertex, and
/// solid/dashed edges to smaller labels so that the signed balance vanishes.
/// Degenerate labelings appear as a solid and a dashed edge between the same
/// two labels (the four edges of a K_{2,2} between two label pairs).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "magiclab/canonical.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

struct SearchOptions {
  bool require_self_reverse = true;
  bool require_non_degenerate = false;
  bool require_connected = true;
  int valence = 4;
  std::optional<std::chrono::duration<double>> time_limit;
  int thread_budget = 1;
  std::optional<std::size_t> max_results;  // find_labelings only
  int small_order_cap = 16;                // enumerate_dm only

  void validate() const {
    if (valence != 4) throw std::invalid_argument("search options: only valence 4 is supported");
    if (thread_budget < 1) throw std::invalid_argument("search options: thread budget must be positive");
    if (time_limit && time_limit->count() <= 0) throw std::invalid_argument("search options: time limit must be positive");
    if (max_results && *max_results == 0) throw std::invalid_argument("search options: result cap must be positive");
  }

  bool operator==(const SearchOptions&) const = default;
};

struct EnumerationReport {
  int order = 0;
  std::size_t sr_count = 0;         // distinct label graphs found
  std::size_t iso_class_count = 0;  // distinct underlying graphs
  std::size_t vt_count = 0;         // vertex-transitive classes among those
  double elapsed_seconds = 0;
  bool complete = true;
  SearchOptions options;
};

struct Enumeration {
  std::vector<LabelGraph> label_graphs;  // sorted
  EnumerationReport report;
};

/// Thrown by find_labelings when its time limit runs out.
class SearchTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Clock = std::chrono::steady_clock;

class StopSignal {
 public:
  explicit StopSignal(std::optional<std::chrono::duration<double>> limit) : has_limit_(limit.has_value()) {
    if (limit) end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*limit);
  }

  /// Cheap check meant for every search node; looks at the clock every 4096 calls.
  bool poll(std::uint32_t& ticks) {
    if (stopped_.load(std::memory_order_relaxed)) return true;
    if (!has_limit_ || (++ticks & 4095u) != 0) return false;
    if (Clock::now() >= end_) stopped_.store(true, std::memory_order_relaxed);
    return stopped_.load(std::memory_order_relaxed);
  }

  void stop() { stopped_.store(true, std::memory_order_relaxed); }
  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }

 private:
  bool has_limit_;
  Clock::time_point end_{};
  std::atomic<bool> stopped_{false};
};

/// Runs fn(0..count-1) on up to `threads` threads; rethrows the first exception.
template <class Fn>
void run_parallel(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
}

inline bool label_graph_connected(const LabelGraph& lg) {
  const MagicLabelSet set(lg.order);
  UnionFind uf(lg.order);
  int components = lg.order;
  for (auto [a, b] : lg.edges)
    if (uf.find(set.index_of(a)) != uf.find(set.index_of(b))) {
      uf.unite(set.index_of(a), set.index_of(b));
      --components;
    }
  return components <= 1;
}

/// Independent re-check of a search result against the labeling predicates.
inline void verify_found(const Graph& g, const Labeling& l, const SearchOptions& opts) {
  bool ok = is_regular(g, 4) && is_distance_magic(g, l);
  if (opts.require_connected) ok = ok && is_connected(g);
  if (opts.require_self_reverse) ok = ok && is_self_reverse(g, l);
  if (opts.require_non_degenerate) ok = ok && !is_degenerate(g, l);
  if (!ok) throw std::logic_error("search produced a labeling that fails verification");
}

enum class PairLink : std::uint8_t { solid, dashed, both, semiedge, central };

struct PairChoice {
  int i = 0;  // index of the positive label, larger end
  int j = -1; // index of the smaller end, unused for semiedge/central
  PairLink kind = PairLink::solid;
};

/// Backtracking over quotients of self-reverse labelings of order n.
class QuotientSearch {
 public:
  using Emit = std::function<bool(const LabelGraph&)>;  // false stops the search

  QuotientSearch(int n, bool allow_degenerate, bool require_connected, StopSignal& stop)
      : n_(n), m_(n / 2), central_(n % 2 == 1), allow_degenerate_(allow_degenerate),
        require_connected_(require_connected), stop_(stop) {
    for (int k = 0; k < m_; ++k) magnitude_.push_back(central_ ? 2 * k + 2 : 2 * k + 1);
    reset();
  }

  int positive_count() const { return m_; }

  /// Decision prefixes reached at the start of vertex `cutoff`, in search order.
  std::vector<std::vector<PairChoice>> split(int cutoff) {
    reset();
    cutoff_ = cutoff;
    prefixes_.clear();
    vertex(m_ - 1);
    cutoff_ = -2;
    return std::move(prefixes_);
  }

  /// Replays `prefix`, then searches from vertex `start` downwards.
  /// Returns false when stopped by the callback or the stop signal.
  bool run(const std::vector<PairChoice>& prefix, int start, const Emit& emit) {
    reset();
    for (const auto& c : prefix) apply(c);
    emit_ = &emit;
    const bool finished = vertex(start);
    emit_ = nullptr;
    return finished;
  }

 private:
  void reset() {
    cap_.assign(m_, 4);
    sum_.assign(m_, 0);
    central_cap_ = central_ ? 2 : 0;
    stack_.clear();
  }

  void apply(const PairChoice& c) {
    const long pi = magnitude_[c.i];
    switch (c.kind) {
      case PairLink::solid:
        sum_[c.i] += magnitude_[c.j], sum_[c.j] += pi, --cap_[c.i], --cap_[c.j];
        break;
      case PairLink::dashed:
        sum_[c.i] -= magnitude_[c.j], sum_[c.j] -= pi, --cap_[c.i], --cap_[c.j];
        break;
      case PairLink::both:
        cap_[c.i] -= 2, cap_[c.j] -= 2;
        break;
      case PairLink::semiedge:
        sum_[c.i] -= pi, --cap_[c.i];
        break;
      case PairLink::central:
        --cap_[c.i], --central_cap_;
        break;
    }
    stack_.push_back(c);
  }

  void undo() {
    const PairChoice c = stack_.back();
    stack_.pop_back();
    const long pi = magnitude_[c.i];
    switch (c.kind) {
      case PairLink::solid:
        sum_[c.i] -= magnitude_[c.j], sum_[c.j] -= pi, ++cap_[c.i], ++cap_[c.j];
        break;
      case PairLink::dashed:
        sum_[c.i] += magnitude_[c.j], sum_[c.j] += pi, ++cap_[c.i], ++cap_[c.j];
        break;
      case PairLink::both:
        cap_[c.i] += 2, cap_[c.j] += 2;
        break;
      case PairLink::semiedge:
        sum_[c.i] += pi, ++cap_[c.i];
        break;
      case PairLink::central:
        ++cap_[c.i], ++central_cap_;
        break;
    }
  }

  bool vertex(int i) {
    if (stop_.poll(ticks_)) return false;
    if (i == cutoff_) {
      prefixes_.push_back(stack_);
      return true;
    }
    if (i < 0) return leaf();
    for (int semi = 0; semi < 2; ++semi) {
      if (semi && cap_[i] < 1) continue;
      if (semi) apply({i, -1, PairLink::semiedge});
      for (int centre = 0; centre < 2; ++centre) {
        if (centre && (central_cap_ < 1 || cap_[i] < 1)) continue;
        if (centre) apply({i, -1, PairLink::central});
        const bool go_on = pick(i, i - 1);
        if (centre) undo();
        if (!go_on) {
          if (semi) undo();
          return false;
        }
      }
      if (semi) undo();
    }
    return true;
  }

  bool pick(int i, int j) {
    const int r = cap_[i];
    const long s = sum_[i];
    if (r == 0) return s == 0 ? finish_vertex(i) : true;
    if (stop_.poll(ticks_)) return false;
    for (int k = j; k >= 0; --k) {
      if (std::abs(s) > static_cast<long>(r) * magnitude_[k]) break;
      if (cap_[k] == 0) continue;
      for (PairLink kind : {PairLink::solid, PairLink::dashed, PairLink::both}) {
        if (kind == PairLink::both && (!allow_degenerate_ || r < 2 || cap_[k] < 2)) continue;
        apply({i, k, kind});
        const bool go_on = pick(i, k - 1);
        undo();
        if (!go_on) return false;
      }
    }
    return true;
  }

  // Every label still open after vertex i is at most magnitude_[i - 1].
  bool finish_vertex(int i) {
    int open = 0;
    const long largest = i > 0 ? magnitude_[i - 1] : 0;
    for (int j = 0; j < i; ++j) {
      if (cap_[j] == 0) {
        if (sum_[j] != 0) return true;
        continue;
      }
      ++open;
      if (std::abs(sum_[j]) > cap_[j] * largest) return true;
    }
    if (central_cap_ > open) return true;
    return vertex(i - 1);
  }

  bool leaf() {
    if (central_cap_ != 0) return true;
    LabelGraph lg{n_, {}};
    auto add = [&](Label a, Label b) { lg.edges.emplace_back(std::min(a, b), std::max(a, b)); };
    for (const auto& c : stack_) {
      const Label a = magnitude_[c.i];
      const Label b = c.j >= 0 ? magnitude_[c.j] : 0;
      switch (c.kind) {
        case PairLink::solid:
          add(a, b), add(-a, -b);
          break;
        case PairLink::dashed:
          add(a, -b), add(-a, b);
          break;
        case PairLink::both:
          add(a, b), add(-a, -b), add(a, -b), add(-a, b);
          break;
        case PairLink::semiedge:
          add(-a, a);
          break;
        case PairLink::central:
          add(0, a), add(0, -a);
          break;
      }
    }
    std::sort(lg.edges.begin(), lg.edges.end());
    if (require_connected_ && !label_graph_connected(lg)) return true;
    return (*emit_)(lg);
  }

  int n_, m_;
  bool central_, allow_degenerate_, require_connected_;
  StopSignal& stop_;
  std::vector<long> magnitude_;
  std::vector<int> cap_;
  std::vector<long> sum_;
  int central_cap_ = 0;
  std::vector<PairChoice> stack_;
  std::uint32_t ticks_ = 0;
  int cutoff_ = -2;
  std::vector<std::vector<PairChoice>> prefixes_;
  const Emit* emit_ = nullptr;
};

/// Backtracking over all distance magic 4-regular label graphs of order n.
class LabelSearch {
 public:
  using Emit = std::function<bool(const LabelGraph&)>;

  LabelSearch(int n, bool require_connected, StopSignal& stop)
      : n_(n), set_(n), require_connected_(require_connected), stop_(stop) {
    for (int k = 0; k < n; ++k) order_.push_back(k);
    // Decreasing magnitude, positive before negative.
    std::sort(order_.begin(), order_.end(), [&](int x, int y) {
      const Label a = set_.at(x), b = set_.at(y);
      if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
      return a > b;
    });
    candidates_.resize(n);
    for (int t = 0; t < n; ++t) {
      candidates_[t].assign(order_.begin() + t + 1, order_.end());
      std::sort(candidates_[t].begin(), candidates_[t].end(), std::greater<>());
    }
    reset();
  }

  /// Neighbor choices for the first vertex.
  std::vector<std::vector<int>> split() {
    reset();
    splitting_ = true;
    prefixes_.clear();
    vertex(0);
    splitting_ = false;
    return std::move(prefixes_);
  }

  bool run(const std::vector<int>& first_choice, const Emit& emit) {
    reset();
    const int v = order_[0];
    for (int c : first_choice) link(v, c);
    emit_ = &emit;
    const bool finished = cap_[v] == 0 && sum_[v] == 0 ? finish_vertex(0) : true;
    emit_ = nullptr;
    return finished;
  }

 private:
  void reset() {
    cap_.assign(n_, 4);
    sum_.assign(n_, 0);
    edges_.clear();
    chosen_.clear();
  }

  void link(int v, int c) {
    sum_[v] += set_.at(c), sum_[c] += set_.at(v), --cap_[v], --cap_[c];
    edges_.emplace_back(v, c);
  }

  void unlink() {
    auto [v, c] = edges_.back();
    edges_.pop_back();
    sum_[v] -= set_.at(c), sum_[c] -= set_.at(v), ++cap_[v], ++cap_[c];
  }

  bool vertex(int t) {
    if (stop_.poll(ticks_)) return false;
    if (t == n_) return leaf();
    return choose(t, 0);
  }

  bool choose(int t, std::size_t from) {
    const int v = order_[t];
    const int r = cap_[v];
    if (r == 0) {
      if (sum_[v] != 0) return true;
      if (splitting_) {
        prefixes_.push_back(chosen_);
        return true;
      }
      return finish_vertex(t);
    }
    if (stop_.poll(ticks_)) return false;
    const auto& cand = candidates_[t];
    const long need = -sum_[v];
    long hi = 0, lo = 0;
    int found = 0;
    for (std::size_t k = from; k < cand.size() && found < r; ++k)
      if (cap_[cand[k]] > 0) hi += set_.at(cand[k]), ++found;
    if (found < r) return true;
    found = 0;
    for (std::size_t k = cand.size(); k-- > from && found < r;)
      if (cap_[cand[k]] > 0) lo += set_.at(cand[k]), ++found;
    if (need > hi || need < lo) return true;
    for (std::size_t k = from; k < cand.size(); ++k) {
      const int c = cand[k];
      if (cap_[c] == 0) continue;
      link(v, c);
      chosen_.push_back(c);
      const bool go_on = choose(t, k + 1);
      chosen_.pop_back();
      unlink();
      if (!go_on) return false;
    }
    return true;
  }

  bool finish_vertex(int t) {
    if (t + 1 < n_) {
      const long bound = std::abs(set_.at(order_[t + 1]));
      for (int k = t + 1; k < n_; ++k) {
        const int u = order_[k];
        if (cap_[u] == 0 ? sum_[u] != 0 : std::abs(sum_[u]) > cap_[u] * bound) return true;
      }
    }
    return vertex(t + 1);
  }

  bool leaf() {
    LabelGraph lg{n_, {}};
    for (auto [v, c] : edges_) {
      const Label a = set_.at(v), b = set_.at(c);
      lg.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(lg.edges.begin(), lg.edges.end());
    if (require_connected_ && !label_graph_connected(lg)) return true;
    return (*emit_)(lg);
  }

  int n_;
  MagicLabelSet set_;
  bool require_connected_;
  StopSignal& stop_;
  std::vector<int> order_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> cap_;
  std::vector<long> sum_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> chosen_;
  bool splitting_ = false;
  std::vector<std::vector<int>> prefixes_;
  std::uint32_t ticks_ = 0;
  const Emit* emit_ = nullptr;
};

inline EnumerationReport summarize(int n, const std::vector<LabelGraph>& found, const SearchOptions& opts) {
  EnumerationReport report;
  report.order = n;
  report.options = opts;
  report.sr_count = found.size();
  std::vector<CanonicalCode> codes(found.size());
  run_parallel(found.size(), opts.thread_budget, [&](std::size_t k) {
    const auto [g, l] = realize(found[k]);
    verify_found(g, l, opts);
    codes[k] = canonical_code(g);
  });
  std::map<CanonicalCode, std::size_t> first;
  for (std::size_t k = 0; k < found.size(); ++k) first.emplace(codes[k], k);
  report.iso_class_count = first.size();
  std::vector<std::size_t> reps;
  for (const auto& [code, k] : first) reps.push_back(k);
  std::vector<char> vt(reps.size(), 0);
  run_parallel(reps.size(), opts.thread_budget,
               [&](std::size_t k) { vt[k] = is_vertex_transitive(realize(found[reps[k]]).first); });
  report.vt_count = static_cast<std::size_t>(std::count(vt.begin(), vt.end(), 1));
  return report;
}

inline void require_order(int n, const char* what) {
  if (n < 5) throw std::invalid_argument(std::string(what) + ": order must be at least 5");
  if (n > kMaxAutomorphismOrder)
    throw std::length_error(std::string(what) + ": order " + std::to_string(n) + " exceeds the supported " +
                            std::to_string(kMaxAutomorphismOrder));
}

template <class Search, class Prefix>
Enumeration collect(int n, const SearchOptions& opts, const std::vector<Prefix>& prefixes, StopSignal& stop,
                    const std::function<bool(Search&, const Prefix&, const typename Search::Emit&)>& run_one,
                    const std::function<Search()>& make, Clock::time_point started) {
  std::vector<std::vector<LabelGraph>> parts(prefixes.size());
  std::atomic<bool> complete{true};
  run_parallel(prefixes.size(), opts.thread_budget, [&](std::size_t k) {
    Search search = make();
    typename Search::Emit emit = [&](const LabelGraph& lg) {
      parts[k].push_back(lg);
      return true;
    };
    if (!run_one(search, prefixes[k], emit)) complete = false;
  });
  Enumeration out;
  for (auto& part : parts) out.label_graphs.insert(out.label_graphs.end(), part.begin(), part.end());
  std::sort(out.label_graphs.begin(), out.label_graphs.end());
  out.label_graphs.erase(std::unique(out.label_graphs.begin(), out.label_graphs.end()), out.label_graphs.end());
  if (stop.stopped()) complete = false;
  out.report = summarize(n, out.label_graphs, opts);
  out.report.complete = complete;
  out.report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return out;
}

}  // namespace detail

/// Streams the self-reverse label graphs of order n in search order, single-threaded.
/// `visit` returns false to stop early. Returns true iff the search ran to completion.
inline bool for_each_sr_label_graph(int n, const SearchOptions& opts,
                                    const std::function<bool(const LabelGraph&)>& visit) {
  opts.validate();
  detail::require_order(n, "enumerate_sr");
  if (!opts.require_self_reverse) throw std::invalid_argument("enumerate_sr: requires require_self_reverse");
  detail::StopSignal stop(opts.time_limit);
  detail::QuotientSearch search(n, !opts.require_non_degenerate, opts.require_connected, stop);
  bool stopped_by_visitor = false;
  std::function<bool(const LabelGraph&)> emit = [&](const LabelGraph& lg) {
    if (!visit(lg)) stopped_by_visitor = true;
    return !stopped_by_visitor;
  };
  const bool finished = search.run({}, search.positive_count() - 1, emit);
  return finished && !stopped_by_visitor;
}

/// All self-reverse distance magic label graphs of connected tetravalent graphs of order n.
inline Enumeration enumerate_sr(int n, const SearchOptions& opts) {
  opts.validate();
  detail::require_order(n, "enumerate_sr");
  if (!opts.require_self_reverse) throw std::invalid_argument("enumerate_sr: requires require_self_reverse");
  const auto started = detail::Clock::now();
  detail::StopSignal stop(opts.time_limit);
  auto make = [&] { return detail::QuotientSearch(n, !opts.require_non_degenerate, opts.require_connected, stop); };
  detail::QuotientSearch splitter = make();
  // Tasks are the decision prefixes after the two largest labels.
  const int start = splitter.positive_count() - 3;
  const auto prefixes = splitter.split(start);
  return detail::collect<detail::QuotientSearch, std::vector<detail::PairChoice>>(
      n, opts, prefixes, stop,
      [start](detail::QuotientSearch& s, const std::vector<detail::PairChoice>& p,
              const detail::QuotientSearch::Emit& e) { return s.run(p, start, e); },
      make, started);
}

/// All distance magic label graphs of (connected, by default) tetravalent
/// graphs of order n. The self-reverse and non-degenerate flags act as filters.
inline Enumeration enumerate_dm(int n, const SearchOptions& opts) {
  opts.validate();
  detail::require_order(n, "enumerate_dm");
  if (n > opts.small_order_cap)
    throw std::length_error("enumerate_dm: order " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(opts.small_order_cap));
  const auto started = detail::Clock::now();
  detail::StopSignal stop(opts.time_limit);
  auto make = [&] { return detail::LabelSearch(n, opts.require_connected, stop); };
  detail::LabelSearch splitter = make();
  const auto prefixes = splitter.split();
  SearchOptions plain = opts;
  plain.require_self_reverse = false;
  plain.require_non_degenerate = false;
  auto result = detail::collect<detail::LabelSearch, std::vector<int>>(
      n, plain, prefixes, stop,
      [](detail::LabelSearch& s, const std::vector<int>& p, const detail::LabelSearch::Emit& e) {
        return s.run(p, e);
      },
      make, started);
  if (opts.require_self_reverse || opts.require_non_degenerate) {
    std::erase_if(result.label_graphs, [&](const LabelGraph& lg) {
      const auto [g, l] = realize(lg);
      return (opts.require_self_reverse && !is_self_reverse(g, l)) ||
             (opts.require_non_degenerate && is_degenerate(g, l));
    });
    const bool complete = result.report.complete;
    result.report = detail::summarize(n, result.label_graphs, opts);
    result.report.complete = complete;
    result.report.elapsed_seconds = std::chrono::duration<double>(detail::Clock::now() - started).count();
  }
  result.report.options = opts;
  return result;
}

namespace detail {

/// Labels vertices of a fixed graph one at a time in BFS order.
class FixedGraphSearch {
 public:
  using Emit = std::function<bool(const Labeling&)>;

  FixedGraphSearch(const Graph& g, StopSignal& stop) : g_(g), n_(g.order()), set_(g.order()), stop_(stop) {}

  /// Searches labelings in which `root` carries the largest label.
  bool run(Vertex root, const Emit& emit) {
    emit_ = &emit;
    label_.assign(n_, kUnset);
    used_.assign(n_, 0);
    open_.assign(n_, 0);
    partial_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) open_[v] = g_.degree(v);
    order_.clear();
    std::vector<char> seen(n_, 0);
    for (Vertex s = root, k = 0; static_cast<int>(order_.size()) < n_; s = k++) {
      if (seen[s]) continue;
      seen[s] = 1;
      order_.push_back(s);
      for (std::size_t h = order_.size() - 1; h < order_.size(); ++h)
        for (Vertex u : g_.neighbors(order_[h]))
          if (!seen[u]) seen[u] = 1, order_.push_back(u);
    }
    return place(0, set_.at(n_ - 1));
  }

 private:
  static constexpr Label kUnset = -(1 << 30);

  bool step(int t) {
    if (stop_.poll(ticks_)) return false;
    if (t == n_) return (*emit_)(Labeling(label_));
    const Vertex v = order_[t];
    std::optional<long> forced;
    for (Vertex u : g_.neighbors(v))
      if (label_[u] != kUnset && open_[u] == 1) {
        const long need = -partial_[u];
        if (forced && *forced != need) return true;
        forced = need;
      }
    if (forced) {
      if (*forced < -(n_ - 1) || *forced > n_ - 1 || !set_.contains(static_cast<Label>(*forced))) return true;
      if (used_[set_.index_of(static_cast<Label>(*forced))]) return true;
      return place(t, static_cast<Label>(*forced));
    }
    for (int k = n_ - 1; k >= 0; --k)
      if (!used_[k] && !place(t, set_.at(k))) return false;
    return true;
  }

  long max_unused() const {
    for (int lo = 0, hi = n_ - 1; lo <= hi; ++lo, --hi) {
      if (!used_[lo]) return std::abs(set_.at(lo));
      if (!used_[hi]) return std::abs(set_.at(hi));
    }
    return 0;
  }

  bool consistent(Vertex v) const {
    auto check = [&](Vertex u) {
      if (open_[u] == 0) return partial_[u] == 0;
      return true;
    };
    if (!check(v)) return false;
    for (Vertex u : g_.neighbors(v))
      if (label_[u] != kUnset && !check(u)) return false;
    const long bound = max_unused();
    auto feasible = [&](Vertex u) { return open_[u] == 0 || std::abs(partial_[u]) <= open_[u] * bound; };
    if (!feasible(v)) return false;
    for (Vertex u : g_.neighbors(v))
      if (label_[u] != kUnset && !feasible(u)) return false;
    return true;
  }

  bool place(int t, Label a) {
    const Vertex v = order_[t];
    label_[v] = a;
    used_[set_.index_of(a)] = 1;
    for (Vertex u : g_.neighbors(v)) {
      --open_[u];
      partial_[u] += a;
    }
    bool go_on = true;
    if (consistent(v)) go_on = step(t + 1);
    for (Vertex u : g_.neighbors(v)) {
      ++open_[u];
      partial_[u] -= a;
    }
    used_[set_.index_of(a)] = 0;
    label_[v] = kUnset;
    return go_on;
  }

  const Graph& g_;
  int n_;
  MagicLabelSet set_;
  StopSignal& stop_;
  std::vector<Vertex> order_;
  std::vector<Label> label_;
  std::vector<char> used_;
  std::vector<int> open_;
  std::vector<long> partial_;
  std::uint32_t ticks_ = 0;
  const Emit* emit_ = nullptr;
};

/// Self-reverse labelings whose partner map is a fixed involutory automorphism.
/// Each orbit {a0, a1} gets a signed value x: a0 carries x, a1 carries -x.
class InvolutionSearch {
 public:
  using Emit = std::function<bool(const Labeling&)>;

  InvolutionSearch(const Graph& g, const Permutation& sigma, StopSignal& stop)
      : g_(g), n_(g.order()), sigma_(sigma), stop_(stop) {
    std::vector<int> cls(n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      if (sigma(v) == v) {
        fixed_ = v;
      } else if (v < sigma(v)) {
        cls[v] = cls[sigma(v)] = static_cast<int>(members_.size());
        members_.push_back({v, sigma(v)});
      }
    }
    const int c = static_cast<int>(members_.size());
    neighbors_.assign(c, {});
    semi_.assign(c, 0);
    for (int a = 0; a < c; ++a) {
      const auto [a0, a1] = members_[a];
      if (g.adjacent(a0, a1)) semi_[a] = 1;
      for (int b = 0; b < c; ++b) {
        if (b == a) continue;
        const auto [b0, b1] = members_[b];
        const bool straight = g.adjacent(a0, b0), cross = g.adjacent(a0, b1);
        if (straight && cross)
          has_both_ = true;
        else if (straight)
          neighbors_[a].push_back({b, 1});
        else if (cross)
          neighbors_[a].push_back({b, -1});
      }
    }
    // BFS over classes for a good assignment order.
    std::vector<char> seen(c, 0);
    for (int s = 0; s < c; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      order_.push_back(s);
      for (std::size_t h = order_.size() - 1; h < order_.size(); ++h)
        for (auto [b, tau] : neighbors_[order_[h]])
          if (!seen[b]) seen[b] = 1, order_.push_back(b);
    }
    for (int k = 0; k < c; ++k) magnitudes_.push_back(n_ % 2 == 1 ? 2 * k + 2 : 2 * k + 1);
  }

  bool degenerate() const { return has_both_; }

  bool run(const Emit& emit) {
    emit_ = &emit;
    const int c = static_cast<int>(members_.size());
    value_.assign(c, 0);
    used_.assign(c, 0);
    partial_.assign(c, 0);
    open_.assign(c, 0);
    for (int a = 0; a < c; ++a) open_[a] = static_cast<int>(neighbors_[a].size());
    return step(0);
  }

 private:
  bool step(int t) {
    if (stop_.poll(ticks_)) return false;
    const int c = static_cast<int>(members_.size());
    if (t == c) return leaf();
    const int x = order_[t];
    std::optional<long> forced;
    for (auto [a, tau] : neighbors_[x])
      if (value_[a] != 0 && open_[a] == 1) {
        const long need = tau * (semi_[a] * value_[a] - partial_[a]);
        if (forced && *forced != need) return true;
        forced = need;
      }
    if (forced) {
      const int k = index_of(std::abs(*forced));
      if (*forced == 0 || k < 0 || used_[k]) return true;
      return place(t, *forced);
    }
    for (int k = c - 1; k >= 0; --k) {
      if (used_[k]) continue;
      if (!place(t, magnitudes_[k])) return false;
      if (t > 0 && !place(t, -magnitudes_[k])) return false;  // a global sign flip gives the same label graph
    }
    return true;
  }

  int index_of(long mag) const {
    const long k = n_ % 2 == 1 ? mag / 2 - 1 : (mag - 1) / 2;
    if (k < 0 || k >= static_cast<long>(magnitudes_.size()) || magnitudes_[k] != mag) return -1;
    return static_cast<int>(k);
  }

  long max_unused() const {
    for (int k = static_cast<int>(used_.size()) - 1; k >= 0; --k)
      if (!used_[k]) return magnitudes_[k];
    return 0;
  }

  bool ok(int a, long bound) const {
    const long residual = semi_[a] * value_[a] - partial_[a];
    return open_[a] == 0 ? residual == 0 : std::abs(residual) <= open_[a] * bound;
  }

  bool place(int t, long x) {
    const int cls = order_[t];
    const int k = index_of(std::abs(x));
    value_[cls] = x;
    used_[k] = 1;
    for (auto [b, tau] : neighbors_[cls]) {
      --open_[b];
      partial_[b] += tau * x;
    }
    const long bound = max_unused();
    bool consistent = ok(cls, bound);
    for (auto [b, tau] : neighbors_[cls])
      if (consistent && value_[b] != 0) consistent = ok(b, bound);
    const bool go_on = consistent ? step(t + 1) : true;
    for (auto [b, tau] : neighbors_[cls]) {
      ++open_[b];
      partial_[b] -= tau * x;
    }
    used_[k] = 0;
    value_[cls] = 0;
    return go_on;
  }

  bool leaf() {
    std::vector<Label> labels(n_, 0);
    for (std::size_t a = 0; a < members_.size(); ++a) {
      labels[members_[a].first] = static_cast<Label>(value_[a]);
      labels[members_[a].second] = static_cast<Label>(-value_[a]);
    }
    return (*emit_)(Labeling(std::move(labels)));
  }

  const Graph& g_;
  int n_;
  Permutation sigma_;
  StopSignal& stop_;
  std::optional<Vertex> fixed_;
  std::vector<std::pair<Vertex, Vertex>> members_;
  std::vector<std::vector<std::pair<int, int>>> neighbors_;  // (class, +1 straight / -1 crossed)
  std::vector<int> semi_;
  bool has_both_ = false;
  std::vector<int> order_;
  std::vector<long> magnitudes_;
  std::vector<long> value_;
  std::vector<char> used_;
  std::vector<long> partial_;
  std::vector<int> open_;
  std::uint32_t ticks_ = 0;
  const Emit* emit_ = nullptr;
};

/// One involutory automorphism with n mod 2 fixed points per conjugacy class of Aut(g).
inline std::vector<Permutation> partner_candidates(const Graph& g) {
  const auto group = automorphism_group(g);
  const int n = g.order();
  std::set<std::vector<Vertex>> covered;
  std::vector<Permutation> out;
  for (const auto& p : group) {
    if (p.is_identity() || !(p * p).is_identity()) continue;
    int fixed = 0;
    for (Vertex v = 0; v < n; ++v) fixed += p(v) == v;
    if (fixed != n % 2 || covered.contains(p.images())) continue;
    out.push_back(p);
    for (const auto& t : group) covered.insert((t * p * t.inverse()).images());
  }
  return out;
}

}  // namespace detail

/// Distance magic labelings of the fixed graph g, one per equivalence class,
/// ordered by label graph.
inline std::vector<Labeling> find_labelings(const Graph& g, const SearchOptions& opts) {
  opts.validate();
  if (!is_regular(g, opts.valence))
    throw std::invalid_argument("find_labelings: graph is not " + std::to_string(opts.valence) + "-regular");
  const int n = g.order();
  detail::StopSignal stop(opts.time_limit);
  std::map<LabelGraph, Labeling> found;
  auto keep = [&](const Labeling& l) {
    if (!is_distance_magic(g, l)) throw std::logic_error("find_labelings: search produced a non-magic labeling");
    if (opts.require_self_reverse && !is_self_reverse(g, l)) return true;
    if (opts.require_non_degenerate && is_degenerate(g, l)) return true;
    found.emplace(label_graph(g, l), l);
    return !opts.max_results || found.size() < *opts.max_results;
  };
  bool finished = true;
  if (opts.require_self_reverse) {
    for (const auto& sigma : detail::partner_candidates(g)) {
      detail::InvolutionSearch search(g, sigma, stop);
      if (opts.require_non_degenerate && search.degenerate()) continue;
      if (!search.run(keep)) {
        finished = false;
        break;
      }
    }
  } else {
    std::vector<Vertex> roots;
    if (n <= kMaxAutomorphismOrder) {
      for (const auto& orbit : vertex_orbits(g)) roots.push_back(orbit.front());
    } else {
      for (Vertex v = 0; v < n; ++v) roots.push_back(v);
    }
    detail::FixedGraphSearch search(g, stop);
    for (Vertex root : roots)
      if (!search.run(root, keep)) {
        finished = false;
        break;
      }
  }
  if (!finished && stop.stopped()) throw SearchTimeout("find_labelings: time limit exceeded");
  std::vector<Labeling> out;
  for (auto& [lg, l] : found) out.push_back(std::move(l));
  return out;
}

/// Published reference counts (#SR, #gr, #VT) of non-degenerate self-reverse
/// labelings of connected tetravalent graphs, orders 16 to 30.
struct ReferenceRow {
  int order;
  std::size_t sr_count, iso_class_count, vt_count;
};

inline constexpr ReferenceRow kReferenceTable[] = {
    {16, 48, 1, 1},       {17, 0, 0, 0},       {18, 136, 2, 1},       {19, 0, 0, 0},     {20, 66, 2, 1},
    {21, 57, 7, 0},       {22, 0, 0, 0},       {23, 675, 80, 0},      {24, 11156, 9, 3}, {25, 3063, 522, 0},
    {26, 31562, 37, 0},   {27, 10951, 2647, 0}, {28, 35402, 342, 0},  {29, 68837, 22893, 0},
    {30, 229716, 4151, 1},
};

inline std::optional<ReferenceRow> reference_row(int n) {
  for (const auto& row : kReferenceTable)
    if (row.order == n) return row;
  return std::nullopt;
}

struct Table1Report {
  std::vector<EnumerationReport> rows;

  bool complete() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.complete; });
  }

  /// Aligned text: one column per order.
  std::string text() const {
    std::ostringstream out;
    auto line = [&](const char* name, auto field) {
      out << std::left << std::setw(5) << name;
      for (const auto& r : rows) out << std::right << std::setw(8) << field(r);
      out << "\n";
    };
    line("n", [](const EnumerationReport& r) { return std::to_string(r.order); });
    line("#SR", [](const EnumerationReport& r) { return std::to_string(r.sr_count); });
    line("#gr", [](const EnumerationReport& r) { return std::to_string(r.iso_class_count); });
    line("#VT", [](const EnumerationReport& r) { return std::to_string(r.vt_count); });
    return out.str();
  }
};

/// Non-degenerate self-reverse counts for every order in [n_min, n_max].
inline Table1Report table1_report(int n_min, int n_max, SearchOptions opts) {
  if (n_min < 5 || n_min > n_max) throw std::invalid_argument("table1_report: need 5 <= n_min <= n_max");
  opts.require_self_reverse = true;
  opts.require_non_degenerate = true;
  opts.require_connected = true;
  Table1Report report;
  const auto started = detail::Clock::now();
  for (int n = n_min; n <= n_max; ++n) {
    SearchOptions row_opts = opts;
    if (opts.time_limit) {
      const auto spent = std::chrono::duration<double>(detail::Clock::now() - started);
      const auto left = *opts.time_limit - spent;
      if (left.count() <= 0) {
        EnumerationReport r;
        r.order = n;
        r.complete = false;
        r.options = opts;
        report.rows.push_back(r);
        continue;
      }
      row_opts.time_limit = left;
    }
    report.rows.push_back(enumerate_sr(n, row_opts).report);
    report.rows.back().options = opts;
  }
  return report;
}

}  // namespace magiclab
