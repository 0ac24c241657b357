#pragma once

/// \file io.hpp
/// \brief JSON encodings of graphs, labelings, quotients and reports.
///
///   Graph:      {"order": n, "edges": [[u, v], ...]}            u < v, sorted
///   Labeling:   {"order": n, "labels": [l(0), ..., l(n-1)]}
///   LabelGraph: {"order": n, "edges": [[a, b], ...]}            labels, a < b
///   Quotient:   {"n": n, "vertices": [...], "edges": [[a, b, "solid"|"dashed"], ...],
///                "semiedges": [...], "central": bool}

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "magiclab/enumerate.hpp"
#include "magiclab/graph.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/merge.hpp"
#include "magiclab/quotient.hpp"

namespace magiclab {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
template <class F>
auto parse_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const QuotientError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}
}  // namespace detail

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  return detail::parse_guard("graph", [&] {
    const int n = j.at("order").get<int>();
    if (n < 0) throw ParseError("graph: negative order");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph: each edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  });
}

inline Json to_json(const Labeling& l) { return {{"order", l.order()}, {"labels", l.values()}}; }

inline Labeling labeling_from_json(const Json& j) {
  return detail::parse_guard("labeling", [&] {
    auto labels = j.at("labels").get<std::vector<Label>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(labels.size()))
      throw ParseError("labeling: order does not match the number of labels");
    return Labeling(std::move(labels));
  });
}

inline Json to_json(const LabelGraph& lg) {
  Json edges = Json::array();
  for (auto [a, b] : lg.edges) edges.push_back({a, b});
  return {{"order", lg.order}, {"edges", edges}};
}

inline LabelGraph label_graph_from_json(const Json& j) {
  return detail::parse_guard("label graph", [&] {
    LabelGraph lg{j.at("order").get<int>(), {}};
    for (const auto& e : j.at("edges")) {
      auto a = e.at(0).get<Label>(), b = e.at(1).get<Label>();
      lg.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(lg.edges.begin(), lg.edges.end());
    realize(lg);  // validates the labels
    return lg;
  });
}

inline Json to_json(const QuotientGraph& q) {
  Json edges = Json::array();
  for (const auto& e : q.edges) edges.push_back({e.a, e.b, to_string(e.style)});
  return {{"n", q.n}, {"vertices", q.vertices}, {"edges", edges}, {"semiedges", q.semiedges}, {"central", q.central}};
}

inline QuotientGraph quotient_from_json(const Json& j) {
  return detail::parse_guard("quotient", [&] {
    QuotientGraph q;
    q.n = j.at("n").get<int>();
    q.vertices = j.at("vertices").get<std::vector<Label>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("quotient: each edge must be [a, b, style]");
      const std::string style = e[2].get<std::string>();
      if (style != "solid" && style != "dashed") throw ParseError("quotient: unknown edge style '" + style + "'");
      Label a = e[0].get<Label>(), b = e[1].get<Label>();
      if (a > b) std::swap(a, b);
      q.edges.push_back({a, b, style == "solid" ? EdgeStyle::solid : EdgeStyle::dashed});
    }
    std::sort(q.edges.begin(), q.edges.end());
    q.semiedges = j.at("semiedges").get<std::vector<Label>>();
    std::sort(q.semiedges.begin(), q.semiedges.end());
    q.central = j.value("central", MagicLabelSet(std::max(q.n, 1)).has_zero());
    validate(q);
    return q;
  });
}

inline Json to_json(const MergeReport& r) {
  return {{"balanced", r.balanced},
          {"alternating", r.alternating},
          {"sums_match", r.sums_match},
          {"sr_condition_i", r.sr_condition_i},
          {"sr_condition_ii", r.sr_condition_ii},
          {"mergeable", r.mergeable()},
          {"preserves_self_reverse", r.preserves_self_reverse()}};
}

inline Json to_json(const SearchOptions& o) {
  Json j = {{"require_self_reverse", o.require_self_reverse},
            {"require_non_degenerate", o.require_non_degenerate},
            {"require_connected", o.require_connected},
            {"valence", o.valence},
            {"thread_budget", o.thread_budget},
            {"time_limit", nullptr}};
  if (o.time_limit) j["time_limit"] = o.time_limit->count();
  return j;
}

/// elapsed_seconds is the only field that varies between identical runs.
inline Json to_json(const EnumerationReport& r) {
  return {{"order", r.order},
          {"sr_count", r.sr_count},
          {"iso_class_count", r.iso_class_count},
          {"vt_count", r.vt_count},
          {"elapsed_seconds", r.elapsed_seconds},
          {"complete", r.complete},
          {"options", to_json(r.options)}};
}

inline Json to_json(const Table1Report& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  return {{"rows", rows}, {"complete", t.complete()}};
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace magiclab
