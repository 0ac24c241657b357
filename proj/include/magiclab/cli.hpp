#pragma once

/// \file cli.hpp
/// \brief Subcommand front end; `run_cli` is what the magiclab binary calls.
///
/// Exit codes: 0 success, 1 usage or parse error, 2 a checked property is
/// false, 3 incomplete because of a time limit.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magiclab/canonical.hpp"
#include "magiclab/enumerate.hpp"
#include "magiclab/families.hpp"
#include "magiclab/io.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/merge.hpp"
#include "magiclab/quotient.hpp"
#include "magiclab/witness.hpp"

namespace magiclab {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2, kExitIncomplete = 3 };

/// Property report printed by `verify`.
struct VerifyResult {
  bool distance_magic = false;
  bool self_reverse = false;
  bool degenerate = false;
  bool connected = false;
  bool regular4 = false;
};

inline VerifyResult verify_properties(const Graph& g, const Labeling& l) {
  detail::require_same_order(g, l);
  return {is_distance_magic(g, l), is_self_reverse(g, l), is_degenerate(g, l), is_connected(g), is_regular(g, 4)};
}

/// Distance magic is always required; --sr and --nondegenerate add requirements.
inline bool verify_passes(const VerifyResult& r, bool want_sr, bool want_nondegenerate) {
  return r.distance_magic && (!want_sr || r.self_reverse) && (!want_nondegenerate || !r.degenerate);
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

inline std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex pattern(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("range must look like A..B, got '" + text + "'");
  const int a = std::stoi(m[1].str());
  const int b = m[2].matched ? std::stoi(m[2].str()) : a;
  return {a, b};
}

inline void emit_pair(std::ostream& out, const Graph& g, const Labeling& l) {
  out << Json{{"graph", to_json(g)}, {"labeling", to_json(l)}}.dump(2) << "\n";
}

inline std::optional<std::chrono::duration<double>> seconds(double s) {
  if (s <= 0) return std::nullopt;
  return std::chrono::duration<double>(s);
}

}  // namespace detail

/// Parses argv-style arguments (args[0] is the program name) and runs one subcommand.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{"Distance magic labelings of tetravalent graphs"};
  app.require_subcommand(1);
  std::optional<long> seed;
  app.add_option("--seed", seed, "Accepted for interface uniformity; all commands are deterministic");

  // gen
  std::string family;
  std::vector<int> gen_params;
  std::string gen_connections;
  auto* gen = app.add_subcommand("gen", "Generate a graph: wreath M | circulant N | cartesian M K | direct M K | complete N");
  gen->add_option("family", family)->required()->check(CLI::IsMember({"wreath", "circulant", "cartesian", "direct", "complete"}));
  gen->add_option("params", gen_params)->required();
  gen->add_option("--connections", gen_connections, "Circulant connection set, e.g. 1,-1,5,-5");

  // label
  std::string label_graph_file, formula;
  int label_wreath = 0;
  bool label_sr = false, label_nondeg = false;
  std::size_t label_limit = 0;
  double label_time = 0;
  auto* label = app.add_subcommand("label", "Search labelings of a graph, or emit a wreath formula labeling");
  auto* label_graph_opt = label->add_option("--graph", label_graph_file, "Graph JSON to search");
  auto* label_wreath_opt = label->add_option("--wreath", label_wreath, "Wreath parameter m for --formula");
  label->add_option("--formula", formula)->check(CLI::IsMember({"natural", "degenerate", "nondegenerate", "tweak"}));
  label->add_flag("--sr", label_sr, "Only self-reverse labelings");
  label->add_flag("--nondegenerate", label_nondeg, "Only non-degenerate labelings");
  label->add_option("--limit", label_limit, "Stop after this many labelings");
  label->add_option("--time-limit", label_time, "Seconds");
  label_graph_opt->excludes(label_wreath_opt);

  // verify
  std::string graph_file, labeling_file;
  bool want_sr = false, want_nondeg = false;
  auto* verify = app.add_subcommand("verify", "Check a labeling of a graph");
  verify->add_option("--graph", graph_file)->required();
  verify->add_option("--labeling", labeling_file)->required();
  verify->add_flag("--sr", want_sr, "Require self-reverse");
  verify->add_flag("--nondegenerate", want_nondeg, "Require non-degenerate");

  // quotient
  std::string format = "json";
  auto* quot = app.add_subcommand("quotient", "Quotient of a non-degenerate self-reverse labeling");
  quot->add_option("--graph", graph_file)->required();
  quot->add_option("--labeling", labeling_file)->required();
  quot->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  // lift
  std::string quotient_file;
  auto* lft = app.add_subcommand("lift", "Double cover of a quotient");
  lft->add_option("--quotient", quotient_file)->required();

  // merge
  std::string left_file, right_file, left_cyc, right_cyc, left_lab, right_lab;
  auto* mrg = app.add_subcommand("merge", "Merge two graphs along cyclets");
  mrg->add_option("--left", left_file)->required();
  mrg->add_option("--left-cyclet", left_cyc)->required();
  mrg->add_option("--right", right_file)->required();
  mrg->add_option("--right-cyclet", right_cyc)->required();
  mrg->add_option("--left-labeling", left_lab);
  mrg->add_option("--right-labeling", right_lab);

  // extend
  std::string edge_text;
  int times = 1;
  auto* ext = app.add_subcommand("extend", "Extend by W(4) along a quotient edge, repeatedly");
  ext->add_option("--graph", graph_file)->required();
  ext->add_option("--labeling", labeling_file)->required();
  ext->add_option("--edge", edge_text, "a,b")->required();
  ext->add_option("--times", times)->check(CLI::NonNegativeNumber);

  // witness
  int witness_order = 0;
  bool witness_nondeg = false, witness_nonwreath = false;
  auto* wit = app.add_subcommand("witness", "Explicit self-reverse labeling of order N");
  wit->add_option("N", witness_order)->required();
  wit->add_flag("--nondegenerate", witness_nondeg);
  wit->add_flag("--non-wreath", witness_nonwreath);

  // enumerate
  int order = 0, threads = 1;
  bool enum_nondeg = false, all_dm = false;
  double time_limit = 0;
  std::string emit_dir;
  auto* enm = app.add_subcommand("enumerate", "Enumerate label graphs of order N");
  enm->add_option("--order", order)->required();
  enm->add_flag("--nondegenerate", enum_nondeg);
  enm->add_flag("--all-dm", all_dm, "All distance magic label graphs, not only self-reverse (small orders)");
  enm->add_option("--threads", threads)->check(CLI::PositiveNumber);
  enm->add_option("--time-limit", time_limit, "Seconds");
  enm->add_option("--emit-dir", emit_dir, "Write one graph/labeling JSON pair per result plus report.json");

  // table1
  std::string range_text;
  bool allow_long = false, table_json = false;
  auto* tbl = app.add_subcommand("table1", "Non-degenerate self-reverse counts with PASS/FAIL against reference values");
  tbl->add_option("range", range_text, "A..B")->required();
  tbl->add_option("--threads", threads)->check(CLI::PositiveNumber);
  tbl->add_option("--time-limit", time_limit, "Seconds");
  tbl->add_flag("--allow-long", allow_long, "Permit orders 24 and above");
  tbl->add_flag("--json", table_json);

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      auto need = [&](std::size_t k) {
        if (gen_params.size() != k) throw std::invalid_argument(family + " takes " + std::to_string(k) + " parameter(s)");
      };
      if (family == "wreath") need(1), g = wreath(gen_params[0]);
      if (family == "complete") need(1), g = complete_graph(gen_params[0]);
      if (family == "cartesian") need(2), g = cartesian_cycles(gen_params[0], gen_params[1]);
      if (family == "direct") need(2), g = direct_cycles(gen_params[0], gen_params[1]);
      if (family == "circulant") {
        need(1);
        if (gen_connections.empty()) throw std::invalid_argument("circulant needs --connections");
        g = circulant(gen_params[0], detail::parse_int_list(gen_connections));
      }
      out << to_json(g).dump(2) << "\n";
      return kExitOk;
    }

    if (label->parsed()) {
      if (!formula.empty()) {
        if (label_wreath == 0) throw std::invalid_argument("--formula needs --wreath M");
        Labeling l;
        if (formula == "natural") l = wreath_natural_labeling(label_wreath);
        if (formula == "degenerate") l = wreath_degenerate_labeling(label_wreath);
        if (formula == "nondegenerate") l = wreath_nondegenerate_labeling(label_wreath);
        if (formula == "tweak") l = wreath_non_sr_labeling(label_wreath);
        out << to_json(l).dump(2) << "\n";
        return kExitOk;
      }
      if (label_graph_file.empty()) throw std::invalid_argument("label needs --graph FILE or --wreath M --formula F");
      const Graph g = graph_from_json(read_json_file(label_graph_file));
      SearchOptions o;
      o.require_self_reverse = label_sr;
      o.require_non_degenerate = label_nondeg;
      o.require_connected = false;
      o.time_limit = detail::seconds(label_time);
      if (label_limit > 0) o.max_results = label_limit;
      std::vector<Labeling> found;
      try {
        found = find_labelings(g, o);
      } catch (const SearchTimeout& e) {
        err << e.what() << "\n";
        return kExitIncomplete;
      }
      Json arr = Json::array();
      for (const auto& l : found) arr.push_back(to_json(l));
      out << Json{{"count", found.size()}, {"labelings", arr}}.dump(2) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      const Graph g = graph_from_json(read_json_file(graph_file));
      const Labeling l = labeling_from_json(read_json_file(labeling_file));
      const VerifyResult r = verify_properties(g, l);
      out << Json{{"distance_magic", r.distance_magic},
                  {"self_reverse", r.self_reverse},
                  {"degenerate", r.degenerate},
                  {"connected", r.connected},
                  {"regular4", r.regular4}}
                 .dump(2)
          << "\n";
      return verify_passes(r, want_sr, want_nondeg) ? kExitOk : kExitVerification;
    }

    if (quot->parsed()) {
      const Graph g = graph_from_json(read_json_file(graph_file));
      const Labeling l = labeling_from_json(read_json_file(labeling_file));
      QuotientGraph q;
      try {
        q = quotient(g, l);
      } catch (const QuotientError& e) {
        err << e.what() << "\n";
        return kExitVerification;
      }
      out << (format == "dot" ? export_dot(q) : to_json(q).dump(2) + "\n");
      return kExitOk;
    }

    if (lft->parsed()) {
      const auto [g, l] = lift(quotient_from_json(read_json_file(quotient_file)));
      detail::emit_pair(out, g, l);
      return kExitOk;
    }

    if (mrg->parsed()) {
      const Graph g = graph_from_json(read_json_file(left_file));
      const Graph h = graph_from_json(read_json_file(right_file));
      const Cyclet c = make_cyclet(g, detail::parse_int_list(left_cyc));
      const Cyclet c2 = make_cyclet(h, detail::parse_int_list(right_cyc));
      Json result = {{"graph", to_json(merge(g, c, h, c2))}};
      if (left_lab.empty() != right_lab.empty())
        throw std::invalid_argument("give both --left-labeling and --right-labeling, or neither");
      if (!left_lab.empty()) {
        const Labeling l = labeling_from_json(read_json_file(left_lab));
        const Labeling l2 = labeling_from_json(read_json_file(right_lab));
        const MergeReport report = check_merge_conditions(g, l, c, h, l2, c2);
        result["conditions"] = to_json(report);
        if (!report.mergeable()) {
          out << result.dump(2) << "\n";
          return kExitVerification;
        }
        result["labeling"] = to_json(merged_labeling(g, l, h, l2));
      }
      out << result.dump(2) << "\n";
      return kExitOk;
    }

    if (ext->parsed()) {
      const Graph g = graph_from_json(read_json_file(graph_file));
      const Labeling l = labeling_from_json(read_json_file(labeling_file));
      const auto edge = detail::parse_int_list(edge_text);
      if (edge.size() != 2) throw std::invalid_argument("--edge takes a,b");
      const auto result = extend_by_w4_repeatedly(g, l, edge[0], edge[1], times);
      detail::emit_pair(out, result.graph, result.labeling);
      return kExitOk;
    }

    if (wit->parsed()) {
      std::optional<Witness> w;
      if (witness_nonwreath)
        w = witness_non_wreath(witness_order);
      else if (witness_nondeg)
        w = witness_nondegenerate(witness_order);
      else
        w = witness(witness_order);
      if (!w) {
        out << Json{{"order", witness_order}, {"present", false}}.dump(2) << "\n";
        return kExitOk;
      }
      out << Json{{"order", witness_order},
                  {"present", true},
                  {"graph", to_json(w->graph)},
                  {"labeling", to_json(w->labeling)}}
                 .dump(2)
          << "\n";
      return kExitOk;
    }

    if (enm->parsed()) {
      SearchOptions o;
      o.require_self_reverse = !all_dm;
      o.require_non_degenerate = enum_nondeg;
      o.thread_budget = threads;
      o.time_limit = detail::seconds(time_limit);
      const Enumeration e = all_dm ? enumerate_dm(order, o) : enumerate_sr(order, o);
      const Json report = to_json(e.report);
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (std::size_t k = 0; k < e.label_graphs.size(); ++k) {
          const auto [g, l] = realize(e.label_graphs[k]);
          write_json_file(std::filesystem::path(emit_dir) / ("found_" + std::to_string(k) + ".json"),
                          Json{{"graph", to_json(g)}, {"labeling", to_json(l)}});
        }
        write_json_file(std::filesystem::path(emit_dir) / "report.json", report);
      }
      out << report.dump(2) << "\n";
      return e.report.complete ? kExitOk : kExitIncomplete;
    }

    if (tbl->parsed()) {
      const auto [lo, hi] = detail::parse_range(range_text);
      if (lo < 5 || hi > 30 || lo > hi) {
        err << "table1: range must lie within 5..30\n";
        return kExitUsage;
      }
      if (hi >= 24 && !allow_long) {
        err << "table1: orders 24 and above take minutes to hours; pass --allow-long to run them\n";
        return kExitUsage;
      }
      SearchOptions o;
      o.thread_budget = threads;
      o.time_limit = detail::seconds(time_limit);
      const Table1Report t = table1_report(lo, hi, o);
      bool all_pass = true;
      Json checks = Json::array();
      std::ostringstream lines;
      for (const auto& r : t.rows) {
        const auto ref = reference_row(r.order);
        if (!ref || !r.complete) continue;
        const bool pass = r.sr_count == ref->sr_count && r.iso_class_count == ref->iso_class_count &&
                          r.vt_count == ref->vt_count;
        all_pass = all_pass && pass;
        checks.push_back({{"order", r.order}, {"pass", pass}});
        lines << (pass ? "PASS" : "FAIL") << " n=" << r.order << " got (" << r.sr_count << ","
              << r.iso_class_count << "," << r.vt_count << ") expected (" << ref->sr_count << ","
              << ref->iso_class_count << "," << ref->vt_count << ")\n";
      }
      if (table_json) {
        Json j = to_json(t);
        j["checks"] = checks;
        out << j.dump(2) << "\n";
      } else {
        out << t.text() << lines.str();
      }
      if (!t.complete()) return kExitIncomplete;
      return all_pass ? kExitOk : kExitVerification;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuotientError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace magiclab
