#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "magiclab/canonical.hpp"
#include "magiclab/enumerate.hpp"
#include "magiclab/families.hpp"
#include "magiclab/merge.hpp"

using namespace magiclab;

namespace {

struct Labeled {
  Graph graph;
  Labeling labeling;
};

Cyclet by_labels(const Graph& g, const Labeling& l, std::vector<Label> labels) {
  std::vector<Vertex> seq;
  for (Label a : labels) seq.push_back(l.vertex_of(a));
  return make_cyclet(g, seq);
}

// Random simple cycle of length d through a random start, or nothing after a bounded number of tries.
std::optional<Cyclet> random_cyclet(const Graph& g, int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vertex> path{pick(rng)};
    std::vector<char> used(g.order(), 0);
    used[path[0]] = 1;
    while (static_cast<int>(path.size()) < d) {
      auto nbrs = g.neighbors(path.back());
      std::vector<Vertex> options;
      for (Vertex u : nbrs)
        if (!used[u]) options.push_back(u);
      if (options.empty()) break;
      const Vertex next = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      used[next] = 1;
      path.push_back(next);
    }
    if (static_cast<int>(path.size()) == d && g.adjacent(path.back(), path.front())) return make_cyclet(g, path);
  }
  return std::nullopt;
}

// Distance magic wreath labelings of several kinds.
std::vector<Labeled> wreath_pool() {
  std::vector<Labeled> pool;
  for (int m = 3; m <= 8; ++m) pool.push_back({wreath(m), wreath_natural_labeling(m)});
  for (int m : {4, 8}) {
    pool.push_back({wreath(m), wreath_degenerate_labeling(m)});
    pool.push_back({wreath(m), wreath_nondegenerate_labeling(m)});
  }
  pool.push_back({wreath(8), wreath_non_sr_labeling(8)});
  SearchOptions opts;
  opts.require_self_reverse = false;
  for (int m : {4, 5}) {
    const auto all = find_labelings(wreath(m), opts);
    for (std::size_t k = 0; k < all.size(); k += 3) pool.push_back({wreath(m), all[k]});
  }
  return pool;
}

}  // namespace

TEST_CASE("cyclet construction") {
  const Graph w3 = wreath(3);
  // x_0, x_1, y_2, y_1
  const Cyclet c = make_cyclet(w3, {0, 1, 5, 4});
  CHECK(c.length() == 4);
  CHECK(c.at(-1) == 4);
  CHECK(c.at(5) == 1);
  CHECK_NOTHROW(make_cyclet(cycle_graph(3), {0, 1, 2}));
  CHECK_THROWS_AS(make_cyclet(cycle_graph(4), {0, 2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclet(cycle_graph(4), {0, 1, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclet(cycle_graph(4), {0, 1}), std::invalid_argument);
}

TEST_CASE("merging two copies of W(3)") {
  const Graph w3 = wreath(3);
  const Cyclet c = make_cyclet(w3, {0, 1, 5, 4});
  const Graph merged = merge(w3, c, w3, c);
  CHECK(merged.order() == 12);
  CHECK(is_regular(merged, 4));
  CHECK(is_connected(merged));
  CHECK_FALSE(are_isomorphic(merged, wreath(6)));

  SearchOptions opts;
  opts.require_self_reverse = false;
  const auto dm = enumerate_dm(12, opts);
  std::vector<Graph> non_wreath;
  for (const auto& lg : dm.label_graphs) {
    Graph g = realize(lg).first;
    if (are_isomorphic(g, wreath(6))) continue;
    if (std::none_of(non_wreath.begin(), non_wreath.end(), [&](const Graph& h) { return are_isomorphic(g, h); }))
      non_wreath.push_back(std::move(g));
  }
  REQUIRE(non_wreath.size() == 1);
  CHECK(are_isomorphic(merged, non_wreath.front()));
}

TEST_CASE("merging two copies of W(4) along quotient edges gives W(8)") {
  const Graph w4 = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  const Cyclet left = cyclet_from_quotient_edge(w4, l, 3, 7);
  const Cyclet right = cyclet_from_quotient_edge(w4, l, 1, 5);
  CHECK(left == by_labels(w4, l, {3, 7, -7, -3}));

  const MergeReport r = check_merge_conditions(w4, l, left, w4, l, right);
  CHECK(r.balanced);
  CHECK(r.alternating);
  CHECK(r.sums_match);
  CHECK(r.sr_condition_ii);
  CHECK_FALSE(r.sr_condition_i);
  CHECK(r.mergeable());
  CHECK(r.preserves_self_reverse());

  const Graph merged = merge(w4, left, w4, right);
  const Labeling ml = merged_labeling(w4, l, w4, l);
  CHECK(are_isomorphic(merged, wreath(8)));
  CHECK(is_distance_magic(merged, ml));
  CHECK(is_self_reverse(merged, ml));
  CHECK_FALSE(is_degenerate(merged, ml));

  const QuotientGraph q = quotient(merged, ml);
  CHECK(q.vertices == std::vector<Label>{1, 3, 5, 7, 9, 11, 13, 15});
  const auto ext = extensible_edges(q);
  CHECK(std::find(ext.begin(), ext.end(), std::pair{11, 15}) != ext.end());

  const Extension e = extend_by_w4(w4, l, 3, 7);
  CHECK(e.graph.edges() == merged.edges());
  CHECK(e.labeling == ml);
}

TEST_CASE("merged labeling shifts the right labels") {
  const Graph w4 = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  const Labeling ml = merged_labeling(w4, l, w4, l);
  CHECK(ml.order() == 16);
  for (Vertex v = 0; v < 8; ++v) CHECK(ml[v] == l[v]);
  CHECK(ml[8 + l.vertex_of(1)] == 9);
  CHECK(ml[8 + l.vertex_of(-1)] == -9);
  // Positives of one side of K_{4,4}, negatives of the other: unbalanced.
  const Graph k44 = complete_bipartite(4, 4);
  CHECK_THROWS_AS(merged_labeling(w4, l, k44, Labeling({1, 3, 5, 7, -1, -3, -5, -7})), std::invalid_argument);
}

TEST_CASE("merge preconditions") {
  const Graph w4 = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  const Graph w3 = wreath(3);
  const Labeling l3 = wreath_natural_labeling(3);
  const Cyclet square = cyclet_from_quotient_edge(w4, l, 3, 7);
  const Cyclet triangle = make_cyclet(w3, {0, 1, 2});
  const Cyclet six = make_cyclet(w3, {0, 1, 2, 3, 4, 5});

  CHECK_THROWS_AS(merge(w4, square, w3, triangle), std::invalid_argument);
  CHECK_THROWS_AS(check_merge_conditions(w3, l3, triangle, w3, l3, triangle), std::invalid_argument);
  CHECK_THROWS_AS(check_merge_conditions(w4, l, square, w3, l3, six), std::invalid_argument);
  CHECK_THROWS_AS(check_merge_conditions(w4, wreath_degenerate_labeling(4), square, w4, Labeling(label_set(8).values()),
                                         square),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_merge_conditions(cycle_graph(4), Labeling({-3, -1, 1, 3}), make_cyclet(cycle_graph(4), {0, 1, 2, 3}),
                                         cycle_graph(4), Labeling({-3, -1, 1, 3}), make_cyclet(cycle_graph(4), {0, 1, 2, 3})),
                  std::invalid_argument);
  // A cyclet taken from a graph of another order.
  CHECK_THROWS_AS(merge(w4, make_cyclet(w3, {0, 1, 5, 4}), w4, square), std::invalid_argument);
}

TEST_CASE("cyclets from quotient edges") {
  const Graph w4 = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  CHECK_THROWS_WITH(cyclet_from_quotient_edge(w4, l, 1, 7), Catch::Matchers::ContainsSubstring("dashed"));
  CHECK_THROWS_AS(cyclet_from_quotient_edge(w4, l, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(cyclet_from_quotient_edge(w4, l, 0, 3), std::invalid_argument);
  for (auto [a, b] : extensible_edges(quotient(w4, l))) {
    const Cyclet c = cyclet_from_quotient_edge(w4, l, a, b);
    CHECK(c.at(2) == partner(l, c.at(1)));
    CHECK(c.at(3) == partner(l, c.at(0)));
    CHECK(check_merge_conditions(w4, l, c, w4, l, c).sr_condition_ii);
  }

  SearchOptions opts;
  opts.require_non_degenerate = true;
  const auto odd = enumerate_sr(21, opts).label_graphs;
  for (const auto& lg : odd) {
    const auto [g, gl] = realize(lg);
    const QuotientGraph q = quotient(g, gl);
    for (const auto& e : q.edges)
      if (e.a == 0) CHECK_THROWS_AS(cyclet_from_quotient_edge(g, gl, e.a, e.b), std::invalid_argument);
  }
}

TEST_CASE("merge keeps every degree and its new edges form the expected cycles") {
  std::mt19937 rng(515);
  const auto pool = wreath_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Labeled& left = pool[pick(rng)];
    const Labeled& right = pool[pick(rng)];
    const int d = std::uniform_int_distribution<int>(3, 6)(rng);
    const auto c = random_cyclet(left.graph, d, rng);
    const auto c2 = random_cyclet(right.graph, d, rng);
    if (!c || !c2) continue;
    ++tested;
    const Graph merged = merge(left.graph, *c, right.graph, *c2);
    const int n = left.graph.order();
    for (Vertex v = 0; v < n; ++v) CHECK(merged.degree(v) == left.graph.degree(v));
    for (Vertex v = 0; v < right.graph.order(); ++v) CHECK(merged.degree(n + v) == right.graph.degree(v));

    std::vector<Edge> added;
    for (int i = 0; i < d; ++i) {
      added.emplace_back(c->at(i), n + c2->at(i + 1));
      added.emplace_back(n + c2->at(i), c->at(i + 1));
    }
    for (auto [a, b] : added) CHECK(merged.adjacent(a, b));
    const Graph cross(merged.order(), added);
    std::vector<std::size_t> sizes;
    for (const auto& part : connected_components(cross))
      if (part.size() > 1) {
        sizes.push_back(part.size());
        for (Vertex v : part) CHECK(cross.degree(v) == 2);
      }
    if (d % 2 == 0)
      CHECK(sizes == std::vector<std::size_t>{static_cast<std::size_t>(d), static_cast<std::size_t>(d)});
    else
      CHECK(sizes == std::vector<std::size_t>{static_cast<std::size_t>(2 * d)});
  }
  CHECK(tested > 100);
}

TEST_CASE("mergeable configurations give magic labelings") {
  std::mt19937 rng(2718);
  const auto pool = wreath_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int mergeable = 0, self_reverse = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Labeled& left = pool[pick(rng)];
    const Labeled& right = pool[pick(rng)];
    const int d = 2 * std::uniform_int_distribution<int>(2, 4)(rng);
    const auto c = random_cyclet(left.graph, d, rng);
    const auto c2 = random_cyclet(right.graph, d, rng);
    if (!c || !c2) continue;
    const auto aligned = align_cyclets(left.graph, left.labeling, *c, right.graph, right.labeling, *c2);
    const Cyclet& c2_used = aligned ? *aligned : *c2;
    const MergeReport r = check_merge_conditions(left.graph, left.labeling, *c, right.graph, right.labeling, c2_used);
    CHECK(r.mergeable() == aligned.has_value());
    if (!r.mergeable()) continue;
    ++mergeable;
    const Graph merged = merge(left.graph, *c, right.graph, c2_used);
    const Labeling ml = merged_labeling(left.graph, left.labeling, right.graph, right.labeling);
    CHECK(is_distance_magic(merged, ml));
    const bool both_sr = is_self_reverse(left.graph, left.labeling) && is_self_reverse(right.graph, right.labeling);
    if (both_sr && r.preserves_self_reverse()) {
      ++self_reverse;
      CHECK(is_self_reverse(merged, ml));
    }
  }
  CHECK(mergeable >= 20);
  CHECK(self_reverse >= 5);
}

TEST_CASE("repeated extension by W(4)") {
  const Graph w4 = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  for (int k = 0; k <= 4; ++k) {
    const Extension e = extend_by_w4_repeatedly(w4, l, 3, 7, k);
    const int n = 8 + 8 * k;
    CHECK(e.graph.order() == n);
    CHECK(is_regular(e.graph, 4));
    CHECK(is_connected(e.graph));
    CHECK(is_distance_magic(e.graph, e.labeling));
    CHECK(is_self_reverse(e.graph, e.labeling));
    CHECK_FALSE(is_degenerate(e.graph, e.labeling));
    if (k > 0) {
      const auto ext = extensible_edges(quotient(e.graph, e.labeling));
      CHECK(std::find(ext.begin(), ext.end(), std::pair{n - 8 + 3, n - 8 + 7}) != ext.end());
    }
  }
  CHECK_THROWS_AS(extend_by_w4(w4, l, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(extend_by_w4_repeatedly(w4, l, 3, 7, -1), std::invalid_argument);
}
