#include <map>
#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "magiclab/canonical.hpp"
#include "magiclab/enumerate.hpp"
#include "magiclab/families.hpp"
#include "magiclab/labeling.hpp"

using namespace magiclab;

namespace {

Labeling random_labeling(int n, std::mt19937& rng) {
  auto values = label_set(n).values();
  std::shuffle(values.begin(), values.end(), rng);
  return Labeling(values);
}

// Every distance magic labeling of a connected tetravalent graph of order n, one per label graph.
std::vector<std::pair<Graph, Labeling>> all_dm(int n) {
  SearchOptions opts;
  opts.require_self_reverse = false;
  std::vector<std::pair<Graph, Labeling>> out;
  for (const auto& lg : enumerate_dm(n, opts).label_graphs) out.push_back(realize(lg));
  return out;
}

}  // namespace

TEST_CASE("label sets") {
  CHECK(label_set(4).values() == std::vector<Label>{-3, -1, 1, 3});
  CHECK(label_set(5).values() == std::vector<Label>{-4, -2, 0, 2, 4});
  CHECK(label_set(1).values() == std::vector<Label>{0});
  CHECK_THROWS_AS(label_set(0), std::invalid_argument);
  for (int n = 1; n <= 30; ++n) {
    const auto values = label_set(n).values();
    CHECK(values.size() == static_cast<std::size_t>(n));
    CHECK(label_set(n).has_zero() == (n % 2 == 1));
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(values[i] == -values[values.size() - 1 - i]);
      if (i > 0) CHECK(values[i] - values[i - 1] == 2);
    }
  }
}

TEST_CASE("labeling rejects values outside the label set") {
  CHECK_THROWS_AS(Labeling({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Labeling({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Labeling({-1, 3}), std::invalid_argument);
  CHECK_NOTHROW(Labeling({1, -1}));
}

TEST_CASE("classical conversion") {
  const Labeling four({-3, 3, -1, 1});
  CHECK(to_classical(four) == std::vector<int>{1, 4, 2, 3});
  std::vector<Label> values = label_set(21).values();
  const auto classical = to_classical(Labeling(values));
  CHECK(classical[10] == 11);
  CHECK(values[10] == 0);
}

TEST_CASE("distance magic examples") {
  CHECK(is_distance_magic(wreath(3), wreath_natural_labeling(3)));
  CHECK(is_distance_magic(wreath(4), wreath_nondegenerate_labeling(4)));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial)
    CHECK_FALSE(is_distance_magic(complete_graph(5), random_labeling(5, rng)));
  CHECK_THROWS_AS(is_distance_magic(wreath(3), wreath_natural_labeling(4)), std::invalid_argument);
}

TEST_CASE("partner and pair partition") {
  const Labeling l = wreath_natural_labeling(3);
  // x_0 = vertex 0, y_0 = vertex 3.
  CHECK(partner(l, 0) == 3);
  std::mt19937 rng(8);
  for (int n : {4, 5, 9, 12}) {
    const Labeling r = random_labeling(n, rng);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(partner(r, partner(r, v)) == v);
      CHECK((partner(r, v) == v) == (r[v] == 0));
    }
    const auto p = pair_partition(r);
    CHECK(p.pairs.size() == static_cast<std::size_t>(n / 2));
    CHECK(p.central.has_value() == (n % 2 == 1));
    for (auto [u, v] : p.pairs) CHECK(r[u] + r[v] == 0);
    if (p.central) CHECK(r[*p.central] == 0);
  }
  const auto p = pair_partition(l);
  for (auto [u, v] : p.pairs) CHECK(v == u + 3);
}

TEST_CASE("reverse") {
  const Labeling l = wreath_natural_labeling(3);
  CHECK(reverse(reverse(l)) == l);
  CHECK(reverse(l)[0] == -1);
  for (int m = 8; m <= 16; m += 4) {
    const Labeling t = wreath_non_sr_labeling(m);
    REQUIRE(is_distance_magic(wreath(m), t));
    CHECK(is_distance_magic(wreath(m), reverse(t)));
  }
}

TEST_CASE("reverse of every distance magic labeling is distance magic") {
  for (int n : {8, 10, 12, 14})
    for (const auto& [g, l] : all_dm(n)) CHECK(is_distance_magic(g, reverse(l)));
}

TEST_CASE("self-reverse examples") {
  for (int m = 3; m <= 8; ++m) CHECK(is_self_reverse(wreath(m), wreath_natural_labeling(m)));
  CHECK_FALSE(is_self_reverse(wreath(8), wreath_non_sr_labeling(8)));
  CHECK(is_self_reverse(wreath(4), wreath_nondegenerate_labeling(4)));
}

TEST_CASE("both self-reverse predicates agree") {
  for (int n : {8, 10, 12, 14})
    for (const auto& [g, l] : all_dm(n)) CHECK(is_self_reverse(g, l) == is_self_reverse_by_pairs(g, l));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + trial % 6;
    const Graph g = wreath(m);
    const Labeling l = random_labeling(g.order(), rng);
    CHECK(is_self_reverse(g, l) == is_self_reverse_by_pairs(g, l));
  }
}

TEST_CASE("equivalent to its reverse exactly when self-reverse") {
  std::size_t sr = 0, total = 0;
  for (int n : {6, 8, 10, 12, 14})
    for (const auto& [g, l] : all_dm(n)) {
      const bool self_reverse = is_self_reverse(g, l);
      CHECK(are_equivalent(g, l, g, reverse(l)) == self_reverse);
      sr += self_reverse;
      ++total;
    }
  CHECK(sr > 0);
  CHECK(sr < total);
}

TEST_CASE("degeneracy examples") {
  CHECK(is_degenerate(wreath(3), wreath_natural_labeling(3)));
  CHECK_FALSE(is_degenerate(wreath(4), wreath_nondegenerate_labeling(4)));
  CHECK_FALSE(is_degenerate(wreath(8), wreath_nondegenerate_labeling(8)));
}

TEST_CASE("degenerate self-reverse labelings live on wreath graphs") {
  SearchOptions opts;
  for (int n = 6; n <= 16; n += 2) {
    const auto wreath_code = canonical_code(wreath(n / 2));
    for (const auto& lg : enumerate_sr(n, opts).label_graphs) {
      const auto [g, l] = realize(lg);
      if (is_degenerate(g, l)) CHECK(canonical_code(g) == wreath_code);
    }
  }
}

TEST_CASE("label graph") {
  const Graph g = wreath(3);
  const Labeling l = wreath_natural_labeling(3);
  const LabelGraph lg = label_graph(g, l);
  CHECK(lg.edges.size() == g.edge_count());
  CHECK(std::binary_search(lg.edges.begin(), lg.edges.end(), std::pair{1, 3}));

  // Transport the labeling along a random relabeling of the graph.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vertex> images(g.order());
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation p(images);
    std::vector<Label> moved(g.order());
    for (Vertex v = 0; v < g.order(); ++v) moved[p(v)] = l[v];
    CHECK(label_graph(permuted(g, p), Labeling(moved)) == lg);
  }

  const auto [h, hl] = realize(lg);
  CHECK(label_graph(h, hl) == lg);
}

TEST_CASE("label graphs of magic labelings are magic on labels") {
  for (int n : {10, 12})
    for (const auto& [g, l] : all_dm(n)) {
      const LabelGraph lg = label_graph(g, l);
      std::map<Label, long> sum;
      for (auto [a, b] : lg.edges) sum[a] += b, sum[b] += a;
      for (auto [a, s] : sum) CHECK(s == 0);
    }
}

TEST_CASE("equivalence") {
  const Graph g = wreath(8);
  const Labeling l = wreath_nondegenerate_labeling(8);
  CHECK(are_equivalent(g, l, g, l));
  CHECK_FALSE(are_equivalent(g, wreath_degenerate_labeling(8), g, l));
  CHECK(are_equivalent(g, l, g, reverse(l)));
  CHECK_FALSE(are_equivalent(g, wreath_non_sr_labeling(8), g, reverse(wreath_non_sr_labeling(8))));
  CHECK_THROWS_AS(are_equivalent(wreath(3), wreath_natural_labeling(3), g, l), std::invalid_argument);
}

TEST_CASE("bipartition") {
  const auto [a, b] = bipartition(wreath_natural_labeling(3));
  CHECK(a == std::vector<Vertex>{0, 1, 2});
  CHECK(b == std::vector<Vertex>{3, 4, 5});
  const auto [a5, b5] = bipartition(Labeling(label_set(5).values()));
  CHECK(a5.size() == 3);
  CHECK(b5.size() == 2);
}

TEST_CASE("links") {
  const Graph g = complete_graph(4);
  const Labeling l({3, -1, 1, -3});
  CHECK(is_link(g, l, {0, 1}));
  CHECK_FALSE(is_link(g, l, {0, 2}));
  CHECK_FALSE(is_link(g, l, {1, 3}));
  const Graph p = path_graph(3);
  const Labeling zero({0, -2, 2});
  // 0 sits on the nonnegative side, so an edge from 0 to a negative label crosses.
  CHECK(is_link(p, zero, {0, 1}));
  CHECK(is_link(p, zero, {1, 2}));
  CHECK_THROWS_AS(is_link(p, zero, {0, 2}), std::invalid_argument);
  const Labeling l7({0, 2, -2});
  CHECK_FALSE(is_link(p, l7, {0, 1}));
}

TEST_CASE("balance") {
  for (int m = 3; m <= 10; ++m) CHECK(is_balanced(wreath(m), wreath_natural_labeling(m)));
  // Positives on one side of K_{4,4}, negatives on the other.
  const Labeling sides({1, 3, 5, 7, -1, -3, -5, -7});
  CHECK_FALSE(is_balanced(complete_bipartite(4, 4), sides));
  CHECK_THROWS_AS(is_balanced(path_graph(3), Labeling({0, -2, 2})), std::invalid_argument);
}

TEST_CASE("balanced labelings have even order") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = circulant(9, {1, -1, 2, -2});
    if (is_balanced(g, random_labeling(9, rng))) FAIL("odd order graph reported balanced");
  }
}

TEST_CASE("alternating cyclets") {
  const Graph g = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  auto by_labels = [&](std::vector<Label> labels) {
    std::vector<Vertex> seq;
    for (Label a : labels) seq.push_back(l.vertex_of(a));
    return make_cyclet(g, seq);
  };
  CHECK(is_alternating(g, l, by_labels({3, 7, -7, -3})));
  // Every edge of this one is a link.
  CHECK_FALSE(is_alternating(g, l, by_labels({7, -1, 1, -7})));
  CHECK_THROWS_AS(make_cyclet(g, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(is_alternating(complete_graph(4), Labeling({3, -1, 1, -3}), make_cyclet(complete_graph(4), {0, 1, 2})),
                  std::invalid_argument);
}
