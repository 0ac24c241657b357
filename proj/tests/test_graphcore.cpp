#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "magiclab/canonical.hpp"
#include "magiclab/families.hpp"
#include "magiclab/graph.hpp"

using namespace magiclab;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

// Brute force over all n! bijections.
std::size_t count_isomorphisms_brute(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return 0;
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("graph construction validates and normalises edges") {
  const Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.order() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(triangle.degree(v) == 2);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{-1, 1}}), std::invalid_argument);

  const Graph dup(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
  CHECK(dup.edge_count() == 2);
  CHECK(dup.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  auto nbrs = dup.neighbors(1);
  CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
  CHECK(dup.adjacent(2, 1));
  CHECK_FALSE(dup.adjacent(0, 2));
}

TEST_CASE("adjacency is symmetric and irreflexive on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(10, 0.4, rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK_FALSE(g.adjacent(v, v));
      for (Vertex u : g.neighbors(v)) CHECK(g.adjacent(u, v));
    }
  }
}

TEST_CASE("wreath W(4) is K_{4,4}") {
  CHECK(are_isomorphic(wreath(4), complete_bipartite(4, 4)));
  CHECK(canonical_code(wreath(4)) == canonical_code(complete_bipartite(4, 4)));
}

TEST_CASE("regularity") {
  CHECK(is_regular(wreath(5), 4));
  CHECK(is_regular(cycle_graph(3), 2));
  CHECK_FALSE(is_regular(path_graph(3), 2));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(wreath(4)));
  CHECK_FALSE(is_connected(disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_FALSE(is_connected(direct_cycles(4, 4)));
  CHECK(connected_components(direct_cycles(4, 4)).size() == 2);
  CHECK(is_connected(Graph(0, std::vector<Edge>{})));
}

TEST_CASE("canonical code separates C6 from two triangles") {
  const Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(two_triangles));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
}

TEST_CASE("canonical code is invariant under random relabeling") {
  std::mt19937 rng(2024);
  std::vector<Graph> graphs = {wreath(7), circulant(24, {1, -1, 5, -5}), cartesian_cycles(3, 6),
                               direct_cycles(4, 6), complete_bipartite(4, 4)};
  for (int k = 0; k < 20; ++k) graphs.push_back(random_graph(12 + k % 9, 0.3, rng));
  for (const Graph& g : graphs) {
    const auto code = canonical_code(g);
    for (int trial = 0; trial < 5; ++trial) {
      const Graph h = permuted(g, random_permutation(g.order(), rng));
      CHECK(canonical_code(h) == code);
      CHECK(are_isomorphic(g, h));
      const Permutation phi = find_isomorphism(g, h);
      REQUIRE(phi.size() == g.order());
      CHECK(permuted(g, phi).edges() == h.edges());
    }
    const Permutation c = canonical_labeling(g);
    CHECK(canonical_code(permuted(g, c)) == code);
  }
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 5;
    const Graph g = random_graph(n, 0.5, rng);
    // Half the time a relabeled copy, otherwise an independent graph with the same edge count.
    Graph h = trial % 2 == 0 ? permuted(g, random_permutation(n, rng)) : random_graph(n, 0.5, rng);
    const bool brute = count_isomorphisms_brute(g, h) > 0;
    CHECK(are_isomorphic(g, h) == brute);
    CHECK((canonical_code(g) == canonical_code(h)) == brute);
    CHECK((find_isomorphism(g, h).size() == n) == brute);
  }
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphism_group(cycle_graph(5)).size() == 10);
  CHECK(automorphism_group(path_graph(2)).size() == 2);
  // 8! permutations filtered by adjacency preservation.
  const std::size_t brute = count_isomorphisms_brute(complete_bipartite(4, 4), complete_bipartite(4, 4));
  CHECK(brute == 1152);
  CHECK(automorphism_group(complete_bipartite(4, 4)).size() == brute);
  CHECK(automorphism_group(wreath(8)).size() == 4096);
}

TEST_CASE("automorphism group matches brute force on random small graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(5 + trial % 4, 0.5, rng);
    CHECK(automorphism_group(g).size() == count_isomorphisms_brute(g, g));
  }
}

TEST_CASE("automorphism group is closed and starts with the identity") {
  for (const Graph& g : {wreath(4), cartesian_cycles(3, 4), circulant(10, {1, -1, 3, -3})}) {
    const auto group = automorphism_group(g);
    REQUIRE_FALSE(group.empty());
    CHECK(group.front().is_identity());
    std::set<Permutation> members(group.begin(), group.end());
    CHECK(members.size() == group.size());
    std::uint64_t factorial = 1;
    for (int k = 2; k <= g.order(); ++k) factorial *= k;
    CHECK(factorial % group.size() == 0);
    for (const auto& p : group) {
      CHECK(is_automorphism(g, p));
      CHECK(members.contains(p.inverse()));
      for (std::size_t k = 0; k < group.size(); k += 7) CHECK(members.contains(p * group[k]));
    }
  }
}

TEST_CASE("order limits are enforced") {
  CHECK_THROWS_AS(automorphism_group(cycle_graph(kMaxAutomorphismOrder + 1)), std::length_error);
  CHECK_THROWS_AS(canonical_code(cycle_graph(kMaxCanonicalOrder + 1)), std::length_error);
  CHECK_NOTHROW(canonical_code(cycle_graph(40)));
  CHECK(automorphism_group(cycle_graph(30)).size() == 60);
}

TEST_CASE("vertex transitivity") {
  CHECK(is_vertex_transitive(wreath(6)));
  CHECK_FALSE(is_vertex_transitive(path_graph(3)));
  CHECK(is_vertex_transitive(cartesian_cycles(3, 6)));
}

TEST_CASE("edge transitivity") {
  CHECK(is_edge_transitive(circulant(24, {1, -1, 5, -5})));
  CHECK_FALSE(is_edge_transitive(cartesian_cycles(3, 6)));
  CHECK(is_edge_transitive(complete_graph(4)));
}

TEST_CASE("vertex transitive graphs are regular") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(8, 0.5, rng);
    if (is_vertex_transitive(g)) CHECK(is_regular(g, g.degree(0)));
  }
  for (const Graph& g : {wreath(5), circulant(13, {1, -1, 5, -5}), cartesian_cycles(4, 5)})
    CHECK((is_vertex_transitive(g) && is_regular(g, g.degree(0))));
}

TEST_CASE("permutations validate and compose") {
  CHECK_THROWS_AS(Permutation(std::vector<Vertex>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Vertex>{0, 2}), std::invalid_argument);
  const Permutation p(std::vector<Vertex>{1, 2, 0});
  CHECK((p * p.inverse()).is_identity());
  CHECK((p * p)(0) == 2);
}
