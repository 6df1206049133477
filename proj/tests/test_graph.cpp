#include <doctest.h>

#include <random>

#include "stargraph/factors.hpp"
#include "stargraph/graph.hpp"

using namespace stargraph;

namespace {

EdgeSubgraph as_subgraph(const Graph& g) {
  return EdgeSubgraph(g.vertex_count(), g.edges());
}

Graph random_connected(std::mt19937& rng, Vertex n, double extra_edge_prob) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.push_back(make_edge(v, pick(rng)));
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng) < extra_edge_prob) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

int eccentricity(const Graph& g, Vertex s) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  int ecc = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    ecc = std::max(ecc, dist[v]);
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return ecc;
}

}  // namespace

TEST_CASE("connected components") {
  Graph empty3(3, {});
  auto comps = connected_components(empty3);
  CHECK(comps.size() == 3);

  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(connected_components(path).size() == 1);

  // C_5 with one edge removed stays connected
  Graph c5cut(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto one = connected_components(c5cut);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 5);
}

TEST_CASE("bfs spanning tree") {
  Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  RootedTree t = bfs_spanning_tree(as_subgraph(tri), 0);
  CHECK(t.edge_list() == std::vector<Edge>{{0, 1}, {0, 2}});

  // acyclic input keeps its edge set under re-rooting
  Graph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  for (Vertex r = 0; r < 4; ++r)
    CHECK(bfs_spanning_tree(as_subgraph(tree), r).edge_list() == tree.edges());

  Graph c5 = cycle_graph(5);
  RootedTree tc = bfs_spanning_tree(as_subgraph(c5), 0);
  CHECK(tc.edge_list().size() == 4);
  CHECK(tree_depth(tc) == 2);

  // unreachable vertex is an error
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(bfs_spanning_tree(as_subgraph(split), 0), VerificationError);
}

TEST_CASE("tree center") {
  Graph p3 = path_graph(3);
  CHECK(tree_center(bfs_spanning_tree(as_subgraph(p3), 0)) == 1);

  // star on 5 vertices centered at the hub
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(tree_center(bfs_spanning_tree(as_subgraph(star), 2)) == 0);

  // even path: centers {1,2}, smallest id wins
  Graph p4 = path_graph(4);
  CHECK(tree_center(bfs_spanning_tree(as_subgraph(p4), 0)) == 1);
}

TEST_CASE("tree depth") {
  Graph single(1, {});
  RootedTree t1(1, 0, {RootedTree::kRoot});
  CHECK(tree_depth(t1) == 0);

  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(tree_depth(bfs_spanning_tree(as_subgraph(star), 0)) == 1);

  Graph p5 = path_graph(5);
  CHECK(tree_depth(bfs_spanning_tree(as_subgraph(p5), 0)) == 4);
}

TEST_CASE("verify spanning tree") {
  Graph c5 = cycle_graph(5);
  RootedTree t = bfs_spanning_tree(as_subgraph(c5), 0);
  CHECK(verify_spanning_tree(c5, t));

  // missing vertex 4
  RootedTree partial(5, 0,
                     {RootedTree::kRoot, 0, 1, 2, RootedTree::kAbsent});
  CHECK_FALSE(verify_spanning_tree(c5, partial));

  // edge outside the host graph
  Graph k4_cut(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // K4 minus {2,3}
  RootedTree bad(4, 2, {1, 3, RootedTree::kRoot, 2});
  CHECK_FALSE(verify_spanning_tree(k4_cut, bad));
}

TEST_CASE("verify edge disjoint") {
  RootedTree a(3, 0, {RootedTree::kRoot, 0, 1});
  RootedTree b(3, 2, {1, 2, RootedTree::kRoot});
  CHECK_FALSE(verify_edge_disjoint({a, b}));  // both use {0,1} and {1,2}
  CHECK(verify_edge_disjoint({a}));

  // the two EDSTs of K_4: paths 0-1-2-3 and 1-3-0-2
  RootedTree p1(4, 0, {RootedTree::kRoot, 0, 1, 2});
  RootedTree p2(4, 1, {3, RootedTree::kRoot, 0, 1});
  CHECK(verify_edge_disjoint({p1, p2}));
}

TEST_CASE("graph invariants on random connected graphs") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 40; ++iter) {
    Vertex n = 2 + rng() % 14;
    Graph g = random_connected(rng, n, 0.3);
    auto comps = connected_components(g);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == g.vertex_count());
    REQUIRE(comps.size() == 1);
    Vertex root = rng() % n;
    RootedTree t = bfs_spanning_tree(EdgeSubgraph(n, g.edges()), root);
    CHECK(verify_spanning_tree(g, t));
    CHECK(tree_depth(t) == eccentricity(g, root));
  }
}
