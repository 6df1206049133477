#ifndef STARGRAPH_GRAPH_HPP
#define STARGRAPH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stargraph/errors.hpp"

namespace stargraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // stored canonically as (min, max)

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; edges are deduplicated, self-loops rejected.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex vertex_count, std::vector<Edge> edge_list);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;

  // Degree if every vertex has the same one.
  std::optional<std::size_t> regular_degree() const;

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;              // sorted canonical list
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
};

// Edge-induced subgraph of a host graph (used for non-tree edges).
struct EdgeSubgraph {
  Vertex host_vertex_count = 0;
  std::vector<Edge> edges;  // sorted canonical

  EdgeSubgraph() = default;
  EdgeSubgraph(Vertex host_n, std::vector<Edge> edge_list);

  // Vertices incident to at least one edge, sorted.
  std::vector<Vertex> touched_vertices() const;
  // Connected components restricted to touched vertices.
  std::vector<std::vector<Vertex>> components() const;
};

// Tree with parent links directed toward the root. May cover a subset of
// the host's vertices; the EDST constructions always produce spanning ones.
class RootedTree {
 public:
  RootedTree() = default;
  RootedTree(Vertex host_n, Vertex root, std::vector<std::int64_t> parent);

  Vertex host_vertex_count() const { return host_n_; }
  Vertex root() const { return root_; }
  bool contains(Vertex v) const { return parent_[v] != kAbsent; }
  std::optional<Vertex> parent(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  std::size_t member_count() const { return members_.size(); }
  // Tree edges {v, parent(v)}, canonical and sorted.
  std::vector<Edge> edge_list() const;
  // Distance from the root, per member.
  int depth_of(Vertex v) const;

  static constexpr std::int64_t kRoot = -1;
  static constexpr std::int64_t kAbsent = -2;

 private:
  Vertex host_n_ = 0;
  Vertex root_ = 0;
  std::vector<std::int64_t> parent_;  // kRoot at root, kAbsent outside
  std::vector<Vertex> members_;
  std::vector<int> depth_;  // -1 outside
};

// Partition of 0..n-1 into connected components, each sorted, ordered by
// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// BFS spanning tree of an edge subgraph; parents are strictly closer to the
// root. Throws VerificationError("NotSpanning...") if some host vertex is
// unreachable.
RootedTree bfs_spanning_tree(const EdgeSubgraph& g, Vertex root);

// BFS tree over the vertices reachable from root (no spanning requirement).
RootedTree bfs_tree(const EdgeSubgraph& g, Vertex root);

// A vertex of minimum eccentricity within the tree; ties broken by smallest
// vertex id.
Vertex tree_center(const RootedTree& t);

// Maximum root-to-vertex distance; 0 for a single vertex.
int tree_depth(const RootedTree& t);

// True iff t's edges are a subset of g's, t covers every vertex of g, and t
// is a tree (|V|-1 edges, acyclic by parent structure).
bool verify_spanning_tree(const Graph& g, const RootedTree& t);

// True iff no unordered edge occurs in two trees.
bool verify_edge_disjoint(const std::vector<RootedTree>& trees);

// Eccentricity-based diameter; -1 if disconnected.
int diameter(const Graph& g);

}  // namespace stargraph

#endif
