#include "stargraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace stargraph {

Graph::Graph(Vertex vertex_count, std::vector<Edge> edge_list) : n_(vertex_count) {
  for (auto& e : edge_list) {
    if (e.first == e.second) throw UsageError("Graph: self-loop rejected");
    if (e.first >= n_ || e.second >= n_) throw UsageError("Graph: endpoint out of range");
    e = make_edge(e.first, e.second);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges_ = std::move(edge_list);
  adj_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  std::size_t d = adj_[0].size();
  for (Vertex v = 1; v < n_; ++v)
    if (adj_[v].size() != d) return std::nullopt;
  return d;
}

EdgeSubgraph::EdgeSubgraph(Vertex host_n, std::vector<Edge> edge_list)
    : host_vertex_count(host_n) {
  for (auto& e : edge_list) {
    if (e.first >= host_n || e.second >= host_n)
      throw UsageError("EdgeSubgraph: endpoint out of range");
    e = make_edge(e.first, e.second);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges = std::move(edge_list);
}

std::vector<Vertex> EdgeSubgraph::touched_vertices() const {
  std::set<Vertex> vs;
  for (const auto& [a, b] : edges) {
    vs.insert(a);
    vs.insert(b);
  }
  return {vs.begin(), vs.end()};
}

std::vector<std::vector<Vertex>> EdgeSubgraph::components() const {
  std::vector<std::vector<Vertex>> adj(host_vertex_count);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(host_vertex_count, 0);
  for (Vertex s : touched_vertices()) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      comp.push_back(v);
      for (Vertex w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

RootedTree::RootedTree(Vertex host_n, Vertex root, std::vector<std::int64_t> parent)
    : host_n_(host_n), root_(root), parent_(std::move(parent)) {
  if (parent_.size() != host_n_) throw UsageError("RootedTree: parent size mismatch");
  if (root_ >= host_n_ || parent_[root_] != kRoot)
    throw UsageError("RootedTree: root must have no parent");
  depth_.assign(host_n_, -1);
  depth_[root_] = 0;
  for (Vertex v = 0; v < host_n_; ++v) {
    if (parent_[v] == kAbsent) continue;
    members_.push_back(v);
    if (depth_[v] >= 0) continue;
    // walk up until a vertex of known depth, then unwind
    std::vector<Vertex> chain;
    Vertex w = v;
    while (depth_[w] < 0) {
      chain.push_back(w);
      std::int64_t p = parent_[w];
      if (p == kRoot) break;
      if (p == kAbsent || static_cast<std::size_t>(w) >= parent_.size() ||
          chain.size() > host_n_)
        throw UsageError("RootedTree: broken parent chain");
      w = static_cast<Vertex>(p);
    }
    int base = depth_[w];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++base;
  }
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
  if (v >= host_n_ || parent_[v] < 0) return std::nullopt;
  return static_cast<Vertex>(parent_[v]);
}

std::vector<Edge> RootedTree::edge_list() const {
  std::vector<Edge> out;
  out.reserve(members_.size());
  for (Vertex v : members_)
    if (parent_[v] >= 0) out.push_back(make_edge(v, static_cast<Vertex>(parent_[v])));
  std::sort(out.begin(), out.end());
  return out;
}

int RootedTree::depth_of(Vertex v) const {
  if (v >= host_n_) return -1;
  return depth_[v];
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return connected_components(g).size() == 1;
}

namespace {

RootedTree bfs_over_adjacency(Vertex host_n, Vertex root,
                              const std::vector<std::vector<Vertex>>& adj) {
  std::vector<std::int64_t> parent(host_n, RootedTree::kAbsent);
  parent[root] = RootedTree::kRoot;
  std::queue<Vertex> q;
  q.push(root);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v]) {
      if (parent[w] != RootedTree::kAbsent) continue;
      parent[w] = v;
      q.push(w);
    }
  }
  return RootedTree(host_n, root, std::move(parent));
}

std::vector<std::vector<Vertex>> subgraph_adjacency(const EdgeSubgraph& g) {
  std::vector<std::vector<Vertex>> adj(g.host_vertex_count);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

}  // namespace

RootedTree bfs_spanning_tree(const EdgeSubgraph& g, Vertex root) {
  if (root >= g.host_vertex_count) throw UsageError("bfs_spanning_tree: bad root");
  RootedTree t = bfs_over_adjacency(g.host_vertex_count, root, subgraph_adjacency(g));
  if (t.member_count() != g.host_vertex_count)
    throw VerificationError("NotSpanning: BFS from root does not reach every vertex");
  return t;
}

RootedTree bfs_tree(const EdgeSubgraph& g, Vertex root) {
  if (root >= g.host_vertex_count) throw UsageError("bfs_tree: bad root");
  return bfs_over_adjacency(g.host_vertex_count, root, subgraph_adjacency(g));
}

Vertex tree_center(const RootedTree& t) {
  if (t.member_count() == 0) throw UsageError("tree_center: empty tree");
  EdgeSubgraph sub(t.host_vertex_count(), t.edge_list());
  auto adj = subgraph_adjacency(sub);
  Vertex best = t.members().front();
  int best_ecc = -1;
  for (Vertex v : t.members()) {
    // BFS eccentricity within the tree
    std::vector<int> dist(t.host_vertex_count(), -1);
    std::queue<Vertex> q;
    q.push(v);
    dist[v] = 0;
    int ecc = 0;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      ecc = std::max(ecc, dist[u]);
      for (Vertex w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    if (best_ecc < 0 || ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

int tree_depth(const RootedTree& t) {
  int d = 0;
  for (Vertex v : t.members()) d = std::max(d, t.depth_of(v));
  return d;
}

bool verify_spanning_tree(const Graph& g, const RootedTree& t) {
  if (t.host_vertex_count() != g.vertex_count()) return false;
  if (t.member_count() != g.vertex_count()) return false;
  if (g.vertex_count() == 0) return false;
  auto edges = t.edge_list();
  if (edges.size() + 1 != g.vertex_count()) return false;
  for (const auto& [a, b] : edges)
    if (!g.has_edge(a, b)) return false;
  // parent structure rooted and acyclic is enforced by RootedTree itself;
  // member count + edge count settle the rest.
  return true;
}

bool verify_edge_disjoint(const std::vector<RootedTree>& trees) {
  std::set<Edge> seen;
  for (const auto& t : trees)
    for (const auto& e : t.edge_list())
      if (!seen.insert(e).second) return false;
  return true;
}

int diameter(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int diam = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    q.push(s);
    dist[s] = 0;
    std::size_t reached = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      diam = std::max(diam, dist[v]);
      for (Vertex w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
          ++reached;
        }
    }
    if (reached != g.vertex_count()) return -1;
  }
  return diam;
}

}  // namespace stargraph
