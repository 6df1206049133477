#include "stargraph/edst.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <set>

#include "stargraph/bounds.hpp"

namespace stargraph {

int FactorEdstData::max_nontree_component_edges() const {
  int best = 0;
  for (const auto& comp : nontree.components()) {
    std::set<Vertex> in(comp.begin(), comp.end());
    int count = 0;
    for (const auto& [a, b] : nontree.edges)
      if (in.count(a)) ++count;
    best = std::max(best, count);
  }
  return best;
}

namespace {

// Edge-disjoint forest packing via Edmonds-style matroid-union augmentation:
// to place a new edge, BFS over exchange chains (edge e can enter forest i by
// evicting any edge on the i-cycle it closes) until some forest absorbs an
// edge without eviction.
class ForestPacker {
 public:
  ForestPacker(const Graph& g, int k)
      : g_(g), k_(k), color_(g.edge_count(), -1), fadj_(k) {
    for (auto& a : fadj_) a.assign(g.vertex_count(), {});
  }

  bool try_insert(int e0) {
    std::vector<int> parent(g_.edge_count(), -1);
    std::vector<char> seen(g_.edge_count(), 0);
    std::queue<int> q;
    q.push(e0);
    seen[e0] = 1;
    while (!q.empty()) {
      int e = q.front();
      q.pop();
      auto [u, v] = g_.edges()[e];
      for (int i = 0; i < k_; ++i) {
        if (i == color_[e]) continue;
        std::vector<int> path = forest_path(i, u, v);
        if (path.empty()) {
          // forest i takes e freely; cascade swaps back to e0
          int cur = e;
          int into = i;
          while (true) {
            int prior = color_[cur];
            move_edge(cur, into);
            if (cur == e0) break;
            into = prior;
            cur = parent[cur];
          }
          return true;
        }
        for (int f : path)
          if (!seen[f]) {
            seen[f] = 1;
            parent[f] = e;
            q.push(f);
          }
      }
    }
    return false;
  }

  std::vector<std::vector<Edge>> forests() const {
    std::vector<std::vector<Edge>> out(k_);
    for (std::size_t e = 0; e < g_.edge_count(); ++e)
      if (color_[e] >= 0) out[color_[e]].push_back(g_.edges()[e]);
    return out;
  }

  std::size_t placed() const {
    std::size_t n = 0;
    for (int c : color_)
      if (c >= 0) ++n;
    return n;
  }

 private:
  // Edge indices on the path u..v inside forest i; empty if disconnected there.
  std::vector<int> forest_path(int i, Vertex u, Vertex v) const {
    std::vector<int> via_edge(g_.vertex_count(), -1);
    std::vector<Vertex> via_vertex(g_.vertex_count(), 0);
    std::vector<char> seen(g_.vertex_count(), 0);
    std::queue<Vertex> q;
    q.push(u);
    seen[u] = 1;
    while (!q.empty() && !seen[v]) {
      Vertex x = q.front();
      q.pop();
      for (auto [y, e] : fadj_[i][x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        via_edge[y] = e;
        via_vertex[y] = x;
        q.push(y);
      }
    }
    if (!seen[v]) return {};
    std::vector<int> path;
    for (Vertex x = v; x != u; x = via_vertex[x]) path.push_back(via_edge[x]);
    return path;
  }

  void move_edge(int e, int into) {
    auto [u, v] = g_.edges()[e];
    if (color_[e] >= 0) {
      auto& au = fadj_[color_[e]][u];
      auto& av = fadj_[color_[e]][v];
      au.erase(std::find_if(au.begin(), au.end(), [&](auto p) { return p.second == e; }));
      av.erase(std::find_if(av.begin(), av.end(), [&](auto p) { return p.second == e; }));
    }
    color_[e] = into;
    fadj_[into][u].push_back({v, e});
    fadj_[into][v].push_back({u, e});
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<std::vector<std::vector<std::pair<Vertex, int>>>> fadj_;  // per forest
};

// Attempt a packing into exactly k spanning trees.
std::optional<std::vector<std::vector<Edge>>> pack_k(const Graph& g, int k) {
  ForestPacker packer(g, k);
  for (std::size_t e = 0; e < g.edge_count(); ++e) packer.try_insert(static_cast<int>(e));
  if (packer.placed() != static_cast<std::size_t>(k) * (g.vertex_count() - 1))
    return std::nullopt;
  return packer.forests();
}

RootedTree tree_from_edges(Vertex n, const std::vector<Edge>& edges, Vertex root) {
  return bfs_spanning_tree(EdgeSubgraph(n, edges), root);
}

FactorEdstData assemble(const Graph& g, std::vector<std::vector<Edge>> forests) {
  // canonical order: sort trees by their sorted edge lists
  for (auto& f : forests) std::sort(f.begin(), f.end());
  std::sort(forests.begin(), forests.end());

  FactorEdstData d;
  d.graph = g;
  d.t = static_cast<int>(forests.size());
  std::set<Edge> used;
  for (const auto& f : forests) used.insert(f.begin(), f.end());
  std::vector<Edge> rest;
  for (const auto& e : g.edges())
    if (!used.count(e)) rest.push_back(e);
  d.nontree = EdgeSubgraph(g.vertex_count(), rest);
  d.r = static_cast<int>(d.nontree.edges.size());
  for (const auto& f : forests) {
    RootedTree t0 = tree_from_edges(g.vertex_count(), f, 0);
    Vertex center = tree_center(t0);
    d.trees.push_back(tree_from_edges(g.vertex_count(), f, center));
  }
  d.anchor = d.trees.empty() ? 0 : d.trees[0].root();
  return d;
}

}  // namespace

FactorEdstData max_edst_pack(const Graph& g) {
  if (g.vertex_count() < 2) throw UsageError("max_edst_pack: |V| >= 2 required");
  if (!is_connected(g)) throw UsageError("Disconnected: max_edst_pack needs a connected graph");
  int cap = static_cast<int>(tau_bound(g));
  for (int k = cap; k >= 1; --k) {
    auto forests = pack_k(g, k);
    if (!forests) continue;
    FactorEdstData d = assemble(g, std::move(*forests));
    for (const auto& t : d.trees)
      if (!verify_spanning_tree(g, t))
        throw VerificationError("max_edst_pack: produced forest is not a spanning tree");
    if (!verify_edge_disjoint(d.trees))
      throw VerificationError("max_edst_pack: trees share an edge");
    return d;
  }
  throw Error("max_edst_pack: no spanning tree found in a connected graph");
}

namespace {

// Minimum over vertex partitions of floor(cross / (parts-1)).
int nash_williams_scan(const Graph& g) {
  Vertex n = g.vertex_count();
  std::vector<int> block(n, 0);
  int best = std::numeric_limits<int>::max();
  // restricted-growth-string enumeration of set partitions
  std::vector<int> rgs(n, 0);
  while (true) {
    int parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (parts >= 2) {
      int cross = 0;
      for (const auto& [a, b] : g.edges())
        if (rgs[a] != rgs[b]) ++cross;
      best = std::min(best, cross / (parts - 1));
    }
    // next RGS
    int i = static_cast<int>(n) - 1;
    for (; i >= 1; --i) {
      int maxprefix = 0;
      for (int j = 0; j < i; ++j) maxprefix = std::max(maxprefix, rgs[j]);
      if (rgs[i] <= maxprefix) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace

int nash_williams_max(const Graph& g) {
  if (g.vertex_count() > 12)
    throw UsageError("TooLarge: Nash-Williams enumeration is limited to |V| <= 12");
  if (g.vertex_count() < 2) return 0;
  return nash_williams_scan(g);
}

bool nash_williams_certificate(const Graph& g, int k) {
  return k <= nash_williams_max(g);
}

namespace {

// Feasibility of a U-set of size t: from each non-tree component all but one
// vertex is usable.
int u_capacity(const EdgeSubgraph& nontree) {
  int cap = 0;
  for (const auto& comp : nontree.components()) cap += static_cast<int>(comp.size()) - 1;
  return cap;
}

std::vector<Vertex> pick_u(const EdgeSubgraph& nontree, int t) {
  std::vector<Vertex> u;
  for (const auto& comp : nontree.components()) {
    // leave out the largest id; any proper subset keeps an escape path
    for (std::size_t i = 0; i + 1 < comp.size() && static_cast<int>(u.size()) < t; ++i)
      u.push_back(comp[i]);
    if (static_cast<int>(u.size()) >= t) break;
  }
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

namespace {

// One tree-edge/non-tree-edge exchange that strictly raises the U-set
// capacity, or nullopt when none exists.
std::optional<FactorEdstData> improve_capacity(const FactorEdstData& d) {
  int cap = u_capacity(d.nontree);
  for (std::size_t ti = 0; ti < d.trees.size(); ++ti) {
    auto tree_edges = d.trees[ti].edge_list();
    for (const auto& te : tree_edges) {
      std::vector<Edge> without;
      for (const auto& e : tree_edges)
        if (e != te) without.push_back(e);
      // vertices reachable from one side of the cut opened by removing te
      RootedTree half = bfs_tree(EdgeSubgraph(d.graph.vertex_count(), without), te.first);
      for (const auto& ne : d.nontree.edges) {
        bool a_in = half.contains(ne.first), b_in = half.contains(ne.second);
        if (a_in == b_in) continue;  // swap must keep the tree spanning
        std::vector<Edge> new_rest;
        for (const auto& e : d.nontree.edges)
          if (e != ne) new_rest.push_back(e);
        new_rest.push_back(te);
        EdgeSubgraph new_nontree(d.graph.vertex_count(), new_rest);
        if (u_capacity(new_nontree) <= cap) continue;
        std::vector<std::vector<Edge>> forests;
        for (std::size_t j = 0; j < d.trees.size(); ++j) {
          forests.push_back(d.trees[j].edge_list());
          if (j == ti) {
            forests.back() = without;
            forests.back().push_back(ne);
          }
        }
        FactorEdstData next;
        next.graph = d.graph;
        next.t = d.t;
        next.nontree = new_nontree;
        next.r = static_cast<int>(new_nontree.edges.size());
        for (auto& f : forests) std::sort(f.begin(), f.end());
        std::sort(forests.begin(), forests.end());
        for (const auto& f : forests) {
          RootedTree t0 = bfs_spanning_tree(EdgeSubgraph(d.graph.vertex_count(), f), 0);
          next.trees.push_back(
              bfs_spanning_tree(EdgeSubgraph(d.graph.vertex_count(), f), tree_center(t0)));
        }
        if (!verify_edge_disjoint(next.trees))
          throw VerificationError("select_u_set: repair broke disjointness");
        return next;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FactorEdstData select_u_set(FactorEdstData d) {
  if (d.r < d.t)
    throw InfeasibleError("Infeasible: U-set needs at least t non-tree edges");
  while (u_capacity(d.nontree) < d.t) {
    auto next = improve_capacity(d);
    if (!next)
      throw InfeasibleError("Infeasible: no U-set of size t after exchange repair");
    d = std::move(*next);
  }
  auto u = pick_u(d.nontree, d.t);
  if (static_cast<int>(u.size()) != d.t)
    throw InfeasibleError("Infeasible: could not collect t U-set vertices");
  // verify the escape condition directly
  std::set<Vertex> uset(u.begin(), u.end());
  for (Vertex v : u) {
    RootedTree reach = bfs_tree(d.nontree, v);
    bool escapes = false;
    for (Vertex w : reach.members())
      if (!uset.count(w)) {
        escapes = true;
        break;
      }
    if (!escapes)
      throw VerificationError("select_u_set: chosen vertex cannot escape the U-set");
  }
  Vertex anchor = u.front();
  d.u_set = std::move(u);
  return root_first_tree(std::move(d), anchor);
}

FactorEdstData root_first_tree(FactorEdstData d, Vertex anchor) {
  if (d.trees.empty()) throw UsageError("root_first_tree: no trees");
  if (anchor >= d.graph.vertex_count()) throw UsageError("root_first_tree: bad anchor");
  auto edges = d.trees[0].edge_list();
  d.trees[0] = bfs_spanning_tree(EdgeSubgraph(d.graph.vertex_count(), edges), anchor);
  d.anchor = anchor;
  return d;
}

}  // namespace stargraph
