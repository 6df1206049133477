#include "stargraph/product_edst.hpp"

#include <algorithm>
#include <set>

namespace stargraph {

Mode parse_mode(const std::string& s) {
  if (s == "universal") return Mode::Universal;
  if (s == "lowdepth") return Mode::LowDepth;
  if (s == "maximum") return Mode::Maximum;
  if (s == "property1") return Mode::Property1;
  if (s == "auto") return Mode::Auto;
  throw UsageError("unknown mode '" + s + "'");
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Universal: return "universal";
    case Mode::LowDepth: return "lowdepth";
    case Mode::Maximum: return "maximum";
    case Mode::Property1: return "property1";
    case Mode::Auto: return "auto";
  }
  return "?";
}

const char* tree_kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::UniversalT: return "T";
    case TreeKind::UniversalTPrime: return "T'";
    case TreeKind::LowDepthTPrime: return "T'-lowdepth";
    case TreeKind::ExtraNonTreeN: return "extra-nontree-n";
    case TreeKind::ExtraNonTreeS: return "extra-nontree-s";
    case TreeKind::P1T: return "p1-T";
    case TreeKind::P1TPrime: return "p1-T'";
    case TreeKind::P1Final: return "p1-final";
  }
  return "?";
}

namespace {

// ---- edge assembly helpers -------------------------------------------------

using EdgeList = std::vector<Edge>;

void add_supernode_copy(const StarProduct& sp, Vertex x, const std::vector<Edge>& edges,
                        EdgeList& out) {
  for (const auto& [y, yp] : edges) out.push_back(make_edge(sp.pid(x, y), sp.pid(x, yp)));
}

// All |V_n| copies of a structure-factor tree/subgraph.
void add_all_structure_copies(const StarProduct& sp, const std::vector<Edge>& edges,
                              EdgeList& out) {
  Vertex nn = sp.supernode.vertex_count();
  for (const auto& [x, xp] : edges)
    for (Vertex y = 0; y < nn; ++y)
      out.push_back(make_edge(sp.pid(x, y), sp.pid(xp, sp.fmap(x, xp, y))));
}

// Arcs (parent, child) of a rooted factor tree.
std::vector<std::pair<Vertex, Vertex>> tree_arcs(const RootedTree& t) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex v : t.members())
    if (auto p = t.parent(v)) arcs.push_back({*p, v});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

// For arc (p, c), the product edge whose child-side endpoint is (c, v).
Edge arc_edge_at_child(const StarProduct& sp, Vertex p, Vertex c, Vertex v) {
  Vertex z = sp.fmap(c, p, v);  // parent-side endpoint
  return make_edge(sp.pid(p, z), sp.pid(c, v));
}

ProductTree finish_tree(const StarProduct& sp, EdgeList edges, Vertex root, TreeKind kind,
                        int index, std::int64_t bound) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  RootedTree t = bfs_spanning_tree(EdgeSubgraph(sp.product.vertex_count(), edges), root);
  ProductTree pt{std::move(t), kind, index, 0, bound};
  pt.measured_depth = tree_depth(pt.tree);
  return pt;
}

void verify_tree_set(const StarProduct& sp, const TreeSet& ts) {
  std::vector<RootedTree> trees;
  for (const auto& pt : ts.trees) trees.push_back(pt.tree);
  for (const auto& pt : ts.trees) {
    if (!verify_spanning_tree(sp.product, pt.tree))
      throw VerificationError("construction produced a non-spanning tree");
    if (pt.measured_depth > pt.depth_bound)
      throw VerificationError("construction exceeded its depth bound");
  }
  if (!verify_edge_disjoint(trees))
    throw VerificationError("construction produced trees sharing an edge");
}

// ---- choice of u_i / v_i ----------------------------------------------------

// Smallest ids from the pool, skipping the exclusions.
std::vector<Vertex> smallest_excluding(Vertex n, const std::set<Vertex>& excluded,
                                       int count) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n && static_cast<int>(out.size()) < count; ++v)
    if (!excluded.count(v)) out.push_back(v);
  if (static_cast<int>(out.size()) != count)
    throw InfeasibleError("Infeasible: not enough distinct vertices for the construction");
  return out;
}

struct Prepared {
  FactorEdstData sd, nd;
  bool u_s = false, u_n = false;     // U-sets selected
  std::vector<Vertex> ui, vi;        // t_s-1 and t_n-1 choices
};

Prepared prepare_universal(const FactorEdstData& sd, const FactorEdstData& nd) {
  Prepared p;
  p.sd = sd;
  p.nd = nd;
  p.ui = smallest_excluding(sd.graph.vertex_count(), {}, sd.t - 1);
  p.vi = smallest_excluding(nd.graph.vertex_count(), {}, nd.t - 1);
  return p;
}

Prepared prepare_maximum(const FactorEdstData& sd, const FactorEdstData& nd) {
  Prepared p;
  p.sd = sd;
  p.nd = nd;
  if (sd.r >= sd.t) {
    try {
      p.sd = select_u_set(sd);
      p.u_s = true;
    } catch (const InfeasibleError&) {
      p.u_s = false;
    }
  }
  if (nd.r >= nd.t) {
    try {
      p.nd = select_u_set(nd);
      p.u_n = true;
    } catch (const InfeasibleError&) {
      p.u_n = false;
    }
  }
  if (!p.u_s && !p.u_n)
    throw InfeasibleError(
        "CaseNotApplicable: maximum construction needs r >= t (and a feasible U-set) "
        "in at least one factor");
  if (p.u_s) {
    std::set<Vertex> ex{p.sd.anchor};
    std::vector<Vertex> pool = *p.sd.u_set;
    std::vector<Vertex> ui;
    for (Vertex v : pool)
      if (!ex.count(v)) ui.push_back(v);
    if (static_cast<int>(ui.size()) != p.sd.t - 1)
      throw InfeasibleError("Infeasible: U_s does not leave t_s-1 choices");
    p.ui = ui;
  } else {
    p.ui = smallest_excluding(p.sd.graph.vertex_count(), {p.sd.anchor}, p.sd.t - 1);
  }
  if (p.u_n) {
    std::set<Vertex> ex{p.nd.anchor};
    std::vector<Vertex> vi;
    for (Vertex v : *p.nd.u_set)
      if (!ex.count(v)) vi.push_back(v);
    if (static_cast<int>(vi.size()) != p.nd.t - 1)
      throw InfeasibleError("Infeasible: U_n does not leave t_n-1 choices");
    p.vi = vi;
  } else {
    p.vi = smallest_excluding(p.nd.graph.vertex_count(), {p.nd.anchor}, p.nd.t - 1);
  }
  return p;
}

// ---- tree families -----------------------------------------------------------

// T_i, i = 2..t_s: reserved supernode tree at u_i plus all copies of X_i.
void build_t_family(const StarProduct& sp, const Prepared& p, TreeSet& ts) {
  int dn1 = tree_depth(p.nd.trees[0]);
  for (int i = 2; i <= p.sd.t; ++i) {
    Vertex u = p.ui[i - 2];
    const RootedTree& xi = p.sd.trees[i - 1];
    EdgeList edges;
    add_supernode_copy(sp, u, p.nd.trees[0].edge_list(), edges);
    add_all_structure_copies(sp, xi.edge_list(), edges);
    std::int64_t bound = 2 * static_cast<std::int64_t>(tree_depth(xi)) + dn1;
    ts.trees.push_back(finish_tree(sp, std::move(edges),
                                   sp.pid(u, p.nd.trees[0].root()), TreeKind::UniversalT,
                                   i, bound));
  }
}

// T'_i, i = 2..t_n: Y_i everywhere plus one reserved-tree edge per arc,
// incident with v_i in the child supernode.
void build_tprime_family(const StarProduct& sp, const Prepared& p, TreeSet& ts) {
  int ds1 = tree_depth(p.sd.trees[0]);
  auto arcs = tree_arcs(p.sd.trees[0]);
  for (int i = 2; i <= p.nd.t; ++i) {
    Vertex v = p.vi[i - 2];
    const RootedTree& yi = p.nd.trees[i - 1];
    EdgeList edges;
    for (Vertex x = 0; x < sp.structure.vertex_count(); ++x)
      add_supernode_copy(sp, x, yi.edge_list(), edges);
    for (auto [pa, ch] : arcs) edges.push_back(arc_edge_at_child(sp, pa, ch, v));
    std::int64_t dni = tree_depth(yi);
    std::int64_t bound = 2 * ds1 * dni + dni + ds1;
    ts.trees.push_back(finish_tree(sp, std::move(edges), sp.pid(p.sd.anchor, yi.root()),
                                   TreeKind::UniversalTPrime, i, bound));
  }
}

// Low-depth T'_i: trace one copy of the reserved structure tree, carrying the
// composed bijection image down each root path.
void build_tprime_lowdepth(const StarProduct& sp, const Prepared& p, TreeSet& ts) {
  int ds1 = tree_depth(p.sd.trees[0]);
  const RootedTree& x1 = p.sd.trees[0];
  auto arcs = tree_arcs(x1);
  for (int i = 2; i <= p.nd.t; ++i) {
    Vertex v = p.vi[i - 2];
    const RootedTree& yi = p.nd.trees[i - 1];
    EdgeList edges;
    for (Vertex x = 0; x < sp.structure.vertex_count(); ++x)
      add_supernode_copy(sp, x, yi.edge_list(), edges);
    // composed image of v_i at every structure vertex, walking down the tree
    std::vector<Vertex> carry(sp.structure.vertex_count(), 0);
    std::vector<char> done(sp.structure.vertex_count(), 0);
    carry[x1.root()] = v;
    done[x1.root()] = 1;
    std::vector<std::pair<Vertex, Vertex>> pending = arcs;
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto [pa, ch] : pending) {
        if (done[ch] || !done[pa]) continue;
        carry[ch] = sp.fmap(pa, ch, carry[pa]);
        edges.push_back(make_edge(sp.pid(pa, carry[pa]), sp.pid(ch, carry[ch])));
        done[ch] = 1;
        progress = true;
      }
    }
    std::int64_t dni = tree_depth(yi);
    ts.trees.push_back(finish_tree(sp, std::move(edges), sp.pid(x1.root(), v),
                                   TreeKind::LowDepthTPrime, i, ds1 + 2 * dni));
  }
}

// Extra tree from the supernode non-tree edges: reserved supernode tree at o,
// non-tree copies everywhere else, reserved-structure-tree edges incident
// with the child-supernode vertices outside U_n.
void build_extra_nontree_n(const StarProduct& sp, const Prepared& p, TreeSet& ts) {
  const auto& un = *p.nd.u_set;
  std::set<Vertex> uset(un.begin(), un.end());
  Vertex o = p.sd.anchor;
  EdgeList edges;
  add_supernode_copy(sp, o, p.nd.trees[0].edge_list(), edges);
  for (Vertex x = 0; x < sp.structure.vertex_count(); ++x)
    if (x != o) add_supernode_copy(sp, x, p.nd.nontree.edges, edges);
  for (auto [pa, ch] : tree_arcs(p.sd.trees[0]))
    for (Vertex v = 0; v < sp.supernode.vertex_count(); ++v)
      if (!uset.count(v)) edges.push_back(arc_edge_at_child(sp, pa, ch, v));
  std::int64_t ds1 = tree_depth(p.sd.trees[0]);
  std::int64_t dn1 = tree_depth(p.nd.trees[0]);
  std::int64_t mn = p.nd.max_nontree_component_edges();
  std::int64_t bound = dn1 + ds1 * (1 + mn);
  ts.trees.push_back(finish_tree(sp, std::move(edges), sp.pid(o, p.nd.anchor),
                                 TreeKind::ExtraNonTreeN, 0, bound));
}

// Extra tree from the structure non-tree edges: reserved supernode tree in
// every supernode outside U_s, all copies of the structure non-tree edges,
// reserved-structure-tree edges incident with o' in the child supernode.
void build_extra_nontree_s(const StarProduct& sp, const Prepared& p, TreeSet& ts) {
  const auto& us = *p.sd.u_set;
  std::set<Vertex> uset(us.begin(), us.end());
  Vertex o = p.sd.anchor;
  Vertex op = p.nd.anchor;
  EdgeList edges;
  for (Vertex x = 0; x < sp.structure.vertex_count(); ++x)
    if (!uset.count(x)) add_supernode_copy(sp, x, p.nd.trees[0].edge_list(), edges);
  add_all_structure_copies(sp, p.sd.nontree.edges, edges);
  for (auto [pa, ch] : tree_arcs(p.sd.trees[0]))
    edges.push_back(arc_edge_at_child(sp, pa, ch, op));
  std::int64_t ds1 = tree_depth(p.sd.trees[0]);
  std::int64_t dn1 = tree_depth(p.nd.trees[0]);
  std::int64_t ms = p.sd.max_nontree_component_edges();
  std::int64_t bound = (ds1 + 1) * (2 * dn1 + 2 * ms) + ds1;
  ts.trees.push_back(finish_tree(sp, std::move(edges), sp.pid(o, op),
                                 TreeKind::ExtraNonTreeS, 0, bound));
}

void require_connected_factors(const StarProduct& sp) {
  if (!is_connected(sp.supernode) || !is_connected(sp.structure))
    throw InfeasibleError(
        "Infeasible: EDST constructions need connected factor graphs");
}

}  // namespace

TreeSet universal_construction(const StarProduct& sp, const FactorEdstData& sd,
                               const FactorEdstData& nd) {
  require_connected_factors(sp);
  if (sd.t == 1 && nd.t == 1)
    throw InfeasibleError("Degenerate: t_s = t_n = 1 leaves the universal construction empty");
  Prepared p = prepare_universal(sd, nd);
  TreeSet ts;
  ts.construction = "universal t_s+t_n-2";
  build_t_family(sp, p, ts);
  build_tprime_family(sp, p, ts);
  if (static_cast<int>(ts.trees.size()) != sd.t + nd.t - 2)
    throw VerificationError("universal construction produced the wrong tree count");
  verify_tree_set(sp, ts);
  return ts;
}

TreeSet low_depth_construction(const StarProduct& sp, const FactorEdstData& sd,
                               const FactorEdstData& nd) {
  require_connected_factors(sp);
  if (sd.t == 1 && nd.t == 1)
    throw InfeasibleError("Degenerate: t_s = t_n = 1 leaves the universal construction empty");
  Prepared p = prepare_universal(sd, nd);
  TreeSet ts;
  ts.construction = "low-depth t_s+t_n-2";
  build_t_family(sp, p, ts);
  build_tprime_lowdepth(sp, p, ts);
  if (static_cast<int>(ts.trees.size()) != sd.t + nd.t - 2)
    throw VerificationError("low-depth construction produced the wrong tree count");
  verify_tree_set(sp, ts);
  return ts;
}

TreeSet maximum_construction(const StarProduct& sp, const FactorEdstData& sd,
                             const FactorEdstData& nd) {
  require_connected_factors(sp);
  Prepared p = prepare_maximum(sd, nd);
  TreeSet ts;
  ts.extended = true;
  if (p.u_s && p.u_n)
    ts.construction = (sd.r == sd.t && nd.r == nd.t) ? "maximum t_s+t_n (r=t both)"
                                                : "maximum t_s+t_n (r>=t both)";
  else
    ts.construction = "extended t_s+t_n-1 (one-sided r>=t)";
  build_t_family(sp, p, ts);
  build_tprime_family(sp, p, ts);
  if (p.u_n) build_extra_nontree_n(sp, p, ts);
  if (p.u_s) build_extra_nontree_s(sp, p, ts);
  int expected = sd.t + nd.t - 2 + (p.u_n ? 1 : 0) + (p.u_s ? 1 : 0);
  if (static_cast<int>(ts.trees.size()) != expected)
    throw VerificationError("maximum construction produced the wrong tree count");
  verify_tree_set(sp, ts);
  return ts;
}

// ---------------------------------------------------------------------------
// Property 1
// ---------------------------------------------------------------------------

namespace {

struct P1Search {
  const StarProduct& sp;
  const FactorEdstData& sd;
  const FactorEdstData& nd;
  std::uint64_t budget;
  std::uint64_t checked = 0;
  std::optional<Property1Data> found;

  // Does every structure-tree bijection fix both vertex sets?
  bool f_invariant(const std::set<Vertex>& vs1, const std::set<Vertex>& vs2) const {
    for (const auto& tree : sd.trees)
      for (const auto& [x, xp] : tree.edge_list()) {
        for (Vertex y : vs1)
          if (!vs1.count(sp.fmap(x, xp, y))) return false;
        for (Vertex y : vs2)
          if (!vs2.count(sp.fmap(x, xp, y))) return false;
      }
    return true;
  }

  bool consider(int witness, const RootedTree& y, const std::set<Vertex>& top) {
    if (++checked > budget) return true;  // stop enumerating
    std::vector<Edge> s2, s1;
    for (Vertex v : y.members()) {
      auto pa = y.parent(v);
      if (!pa) continue;
      Edge e = make_edge(v, *pa);
      if (top.count(v) && top.count(*pa))
        s2.push_back(e);
      else
        s1.push_back(e);
    }
    if (s1.empty() || s2.empty()) return false;
    std::set<Vertex> vs1;
    for (const auto& [a, b] : s1) {
      vs1.insert(a);
      vs1.insert(b);
    }
    std::set<Vertex> vs2 = top;
    std::vector<Vertex> inter;
    for (Vertex v : vs1)
      if (vs2.count(v)) inter.push_back(v);
    int t_n = nd.t;
    std::int64_t need = t_n - 2 + static_cast<std::int64_t>(inter.size());
    if (static_cast<std::int64_t>(s1.size()) < need ||
        static_cast<std::int64_t>(s2.size()) < need)
      return false;
    // triple pools
    std::vector<Vertex> pool_c, pool_d;
    for (Vertex v : vs1)
      if (!vs2.count(v)) pool_c.push_back(v);
    for (Vertex v : vs2)
      if (!vs1.count(v)) pool_d.push_back(v);
    if (static_cast<int>(pool_c.size()) < t_n - 1 ||
        static_cast<int>(pool_d.size()) < t_n - 1)
      return false;
    if (!f_invariant(vs1, vs2)) return false;

    Property1Data w;
    w.witness_tree = witness;
    w.s1 = s1;
    w.s2 = s2;
    w.vs1.assign(vs1.begin(), vs1.end());
    w.vs2.assign(vs2.begin(), vs2.end());
    w.intersection = inter;
    w.o = sd.anchor;
    w.o_prime = y.root();
    // balanced split of the non-o structure vertices, then the smallest ids
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < sd.graph.vertex_count(); ++v)
      if (v != w.o) rest.push_back(v);
    std::size_t half = (rest.size() + 1) / 2;
    w.r1.assign(rest.begin(), rest.begin() + half);
    w.r2.assign(rest.begin() + half, rest.end());
    int t_s = sd.t;
    if (static_cast<int>(w.r1.size()) < t_s - 1 || static_cast<int>(w.r2.size()) < t_s - 1)
      return false;
    w.a.assign(w.r1.begin(), w.r1.begin() + (t_s - 1));
    w.b.assign(w.r2.begin(), w.r2.begin() + (t_s - 1));
    w.c.assign(pool_c.begin(), pool_c.begin() + (t_n - 1));
    w.d.assign(pool_d.begin(), pool_d.begin() + (t_n - 1));
    found = std::move(w);
    return true;
  }

  // Enumerate connected vertex sets containing the root (top subtrees).
  bool grow(int witness, const RootedTree& y, std::set<Vertex>& top,
            std::vector<Vertex> frontier, std::size_t from) {
    if (top.size() >= 2 && consider(witness, y, top)) return true;
    for (std::size_t i = from; i < frontier.size(); ++i) {
      Vertex v = frontier[i];
      if (top.count(v)) continue;
      top.insert(v);
      std::vector<Vertex> next = frontier;
      for (Vertex w : y.members())
        if (y.parent(w) && *y.parent(w) == v) next.push_back(w);
      if (grow(witness, y, top, std::move(next), i + 1)) return true;
      top.erase(v);
    }
    return false;
  }
};

}  // namespace

std::optional<Property1Data> property1_search(const StarProduct& sp,
                                              const FactorEdstData& sd,
                                              const FactorEdstData& nd,
                                              std::uint64_t budget) {
  P1Search search{sp, sd, nd, budget, 0, std::nullopt};
  for (int j = 0; j < nd.t; ++j) {
    const RootedTree& y = nd.trees[j];
    std::set<Vertex> top{y.root()};
    std::vector<Vertex> frontier;
    for (Vertex w : y.members())
      if (y.parent(w) && *y.parent(w) == y.root()) frontier.push_back(w);
    if (search.grow(j, y, top, std::move(frontier), 0) && search.found) break;
    if (search.checked > search.budget) break;
  }
  return search.found;
}

TreeSet property1_construction(const StarProduct& sp, const FactorEdstData& sd,
                               const FactorEdstData& nd, const Property1Data& w) {
  require_connected_factors(sp);
  // designate the witness tree as the reserved supernode tree
  FactorEdstData nd2 = nd;
  std::swap(nd2.trees[0], nd2.trees[w.witness_tree]);
  std::set<Vertex> vs1(w.vs1.begin(), w.vs1.end());
  std::set<Vertex> vs2(w.vs2.begin(), w.vs2.end());
  std::set<Vertex> r1(w.r1.begin(), w.r1.end());
  std::set<Vertex> r2(w.r2.begin(), w.r2.end());
  if (w.s1.empty() || w.s2.empty()) throw UsageError("InvalidWitness: empty partition");

  TreeSet ts;
  ts.extended = true;
  ts.property1 = true;
  ts.construction = "property1 t_s+t_n-1";
  int dn1 = tree_depth(nd2.trees[0]);
  int ds1 = tree_depth(sd.trees[0]);
  auto arcs = tree_arcs(sd.trees[0]);

  // T_i: S_1 at a_i, S_2 at b_i, all copies of X_i
  Vertex root_in_i = w.intersection.empty() ? w.o_prime : w.intersection.front();
  for (int i = 2; i <= sd.t; ++i) {
    const RootedTree& xi = sd.trees[i - 1];
    EdgeList edges;
    add_supernode_copy(sp, w.a[i - 2], w.s1, edges);
    add_supernode_copy(sp, w.b[i - 2], w.s2, edges);
    add_all_structure_copies(sp, xi.edge_list(), edges);
    std::int64_t dsi = tree_depth(xi);
    std::int64_t bound = 4 * std::max<std::int64_t>(dsi, ds1) + dn1;
    ts.trees.push_back(finish_tree(sp, std::move(edges), sp.pid(w.a[i - 2], root_in_i),
                                   TreeKind::P1T, i, bound));
  }
  // T'_i: Y_i everywhere; arcs into R_2 take c_i, arcs into R_1 take d_i
  for (int i = 2; i <= nd2.t; ++i) {
    const RootedTree& yi = nd2.trees[i - 1];
    EdgeList edges;
    for (Vertex x = 0; x < sp.structure.vertex_count(); ++x)
      add_supernode_copy(sp, x, yi.edge_list(), edges);
    for (auto [pa, ch] : arcs) {
      Vertex v = r2.count(ch) ? w.c[i - 2] : w.d[i - 2];
      edges.push_back(arc_edge_at_child(sp, pa, ch, v));
    }
    std::int64_t dni = tree_depth(yi);
    std::int64_t bound = 2 * static_cast<std::int64_t>(ds1) * dni + dni + ds1;
    ts.trees.push_back(finish_tree(sp, std::move(edges), sp.pid(w.o, yi.root()),
                                   TreeKind::P1TPrime, i, bound));
  }
  // final tree: Y_1 at o, S_2 in R_1, S_1 in R_2, arcs incident with V(S_1)
  // under R_1 children and V(S_2) under R_2 children
  {
    EdgeList edges;
    add_supernode_copy(sp, w.o, nd2.trees[0].edge_list(), edges);
    for (Vertex x : w.r1) add_supernode_copy(sp, x, w.s2, edges);
    for (Vertex x : w.r2) add_supernode_copy(sp, x, w.s1, edges);
    for (auto [pa, ch] : arcs) {
      const auto& side = r1.count(ch) ? vs1 : vs2;
      for (Vertex v : side) edges.push_back(arc_edge_at_child(sp, pa, ch, v));
    }
    std::int64_t bound = 3 * static_cast<std::int64_t>(dn1) + ds1;
    ts.trees.push_back(
        finish_tree(sp, std::move(edges), sp.pid(w.o, w.o_prime), TreeKind::P1Final, 0, bound));
  }
  if (static_cast<int>(ts.trees.size()) != sd.t + nd2.t - 1)
    throw VerificationError("property1 construction produced the wrong tree count");
  verify_tree_set(sp, ts);
  return ts;
}

std::vector<DepthRow> depth_report(const TreeSet& ts) {
  std::vector<DepthRow> rows;
  for (const auto& t : ts.trees)
    rows.push_back({t.kind, t.index, t.measured_depth, t.depth_bound});
  return rows;
}

RunResult run_edst(const StarProduct& sp, Mode mode, std::uint64_t p1_budget) {
  require_connected_factors(sp);
  FactorEdstData sd = max_edst_pack(sp.structure);
  FactorEdstData nd = max_edst_pack(sp.supernode);
  RunResult out;
  out.t_s = sd.t;
  out.r_s = sd.r;
  out.t_n = nd.t;
  out.r_n = nd.r;

  auto attempt = [&](Mode m) -> TreeSet {
    switch (m) {
      case Mode::Universal: return universal_construction(sp, sd, nd);
      case Mode::LowDepth: return low_depth_construction(sp, sd, nd);
      case Mode::Maximum: return maximum_construction(sp, sd, nd);
      case Mode::Property1: {
        auto w = property1_search(sp, sd, nd, p1_budget);
        if (!w) throw InfeasibleError("Infeasible: no Property-1 witness found");
        return property1_construction(sp, sd, nd, *w);
      }
      default: throw UsageError("run_edst: bad mode");
    }
  };

  if (mode == Mode::Auto) {
    bool built = false;
    for (Mode m : {Mode::Maximum, Mode::Property1, Mode::LowDepth}) {
      try {
        out.ts = attempt(m);
        built = true;
        break;
      } catch (const InfeasibleError&) {
        continue;
      }
    }
    if (!built)
      throw InfeasibleError(
          "Infeasible: no construction applies (degenerate factors without non-tree "
          "edges or a Property-1 witness)");
  } else {
    out.ts = attempt(mode);
  }
  out.report = make_bound_report(sp.structure, sp.supernode, sp.product,
                                 static_cast<std::int64_t>(out.ts.trees.size()),
                                 out.ts.extended, out.ts.property1);
  return out;
}

}  // namespace stargraph
