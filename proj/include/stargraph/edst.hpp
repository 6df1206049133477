#ifndef STARGRAPH_EDST_HPP
#define STARGRAPH_EDST_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stargraph/graph.hpp"

namespace stargraph {

// A maximum edge-disjoint spanning tree packing of a factor graph, plus the
// side data the product constructions need: the non-tree subgraph, an
// optional U-set (t vertices of the non-tree subgraph that can each escape
// it), and the anchor the first tree is rooted at.
struct FactorEdstData {
  Graph graph;
  std::vector<RootedTree> trees;  // canonical order; trees[0] is the reserved tree
  int t = 0;
  EdgeSubgraph nontree;
  int r = 0;
  std::optional<std::vector<Vertex>> u_set;  // sorted when present
  Vertex anchor = 0;  // root of trees[0]

  int tree_depth_of(std::size_t i) const { return tree_depth(trees[i]); }
  // Longest component edge count of the non-tree subgraph (depth bookkeeping).
  int max_nontree_component_edges() const;
};

// Maximum-cardinality EDST packing via matroid-union augmentation. Trees are
// canonically sorted by edge list and rooted at their centers. Throws
// UsageError on disconnected input.
FactorEdstData max_edst_pack(const Graph& g);

// Exact maximum EDST count by Nash-Williams/Tutte partition enumeration.
// Exponential; |V| <= 12 only (throws UsageError above that).
int nash_williams_max(const Graph& g);
bool nash_williams_certificate(const Graph& g, int k);

// Choose a U-set of size t: from each non-tree component take all vertices
// but one. If the packing's non-tree subgraph cannot host one, repair by
// exchanging a tree edge with a non-tree edge and retry; throws
// InfeasibleError when no exchange helps.
FactorEdstData select_u_set(FactorEdstData d);

// Re-root trees[0] at the given anchor (parents strictly closer to it).
FactorEdstData root_first_tree(FactorEdstData d, Vertex anchor);

}  // namespace stargraph

#endif
