#ifndef STARGRAPH_PRODUCT_EDST_HPP
#define STARGRAPH_PRODUCT_EDST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stargraph/bounds.hpp"
#include "stargraph/edst.hpp"
#include "stargraph/star_product.hpp"

namespace stargraph {

enum class Mode { Universal, LowDepth, Maximum, Property1, Auto };

Mode parse_mode(const std::string& s);
const char* mode_name(Mode m);

enum class TreeKind {
  UniversalT,       // supernode tree copy at u_i plus all copies of X_i
  UniversalTPrime,  // Y_i everywhere plus one reserved-tree edge per arc
  LowDepthTPrime,   // same cardinality, single traced copy of the reserved tree
  ExtraNonTreeN,    // extra tree built from the supernode non-tree edges
  ExtraNonTreeS,    // extra tree built from the structure non-tree edges
  P1T,
  P1TPrime,
  P1Final,
};

const char* tree_kind_name(TreeKind k);

struct ProductTree {
  RootedTree tree;
  TreeKind kind;
  int index = 0;  // i for T_i / T'_i families, 0 for singletons
  int measured_depth = 0;
  std::int64_t depth_bound = 0;
};

struct TreeSet {
  std::string construction;  // which construction produced the count
  bool extended = false;
  bool property1 = false;
  std::vector<ProductTree> trees;
};

// Witness for the Property-1 construction.
struct Property1Data {
  int witness_tree = 0;  // index into the supernode packing
  std::vector<Edge> s1, s2;
  std::vector<Vertex> vs1, vs2, intersection;
  Vertex o = 0, o_prime = 0;
  std::vector<Vertex> r1, r2;
  std::vector<Vertex> a, b;  // per i = 2..t_s
  std::vector<Vertex> c, d;  // per i = 2..t_n
};

// t_s + t_n - 2 verified trees; throws InfeasibleError("Degenerate...") when
// t_s = t_n = 1.
TreeSet universal_construction(const StarProduct& sp, const FactorEdstData& sd,
                               const FactorEdstData& nd);

// Same cardinality; the T'_i trees trace a single copy of the reserved
// structure tree so their depth drops to d_s1 + 2 d_ni.
TreeSet low_depth_construction(const StarProduct& sp, const FactorEdstData& sd,
                               const FactorEdstData& nd);

// t_s + t_n when both factors have enough non-tree edges (r >= t), down to
// t_s + t_n - 1 when only one side qualifies. Throws InfeasibleError when
// neither does.
TreeSet maximum_construction(const StarProduct& sp, const FactorEdstData& sd,
                             const FactorEdstData& nd);

// Budget-bounded search for a Property-1 witness; absence is a value.
std::optional<Property1Data> property1_search(const StarProduct& sp,
                                              const FactorEdstData& sd,
                                              const FactorEdstData& nd,
                                              std::uint64_t budget = 1000000);

// t_s + t_n - 1 verified trees from a witness.
TreeSet property1_construction(const StarProduct& sp, const FactorEdstData& sd,
                               const FactorEdstData& nd, const Property1Data& w);

struct DepthRow {
  TreeKind kind;
  int index;
  int measured;
  std::int64_t bound;
};
std::vector<DepthRow> depth_report(const TreeSet& ts);

// Full pipeline: pack both factors, apply the requested construction (Auto
// tries maximum, then property1, then low-depth), verify, and attach the
// bound report.
struct RunResult {
  TreeSet ts;
  BoundReport report;
  int t_s = 0, r_s = 0, t_n = 0, r_n = 0;
};
RunResult run_edst(const StarProduct& sp, Mode mode, std::uint64_t p1_budget = 1000000);

}  // namespace stargraph

#endif
