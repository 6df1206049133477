#ifndef STARGRAPH_SERIALIZE_HPP
#define STARGRAPH_SERIALIZE_HPP

#include <string>
#include <vector>

#include "stargraph/edst.hpp"
#include "stargraph/graph.hpp"
#include "stargraph/product_edst.hpp"
#include "stargraph/star_product.hpp"

namespace stargraph {

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
std::string graph_to_dot(const Graph& g, const std::string& name = "G");

std::string edstdata_to_json(const FactorEdstData& d);

// Serialized tree sets carry the product graph, per-tree provenance, roots,
// depths and bounds, with product vertices written as (x, y) pairs.
std::string treeset_to_json(const StarProduct& sp, const TreeSet& ts, Mode mode,
                            std::uint64_t seed);
std::string treeset_to_dot(const StarProduct& sp, const TreeSet& ts);

// Re-checks a serialized tree set from scratch: edges within the stored
// product, spanning, pairwise disjoint, measured depth matching and within
// bound. Throws VerificationError with a reason.
void verify_treeset_json(const std::string& text);

// {"(x,x')": [perm...]} -> family (one entry per structure edge).
BijectionFamily bijections_from_json(const std::string& text, const Graph& structure,
                                     Vertex supernode_n);

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_json() const;
  std::string to_md() const;
  std::string render(const std::string& format) const;  // csv | json | md
};

}  // namespace stargraph

#endif
