#ifndef STARGRAPH_FACTORS_HPP
#define STARGRAPH_FACTORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stargraph/graph.hpp"

namespace stargraph {

Graph complete_graph(std::uint32_t m);
Graph complete_bipartite(std::uint32_t q);  // parts are ids [0,q) and [q,2q)
Graph path_graph(std::uint32_t m);          // m vertices
Graph cycle_graph(std::uint32_t m);

// Paley graph on GF(q), q = 1 mod 4: edge {a,b} iff a-b is a nonzero square.
Graph paley(std::uint32_t q);

// Cayley supernode of the McKay-Miller-Siran graph for prime power
// q = 4k+1, 4k or 4k-1: Cayley graph on (GF(q), +) whose connection set is
// the first k +/- pairs of even powers of the least primitive element
// (all 2k even powers when q = 4k). Coincides with paley(q) when q = 4k+1.
Graph mms_cayley(std::uint32_t q);

// Connection sets used by mms_cayley and by the slimfly bijections.
struct MmsSets {
  std::uint32_t q = 0, k = 0;
  int delta = 0;                      // q = 4k + delta
  std::vector<std::uint32_t> row;     // "X": row-supernode differences
  std::vector<std::uint32_t> column;  // "X' = xi * X": column-supernode differences
};
MmsSets mms_connection_sets(std::uint32_t q);

// Bermond-Delorme-Farhi graph: 2d vertices, d^2 edges, d-regular.
// Realized as the odd-difference circulant on Z_2d.
Graph bdf(std::uint32_t d);

// Inductive-Quad graph for d = 4m or 4m+3: 2d+2 vertices, d(d+1) edges,
// d-regular. Base graphs are the circulants C_8(1,4) and C_10(1,4); each
// step d -> d+4 adds two quads (eight vertices).
Graph inductive_quad(std::uint32_t d);

// Erdos-Renyi polarity graph: vertices are the points of PG(2,q); distinct
// points adjacent iff their dot product vanishes. q^2+q+1 vertices,
// q(q+1)^2/2 edges.
Graph er_polarity(std::uint32_t q);

// Closed-form parameter row for a factor graph: expected counts, the EDST
// upper bound t and the non-tree remainder r.
struct FactorStats {
  std::string name;
  std::vector<std::uint32_t> params;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::optional<std::uint64_t> degree_if_regular;
  std::int64_t t_formula = 0;
  std::int64_t r_formula = 0;
};

// Recognized names: "paley", "kqq", "mms", "bdf", "iq", "er", "km",
// "path", "cycle". Throws UsageError on unknown input. The returned row is
// cross-checked against the generated graph's actual |V| and |E|.
FactorStats factor_stats(const std::string& name, const std::vector<std::uint32_t>& params);

// Generator registry used by the CLI (same names as factor_stats).
Graph make_factor(const std::string& name, const std::vector<std::uint32_t>& params);

}  // namespace stargraph

#endif
