#ifndef STARGRAPH_STAR_PRODUCT_HPP
#define STARGRAPH_STAR_PRODUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stargraph/graph.hpp"

namespace stargraph {

// One bijection f per structure edge, stored under a chosen orientation.
// arcs[i] = (tail, head) orients structure edge i; maps[i] is the
// permutation of the supernode vertex set applied when crossing tail->head.
struct BijectionFamily {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::vector<std::vector<Vertex>> maps;
  std::vector<std::vector<Vertex>> inverse_maps;

  // Permutation checks plus exactly-one-orientation-per-structure-edge.
  void validate(const Graph& structure, Vertex supernode_n) const;
  void build_inverses();

  static BijectionFamily identity(const Graph& structure, Vertex supernode_n);
  // f(y) = y + s over Z_n with s drawn from a seeded hash of the arc.
  static BijectionFamily shifts(const Graph& structure, Vertex supernode_n,
                                std::uint64_t seed);
};

struct StarProduct {
  std::string name;
  Graph structure;   // G_s
  Graph supernode;   // G_n
  BijectionFamily f;
  Graph product;     // G*

  Vertex pid(Vertex x, Vertex y) const { return x * supernode.vertex_count() + y; }
  std::pair<Vertex, Vertex> coords(Vertex p) const {
    Vertex n = supernode.vertex_count();
    return {p / n, p % n};
  }

  // The unique y' with a product edge {(a,y),(b,y')}; {a,b} must be a
  // structure edge. Works for either traversal direction.
  Vertex fmap(Vertex a, Vertex b, Vertex y) const;
  Vertex fmap_inv(Vertex a, Vertex b, Vertex y) const { return fmap(b, a, y); }
};

// Assemble the product. Both factors must be connected unless
// allow_disconnected_supernode is set (used by the Chimera presets).
StarProduct star_product(Graph structure, Graph supernode, BijectionFamily f,
                         std::string name = "star",
                         bool allow_disconnected_supernode = false);

// Star product with every bijection the identity.
StarProduct cartesian_product(Graph structure, Graph supernode,
                              std::string name = "cartesian");

bool verify_product_counts(const StarProduct& sp);

// Named topologies.
StarProduct slimfly(std::uint32_t q);                                // K_qq * C(q)
StarProduct bundlefly(std::uint32_t q, std::uint32_t a, std::uint64_t seed);
StarProduct polarstar_qr(std::uint32_t q, std::uint32_t a, std::uint64_t seed);
StarProduct polarstar_iq(std::uint32_t q, std::uint32_t d, std::uint64_t seed);
StarProduct petersen();                                              // K_2 * C_5
StarProduct chimera(std::uint32_t k);                                // C_{2(2k+1)}
StarProduct toric_chimera(std::uint32_t k);                          // TC_{2(2k)}

// Direct grid-of-K44 Chimera generator, used as an adjacency oracle for the
// star-product assembly. Vertex ((i*n+j)*2+side)*4+t for cell (i,j),
// side 0 = vertical qubits, 1 = horizontal.
Graph chimera_direct(std::uint32_t n, bool toric);
// Relabeling that maps star-product vertex ids onto chimera_direct ids.
std::vector<Vertex> chimera_star_to_direct(const StarProduct& sp, std::uint32_t k,
                                           bool toric);

// Preset registry for the CLI: slimfly:q, bundlefly:q,a, polarstar:q,qr:a,
// polarstar:q,iq:d, chimera:k, toric-chimera:k, petersen,
// cartesian:<gen>x<gen>, star:<gen>*<gen>[:identity|shift].
StarProduct make_preset(const std::string& spec, std::uint64_t seed);

// True when the preset has a disconnected supernode (bounds only, no EDST
// construction).
bool preset_is_chimera(const std::string& spec);

}  // namespace stargraph

#endif
