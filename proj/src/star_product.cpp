#include "stargraph/star_product.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stargraph/factors.hpp"
#include "stargraph/gf.hpp"

namespace stargraph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void BijectionFamily::validate(const Graph& structure, Vertex supernode_n) const {
  if (arcs.size() != structure.edge_count() || maps.size() != arcs.size())
    throw UsageError("BadBijection: family must cover every structure edge once");
  std::set<Edge> covered;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [a, b] = arcs[i];
    if (!structure.has_edge(a, b))
      throw UsageError("BadBijection: arc is not a structure edge");
    if (!covered.insert(make_edge(a, b)).second)
      throw UsageError("BadBijection: duplicate orientation for a structure edge");
    const auto& m = maps[i];
    if (m.size() != supernode_n)
      throw UsageError("BadBijection: map size mismatch");
    std::vector<char> hit(supernode_n, 0);
    for (Vertex y : m) {
      if (y >= supernode_n || hit[y])
        throw UsageError("BadBijection: map is not a permutation");
      hit[y] = 1;
    }
  }
}

void BijectionFamily::build_inverses() {
  inverse_maps.assign(maps.size(), {});
  for (std::size_t i = 0; i < maps.size(); ++i) {
    inverse_maps[i].assign(maps[i].size(), 0);
    for (Vertex y = 0; y < maps[i].size(); ++y) inverse_maps[i][maps[i][y]] = y;
  }
}

BijectionFamily BijectionFamily::identity(const Graph& structure, Vertex supernode_n) {
  BijectionFamily f;
  std::vector<Vertex> id(supernode_n);
  for (Vertex y = 0; y < supernode_n; ++y) id[y] = y;
  for (const auto& e : structure.edges()) {
    f.arcs.push_back(e);
    f.maps.push_back(id);
  }
  f.build_inverses();
  return f;
}

BijectionFamily BijectionFamily::shifts(const Graph& structure, Vertex supernode_n,
                                        std::uint64_t seed) {
  BijectionFamily f;
  for (const auto& e : structure.edges()) {
    std::uint64_t h = splitmix64(seed ^ splitmix64((std::uint64_t(e.first) << 32) | e.second));
    Vertex s = supernode_n ? static_cast<Vertex>(h % supernode_n) : 0;
    std::vector<Vertex> m(supernode_n);
    for (Vertex y = 0; y < supernode_n; ++y) m[y] = (y + s) % supernode_n;
    f.arcs.push_back(e);
    f.maps.push_back(std::move(m));
  }
  f.build_inverses();
  return f;
}

Vertex StarProduct::fmap(Vertex a, Vertex b, Vertex y) const {
  for (std::size_t i = 0; i < f.arcs.size(); ++i) {
    if (f.arcs[i].first == a && f.arcs[i].second == b) return f.maps[i][y];
    if (f.arcs[i].first == b && f.arcs[i].second == a) return f.inverse_maps[i][y];
  }
  throw UsageError("fmap: not a structure edge");
}

StarProduct star_product(Graph structure, Graph supernode, BijectionFamily f,
                         std::string name, bool allow_disconnected_supernode) {
  f.validate(structure, supernode.vertex_count());
  if (f.inverse_maps.size() != f.maps.size()) f.build_inverses();
  if (!is_connected(structure))
    throw UsageError("DisconnectedFactor: structure graph must be connected");
  if (!allow_disconnected_supernode && !is_connected(supernode))
    throw UsageError("DisconnectedFactor: supernode graph must be connected");

  Vertex ns = structure.vertex_count();
  Vertex nn = supernode.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(ns) * supernode.edge_count() +
                static_cast<std::size_t>(nn) * structure.edge_count());
  for (Vertex x = 0; x < ns; ++x)
    for (const auto& [y, yp] : supernode.edges())
      edges.push_back(make_edge(x * nn + y, x * nn + yp));
  for (std::size_t i = 0; i < f.arcs.size(); ++i) {
    auto [x, xp] = f.arcs[i];
    for (Vertex y = 0; y < nn; ++y)
      edges.push_back(make_edge(x * nn + y, xp * nn + f.maps[i][y]));
  }
  StarProduct sp;
  sp.name = std::move(name);
  sp.structure = std::move(structure);
  sp.supernode = std::move(supernode);
  sp.f = std::move(f);
  sp.product = Graph(ns * nn, std::move(edges));
  if (!verify_product_counts(sp))
    throw Error("star_product: count identities violated");
  return sp;
}

StarProduct cartesian_product(Graph structure, Graph supernode, std::string name) {
  auto f = BijectionFamily::identity(structure, supernode.vertex_count());
  return star_product(std::move(structure), std::move(supernode), std::move(f),
                      std::move(name));
}

bool verify_product_counts(const StarProduct& sp) {
  std::uint64_t vs = sp.structure.vertex_count();
  std::uint64_t vn = sp.supernode.vertex_count();
  std::uint64_t es = sp.structure.edge_count();
  std::uint64_t en = sp.supernode.edge_count();
  return sp.product.vertex_count() == vs * vn &&
         sp.product.edge_count() == vs * en + vn * es;
}

StarProduct slimfly(std::uint32_t q) {
  MmsSets sets = mms_connection_sets(q);
  const Field& fq = Field::get(q);
  std::uint32_t xi = fq.primitive_element();
  Graph structure = complete_bipartite(q);  // rows 0..q-1, columns q..2q-1
  Graph supernode = mms_cayley(q);

  // Row supernodes hold field elements directly; the column supernode with
  // label t represents field element xi*t, which turns its difference set
  // into the row set. Crossing row x to column m uses y = m*x + xi*t.
  BijectionFamily f;
  for (const auto& e : structure.edges()) {
    Vertex x = e.first;        // row id = field element
    Vertex m = e.second - q;   // column id = field element
    std::vector<Vertex> map(q);
    std::uint32_t mx = fq.mul(m, x);
    std::uint32_t xinv = fq.inv(xi);
    for (Vertex y = 0; y < q; ++y) map[y] = fq.mul(xinv, fq.sub(y, mx));
    f.arcs.push_back(e);
    f.maps.push_back(std::move(map));
  }
  f.build_inverses();
  std::ostringstream nm;
  nm << "slimfly:" << q;
  return star_product(std::move(structure), std::move(supernode), std::move(f), nm.str());
}

namespace {

// Least quadratic non-residue of an odd-order field.
std::uint32_t least_non_residue(const Field& f) {
  auto qr = f.quadratic_residues();
  std::set<std::uint32_t> residues(qr.begin(), qr.end());
  for (std::uint32_t x = 1; x < f.order(); ++x)
    if (!residues.count(x)) return x;
  throw Error("least_non_residue: field has no non-residue");
}

// Affine twists y -> nu*y + s over GF(a) for a Paley supernode. The fixed
// non-residue multiplier makes any pair of vertices in adjacent supernodes
// reachable with at most one intra-supernode hop, so the product diameter
// stays one above the structure diameter; the per-edge shift is seeded.
BijectionFamily paley_affine_family(const Graph& structure, std::uint32_t a,
                                    std::uint64_t seed) {
  const Field& fa = Field::get(a);
  std::uint32_t nu = least_non_residue(fa);
  BijectionFamily f;
  for (const auto& e : structure.edges()) {
    std::uint64_t h =
        splitmix64(seed ^ splitmix64((std::uint64_t(e.first) << 32) | e.second));
    std::uint32_t s = static_cast<std::uint32_t>(h % a);
    std::vector<Vertex> map(a);
    for (Vertex y = 0; y < a; ++y) map[y] = fa.add(fa.mul(nu, y), s);
    f.arcs.push_back(e);
    f.maps.push_back(std::move(map));
  }
  f.build_inverses();
  return f;
}

}  // namespace

StarProduct bundlefly(std::uint32_t q, std::uint32_t a, std::uint64_t seed) {
  if (a % 4 != 1) throw UsageError("bundlefly: a = 4k+1 required");
  StarProduct hq = slimfly(q);
  Graph supernode = paley(a);
  BijectionFamily f = paley_affine_family(hq.product, a, seed);
  std::ostringstream nm;
  nm << "bundlefly:" << q << "," << a;
  return star_product(hq.product, std::move(supernode), std::move(f), nm.str());
}

StarProduct polarstar_qr(std::uint32_t q, std::uint32_t a, std::uint64_t seed) {
  if (a % 4 != 1) throw UsageError("polarstar: qr supernode needs a = 4k+1");
  Graph structure = er_polarity(q);
  BijectionFamily f = paley_affine_family(structure, a, seed);
  std::ostringstream nm;
  nm << "polarstar:" << q << ",qr:" << a;
  return star_product(std::move(structure), paley(a), std::move(f), nm.str());
}

StarProduct polarstar_iq(std::uint32_t q, std::uint32_t d, std::uint64_t seed) {
  Graph structure = er_polarity(q);
  Graph supernode = inductive_quad(d);
  Vertex nn = supernode.vertex_count();
  // seeded index rotations; bijectivity is all the product needs
  BijectionFamily f;
  for (const auto& e : structure.edges()) {
    std::uint64_t h =
        splitmix64(seed ^ splitmix64((std::uint64_t(e.first) << 32) | e.second));
    Vertex s = static_cast<Vertex>(h % nn);
    std::vector<Vertex> map(nn);
    for (Vertex y = 0; y < nn; ++y) map[y] = (y + s) % nn;
    f.arcs.push_back(e);
    f.maps.push_back(std::move(map));
  }
  f.build_inverses();
  std::ostringstream nm;
  nm << "polarstar:" << q << ",iq:" << d;
  return star_product(std::move(structure), std::move(supernode), std::move(f), nm.str());
}

StarProduct petersen() {
  Graph structure = complete_graph(2);
  Graph supernode = cycle_graph(5);
  BijectionFamily f;
  f.arcs.push_back({0, 1});
  f.maps.push_back({0, 2, 4, 1, 3});  // y -> 2y mod 5, the pentagram twist
  f.build_inverses();
  return star_product(std::move(structure), std::move(supernode), std::move(f), "petersen");
}

// ---------------------------------------------------------------------------
// Chimera. The n x n grid of K_{4,4} cells (n = 2(2k+1), or 4k toric) splits
// into two isomorphic supernodes when cells are colored by the diagonal band
// rule: band(x) = 1 iff x mod 4 is 1 or 2, cell (i,j) is "blue" iff
// band(i) == band(j). Within a band the index set has adjacent pairs
// (4m+1,4m+2) and (4m+3,4m+4), so each color class decomposes into 2x2
// crosses, dominoes and corner singles matching the component census of the
// C_{2(2k+1)} supernode; on the torus only crosses remain. Every qubit has
// exactly one cross-band grid neighbor, so the couplers that leave a color
// class form a perfect matching, which is the single structure-edge
// bijection of the P_2 star product.
// ---------------------------------------------------------------------------

namespace {

int band(std::uint32_t x) { return (x % 4 == 1 || x % 4 == 2) ? 1 : 0; }

struct ChimeraLayout {
  std::uint32_t n = 0;
  bool toric = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> blue_cells;  // lex sorted
  std::map<std::pair<std::uint32_t, std::uint32_t>, Vertex> blue_index;

  bool is_blue(std::uint32_t i, std::uint32_t j) const { return band(i) == band(j); }

  // Image of a red cell in blue-cell coordinates (a grid automorphism that
  // flips band parity: row reflection for the plane, row shift for the torus).
  std::pair<std::uint32_t, std::uint32_t> red_to_blue(std::uint32_t i,
                                                      std::uint32_t j) const {
    if (toric) return {(i + 2) % n, j};
    return {n - 1 - i, j};
  }
  std::pair<std::uint32_t, std::uint32_t> blue_to_red(std::uint32_t i,
                                                      std::uint32_t j) const {
    if (toric) return {(i + n - 2) % n, j};
    return {n - 1 - i, j};
  }

  // The unique vertical/horizontal neighbor index on the other band.
  std::uint32_t cross_row(std::uint32_t i) const {
    std::uint32_t up = (i + 1) % n;
    std::uint32_t down = (i + n - 1) % n;
    if (!toric) {
      if (i + 1 < n && band(i + 1) != band(i)) return i + 1;
      return i - 1;  // exists: every index has exactly one cross-band neighbor
    }
    return band(up) != band(i) ? up : down;
  }

  Vertex supernode_id(std::uint32_t i, std::uint32_t j, int side, int t) const {
    auto cell = is_blue(i, j) ? std::make_pair(i, j)
                              : red_to_blue(i, j);
    return blue_index.at(cell) * 8 + side * 4 + t;
  }
};

ChimeraLayout chimera_layout(std::uint32_t n, bool toric) {
  ChimeraLayout L;
  L.n = n;
  L.toric = toric;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (L.is_blue(i, j)) {
        L.blue_index[{i, j}] = static_cast<Vertex>(L.blue_cells.size());
        L.blue_cells.push_back({i, j});
      }
  return L;
}

Graph chimera_supernode(const ChimeraLayout& L) {
  std::vector<Edge> edges;
  Vertex cells = static_cast<Vertex>(L.blue_cells.size());
  for (Vertex c = 0; c < cells; ++c)
    for (int t = 0; t < 4; ++t)
      for (int u = 0; u < 4; ++u) edges.push_back(make_edge(c * 8 + t, c * 8 + 4 + u));
  // couplers between same-color adjacent cells
  for (Vertex c = 0; c < cells; ++c) {
    auto [i, j] = L.blue_cells[c];
    // vertical neighbor below
    std::uint32_t i2 = (i + 1) % L.n;
    if ((L.toric || i + 1 < L.n) && L.is_blue(i2, j)) {
      Vertex c2 = L.blue_index.at({i2, j});
      if (c != c2)
        for (int t = 0; t < 4; ++t) edges.push_back(make_edge(c * 8 + t, c2 * 8 + t));
    }
    // horizontal neighbor to the right
    std::uint32_t j2 = (j + 1) % L.n;
    if ((L.toric || j + 1 < L.n) && L.is_blue(i, j2)) {
      Vertex c2 = L.blue_index.at({i, j2});
      if (c != c2)
        for (int t = 0; t < 4; ++t)
          edges.push_back(make_edge(c * 8 + 4 + t, c2 * 8 + 4 + t));
    }
  }
  return Graph(cells * 8, std::move(edges));
}

StarProduct chimera_product(std::uint32_t n, bool toric, const std::string& name) {
  ChimeraLayout L = chimera_layout(n, toric);
  Graph supernode = chimera_supernode(L);
  Vertex nn = supernode.vertex_count();

  // blue -> red matching: each qubit couples to its unique cross-band cell
  std::vector<Vertex> map(nn, 0);
  for (Vertex c = 0; c < L.blue_cells.size(); ++c) {
    auto [i, j] = L.blue_cells[c];
    for (int t = 0; t < 4; ++t) {
      std::uint32_t i2 = L.cross_row(i);
      map[c * 8 + t] = L.supernode_id(i2, j, 0, t);  // vertical qubits couple by row
      std::uint32_t j2 = L.cross_row(j);
      map[c * 8 + 4 + t] = L.supernode_id(i, j2, 1, t);
    }
  }
  BijectionFamily f;
  f.arcs.push_back({0, 1});
  f.maps.push_back(std::move(map));
  f.build_inverses();
  return star_product(path_graph(2), std::move(supernode), std::move(f), name, true);
}

}  // namespace

StarProduct chimera(std::uint32_t k) {
  std::uint32_t n = 2 * (2 * k + 1);
  std::ostringstream nm;
  nm << "chimera:" << k;
  return chimera_product(n, false, nm.str());
}

StarProduct toric_chimera(std::uint32_t k) {
  if (k < 1) throw UsageError("toric_chimera: k >= 1 required");
  std::uint32_t n = 4 * k;
  std::ostringstream nm;
  nm << "toric-chimera:" << k;
  return chimera_product(n, true, nm.str());
}

Graph chimera_direct(std::uint32_t n, bool toric) {
  auto vid = [n](std::uint32_t i, std::uint32_t j, int side, int t) {
    return static_cast<Vertex>(((i * n + j) * 2 + side) * 4 + t);
  };
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      for (int t = 0; t < 4; ++t)
        for (int u = 0; u < 4; ++u)
          edges.push_back(make_edge(vid(i, j, 0, t), vid(i, j, 1, u)));
      if (toric || i + 1 < n)
        for (int t = 0; t < 4; ++t)
          edges.push_back(make_edge(vid(i, j, 0, t), vid((i + 1) % n, j, 0, t)));
      if (toric || j + 1 < n)
        for (int t = 0; t < 4; ++t)
          edges.push_back(make_edge(vid(i, j, 1, t), vid(i, (j + 1) % n, 1, t)));
    }
  return Graph(n * n * 8, std::move(edges));
}

std::vector<Vertex> chimera_star_to_direct(const StarProduct& sp, std::uint32_t k,
                                           bool toric) {
  std::uint32_t n = toric ? 4 * k : 2 * (2 * k + 1);
  ChimeraLayout L = chimera_layout(n, toric);
  auto vid = [n](std::uint32_t i, std::uint32_t j, int side, int t) {
    return static_cast<Vertex>(((i * n + j) * 2 + side) * 4 + t);
  };
  std::vector<Vertex> out(sp.product.vertex_count(), 0);
  Vertex nn = sp.supernode.vertex_count();
  for (Vertex y = 0; y < nn; ++y) {
    Vertex c = y / 8;
    int side = (y % 8) / 4;
    int t = y % 4;
    auto [bi, bj] = L.blue_cells[c];
    out[sp.pid(0, y)] = vid(bi, bj, side, t);
    auto [ri, rj] = L.blue_to_red(bi, bj);
    out[sp.pid(1, y)] = vid(ri, rj, side, t);
  }
  return out;
}

bool preset_is_chimera(const std::string& spec) {
  return spec.rfind("chimera:", 0) == 0 || spec.rfind("toric-chimera:", 0) == 0;
}

namespace {

std::vector<std::uint32_t> parse_uints(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  return out;
}

// <gen> tokens: k4, c5, p3, paley5, kqq3, er2, iq3, bdf3, mms5, km4
Graph parse_gen(const std::string& tok) {
  std::size_t pos = 0;
  while (pos < tok.size() && !isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == 0 || pos == tok.size())
    throw UsageError("bad factor token '" + tok + "'");
  std::string name = tok.substr(0, pos);
  std::uint32_t val = static_cast<std::uint32_t>(std::stoul(tok.substr(pos)));
  if (name == "k") name = "km";
  if (name == "c") name = "cycle";
  if (name == "p") name = "path";
  return make_factor(name, {val});
}

}  // namespace

StarProduct make_preset(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "petersen") return petersen();
  if (head == "slimfly") return slimfly(parse_uints(rest).at(0));
  if (head == "bundlefly") {
    auto p = parse_uints(rest);
    if (p.size() != 2) throw UsageError("bundlefly:q,a expected");
    return bundlefly(p[0], p[1], seed);
  }
  if (head == "polarstar") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw UsageError("polarstar:q,qr:a or polarstar:q,iq:d");
    std::uint32_t q = static_cast<std::uint32_t>(std::stoul(rest.substr(0, comma)));
    std::string sup = rest.substr(comma + 1);
    auto c2 = sup.find(':');
    if (c2 == std::string::npos) throw UsageError("polarstar supernode needs qr:a or iq:d");
    std::string kind = sup.substr(0, c2);
    std::uint32_t val = static_cast<std::uint32_t>(std::stoul(sup.substr(c2 + 1)));
    if (kind == "qr") return polarstar_qr(q, val, seed);
    if (kind == "iq") return polarstar_iq(q, val, seed);
    throw UsageError("polarstar supernode must be qr or iq");
  }
  if (head == "chimera") return chimera(parse_uints(rest).at(0));
  if (head == "toric-chimera") return toric_chimera(parse_uints(rest).at(0));
  if (head == "cartesian") {
    auto x = rest.find('x');
    if (x == std::string::npos) throw UsageError("cartesian:<gen>x<gen> expected");
    return cartesian_product(parse_gen(rest.substr(0, x)), parse_gen(rest.substr(x + 1)),
                             spec);
  }
  if (head == "star") {
    auto starpos = rest.find('*');
    if (starpos == std::string::npos) throw UsageError("star:<gen>*<gen>[:bijection]");
    std::string left = rest.substr(0, starpos);
    std::string right = rest.substr(starpos + 1);
    std::string bijection = "shift";
    auto c2 = right.find(':');
    if (c2 != std::string::npos) {
      bijection = right.substr(c2 + 1);
      right = right.substr(0, c2);
    }
    Graph gs = parse_gen(left);
    Graph gn = parse_gen(right);
    BijectionFamily f = bijection == "identity"
                            ? BijectionFamily::identity(gs, gn.vertex_count())
                            : BijectionFamily::shifts(gs, gn.vertex_count(), seed);
    if (bijection != "identity" && bijection != "shift")
      throw UsageError("star bijection must be identity or shift (or use --bijection=file)");
    return star_product(std::move(gs), std::move(gn), std::move(f), spec);
  }
  throw UsageError("unknown preset '" + spec + "'");
}

}  // namespace stargraph
