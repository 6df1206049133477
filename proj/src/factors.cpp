#include "stargraph/factors.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "stargraph/gf.hpp"

namespace stargraph {

Graph complete_graph(std::uint32_t m) {
  if (m < 1) throw UsageError("complete_graph: m >= 1 required");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b) edges.push_back({a, b});
  return Graph(m, std::move(edges));
}

Graph complete_bipartite(std::uint32_t q) {
  if (q < 1) throw UsageError("complete_bipartite: q >= 1 required");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < q; ++a)
    for (Vertex b = 0; b < q; ++b) edges.push_back({a, q + b});
  return Graph(2 * q, std::move(edges));
}

Graph path_graph(std::uint32_t m) {
  if (m < 1) throw UsageError("path_graph: m >= 1 required");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < m; ++v) edges.push_back({v, v + 1});
  return Graph(m, std::move(edges));
}

Graph cycle_graph(std::uint32_t m) {
  if (m < 3) throw UsageError("cycle_graph: m >= 3 required");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < m; ++v) edges.push_back(make_edge(v, (v + 1) % m));
  return Graph(m, std::move(edges));
}

Graph paley(std::uint32_t q) {
  if (q % 4 != 1) throw UsageError("paley: q = 1 mod 4 required");
  const Field& f = Field::get(q);
  auto qr = f.quadratic_residues();
  std::set<std::uint32_t> residues(qr.begin(), qr.end());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < q; ++a)
    for (Vertex b = a + 1; b < q; ++b)
      if (residues.count(f.sub(a, b))) edges.push_back({a, b});
  return Graph(q, std::move(edges));
}

MmsSets mms_connection_sets(std::uint32_t q) {
  MmsSets s;
  s.q = q;
  if (q % 4 == 1)
    s.delta = 1;
  else if (q % 4 == 0)
    s.delta = 0;
  else if (q % 4 == 3)
    s.delta = -1;
  else
    throw UsageError("mms: q must be 4k-1, 4k or 4k+1");
  s.k = (q - s.delta) / 4;
  if (s.k == 0) throw UsageError("mms: q too small");
  const Field& f = Field::get(q);
  std::uint32_t xi = f.primitive_element();
  std::uint32_t xi2 = f.mul(xi, xi);
  std::set<std::uint32_t> row;
  if (s.delta == 0) {
    // char 2: the first 2k even powers
    std::uint32_t e = 1;
    for (std::uint32_t i = 0; i < 2 * s.k; ++i) {
      row.insert(e);
      e = f.mul(e, xi2);
    }
  } else {
    // odd q: +/- the first k even powers
    std::uint32_t e = 1;
    for (std::uint32_t i = 0; i < s.k; ++i) {
      row.insert(e);
      row.insert(f.neg(e));
      e = f.mul(e, xi2);
    }
  }
  s.row.assign(row.begin(), row.end());
  std::set<std::uint32_t> col;
  for (std::uint32_t x : s.row) col.insert(f.mul(xi, x));
  s.column.assign(col.begin(), col.end());
  return s;
}

Graph mms_cayley(std::uint32_t q) {
  MmsSets s = mms_connection_sets(q);
  const Field& f = Field::get(q);
  std::set<std::uint32_t> conn(s.row.begin(), s.row.end());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < q; ++a)
    for (Vertex b = a + 1; b < q; ++b)
      if (conn.count(f.sub(a, b))) edges.push_back({a, b});
  return Graph(q, std::move(edges));
}

Graph bdf(std::uint32_t d) {
  if (d < 1) throw UsageError("bdf: d >= 1 required");
  std::uint32_t n = 2 * d;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (std::uint32_t s = 1; s < n; s += 2) {
      Vertex b = (a + s) % n;
      if (a < b) edges.push_back({a, b});
    }
  return Graph(n, std::move(edges));
}

Graph inductive_quad(std::uint32_t d) {
  if (!(d % 4 == 0 || d % 4 == 3) || d < 3)
    throw UsageError("inductive_quad: d must be 4m or 4m+3, d >= 3");
  std::uint32_t base = (d % 4 == 3) ? 3 : 4;
  // base circulants C_8(1,4) and C_10(1,4)
  std::uint32_t bn = 2 * base + 2;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < bn; ++v) {
    edges.push_back(make_edge(v, (v + 1) % bn));
    Vertex w = (v + 4) % bn;
    if (v != w) edges.push_back(make_edge(v, w));
  }
  std::uint32_t cur = base;
  std::uint32_t n = bn;
  while (cur < d) {
    // add two quads: 8 new vertices n..n+7; new_j joins every old vertex of
    // parity j mod 2, and the new vertices form C_8(1,4) among themselves
    for (std::uint32_t j = 0; j < 8; ++j) {
      Vertex nj = n + j;
      for (Vertex old = j % 2; old < n; old += 2) edges.push_back(make_edge(old, nj));
    }
    for (std::uint32_t j = 0; j < 8; ++j) {
      edges.push_back(make_edge(n + j, n + (j + 1) % 8));
      edges.push_back(make_edge(n + j, n + (j + 4) % 8));
    }
    n += 8;
    cur += 4;
  }
  Graph g(n, std::move(edges));
  if (g.vertex_count() != 2 * d + 2 ||
      g.edge_count() != static_cast<std::size_t>(d) * (d + 1) ||
      g.regular_degree() != std::optional<std::size_t>(d))
    throw Error("inductive_quad: construction identities violated");
  return g;
}

Graph er_polarity(std::uint32_t q) {
  const Field& f = Field::get(q);
  // points of PG(2,q), normalized so the first nonzero coordinate is 1,
  // ordered lexicographically: (0,0,1) < (0,1,b) < (1,b,c)
  std::vector<std::array<std::uint32_t, 3>> pts;
  pts.push_back({0, 0, 1});
  for (std::uint32_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c) pts.push_back({1, b, c});
  if (pts.size() != static_cast<std::size_t>(q) * q + q + 1)
    throw Error("er_polarity: wrong point count");

  auto dot = [&](const std::array<std::uint32_t, 3>& a,
                 const std::array<std::uint32_t, 3>& b) {
    std::uint32_t s = 0;
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
  };
  std::vector<Edge> edges;
  for (Vertex i = 0; i < pts.size(); ++i)
    for (Vertex j = i + 1; j < pts.size(); ++j)
      if (dot(pts[i], pts[j]) == 0) edges.push_back({i, j});
  Graph g(static_cast<Vertex>(pts.size()), std::move(edges));
  if (g.edge_count() != static_cast<std::size_t>(q) * (q + 1) * (q + 1) / 2)
    throw Error("er_polarity: edge count mismatch");
  return g;
}

namespace {

FactorStats stats_row(const std::string& name, const std::vector<std::uint32_t>& p) {
  FactorStats s;
  s.name = name;
  s.params = p;
  auto need = [&](std::size_t count) {
    if (p.size() != count) throw UsageError("factor_stats: wrong parameter count for " + name);
  };
  if (name == "km") {
    need(1);
    std::uint64_t m = p[0];
    s.vertex_count = m;
    s.edge_count = m * (m - 1) / 2;
    s.degree_if_regular = m - 1;
    s.t_formula = static_cast<std::int64_t>(m / 2);
    s.r_formula = (m % 2 == 0) ? 0 : static_cast<std::int64_t>((m - 1) / 2);
  } else if (name == "kqq") {
    need(1);
    std::uint64_t q = p[0];
    s.vertex_count = 2 * q;
    s.edge_count = q * q;
    s.degree_if_regular = q;
    s.t_formula = static_cast<std::int64_t>(q * q / (2 * q - 1));
    s.r_formula = static_cast<std::int64_t>(q * q) - s.t_formula * (2 * q - 1);
  } else if (name == "paley" || name == "mms") {
    need(1);
    std::uint64_t q = p[0];
    std::uint64_t k;
    if (q % 4 == 1)
      k = (q - 1) / 4;
    else if (q % 4 == 0)
      k = q / 4;
    else if (q % 4 == 3)
      k = (q + 1) / 4;
    else
      throw UsageError("factor_stats: bad q for " + name);
    if (name == "paley" && q % 4 != 1) throw UsageError("factor_stats: paley needs q = 4k+1");
    s.vertex_count = q;
    s.edge_count = k * q;
    s.degree_if_regular = 2 * k;
    s.t_formula = static_cast<std::int64_t>(k);
    s.r_formula = static_cast<std::int64_t>(k);
  } else if (name == "bdf") {
    need(1);
    std::uint64_t d = p[0];
    s.vertex_count = 2 * d;
    s.edge_count = d * d;
    s.degree_if_regular = d;
    s.t_formula = static_cast<std::int64_t>(d / 2);
    s.r_formula = (d % 2 == 0) ? static_cast<std::int64_t>(d / 2)
                               : static_cast<std::int64_t>((3 * d - 1) / 2);
  } else if (name == "iq") {
    need(1);
    std::uint64_t d = p[0];
    if (!(d % 4 == 0 || d % 4 == 3)) throw UsageError("factor_stats: iq needs d = 4m or 4m+3");
    s.vertex_count = 2 * d + 2;
    s.edge_count = d * (d + 1);
    s.degree_if_regular = d;
    s.t_formula = static_cast<std::int64_t>(d / 2);
    s.r_formula = (d % 4 == 0) ? static_cast<std::int64_t>(d / 2)
                               : static_cast<std::int64_t>((3 * d + 1) / 2);
  } else if (name == "er") {
    need(1);
    std::uint64_t q = p[0];
    s.vertex_count = q * q + q + 1;
    s.edge_count = q * (q + 1) * (q + 1) / 2;
    s.degree_if_regular = std::nullopt;  // absolute points have degree q
    s.t_formula = static_cast<std::int64_t>((q % 2 == 0) ? q / 2 : (q + 1) / 2);
    s.r_formula = (q % 2 == 0) ? static_cast<std::int64_t>(q * (q + 1) / 2) : 0;
  } else if (name == "path") {
    need(1);
    s.vertex_count = p[0];
    s.edge_count = p[0] - 1;
    s.degree_if_regular = std::nullopt;
    s.t_formula = 1;
    s.r_formula = 0;
  } else if (name == "cycle") {
    need(1);
    s.vertex_count = p[0];
    s.edge_count = p[0];
    s.degree_if_regular = 2;
    s.t_formula = 1;
    s.r_formula = 1;
  } else {
    throw UsageError("factor_stats: unknown factor name '" + name + "'");
  }
  return s;
}

}  // namespace

FactorStats factor_stats(const std::string& name, const std::vector<std::uint32_t>& params) {
  FactorStats s = stats_row(name, params);
  Graph g = make_factor(name, params);
  if (g.vertex_count() != s.vertex_count || g.edge_count() != s.edge_count)
    throw Error("factor_stats: generated graph contradicts the closed form for " + name);
  return s;
}

Graph make_factor(const std::string& name, const std::vector<std::uint32_t>& params) {
  auto one = [&]() {
    if (params.size() != 1) throw UsageError("make_factor: " + name + " takes one parameter");
    return params[0];
  };
  if (name == "km") return complete_graph(one());
  if (name == "kqq") return complete_bipartite(one());
  if (name == "paley") return paley(one());
  if (name == "mms") return mms_cayley(one());
  if (name == "bdf") return bdf(one());
  if (name == "iq") return inductive_quad(one());
  if (name == "er") return er_polarity(one());
  if (name == "path") return path_graph(one());
  if (name == "cycle") return cycle_graph(one());
  throw UsageError("make_factor: unknown factor name '" + name + "'");
}

}  // namespace stargraph
