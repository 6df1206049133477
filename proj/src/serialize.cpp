#include "stargraph/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace stargraph {

using nlohmann::json;

namespace {

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from(const json& j) {
  Vertex n = j.at("n").get<Vertex>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  return Graph(n, std::move(edges));
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(2) + "\n"; }

Graph graph_from_json(const std::string& text) {
  return graph_from(json::parse(text));
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string edstdata_to_json(const FactorEdstData& d) {
  json j;
  j["graph"] = graph_json(d.graph);
  json trees = json::array();
  for (const auto& t : d.trees) {
    json edges = json::array();
    for (const auto& [a, b] : t.edge_list()) edges.push_back({a, b});
    trees.push_back({{"root", t.root()}, {"edges", std::move(edges)}});
  }
  j["trees"] = std::move(trees);
  json rest = json::array();
  for (const auto& [a, b] : d.nontree.edges) rest.push_back({a, b});
  j["nontree"] = std::move(rest);
  if (d.u_set)
    j["u_set"] = *d.u_set;
  else
    j["u_set"] = nullptr;
  j["t"] = d.t;
  j["r"] = d.r;
  j["anchor"] = d.anchor;
  return j.dump(2) + "\n";
}

std::string treeset_to_json(const StarProduct& sp, const TreeSet& ts, Mode mode,
                            std::uint64_t seed) {
  json j;
  j["preset"] = sp.name;
  j["mode"] = mode_name(mode);
  j["seed"] = seed;
  j["structure_n"] = sp.structure.vertex_count();
  j["supernode_n"] = sp.supernode.vertex_count();
  j["construction"] = ts.construction;
  j["product"] = graph_json(sp.product);
  json trees = json::array();
  for (const auto& t : ts.trees) {
    json edges = json::array();
    for (const auto& [a, b] : t.tree.edge_list()) {
      auto [ax, ay] = sp.coords(a);
      auto [bx, by] = sp.coords(b);
      edges.push_back({{ax, ay}, {bx, by}});
    }
    auto [rx, ry] = sp.coords(t.tree.root());
    trees.push_back({{"kind", tree_kind_name(t.kind)},
                     {"index", t.index},
                     {"root", {rx, ry}},
                     {"depth", t.measured_depth},
                     {"bound", t.depth_bound},
                     {"edges", std::move(edges)}});
  }
  j["trees"] = std::move(trees);
  return j.dump(2) + "\n";
}

std::string treeset_to_dot(const StarProduct& sp, const TreeSet& ts) {
  static const char* palette[] = {"red",    "blue",   "green3", "orange",
                                  "purple", "brown",  "cyan3",  "magenta",
                                  "gold3",  "gray40", "navy",   "darkgreen"};
  std::set<Edge> used;
  std::ostringstream os;
  os << "graph trees {\n";
  for (std::size_t i = 0; i < ts.trees.size(); ++i) {
    const char* color = palette[i % (sizeof(palette) / sizeof(palette[0]))];
    for (const auto& [a, b] : ts.trees[i].tree.edge_list()) {
      os << "  " << a << " -- " << b << " [color=" << color << "];\n";
      used.insert({a, b});
    }
  }
  for (const auto& e : sp.product.edges())
    if (!used.count(e))
      os << "  " << e.first << " -- " << e.second << " [color=gray80];\n";
  os << "}\n";
  return os.str();
}

void verify_treeset_json(const std::string& text) {
  json j = json::parse(text);
  Graph product = graph_from(j.at("product"));
  Vertex nn = j.at("supernode_n").get<Vertex>();
  std::vector<RootedTree> trees;
  for (const auto& tj : j.at("trees")) {
    std::vector<Edge> edges;
    for (const auto& e : tj.at("edges")) {
      Vertex a = e.at(0).at(0).get<Vertex>() * nn + e.at(0).at(1).get<Vertex>();
      Vertex b = e.at(1).at(0).get<Vertex>() * nn + e.at(1).at(1).get<Vertex>();
      edges.push_back(make_edge(a, b));
    }
    for (const auto& [a, b] : edges)
      if (!product.has_edge(a, b))
        throw VerificationError("treeset: tree edge not present in the product graph");
    Vertex root = tj.at("root").at(0).get<Vertex>() * nn + tj.at("root").at(1).get<Vertex>();
    RootedTree t = bfs_spanning_tree(EdgeSubgraph(product.vertex_count(), edges), root);
    if (!verify_spanning_tree(product, t))
      throw VerificationError("treeset: stored edges do not form a spanning tree");
    int measured = tree_depth(t);
    if (measured != tj.at("depth").get<int>())
      throw VerificationError("treeset: stored depth does not match the edges");
    if (measured > tj.at("bound").get<std::int64_t>())
      throw VerificationError("treeset: depth exceeds the recorded bound");
    trees.push_back(std::move(t));
  }
  if (!verify_edge_disjoint(trees))
    throw VerificationError("treeset: trees share an edge");
}

BijectionFamily bijections_from_json(const std::string& text, const Graph& structure,
                                     Vertex supernode_n) {
  json j = json::parse(text);
  BijectionFamily f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = it.key();  // "(x,x')"
    Vertex a = 0, b = 0;
    if (sscanf(key.c_str(), "(%u,%u)", &a, &b) != 2)
      throw UsageError("BadBijection: key must look like \"(x,x')\"");
    std::vector<Vertex> m;
    for (const auto& y : it.value()) m.push_back(y.get<Vertex>());
    f.arcs.push_back({a, b});
    f.maps.push_back(std::move(m));
  }
  f.build_inverses();
  f.validate(structure, supernode_n);
  return f;
}

std::string Table::to_csv() const {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ",";
      bool quote = cells[i].find_first_of(",\"") != std::string::npos;
      if (!quote) {
        os << cells[i];
      } else {
        os << '"';
        for (char ch : cells[i]) {
          if (ch == '"') os << '"';
          os << ch;
        }
        os << '"';
      }
    }
    os << "\n";
  };
  emit(headers);
  for (const auto& r : rows) emit(r);
  return os.str();
}

std::string Table::to_json() const {
  json out = json::array();
  for (const auto& r : rows) {
    json row;
    for (std::size_t i = 0; i < headers.size() && i < r.size(); ++i) row[headers[i]] = r[i];
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

std::string Table::to_md() const {
  std::ostringstream os;
  os << "|";
  for (const auto& h : headers) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < headers.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << " " << c << " |";
    os << "\n";
  }
  return os.str();
}

std::string Table::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  if (format == "md") return to_md();
  throw UsageError("unknown table format '" + format + "'");
}

}  // namespace stargraph
