// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stargraph/bounds.hpp"
#include "stargraph/edst.hpp"
#include "stargraph/factors.hpp"
#include "stargraph/product_edst.hpp"
#include "stargraph/serialize.hpp"
#include "stargraph/star_product.hpp"

using namespace stargraph;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  std::ostringstream detail;
  bool ok = true;

  Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    FAILED: " << what << "\n";
    }
  }

  void finish() {
    std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", id, name.c_str());
    if (!ok) {
      std::cout << detail.str();
      ++g_failures;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::string> kConnectedPresets = {
    "slimfly:3",        "slimfly:4",       "slimfly:5",
    "bundlefly:3,5",    "polarstar:2,iq:3", "polarstar:3,qr:5",
};

}  // namespace

// 1. Count identities on every preset, under 1 s each.
static void criterion1() {
  Criterion c(1, "count identities |V*|=|Vs||Vn|, |E*|=|Vs||En|+|Vn||Es|");
  std::vector<std::string> presets = kConnectedPresets;
  presets.push_back("chimera:0");
  presets.push_back("chimera:1");
  presets.push_back("chimera:2");
  presets.push_back("toric-chimera:1");
  for (const auto& name : presets) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      StarProduct sp = make_preset(name, 0);
      c.require(verify_product_counts(sp), name + ": count identity violated");
      std::uint64_t vs = sp.structure.vertex_count(), vn = sp.supernode.vertex_count();
      std::uint64_t es = sp.structure.edge_count(), en = sp.supernode.edge_count();
      c.require(sp.product.vertex_count() == vs * vn, name + ": |V*| mismatch");
      c.require(sp.product.edge_count() == vs * en + vn * es, name + ": |E*| mismatch");
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
    c.require(seconds_since(t0) < 1.0, name + ": construction exceeded 1 s");
  }
  c.finish();
}

// 2. Packer count equals the Nash-Williams maximum on the small-factor corpus.
static void criterion2() {
  Criterion c(2, "oracle equivalence: matroid packer = Nash-Williams maximum");
  auto t0 = std::chrono::steady_clock::now();
  struct Entry {
    std::string label;
    Graph g;
  };
  std::vector<Entry> corpus;
  corpus.push_back({"K_4", complete_graph(4)});
  corpus.push_back({"K_5", complete_graph(5)});
  corpus.push_back({"C_5", cycle_graph(5)});
  corpus.push_back({"K_{3,3}", complete_bipartite(3)});
  corpus.push_back({"ER_2", er_polarity(2)});
  corpus.push_back({"paley(5)", paley(5)});
  corpus.push_back({"bdf(3)", bdf(3)});
  corpus.push_back({"iq(3)", inductive_quad(3)});
  for (const auto& [label, g] : corpus) {
    if (g.vertex_count() > 10) {
      c.require(false, label + ": corpus entry exceeds 10 vertices");
      continue;
    }
    try {
      FactorEdstData d = max_edst_pack(g);
      int oracle = nash_williams_max(g);
      c.require(d.t == oracle,
                label + ": packer " + std::to_string(d.t) + " != oracle " +
                    std::to_string(oracle));
    } catch (const std::exception& e) {
      c.require(false, label + ": " + e.what());
    }
  }
  c.require(seconds_since(t0) < 10.0, "oracle corpus exceeded 10 s");
  c.finish();
}

// 3. Factor table: packer reproduces every published (t, r) pair.
static void criterion3() {
  Criterion c(3, "factor table (t, r) values reproduced by the packer");
  struct Row {
    const char* name;
    std::uint32_t param;
    int t, r;
  };
  const std::vector<Row> rows = {
      {"paley", 5, 1, 1}, {"paley", 13, 3, 3}, {"kqq", 3, 1, 4},  {"kqq", 4, 2, 2},
      {"kqq", 5, 2, 7},   {"er", 2, 1, 3},     {"er", 3, 2, 0},   {"iq", 3, 1, 5},
      {"iq", 4, 2, 2},    {"bdf", 3, 1, 4},    {"bdf", 4, 2, 2},  {"km", 4, 2, 0},
      {"km", 5, 2, 2},    {"mms", 4, 1, 1},    {"mms", 5, 1, 1},  {"mms", 7, 2, 2},
  };
  for (const auto& row : rows) {
    std::string label = std::string(row.name) + "(" + std::to_string(row.param) + ")";
    try {
      FactorStats st = factor_stats(row.name, {row.param});
      c.require(st.t_formula == row.t && st.r_formula == row.r,
                label + ": closed form disagrees with the published derivation");
      FactorEdstData d = max_edst_pack(make_factor(row.name, {row.param}));
      c.require(d.t == row.t, label + ": packer t = " + std::to_string(d.t) +
                                  ", expected " + std::to_string(row.t));
      c.require(d.r == row.r, label + ": packer r = " + std::to_string(d.r) +
                                  ", expected " + std::to_string(row.r));
    } catch (const std::exception& e) {
      c.require(false, label + ": " + e.what());
    }
  }
  c.finish();
}

// 4. Universal construction: exactly t_s + t_n - 2 verified trees per preset.
static void criterion4() {
  Criterion c(4, "universal construction builds t_s+t_n-2 verified trees");
  for (const auto& name : kConnectedPresets) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      StarProduct sp = make_preset(name, 0);
      FactorEdstData sd = max_edst_pack(sp.structure);
      FactorEdstData nd = max_edst_pack(sp.supernode);
      int expected = sd.t + nd.t - 2;
      if (expected == 0) {
        bool threw = false;
        try {
          universal_construction(sp, sd, nd);
        } catch (const InfeasibleError&) {
          threw = true;
        }
        c.require(threw, name + ": degenerate case must be signaled");
      } else {
        TreeSet ts = universal_construction(sp, sd, nd);  // self-verifying
        c.require(static_cast<int>(ts.trees.size()) == expected,
                  name + ": got " + std::to_string(ts.trees.size()) + " trees, expected " +
                      std::to_string(expected));
      }
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
    c.require(seconds_since(t0) < 30.0, name + ": exceeded 30 s");
  }
  c.finish();
}

// 5. Maximum construction on the r = t presets; petersen yields one tree.
static void criterion5() {
  Criterion c(5, "maximum construction: slimfly(4) and bundlefly(4,5) reach tau");
  for (const std::string name : {"slimfly:4", "bundlefly:4,5"}) {
    try {
      StarProduct sp = make_preset(name, 0);
      FactorEdstData sd = max_edst_pack(sp.structure);
      FactorEdstData nd = max_edst_pack(sp.supernode);
      c.require(sd.r == sd.t && nd.r == nd.t, name + ": expected the r = t case");
      TreeSet ts = maximum_construction(sp, sd, nd);
      c.require(static_cast<int>(ts.trees.size()) == sd.t + nd.t,
                name + ": expected t_s+t_n trees");
      BoundReport rep = make_bound_report(sp.structure, sp.supernode, sp.product,
                                          static_cast<std::int64_t>(ts.trees.size()), true,
                                          false);
      c.require(rep.verdict == Verdict::Max, name + ": verdict is not Max");
      c.require(rep.constructed == rep.tau, name + ": count does not meet tau");
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }
  try {
    RunResult pet = run_edst(petersen(), Mode::Maximum);
    c.require(pet.ts.trees.size() == 1, "petersen: expected exactly 1 tree");
  } catch (const std::exception& e) {
    c.require(false, std::string("petersen: ") + e.what());
  }
  c.finish();
}

// 6. Depth bounds: measured <= theorem bound for every produced tree.
static void criterion6() {
  Criterion c(6, "depth bounds hold for every produced tree");
  std::vector<std::string> presets = kConnectedPresets;
  presets.push_back("petersen");
  for (const auto& name : presets) {
    try {
      StarProduct sp = make_preset(name, 0);
      FactorEdstData sd = max_edst_pack(sp.structure);
      FactorEdstData nd = max_edst_pack(sp.supernode);
      for (Mode m : {Mode::Universal, Mode::LowDepth, Mode::Maximum, Mode::Property1}) {
        TreeSet ts;
        try {
          switch (m) {
            case Mode::Universal: ts = universal_construction(sp, sd, nd); break;
            case Mode::LowDepth: ts = low_depth_construction(sp, sd, nd); break;
            case Mode::Maximum: ts = maximum_construction(sp, sd, nd); break;
            default: {
              auto w = property1_search(sp, sd, nd);
              if (!w) continue;
              ts = property1_construction(sp, sd, nd, *w);
            }
          }
        } catch (const InfeasibleError&) {
          continue;
        }
        for (const auto& row : depth_report(ts)) {
          c.require(row.measured <= row.bound,
                    name + "/" + mode_name(m) + ": depth " + std::to_string(row.measured) +
                        " > bound " + std::to_string(row.bound));
          if (m == Mode::LowDepth && row.kind == TreeKind::LowDepthTPrime) {
            int ds1 = tree_depth(sd.trees[0]);
            int dni = tree_depth(nd.trees[row.index - 1]);
            c.require(row.measured <= ds1 + 2 * dni,
                      name + ": low-depth tree exceeds d_s1 + 2 d_ni");
          }
        }
      }
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }
  c.finish();
}

// 7. Bound calculus: decomposition agreement, regular shortcut, sigma table,
//    chimera bounds.
static void criterion7() {
  Criterion c(7, "bound calculus (m/c, regular, sigma cases, chimera)");
  std::mt19937 rng(97);
  for (int iter = 0; iter < 1000; ++iter) {
    Vertex n = 2 + rng() % 29;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back(make_edge(v, rng() % v));
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 100 < 20) edges.push_back({a, b});
    Graph g(n, std::move(edges));
    if (tau_via_mc(g).tau != tau_bound(g)) {
      c.require(false, "tau_via_mc != tau_bound on a random graph (iter " +
                           std::to_string(iter) + ")");
      break;
    }
  }
  for (const std::string name :
       {"slimfly:3", "slimfly:4", "slimfly:5", "bundlefly:3,5", "petersen",
        "toric-chimera:1"}) {
    StarProduct sp = make_preset(name, 0);
    auto deg = sp.product.regular_degree();
    if (!deg) {
      c.require(false, name + ": expected a regular preset");
      continue;
    }
    c.require(tau_regular(static_cast<std::int64_t>(*deg), sp.product.vertex_count()) ==
                  tau_bound(sp.product),
              name + ": tau_regular disagrees with tau_bound");
  }
  using P = std::pair<std::int64_t, SigmaCase>;
  c.require(sigma_bound(2, 3, 1, 1) == P{4, SigmaCase::BothExceed},
            "sigma case 1 (both >=, strict)");
  c.require(sigma_bound(2, 2, 1, 1) == P{3, SigmaCase::BothEqual}, "sigma case 2 (both =)");
  c.require(sigma_bound(2, 5, 2, 1) == P{4, SigmaCase::OneSide}, "sigma case 3 (one side)");
  c.require(sigma_bound(2, 1, 2, 0) == P{3, SigmaCase::BothLess}, "sigma case 4 (both <)");
  for (std::uint32_t k : {0u, 1u, 2u})
    c.require(tau_bound(chimera(k).product) == 2,
              "chimera(" + std::to_string(k) + ") tau != 2");
  c.require(tau_bound(toric_chimera(1).product) == 3, "toric chimera tau != 3");
  c.finish();
}

// 8. Envelope: constructed >= sigma-1 for extended modes, >= sigma-3 universal.
static void criterion8() {
  Criterion c(8, "construction counts stay within the sigma envelope");
  std::vector<std::string> presets = kConnectedPresets;
  presets.push_back("petersen");
  for (const auto& name : presets) {
    try {
      StarProduct sp = make_preset(name, 0);
      RunResult ext = run_edst(sp, Mode::Auto);
      c.require(ext.ts.extended, name + ": auto did not reach an extended construction");
      c.require(static_cast<std::int64_t>(ext.ts.trees.size()) >= ext.report.sigma - 1,
                name + ": extended count below sigma-1");
      FactorEdstData sd = max_edst_pack(sp.structure);
      FactorEdstData nd = max_edst_pack(sp.supernode);
      if (sd.t + nd.t > 2) {
        TreeSet uni = universal_construction(sp, sd, nd);
        c.require(static_cast<std::int64_t>(uni.trees.size()) >= ext.report.sigma - 3,
                  name + ": universal count below sigma-3");
      }
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }
  c.finish();
}

// 9. Property-1: witnesses on K_4 x K_4 and K_5 x K_5; absence under a full
//    |V_n|-cycle twist.
static void criterion9() {
  Criterion c(9, "property-1 search finds witnesses exactly when they exist");
  for (std::uint32_t m : {4u, 5u}) {
    std::string label = "K_" + std::to_string(m) + " x K_" + std::to_string(m);
    try {
      StarProduct sp = cartesian_product(complete_graph(m), complete_graph(m));
      FactorEdstData sd = max_edst_pack(sp.structure);
      FactorEdstData nd = max_edst_pack(sp.supernode);
      auto w = property1_search(sp, sd, nd);
      c.require(w.has_value(), label + ": no witness found");
      if (w) {
        TreeSet ts = property1_construction(sp, sd, nd, *w);
        c.require(static_cast<int>(ts.trees.size()) == sd.t + nd.t - 1,
                  label + ": expected t_s+t_n-1 trees");
      }
    } catch (const std::exception& e) {
      c.require(false, label + ": " + e.what());
    }
  }
  try {
    BijectionFamily f;
    f.arcs.push_back({0, 1});
    f.maps.push_back({1, 2, 3, 4, 0});
    f.build_inverses();
    StarProduct sp = star_product(complete_graph(2), cycle_graph(5), f, "full-cycle");
    FactorEdstData sd = max_edst_pack(sp.structure);
    FactorEdstData nd = max_edst_pack(sp.supernode);
    c.require(!property1_search(sp, sd, nd).has_value(),
              "full-cycle twist: witness reported where none can exist");
  } catch (const std::exception& e) {
    c.require(false, std::string("full-cycle twist: ") + e.what());
  }
  c.finish();
}

// 10. Determinism: identical seeds give byte-identical serialized tree sets.
static void criterion10() {
  Criterion c(10, "identical seeds produce byte-identical tree sets");
  for (const std::string name : {"slimfly:4", "bundlefly:3,5", "polarstar:3,qr:5"}) {
    try {
      StarProduct a = make_preset(name, 2024);
      StarProduct b = make_preset(name, 2024);
      RunResult ra = run_edst(a, Mode::Auto);
      RunResult rb = run_edst(b, Mode::Auto);
      c.require(treeset_to_json(a, ra.ts, Mode::Auto, 2024) ==
                    treeset_to_json(b, rb.ts, Mode::Auto, 2024),
                name + ": serialized outputs differ");
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }
  c.finish();
}

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
