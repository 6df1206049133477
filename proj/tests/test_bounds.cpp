#include <doctest.h>

#include <random>

#include "stargraph/bounds.hpp"
#include "stargraph/factors.hpp"
#include "stargraph/star_product.hpp"

using namespace stargraph;

TEST_CASE("tau bound") {
  CHECK(tau_bound(petersen().product) == 1);
  CHECK(tau_bound(complete_graph(4)) == 2);
  CHECK(tau_bound(toric_chimera(1).product) == 3);
}

TEST_CASE("tau via m/c decomposition") {
  auto mc0 = tau_via_mc(chimera(0).product);
  CHECK(mc0.m == 2);
  CHECK(mc0.tau == 2);

  auto mct = tau_via_mc(toric_chimera(1).product);
  CHECK(mct.m == 3);
  CHECK(mct.c == 0);
  CHECK(mct.tau == 3);

  auto mck4 = tau_via_mc(complete_graph(4));
  CHECK(mck4.m == 1);
  CHECK(mck4.c == 2);
  CHECK(mck4.tau == 2);  // m+c = |V|-1 -> m+1
}

TEST_CASE("tau_regular") {
  CHECK(tau_regular(6, 32) == 3);   // slimfly(4)
  CHECK(tau_regular(3, 10) == 1);   // petersen
  CHECK(tau_regular(1, 2) == 1);    // K_2 special case
  for (const StarProduct& sp : {slimfly(3), slimfly(4), slimfly(5), petersen(),
                                bundlefly(3, 5, 0), bundlefly(4, 5, 0)}) {
    auto deg = sp.product.regular_degree();
    REQUIRE(deg.has_value());
    CHECK(tau_regular(static_cast<std::int64_t>(*deg), sp.product.vertex_count()) ==
          tau_bound(sp.product));
  }
}

TEST_CASE("tau_via_mc equals tau_bound on random connected graphs") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 1000; ++iter) {
    Vertex n = 2 + rng() % 29;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back(make_edge(v, rng() % v));
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 100 < 25) edges.push_back({a, b});
    Graph g(n, std::move(edges));
    CHECK(tau_via_mc(g).tau == tau_bound(g));
  }
}

TEST_CASE("sigma case table") {
  // rho = tau on both sides
  CHECK(sigma_bound(2, 2, 1, 1) == std::pair<std::int64_t, SigmaCase>{3, SigmaCase::BothEqual});
  // rho < tau on both sides
  CHECK(sigma_bound(2, 0, 2, 1) ==
        std::pair<std::int64_t, SigmaCase>{3, SigmaCase::BothLess});
  // both >=, strict somewhere
  CHECK(sigma_bound(1, 4, 1, 1) ==
        std::pair<std::int64_t, SigmaCase>{3, SigmaCase::BothExceed});
  // exactly one side
  CHECK(sigma_bound(2, 7, 1, 0) ==
        std::pair<std::int64_t, SigmaCase>{3, SigmaCase::OneSide});
}

TEST_CASE("chimera bounds") {
  for (std::uint32_t k : {0u, 1u, 2u}) CHECK(tau_bound(chimera(k).product) == 2);
  CHECK(tau_bound(toric_chimera(1).product) == 3);
  CHECK(tau_bound(toric_chimera(2).product) == 3);
}

TEST_CASE("verdicts") {
  CHECK(optimality_verdict(3, 3, 4, SigmaCase::BothExceed, true, false) == Verdict::Max);
  CHECK(optimality_verdict(2, 3, 3, SigmaCase::OneSide, true, false) == Verdict::WithinOne);
  CHECK(optimality_verdict(1, 3, 3, SigmaCase::OneSide, false, false) ==
        Verdict::WithinThree);
  // guaranteed-max conditions
  CHECK(optimality_verdict(3, 4, 4, SigmaCase::BothEqual, true, false) == Verdict::Max);
  CHECK(optimality_verdict(3, 4, 4, SigmaCase::BothLess, true, true) == Verdict::Max);
}
