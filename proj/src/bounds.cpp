#include "stargraph/bounds.hpp"

#include <algorithm>

namespace stargraph {

std::int64_t tau_bound(const Graph& g) {
  if (g.vertex_count() < 2) throw UsageError("tau_bound: |V| >= 2 required");
  return static_cast<std::int64_t>(g.edge_count()) / (g.vertex_count() - 1);
}

McDecomposition tau_via_mc(const Graph& g) {
  if (g.vertex_count() < 2) throw UsageError("tau_via_mc: |V| >= 2 required");
  McDecomposition d;
  std::int64_t v = g.vertex_count();
  std::int64_t e = static_cast<std::int64_t>(g.edge_count());
  d.m = e / v;
  d.c = e % v;
  d.tau = (d.m + d.c < v - 1) ? d.m : d.m + 1;
  return d;
}

std::int64_t tau_regular(std::int64_t degree, std::int64_t vertex_count) {
  if (vertex_count < 2) throw UsageError("tau_regular: |V| >= 2 required");
  if (vertex_count == 2) return degree / 2 + 1;
  return degree / 2;
}

const char* sigma_case_name(SigmaCase c) {
  switch (c) {
    case SigmaCase::BothExceed: return "rho>=tau both, strict";
    case SigmaCase::BothEqual: return "rho=tau both";
    case SigmaCase::OneSide: return "rho>=tau one side";
    case SigmaCase::BothLess: return "rho<tau both";
  }
  return "?";
}

std::pair<std::int64_t, SigmaCase> sigma_bound(std::int64_t tau_s, std::int64_t rho_s,
                                               std::int64_t tau_n, std::int64_t rho_n) {
  bool ge_s = rho_s >= tau_s, ge_n = rho_n >= tau_n;
  if (rho_s == tau_s && rho_n == tau_n)
    return {tau_s + tau_n, SigmaCase::BothEqual};
  if (ge_s && ge_n) return {tau_s + tau_n + 1, SigmaCase::BothExceed};
  if (ge_s || ge_n) return {tau_s + tau_n, SigmaCase::OneSide};
  return {tau_s + tau_n - 1, SigmaCase::BothLess};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Max: return "Max";
    case Verdict::WithinOne: return "WithinOne";
    case Verdict::WithinThree: return "WithinThree";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

Verdict optimality_verdict(std::int64_t constructed, std::int64_t tau, std::int64_t sigma,
                           SigmaCase sigma_case, bool extended, bool property1_held) {
  std::int64_t cap = std::min(tau, sigma);
  if (constructed == cap) return Verdict::Max;
  if (extended && sigma_case == SigmaCase::BothEqual) return Verdict::Max;
  if (extended && sigma_case == SigmaCase::BothLess && property1_held) return Verdict::Max;
  if (extended) return Verdict::WithinOne;
  if (constructed >= 0) return Verdict::WithinThree;
  return Verdict::Unknown;
}

BoundReport make_bound_report(const Graph& structure, const Graph& supernode,
                              const Graph& product, std::int64_t constructed,
                              bool extended, bool property1_held) {
  BoundReport r;
  McDecomposition mc = tau_via_mc(product);
  r.tau = tau_bound(product);
  if (mc.tau != r.tau) throw Error("bound report: m/c decomposition disagrees with tau");
  r.m = mc.m;
  r.c = mc.c;
  r.tau_s = tau_bound(structure);
  r.tau_n = tau_bound(supernode);
  r.rho_s = static_cast<std::int64_t>(structure.edge_count()) -
            r.tau_s * (structure.vertex_count() - 1);
  r.rho_n = static_cast<std::int64_t>(supernode.edge_count()) -
            r.tau_n * (supernode.vertex_count() - 1);
  auto [sigma, scase] = sigma_bound(r.tau_s, r.rho_s, r.tau_n, r.rho_n);
  r.sigma = sigma;
  r.sigma_case = scase;
  r.constructed = constructed;
  r.mu_gap = std::min(r.tau, r.sigma) - constructed;
  if (r.mu_gap < 0)
    throw VerificationError("bound report: constructed count exceeds min(tau, sigma)");
  r.verdict = optimality_verdict(constructed, r.tau, r.sigma, scase, extended, property1_held);
  return r;
}

}  // namespace stargraph
