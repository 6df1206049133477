#ifndef STARGRAPH_BOUNDS_HPP
#define STARGRAPH_BOUNDS_HPP

#include <cstdint>
#include <string>

#include "stargraph/graph.hpp"

namespace stargraph {

// floor(|E| / (|V|-1)), the combinatorial EDST upper bound.
std::int64_t tau_bound(const Graph& g);

// The same bound through the |E| = m|V| + c decomposition.
struct McDecomposition {
  std::int64_t m = 0, c = 0, tau = 0;
};
McDecomposition tau_via_mc(const Graph& g);

// For a d-regular graph: floor(d/2), or floor(d/2)+1 when |V| = 2.
std::int64_t tau_regular(std::int64_t degree, std::int64_t vertex_count);

enum class SigmaCase {
  BothExceed,  // rho_s >= tau_s and rho_n >= tau_n, strict somewhere
  BothEqual,   // rho_s = tau_s and rho_n = tau_n
  OneSide,     // exactly one of rho >= tau
  BothLess,    // rho_s < tau_s and rho_n < tau_n
};

const char* sigma_case_name(SigmaCase c);

// Four-case upper bound on product EDSTs from the factor tau/rho values.
std::pair<std::int64_t, SigmaCase> sigma_bound(std::int64_t tau_s, std::int64_t rho_s,
                                               std::int64_t tau_n, std::int64_t rho_n);

enum class Verdict { Max, WithinOne, WithinThree, Unknown };

const char* verdict_name(Verdict v);

struct BoundReport {
  std::int64_t tau = 0;       // product bound
  std::int64_t m = 0, c = 0;  // decomposition of the product
  std::int64_t tau_s = 0, tau_n = 0;
  std::int64_t rho_s = 0, rho_n = 0;
  std::int64_t sigma = 0;
  SigmaCase sigma_case = SigmaCase::BothLess;
  std::int64_t constructed = 0;
  std::int64_t mu_gap = 0;  // min(tau, sigma) - constructed
  Verdict verdict = Verdict::Unknown;
};

// extended: a Maximum or Property-1 construction produced the count.
// property1_held: a Property-1 witness backed the construction.
BoundReport make_bound_report(const Graph& structure, const Graph& supernode,
                              const Graph& product, std::int64_t constructed,
                              bool extended, bool property1_held);

Verdict optimality_verdict(std::int64_t constructed, std::int64_t tau, std::int64_t sigma,
                           SigmaCase sigma_case, bool extended, bool property1_held);

}  // namespace stargraph

#endif
