#ifndef STARGRAPH_ERRORS_HPP
#define STARGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stargraph {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameters, malformed specs, unknown names. CLI exit code 2.
struct UsageError : Error {
  using Error::Error;
};

// A built object failed its own verification (disjointness, spanning,
// depth bound). This is the alarm; it should never fire. CLI exit code 3.
struct VerificationError : Error {
  using Error::Error;
};

// A construction's precondition does not hold for the given input
// (degenerate tree counts, no feasible U-set, no applicable case).
// CLI exit code 4.
struct InfeasibleError : Error {
  using Error::Error;
};

}  // namespace stargraph

#endif
