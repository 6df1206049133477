#ifndef STARGRAPH_REPORT_HPP
#define STARGRAPH_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stargraph/serialize.hpp"

namespace stargraph {

// One row per preset: computed degree, bounds, packer t/r values, the
// construction that fired and its verdict, with the published formula values
// printed alongside and flagged on mismatch. Row-level failures land in the
// error column.
Table network_table(const std::vector<std::string>& presets, std::uint64_t seed);

// Factor-graph table for the named rows (packer-derived t/r authoritative,
// published values annotated).
Table factor_table();

extern const std::vector<std::string> kDefaultPresets;

}  // namespace stargraph

#endif
