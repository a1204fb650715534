#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "specbound/graph.hpp"

namespace specbound {

inline constexpr std::int64_t kDefaultGraph6MaxN = 1'000'000;

// Decodes one graph6 line (optional trailing newline tolerated). Throws
// MalformedGraph6 on grammar violations, UnsupportedFormat on sparse6 or
// digraph6 input, and Overflow when the encoded vertex count exceeds max_n.
Graph parse_graph6(std::string_view line, std::int64_t max_n = kDefaultGraph6MaxN);

// Canonical graph6 encoding: short size form for n <= 62, the 3-byte form up
// to 258047 and the 6-byte form beyond, upper-triangle bits column by column.
std::string write_graph6(const Graph& g);

}  // namespace specbound
