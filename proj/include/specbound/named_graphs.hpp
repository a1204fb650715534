#pragma once

#include <string_view>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

// Families and fixed graphs addressable by name. Supported names:
//   complete n | cycle n | star n | path n | turan part_size parts |
//   complete_multipartite s1 s2 ... | kneser n k | petersen |
//   tilley | h2 | gq_2_1 | gq_2_4
// Throws UnknownName / BadParams.
Graph named_graph(std::string_view name, const std::vector<long>& params = {});

}  // namespace specbound
