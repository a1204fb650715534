#pragma once

#include <string_view>

#include "specbound/graph.hpp"

namespace specbound {

// Text format: first significant line is the vertex count, each following
// line one edge "u v". Blank lines and '#' comments are ignored; duplicate
// edges collapse. Throws ParseError / VertexOutOfRange / SelfLoop.
Graph parse_edgelist(std::string_view text);

std::string write_edgelist(const Graph& g);

}  // namespace specbound
