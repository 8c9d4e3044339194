#pragma once
#include <ostream>
#include <string>

#include "tilesub/gmap.hpp"
#include "tilesub/json_io.hpp"

namespace tilesub {

// Exit codes: 0 success or yes, 1 decidable no, 2 input or usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// 1-skeleton as an undirected DOT multigraph; marks become node attributes.
std::string to_dot(const GMap& g, const VertexLabeling& marks = {});

}  // namespace tilesub
