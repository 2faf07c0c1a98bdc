#pragma once

#include <istream>
#include <string>

#include "polybinom/graph.hpp"
#include "polybinom/poset.hpp"

namespace polybinom {

/// Plain-text graph: "vertices <n>" then "edge <u> <v>" lines (0-based,
/// loops as "edge u u"). '#' starts a comment. Errors are InputError and
/// carry "<source>:<line>:".
Multigraph parse_graph(std::istream& in, const std::string& source = "<input>");
Multigraph read_graph_file(const std::string& path);

/// Plain-text poset: "elements <d>" then "cover <a> <b>" lines.
Poset parse_poset(std::istream& in, const std::string& source = "<input>");
Poset read_poset_file(const std::string& path);

}  // namespace polybinom
