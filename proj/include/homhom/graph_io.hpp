#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "homhom/graph.hpp"

namespace homhom {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6, as published with nauty. Orders 0..62 use one size byte; 63 and
/// 64 use the 126-prefixed four-byte form. An optional ">>graph6<<" header
/// and trailing whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "n m" header, then m lines "u v" with 0 <= u < v < n. Blank lines and
/// '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Edge list if the first meaningful line holds two integers, else graph6.
Graph parse_graph_auto(std::string_view text);

} // namespace homhom
