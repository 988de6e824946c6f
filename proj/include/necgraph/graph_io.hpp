#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "necgraph/graph.hpp"

namespace necgraph {

// Raised when serialized graph or geometry text is malformed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 serialization.
//
// Header: a single byte v+63 for v <= 62; for 63 <= v <= 258047 the byte
// '~' (126) followed by three bytes carrying v big-endian in 6-bit groups,
// each offset by 63. Body: the upper-triangle bits x(i,j) for j = 1..v-1,
// i = 0..j-1 (column-major), packed 6 bits per byte MSB first, each byte
// offset by 63, zero-padded to a byte boundary.
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects bytes outside 63..126, truncated input, trailing
// bytes, and nonzero padding bits.
Graph decode_graph6(std::string_view text);

// Edge-list text: a "v e" header line, then e lines "x y" with 0-indexed
// endpoints, x < y, sorted lexicographically.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

}  // namespace necgraph
