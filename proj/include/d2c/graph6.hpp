#ifndef D2C_GRAPH6_HPP
#define D2C_GRAPH6_HPP

#include <string>
#include <string_view>

#include "d2c/graph.hpp"

namespace d2c {

/// Parses one graph6 string (no trailing newline). Throws
/// std::invalid_argument on malformed header, wrong data length, bytes
/// outside 63..126, or nonzero padding bits.
Graph decode_graph6(std::string_view text);

/// Bit-exact inverse of decode_graph6. Supports n <= 258047 (single-byte
/// and 4-byte length headers).
std::string encode_graph6(const Graph& g);

}  // namespace d2c

#endif
