#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cayleynut/graph.hpp"

namespace cayleynut {

// graph6 encoding of the adjacency bitvector (upper triangle in column
// order), per the standard format: printable bytes in 63..126, order header
// of 1, 4 or 8 bytes. Supports n up to 68719476735.
std::string encode_graph6(const Graph& g);

// Strict decoder; throws Graph6ParseError with the byte offset of the first
// problem. The whole string must be consumed.
Graph decode_graph6(std::string_view s);

// One "u v" pair per line, 0-indexed, u < v, sorted.
std::string encode_edge_list(const Graph& g);

// {"edges": [[u, v], ...], "n": ..., "provenance": ...}
nlohmann::json graph_to_json(const Graph& g);

}  // namespace cayleynut
