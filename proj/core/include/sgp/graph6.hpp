#pragma once

#include <string>
#include <string_view>

#include "sgp/graph.hpp"

namespace sgp {

// Decodes one graph6 line (short form, n <= 62). An optional ">>graph6<<"
// header is accepted. Throws ParseError on malformed input and InvalidGraph
// when the encoded graph is disconnected.
Graph from_graph6(std::string_view line);

// Canonical short-form encoding of the adjacency as stored; inverse of
// from_graph6 on its own output.
std::string to_graph6(const Graph& g);

}  // namespace sgp
