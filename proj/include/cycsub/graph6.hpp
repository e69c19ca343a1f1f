#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cycsub/graph.hpp"

namespace cycsub {

// Standard graph6 encoding: N(n) then the upper triangle in column order,
// six bits per printable byte. No header, no trailing newline.
std::string to_graph6(const Graph& g);

// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
// whitespace are accepted. Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

// Reads every nonblank line of a stream as graph6.
std::vector<Graph> read_graph6_all(std::istream& in);

}  // namespace cycsub
