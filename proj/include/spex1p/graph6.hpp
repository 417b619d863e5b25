#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spex1p/graph.hpp"

namespace spex1p {

class Graph6ParseError : public std::runtime_error {
public:
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

// Standard graph6 text, short form for n <= 62 and the 3-byte extended form
// up to n = 258047.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace spex1p
