#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "critcheck/graph.hpp"

namespace critcheck {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Short graph6 form only (n <= 62). The upper triangle is packed column by
// column, six bits per byte, each byte offset by 63.
std::string encode_graph6(const Graph& g);

/// Accepts one line, optionally terminated by "\n". Padding bits in the last
/// byte are ignored, matching nauty's reader.
Graph decode_graph6(std::string_view line);

}  // namespace critcheck
