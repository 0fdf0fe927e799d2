#pragma once

// graph6 encoding (header-less variant). Bits of the upper triangle are
// taken column by column: x(0,1), x(0,2), x(1,2), x(0,3), ... packed six to
// a byte, big-end first, each byte offset by 63.

#include <cactus/graph.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cactus {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::length_error("graph too large for this graph6 writer");
  }
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character");
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw Graph6Error("unsupported graph6 size header");
    n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
        static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) {
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(pos + nbytes) + " characters, got " +
                      std::to_string(text.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int byte = text.back() - 63;
    if ((byte & ((1 << (6 - nbits % 6)) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

}  // namespace cactus
