#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "walkspec/errors.hpp"
#include "walkspec/graph/graph.hpp"

namespace walkspec::graph {

// graph6 codec: 6-bit big-endian groups, column-major upper triangle,
// printable offset 63. One graph per line; the optional ">>graph6<<" header
// is tolerated on input and never emitted.

inline Graph parseGraph6(std::string_view text) {
  std::size_t off = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) off = header.size();
  if (off >= text.size()) throw ParseError("graph6: empty input", off);

  auto byteAt = [&](std::size_t i) -> unsigned {
    unsigned c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: character out of range", i);
    return c - 63;
  };

  std::size_t n;
  if (byteAt(off) < 63) {
    n = byteAt(off);
    ++off;
  } else {
    // '~' prefix: 18-bit order in the next three bytes ('~~' + 36 bits is
    // beyond this library's 64-vertex cap and rejected by the order check)
    if (off + 3 >= text.size()) throw ParseError("graph6: truncated order field", text.size());
    if (static_cast<unsigned char>(text[off + 1]) == '~')
      throw ParseError("graph6: order exceeds supported range", off);
    n = (byteAt(off + 1) << 12) | (byteAt(off + 2) << 6) | byteAt(off + 3);
    off += 4;
  }
  if (n < 1 || n > kMaxOrder) throw ParseError("graph6: unsupported order", off);

  Graph g(n);
  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - off < nbytes) throw ParseError("graph6: truncated edge data", text.size());
  if (text.size() - off > nbytes) throw ParseError("graph6: trailing characters", off + nbytes);

  std::size_t bit = 0;
  for (std::size_t col = 1; col < n; ++col)
    for (std::size_t row = 0; row < col; ++row, ++bit)
      if ((byteAt(off + bit / 6) >> (5 - bit % 6)) & 1) g.setEdge(row, col);
  // pad bits past the triangle must be zero
  for (std::size_t b = nbits; b < nbytes * 6; ++b)
    if ((byteAt(off + b / 6) >> (5 - b % 6)) & 1)
      throw ParseError("graph6: non-zero padding bits", off + b / 6);
  return g;
}

inline std::string encodeGraph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  unsigned acc = 0;
  int nacc = 0;
  for (std::size_t col = 1; col < n; ++col)
    for (std::size_t row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.edge(row, col) ? 1u : 0u);
      if (++nacc == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nacc = 0;
      }
    }
  if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
  return out;
}

}  // namespace walkspec::graph
