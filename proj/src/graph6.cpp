#include "spex1p/graph6.hpp"

#include <vector>

namespace spex1p {

namespace {

constexpr int kMaxExtended = 258047;

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxExtended)
    throw std::invalid_argument("graph6 encoding supported up to n = 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  // upper triangle, column by column: bit (i, j) for i < j
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (text.size() < pos + k)
      throw Graph6ParseError("truncated graph6 input", text.size());
  };
  auto value = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("byte outside graph6 alphabet", at);
    return c - 63;
  };

  need(1);
  long long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    need(4);
    if (static_cast<unsigned char>(text[1]) == 126)
      throw Graph6ParseError("8-byte graph6 sizes not supported", 1);
    n = (static_cast<long long>(value(1)) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  need(body);
  if (text.size() > pos + body)
    throw Graph6ParseError("trailing bytes after graph6 body", pos + body);

  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int v = value(pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  for (long long b = bits; b < static_cast<long long>(body) * 6; ++b) {
    int v = value(pos + b / 6);
    if ((v >> (5 - b % 6)) & 1)
      throw Graph6ParseError("nonzero padding bit", pos + b / 6);
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace spex1p
