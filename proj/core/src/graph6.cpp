#include "sgp/graph6.hpp"

#include <vector>

namespace sgp {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph from_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line", base);

  unsigned char c0 = static_cast<unsigned char>(line[0]);
  if (c0 == 126) throw ParseError("long-form graph6 not supported", base);
  if (c0 < 63 || c0 > 125) throw ParseError("invalid graph6 order byte", base);
  const int n = c0 - kBias;
  if (n < 1) throw ParseError("graph6 order must be at least 1", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (line.size() - 1 < payload)
    throw ParseError("graph6 payload truncated", base + line.size());
  if (line.size() - 1 > payload)
    throw ParseError("trailing bytes after graph6 payload", base + 1 + payload);

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t byte_idx = 1 + bit / 6;
      unsigned char c = static_cast<unsigned char>(line[byte_idx]);
      if (c < 63 || c > 126)
        throw ParseError("invalid graph6 payload byte", base + byte_idx);
      if ((c - kBias) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InvalidGraph("graph6 short form limited to 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

}  // namespace sgp
