#include "visraag/graph6.hpp"

#include <cctype>

namespace visraag {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(kHeader)) offset = kHeader.size();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto value_at = [&](std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
    return c - 63;
  };

  std::size_t pos = offset;
  int n = value_at(pos++);
  if (n == 63) {
    if (pos < text.size() && value_at(pos) == 63)
      throw ParseError("graph6: graphs beyond 258047 vertices are not supported", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(pos++);
  }
  if (n > kMaxVertices)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds the " + std::to_string(kMaxVertices) +
                         "-vertex limit",
                     offset);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " edge bytes, found " +
                         std::to_string(text.size() - pos),
                     pos);

  std::vector<VertexPair> edges;
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int byte = value_at(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) view.remove_suffix(1);
    if (view.empty()) continue;
    try {
      out.push_back(from_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError(std::string("line ") + std::to_string(lineno) + ": " + e.what(), lineno);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("line ") + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

}  // namespace visraag
