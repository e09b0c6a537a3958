#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "visraag/graph.hpp"

namespace visraag {

/// Malformed textual input; `where()` is a byte offset or a line number
/// depending on the format.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t where)
      : std::runtime_error(what + " (at " + std::to_string(where) + ")"), where_(where) {}
  std::size_t where() const { return where_; }

private:
  std::size_t where_;
};

/// graph6 encoding of g (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 string. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Vertices are named "0".."n-1".
Graph from_graph6(std::string_view text);

/// Reads one graph per non-empty line; a bad line throws ParseError carrying
/// its 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace visraag
