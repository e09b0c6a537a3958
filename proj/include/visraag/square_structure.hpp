#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "visraag/graph.hpp"

namespace visraag {

/// Unordered non-adjacent pair {a, b} (a < b) that is the diagonal of some
/// induced square.
struct Diagonal {
  VertexId a;
  VertexId b;
  VertexSet support() const { return VertexSet{a, b}; }
  auto operator<=>(const Diagonal&) const = default;
};

/// The diagonal graph: diagonals of induced squares, adjacent when together
/// they span an induced square. Diagonals are sorted lexicographically.
struct DiagonalGraph {
  std::vector<Diagonal> diagonals;
  std::vector<std::vector<int>> adjacency;  // indices into `diagonals`

  std::optional<int> index_of(VertexId a, VertexId b) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  /// Connected components as sorted index lists.
  std::vector<std::vector<int>> components() const;
};

/// Whether {a,b} * {c,d} is an induced square: four distinct vertices,
/// a!~b, c!~d, and all four cross edges.
bool is_induced_square(const Graph& g, VertexId a, VertexId b, VertexId c, VertexId d);

DiagonalGraph diagonal_graph(const Graph& g);
DiagonalGraph diagonal_graph(const Graph& g, VertexSet within);

VertexSet support(std::span<const Diagonal> diagonals);
/// Support of a component given by indices into dg.diagonals.
VertexSet support(const DiagonalGraph& dg, std::span<const int> component);

enum class CfsStatus { NotCFS, CFS, StronglyCFS };

struct CfsResult {
  CfsStatus status = CfsStatus::NotCFS;
  /// Indices (into the diagonal graph) of a component of full support, or the
  /// component of largest support when NotCFS.
  std::vector<int> witness;
  /// Set when a cone vertex was found; stars are reported NotCFS.
  std::string diagnostic;
};

/// Cone vertices are excluded from the support requirement; stars are
/// refused as NotCFS.
CfsResult cfs_status(const Graph& g);
CfsResult cfs_status(const Graph& g, VertexSet within);

/// Faster yes/no for "strongly CFS" on g[within], used as a pruning test.
bool is_strongly_cfs(const Graph& g, VertexSet within);

const char* to_string(CfsStatus s);

}  // namespace visraag
