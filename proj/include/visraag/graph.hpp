#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "visraag/vertex_set.hpp"

namespace visraag {

using VertexPair = std::pair<VertexId, VertexId>;

/// Returns {min, max}.
inline VertexPair ordered(VertexId a, VertexId b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// Finite simplicial graph on dense vertex ids 0..n-1 with unique display
/// names. Immutable once built.
class Graph {
public:
  Graph() = default;
  /// Vertices are named "0".."n-1".
  Graph(int order, std::span<const VertexPair> edges);
  Graph(std::vector<std::string> names, std::span<const VertexPair> edges);

  static Graph from_named_edges(std::vector<std::string> names,
                                std::span<const std::pair<std::string, std::string>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  const std::string& name(VertexId v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws std::out_of_range for an unknown name.
  VertexId id_of(std::string_view name) const;

  /// Unchecked neighbour set.
  VertexSet neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(VertexId u, VertexId v) const { return neighbors(u).contains(v); }
  int degree(VertexId v) const { return neighbors(v).size(); }

  /// Sorted list of edges (u < v).
  std::vector<VertexPair> edges() const;

  /// Induced subgraph on `keep`, with vertices renumbered in increasing host
  /// order and names carried over.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_ && names_ == other.names_; }

private:
  void build(std::span<const VertexPair> edges);
  void index_names();

  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
  std::unordered_map<std::string, VertexId> by_name_;
};

/// An induced subgraph together with the map back to host vertex ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_host;

  InducedSubgraph() = default;
  InducedSubgraph(const Graph& host, VertexSet keep);
  VertexSet host_set() const { return VertexSet::of(to_host); }
};

enum class Color { Red, Blue };

/// Proper 2-colouring indexed by vertex id.
struct TwoColoring {
  std::vector<Color> color;

  VertexSet red() const;
  VertexSet blue() const;
  VertexSet cls(Color c) const { return c == Color::Red ? red() : blue(); }
  Color operator[](VertexId v) const { return color[static_cast<std::size_t>(v)]; }
};

/// Evidence of an odd cycle: vertex sequence of an odd closed walk (here
/// always a simple cycle), first vertex not repeated at the end.
struct NotBipartite {
  std::vector<VertexId> odd_cycle;
};

struct Satellite {
  VertexId vertex;
  VertexSet dominators;  // every w != vertex with lk(vertex) ⊆ lk(w)
};

enum class SatelliteMode {
  NonStrict,  // lk(v) ⊆ lk(w), w != v: twins are mutual satellites
  Strict,     // lk(v) ⊊ lk(w)
};

/// A 1-chord (no middle vertex) or a 2-chord x - middle - y of a cycle.
struct Chord {
  VertexId x;
  VertexId y;
  std::optional<VertexId> middle;
  bool operator==(const Chord&) const = default;
};

Graph complement(const Graph& g);

/// Neighbours of v; throws std::out_of_range on a bad id.
VertexSet link(const Graph& g, VertexId v);

bool is_triangle_free(const Graph& g);
bool is_triangle_free(const Graph& g, VertexSet within);

bool is_incomplete(const Graph& g);
bool is_incomplete(const Graph& g, VertexSet within);

std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);
/// Number of components of g restricted to `within`, stopping early at `cap`.
int count_components(const Graph& g, VertexSet within, int cap = kMaxVertices + 1);

/// True iff removing some clique (possibly empty) leaves more than one
/// component. Triangle-free inputs use the vertex/edge shortcut; otherwise
/// every clique is tried.
bool has_separating_clique(const Graph& g);
bool has_separating_clique(const Graph& g, VertexSet within);
/// Exhaustive all-cliques scan, independent of the triangle-free shortcut.
bool has_separating_clique_exhaustive(const Graph& g, VertexSet within);

/// Vertex 0 of each component is coloured red.
std::variant<TwoColoring, NotBipartite> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

std::vector<Satellite> satellites(const Graph& g, SatelliteMode mode = SatelliteMode::NonStrict);
std::vector<Satellite> satellites(const Graph& g, VertexSet within,
                                  SatelliteMode mode = SatelliteMode::NonStrict);
/// Whether v has a dominator inside `within` (v ∈ within).
bool is_satellite(const Graph& g, VertexSet within, VertexId v,
                  SatelliteMode mode = SatelliteMode::NonStrict);

/// All chords of `cycle` of length n (1 or 2).
std::vector<Chord> n_chords(const Graph& g, std::span<const VertexId> cycle, int n);
/// Whether `cycle` (a vertex sequence) is a cycle of g.
bool is_cycle(const Graph& g, std::span<const VertexId> cycle);

}  // namespace visraag
