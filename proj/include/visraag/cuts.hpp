#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "visraag/lambda.hpp"

namespace visraag {

enum class CutKind { Pair, Triple };

/// A cut pair {a,b} or a 2-path cut triple {a,b,c} (c a common neighbour),
/// with the components left after removing it.
struct Cut {
  CutKind kind = CutKind::Pair;
  VertexId a = -1;
  VertexId b = -1;
  std::optional<VertexId> c;  // triples only
  std::vector<VertexSet> components;

  VertexSet removed() const {
    VertexSet s{a, b};
    if (c) s.insert(*c);
    return s;
  }
  VertexPair pair() const { return {a, b}; }
  bool separates(VertexId u, VertexId w) const;
  bool operator==(const Cut&) const = default;
};

/// All cuts of g[within], pairs first, in lexicographic order. Host ids.
std::vector<Cut> find_cuts(const Graph& g, VertexSet within);
std::vector<Cut> find_cuts(const Graph& g);

/// Pair/pair: disjoint and k2 separates k1's pair. Triple/triple: same third
/// vertex and k2 separates k1's pair. Mixed kinds never cross.
bool crosses(const Cut& k1, const Cut& k2);
/// Whether the cuts are of different kinds yet one separates the other's pair.
bool mixed_separation(const Cut& k1, const Cut& k2);

struct Cylinder {
  VertexPair pair;
  VertexSet vertices;  // {a,b} ∪ (lk(a) ∩ lk(b))
};

struct GraphOfCylinders {
  std::vector<Cut> cuts;
  /// Index pairs (i, j) into `cuts` with cuts[i] crossed by cuts[j].
  std::vector<std::pair<int, int>> crossings;
  /// Index pairs of mixed-kind cuts where one separates the other's pair.
  std::vector<std::pair<int, int>> mixed_separations;
  bool hanging = false;

  // Filled only when !hanging.
  std::vector<Cylinder> cylinders;
  std::vector<VertexSet> rigid;
  /// (cylinder index, rigid index)
  std::vector<std::pair<int, int>> edges;

  /// Whether the cylinder/rigid incidence graph is a tree (true when empty).
  bool is_tree() const;
};

GraphOfCylinders graph_of_cylinders(const Graph& g);

/// Vertices of degree at least 3.
VertexSet essential_vertices(const Graph& g);

/// Maximal cliques of an undirected relation given by neighbour sets.
std::vector<VertexSet> maximal_cliques(const std::vector<VertexSet>& adj, VertexSet candidates);

/// Component ∪ cut vertices, one per component.
std::vector<VertexSet> split_parts(const Cut& k);
std::vector<InducedSubgraph> split_at_cut(const Graph& g, const Cut& k);

/// Glues FIDL Λs of the parts (host ids, one per component, in order) into a
/// Λ of the union. Each part must contain the edge {a,b}. The colour holding
/// {a,b} becomes red. Throws std::invalid_argument when a part lacks {a,b} and
/// std::logic_error when a component has no common neighbour of a and b.
Lambda assemble_lambdas(const Graph& g, const Cut& k, const std::vector<Lambda>& parts);
/// Same with part-local Λs.
Lambda assemble_lambdas(const Graph& g, const Cut& k, const std::vector<std::pair<InducedSubgraph, Lambda>>& parts);

/// Λ expressed in host ids.
Lambda lift_lambda(const InducedSubgraph& part, const Lambda& local);
/// Λ restricted to edges inside `keep`, renumbered for the induced subgraph.
Lambda restrict_lambda(const InducedSubgraph& part, const Lambda& host);

std::string describe(const Graph& g, const Cut& k);

}  // namespace visraag
