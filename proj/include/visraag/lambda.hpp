#pragma once

#include <span>
#include <vector>

#include "visraag/graph.hpp"

namespace visraag {

/// Candidate two-colour subgraph of the complement: a red and a blue edge set.
/// Edges are stored as ordered pairs (u < v), sorted, without repeats.
struct Lambda {
  std::vector<VertexPair> red;
  std::vector<VertexPair> blue;

  Lambda() = default;
  Lambda(std::vector<VertexPair> red_edges, std::vector<VertexPair> blue_edges);

  const std::vector<VertexPair>& edges(Color c) const { return c == Color::Red ? red : blue; }
  VertexSet support(Color c) const;
  std::vector<VertexPair> all_edges() const;
  bool contains(VertexId a, VertexId b) const;
  std::size_t size() const { return red.size() + blue.size(); }

  /// Same edges with colours assigned so that the lowest vertex of the
  /// combined support is red.
  Lambda anchored() const;

  bool operator==(const Lambda&) const = default;
  auto operator<=>(const Lambda&) const = default;
};

/// Whether the union of both colours is acyclic on `order` vertices.
bool is_forest(int order, const Lambda& lam);

/// Rooted view of a forest Λ for hull queries. Every vertex of the host is a
/// node; vertices without Λ-edges are singleton components.
class LambdaForest {
public:
  /// Throws std::invalid_argument if `lam` has a cycle.
  LambdaForest(int order, const Lambda& lam);

  /// Union over Λ-components of the minimal subtree spanning s ∩ component.
  VertexSet hull(VertexSet s) const;
  /// Vertex set of the unique Λ-geodesic; empty if u, w lie in different components.
  VertexSet geodesic(VertexId u, VertexId w) const;
  bool same_component(VertexId u, VertexId w) const { return root_[idx(u)] == root_[idx(w)]; }
  VertexSet component_of(VertexId v) const;
  VertexSet neighbors(VertexId v) const { return adj_[idx(v)]; }

private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  std::vector<VertexSet> adj_;
  std::vector<VertexSet> ancestors_;  // including the vertex itself
  std::vector<int> depth_;
  std::vector<VertexId> root_;
};

/// Λ-hull of s: per-component union of minimal subtrees (requires a forest).
VertexSet lambda_hull(const Graph& g, const Lambda& lam, VertexSet s);
/// Whether s equals its Λ-hull.
bool is_lambda_convex(const Graph& g, const Lambda& lam, VertexSet s);

}  // namespace visraag
