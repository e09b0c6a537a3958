#pragma once

#include <optional>
#include <string>
#include <vector>

#include "visraag/lambda.hpp"
#include "visraag/square_structure.hpp"

namespace visraag {

/// Concrete evidence attached to a failed condition.
struct DLWitness {
  /// Cycle, square (a,b,c,d with diagonals {a,b},{c,d}), or uncovered vertices.
  std::vector<VertexId> vertices;
  /// Offending Λ-edge, Γ-edge, missing join edge, or cycle edge.
  std::optional<VertexPair> pair;
  std::optional<Color> color;
};

struct ConditionResult {
  bool evaluated = false;
  bool passed = false;
  std::string message;
  DLWitness witness;

  static ConditionResult pass() { return {true, true, {}, {}}; }
  static ConditionResult fail(std::string msg, DLWitness w = {}) { return {true, false, std::move(msg), std::move(w)}; }
};

/// Outcome of the combined tree/span checks.
struct TreeSpanReport {
  ConditionResult r1;  // each colour is a tree
  ConditionResult r2;  // each colour support is independent in Γ
  ConditionResult f1;  // the two supports cover Γ
  bool bipartite = false;
  /// Λ-edge whose endpoints lie in different bipartition classes.
  std::optional<VertexPair> coloring_mismatch;
  /// Structural problems with Λ itself (not in Γ^c, overlapping colours...).
  std::vector<std::string> malformed;

  bool passed() const { return malformed.empty() && r1.passed && r2.passed && f1.passed; }
};

struct DLReport {
  std::vector<std::string> precondition_failures;
  std::vector<std::string> malformed;
  std::optional<VertexPair> coloring_mismatch;
  bool bipartite = false;
  ConditionResult r1, r2, r3, r4, f1;

  bool preconditions_hold() const { return precondition_failures.empty(); }
  bool passed() const {
    return preconditions_hold() && malformed.empty() && r1.passed && r2.passed && r3.passed && r4.passed &&
           f1.passed;
  }
};

TreeSpanReport check_r1_r2_f1(const Graph& g, const Lambda& lam);

/// Requires Λ to be a forest. Squares are visited with diagonals {a,b} < {c,d}.
ConditionResult check_r3(const Graph& g, const Lambda& lam);
ConditionResult check_r3(const Graph& g, const LambdaForest& forest);

/// Checked over induced cycles only.
ConditionResult check_r4(const Graph& g, const Lambda& lam);
ConditionResult check_r4(const Graph& g, const LambdaForest& forest);
/// Same over a precomputed list of induced cycles.
ConditionResult check_r4(const Graph& g, const LambdaForest& forest, const std::vector<std::vector<VertexId>>& cycles);

/// Incomplete, triangle-free and no separating clique; returns the failures.
std::vector<std::string> search_preconditions(const Graph& g);

DLReport verify_fidl(const Graph& g, const Lambda& lam);

/// Δ: one vertex per Λ-edge (red then blue, each sorted), adjacent when the
/// two edges span an induced square.
struct CommutingGraph {
  std::vector<VertexPair> vertices;
  std::vector<std::vector<int>> adjacency;
  /// Index of each vertex in diagonal_graph(g), when it is a diagonal.
  std::vector<std::optional<int>> embedding;

  std::size_t edge_count() const;
  /// Δ as a plain graph with vertex i named by its index.
  Graph as_graph() const;
};

CommutingGraph commuting_graph(const Graph& g, const Lambda& lam);

}  // namespace visraag
