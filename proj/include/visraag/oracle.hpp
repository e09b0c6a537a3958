#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "visraag/dismantle.hpp"

namespace visraag {

/// Calls `visit` with the edge list of every spanning tree of the multigraph
/// on vertices 0..order-1; `visit` returns false to stop. Contraction/deletion
/// where an edge is only deleted when it is not a bridge of what remains, so
/// every branch ends in a tree. Returns false when stopped.
bool for_each_spanning_tree(int order, const std::vector<VertexPair>& edges,
                            const std::function<bool(const std::vector<VertexPair>&)>& visit);

/// Matrix-tree theorem: determinant of a reduced Laplacian (floating point,
/// for budgeting only).
double spanning_tree_count(int order, const std::vector<VertexPair>& edges);

struct OracleLimits {
  /// Refuse when (#red trees) * (#blue trees) exceeds this.
  double max_pairs = 5e7;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Workers over the red-tree loop.
  unsigned threads = 1;
};

/// Exhaustive search over pairs of spanning trees of the complement inside
/// each colour class. Yes carries the first passing Λ in enumeration order.
Verdict naive_search(const Graph& g, const OracleLimits& limits = {});

struct FidlCount {
  std::uint64_t count = 0;
  /// Passing Λs, red = class of the lowest vertex, sorted.
  std::vector<Lambda> lambdas;
  std::uint64_t pairs_checked = 0;
  bool budget_exceeded = false;
  /// Refusal reasons from the search preconditions.
  std::vector<std::string> refusal;
};

FidlCount count_all_fidl(const Graph& g, const OracleLimits& limits = {});

}  // namespace visraag
