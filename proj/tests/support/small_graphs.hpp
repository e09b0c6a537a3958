#pragma once

// Triangle-free graphs up to isomorphism, grown one vertex at a time (the new
// vertex joins an independent set). Canonical form: colour refinement, then
// the lexicographically least adjacency string over permutations inside the
// refined cells. Fine up to 9 or so vertices.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "visraag/graph.hpp"

namespace testkit {

using visraag::Graph;
using visraag::VertexId;
using visraag::VertexPair;
using visraag::VertexSet;

inline std::vector<std::uint64_t> adjacency_rows(const Graph& g) {
  std::vector<std::uint64_t> rows;
  for (VertexId v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v).bits());
  return rows;
}

/// Vertex cells after colour refinement, ordered by their colour.
inline std::vector<std::vector<int>> refined_cells(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if ((rows[static_cast<std::size_t>(v)] >> w) & 1U) nb.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      ids.emplace(s, 0);
    }
    int k = 0;
    for (auto& [key, id] : ids) id = k++;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) next[static_cast<std::size_t>(v)] = ids[sig[static_cast<std::size_t>(v)]];
    const bool stable = static_cast<int>(ids.size()) ==
                        static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    colour = next;
    if (stable) break;
  }
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[colour[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [c, vs] : cells) out.push_back(vs);
  return out;
}

/// Canonical adjacency string (upper triangle, row-major).
inline std::string canonical_form(const Graph& g) {
  const auto rows = adjacency_rows(g);
  const int n = g.order();
  auto cells = refined_cells(rows);
  std::string best;
  std::vector<int> order;  // order[i] = original vertex placed at position i
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == cells.size()) {
      std::string s;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          s.push_back(((rows[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                        order[static_cast<std::size_t>(j)]) & 1U) ? '1' : '0');
      if (best.empty() || s < best) best = s;
      return;
    }
    auto cell = cells[ci];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      rec(ci + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(0);
  return best;
}

inline std::vector<std::vector<Graph>> triangle_free_by_order(int max_order) {
  std::vector<std::vector<Graph>> levels(static_cast<std::size_t>(max_order) + 1);
  levels[1].push_back(Graph(1, {}));
  for (int n = 2; n <= max_order; ++n) {
    std::set<std::string> seen;
    for (const Graph& h : levels[static_cast<std::size_t>(n - 1)]) {
      const int m = n - 1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const VertexSet s(mask);
        bool independent = true;
        for (VertexId v : s) independent &= !h.neighbors(v).intersects(s);
        if (!independent) continue;
        std::vector<VertexPair> edges = h.edges();
        for (VertexId v : s) edges.emplace_back(v, m);
        Graph g(n, edges);
        if (seen.insert(canonical_form(g)).second) levels[static_cast<std::size_t>(n)].push_back(std::move(g));
      }
    }
  }
  return levels;
}

}  // namespace testkit
