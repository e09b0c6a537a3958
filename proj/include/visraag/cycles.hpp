#pragma once

#include <array>
#include <span>
#include <vector>

#include "visraag/graph.hpp"

namespace visraag {

namespace detail {

template <class Visit>
bool extend_induced_path(const Graph& g, VertexSet allowed, int max_len,
                         std::array<VertexId, kMaxVertices>& path, int last, VertexSet on_path,
                         VertexSet interior_nbrs, Visit& visit) {
  const VertexId start = path[0];
  const VertexId tip = path[static_cast<std::size_t>(last)];
  const VertexSet candidates = (g.neighbors(tip) & allowed) - on_path - interior_nbrs;
  for (VertexId w : candidates) {
    const int len = last + 2;  // vertices in path + w
    if (g.adjacent(w, start)) {
      if (w > path[1] && len >= 3) {
        path[static_cast<std::size_t>(last + 1)] = w;
        if (!visit(std::span<const VertexId>(path.data(), static_cast<std::size_t>(len)))) return false;
      }
      continue;
    }
    if (max_len != 0 && len + 1 > max_len) continue;
    path[static_cast<std::size_t>(last + 1)] = w;
    VertexSet grown = interior_nbrs;
    if (last >= 1) grown |= g.neighbors(tip);
    if (!extend_induced_path(g, allowed, max_len, path, last + 1, on_path.with(w), grown, visit)) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every induced (chordless) cycle of g[within] exactly once, as a
/// vertex sequence starting at its smallest vertex with path[1] < path.back().
/// `max_len == 0` means unbounded; the enumeration is exponential in general.
/// `visit(span)` returns false to stop; the function then returns false.
template <class Visit>
bool for_each_induced_cycle(const Graph& g, VertexSet within, int max_len, Visit&& visit) {
  std::array<VertexId, kMaxVertices> path{};
  for (VertexId s : within) {
    const VertexSet allowed = within - VertexSet::prefix(s + 1);
    path[0] = s;
    for (VertexId p1 : g.neighbors(s) & allowed) {
      path[1] = p1;
      if (!detail::extend_induced_path(g, allowed, max_len, path, 1, VertexSet{s, p1}, VertexSet{}, visit))
        return false;
    }
  }
  return true;
}

template <class Visit>
bool for_each_induced_cycle(const Graph& g, int max_len, Visit&& visit) {
  return for_each_induced_cycle(g, g.vertices(), max_len, std::forward<Visit>(visit));
}

/// Collecting form of for_each_induced_cycle.
std::vector<std::vector<VertexId>> induced_cycles(const Graph& g, int max_len = 0);

}  // namespace visraag
