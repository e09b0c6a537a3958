#include "visraag/square_structure.hpp"

#include <algorithm>
#include <numeric>

namespace visraag {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

VertexSet cone_vertices(const Graph& g, VertexSet within) {
  VertexSet cone;
  for (VertexId v : within)
    if (within.without(v).is_subset_of(g.neighbors(v))) cone.insert(v);
  return cone;
}

}  // namespace

std::optional<int> DiagonalGraph::index_of(VertexId a, VertexId b) const {
  const Diagonal key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(diagonals.begin(), diagonals.end(), key);
  if (it == diagonals.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - diagonals.begin());
}

std::size_t DiagonalGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> DiagonalGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < adjacency.size(); ++i)
    for (int j : adjacency[i])
      if (static_cast<int>(i) < j) out.emplace_back(static_cast<int>(i), j);
  return out;
}

std::vector<std::vector<int>> DiagonalGraph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(diagonals.size(), false);
  for (std::size_t s = 0; s < diagonals.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int w : adjacency[static_cast<std::size_t>(comp[head])])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_induced_square(const Graph& g, VertexId a, VertexId b, VertexId c, VertexId d) {
  if (VertexSet({a, b, c, d}).size() != 4) return false;
  if (g.adjacent(a, b) || g.adjacent(c, d)) return false;
  return g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) && g.adjacent(b, d);
}

DiagonalGraph diagonal_graph(const Graph& g, VertexSet within) {
  DiagonalGraph dg;
  // A non-adjacent pair is a diagonal iff its common neighbourhood contains a
  // non-adjacent pair.
  auto opposite_pairs = [&](VertexSet common, auto&& fn) {
    for (VertexId c : common)
      for (VertexId d : common - VertexSet::prefix(c + 1) - g.neighbors(c)) fn(c, d);
  };
  for (VertexId a : within) {
    for (VertexId b : within - VertexSet::prefix(a + 1) - g.neighbors(a)) {
      bool found = false;
      opposite_pairs(g.neighbors(a) & g.neighbors(b) & within, [&](VertexId, VertexId) { found = true; });
      if (found) dg.diagonals.push_back({a, b});
    }
  }
  dg.adjacency.resize(dg.diagonals.size());
  for (std::size_t i = 0; i < dg.diagonals.size(); ++i) {
    const auto [a, b] = dg.diagonals[i];
    opposite_pairs(g.neighbors(a) & g.neighbors(b) & within, [&](VertexId c, VertexId d) {
      dg.adjacency[i].push_back(*dg.index_of(c, d));
    });
    std::sort(dg.adjacency[i].begin(), dg.adjacency[i].end());
  }
  return dg;
}

DiagonalGraph diagonal_graph(const Graph& g) { return diagonal_graph(g, g.vertices()); }

VertexSet support(std::span<const Diagonal> diagonals) {
  VertexSet s;
  for (const auto& d : diagonals) s |= d.support();
  return s;
}

VertexSet support(const DiagonalGraph& dg, std::span<const int> component) {
  VertexSet s;
  for (int i : component) s |= dg.diagonals[static_cast<std::size_t>(i)].support();
  return s;
}

CfsResult cfs_status(const Graph& g, VertexSet within) {
  CfsResult out;
  const VertexSet cone = cone_vertices(g, within);
  if (!cone.empty() && is_triangle_free(g, within)) {
    out.diagnostic = "graph is a star (has a cone vertex)";
    return out;
  }
  if (!cone.empty()) out.diagnostic = "cone vertices excluded from support requirement";
  const VertexSet target = within - cone;
  const DiagonalGraph dg = diagonal_graph(g, within);
  const auto comps = dg.components();
  int best = -1;
  int best_size = -1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const VertexSet sup = support(dg, comps[i]);
    if (sup == target) {
      out.status = comps.size() == 1 ? CfsStatus::StronglyCFS : CfsStatus::CFS;
      out.witness = comps[i];
      return out;
    }
    if (sup.size() > best_size) {
      best_size = sup.size();
      best = static_cast<int>(i);
    }
  }
  if (best >= 0) out.witness = comps[static_cast<std::size_t>(best)];
  return out;
}

CfsResult cfs_status(const Graph& g) { return cfs_status(g, g.vertices()); }

bool is_strongly_cfs(const Graph& g, VertexSet within) {
  const VertexSet cone = cone_vertices(g, within);
  const bool triangle_free = is_triangle_free(g, within);
  if (!cone.empty() && triangle_free) return false;
  const auto n = static_cast<std::size_t>(g.order());
  auto slot = [n](VertexId a, VertexId b) {
    return static_cast<int>(static_cast<std::size_t>(std::min(a, b)) * n + static_cast<std::size_t>(std::max(a, b)));
  };
  DisjointSets sets(n * n);
  std::vector<bool> present(n * n, false);
  VertexSet sup;
  for (VertexId a : within) {
    for (VertexId b : within - VertexSet::prefix(a + 1) - g.neighbors(a)) {
      const VertexSet common = g.neighbors(a) & g.neighbors(b) & within;
      for (VertexId c : common)
        for (VertexId d : common - VertexSet::prefix(c + 1) - g.neighbors(c)) {
          present[static_cast<std::size_t>(slot(a, b))] = true;
          present[static_cast<std::size_t>(slot(c, d))] = true;
          sets.unite(slot(a, b), slot(c, d));
          sup |= VertexSet{a, b};
        }
    }
  }
  if (sup != within - cone) return false;
  int root = -1;
  for (std::size_t i = 0; i < present.size(); ++i) {
    if (!present[i]) continue;
    const int r = sets.find(static_cast<int>(i));
    if (root == -1) root = r;
    else if (r != root) return false;
  }
  return root != -1;
}

const char* to_string(CfsStatus s) {
  switch (s) {
    case CfsStatus::NotCFS: return "NotCFS";
    case CfsStatus::CFS: return "CFS";
    case CfsStatus::StronglyCFS: return "StronglyCFS";
  }
  return "?";
}

}  // namespace visraag
