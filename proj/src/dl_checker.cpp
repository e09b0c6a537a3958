#include "visraag/dl_checker.hpp"

#include <algorithm>

#include "visraag/cycles.hpp"

namespace visraag {

namespace {

std::string pair_text(const Graph& g, VertexPair p) { return "{" + g.name(p.first) + "," + g.name(p.second) + "}"; }

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

/// Path between u and w in the forest given by `adj`, or empty.
std::vector<VertexId> forest_path(const std::vector<VertexSet>& adj, VertexId u, VertexId w) {
  std::vector<VertexId> parent(adj.size(), -1);
  std::vector<VertexId> queue{u};
  parent[static_cast<std::size_t>(u)] = u;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    if (x == w) break;
    for (VertexId y : adj[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == -1) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
  }
  if (parent[static_cast<std::size_t>(w)] == -1) return {};
  std::vector<VertexId> path{w};
  while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

ConditionResult check_tree(const Graph& g, const Lambda& lam, Color c) {
  const auto& edges = lam.edges(c);
  DLWitness w;
  w.color = c;
  if (edges.empty()) return ConditionResult::fail(std::string(color_name(c)) + " component has no edges", w);
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : edges) {
    auto path = forest_path(adj, u, v);
    if (!path.empty()) {
      w.vertices = std::move(path);
      w.pair = VertexPair{u, v};
      return ConditionResult::fail(std::string(color_name(c)) + " edges contain a cycle", w);
    }
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  const VertexSet sup = lam.support(c);
  const VertexId root = sup.first();
  VertexSet reached = VertexSet::single(root);
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adj[static_cast<std::size_t>(x)] - reached) {
      reached.insert(y);
      stack.push_back(y);
    }
  }
  if (reached != sup) {
    w.vertices = (sup - reached).to_vector();
    return ConditionResult::fail(std::string(color_name(c)) + " edges are not connected", w);
  }
  return ConditionResult::pass();
}

ConditionResult check_independent(const Graph& g, const Lambda& lam) {
  for (Color c : {Color::Red, Color::Blue}) {
    const VertexSet sup = lam.support(c);
    for (VertexId u : sup) {
      const VertexSet hit = g.neighbors(u) & sup;
      if (!hit.empty()) {
        DLWitness w;
        w.color = c;
        w.pair = ordered(u, hit.first());
        return ConditionResult::fail(std::string("Γ-edge inside the ") + color_name(c) + " support", w);
      }
    }
  }
  return ConditionResult::pass();
}

}  // namespace

TreeSpanReport check_r1_r2_f1(const Graph& g, const Lambda& lam) {
  TreeSpanReport out;
  const int n = g.order();
  for (Color c : {Color::Red, Color::Blue})
    for (auto [u, v] : lam.edges(c)) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        out.malformed.push_back("Λ-edge endpoint out of range");
        continue;
      }
      if (u == v) out.malformed.push_back("Λ-edge is a loop at " + g.name(u));
      else if (g.adjacent(u, v)) out.malformed.push_back("Λ-edge " + pair_text(g, {u, v}) + " is an edge of Γ");
    }
  const VertexSet red = lam.support(Color::Red);
  const VertexSet blue = lam.support(Color::Blue);
  if (red.intersects(blue)) out.malformed.push_back("red and blue supports share " + g.name((red & blue).first()));

  auto coloring = bipartition(g);
  out.bipartite = std::holds_alternative<TwoColoring>(coloring);
  if (out.bipartite && out.malformed.empty()) {
    const auto& tc = std::get<TwoColoring>(coloring);
    for (auto [u, v] : lam.all_edges())
      if (tc[u] != tc[v]) {
        out.coloring_mismatch = VertexPair{u, v};
        break;
      }
  }

  if (!out.malformed.empty()) {
    const auto bad = ConditionResult::fail("Λ is malformed");
    out.r1 = out.r2 = out.f1 = bad;
    return out;
  }
  out.r1 = check_tree(g, lam, Color::Red);
  if (out.r1.passed) out.r1 = check_tree(g, lam, Color::Blue);
  out.r2 = check_independent(g, lam);
  const VertexSet missing = g.vertices() - red - blue;
  if (missing.empty()) {
    out.f1 = ConditionResult::pass();
  } else {
    DLWitness w;
    w.vertices = missing.to_vector();
    out.f1 = ConditionResult::fail("Λ does not span " + g.name(missing.first()), w);
  }
  return out;
}

ConditionResult check_r3(const Graph& g, const LambdaForest& forest) {
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b : g.vertices() - VertexSet::prefix(a + 1) - g.neighbors(a)) {
      const VertexSet common = g.neighbors(a) & g.neighbors(b);
      if (common.size() < 2) continue;
      const VertexSet h1 = forest.hull(VertexSet{a, b});
      for (VertexId c : common) {
        if (c < a) continue;  // square already seen from its other diagonal
        for (VertexId d : common - VertexSet::prefix(c + 1) - g.neighbors(c)) {
          const VertexSet h2 = forest.hull(VertexSet{c, d});
          for (VertexId u : h1) {
            const VertexSet miss = h2 - g.neighbors(u);
            if (miss.empty()) continue;
            DLWitness w;
            w.vertices = {a, b, c, d};
            w.pair = VertexPair{u, miss.first()};
            return ConditionResult::fail("square " + pair_text(g, {a, b}) + "*" + pair_text(g, {c, d}) +
                                             ": hulls are not joined at " + pair_text(g, {u, miss.first()}),
                                         w);
          }
        }
      }
    }
  }
  return ConditionResult::pass();
}

ConditionResult check_r3(const Graph& g, const Lambda& lam) { return check_r3(g, LambdaForest(g.order(), lam)); }

namespace {

bool r4_cycle(const Graph& g, const LambdaForest& forest, std::span<const VertexId> cycle, ConditionResult& out) {
  const VertexSet hull = forest.hull(VertexSet::of(cycle));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % cycle.size()];
    const VertexSet a_side = (hull & g.neighbors(b)) - g.neighbors(a) - VertexSet::single(a);
    const VertexSet b_side = (hull & g.neighbors(a)) - g.neighbors(b) - VertexSet::single(b);
    bool found = false;
    for (VertexId a2 : a_side)
      if (g.neighbors(a2).intersects(b_side)) {
        found = true;
        break;
      }
    if (!found) {
      DLWitness w;
      w.vertices.assign(cycle.begin(), cycle.end());
      w.pair = VertexPair{a, b};
      out = ConditionResult::fail("edge " + pair_text(g, {a, b}) + " of an induced " + std::to_string(cycle.size()) +
                                      "-cycle has no square inside the hull",
                                  w);
      return false;
    }
  }
  return true;
}

}  // namespace

ConditionResult check_r4(const Graph& g, const LambdaForest& forest) {
  ConditionResult out = ConditionResult::pass();
  for_each_induced_cycle(g, 0, [&](std::span<const VertexId> cycle) { return r4_cycle(g, forest, cycle, out); });
  return out;
}

ConditionResult check_r4(const Graph& g, const LambdaForest& forest, const std::vector<std::vector<VertexId>>& cycles) {
  ConditionResult out = ConditionResult::pass();
  for (const auto& c : cycles)
    if (!r4_cycle(g, forest, c, out)) break;
  return out;
}

ConditionResult check_r4(const Graph& g, const Lambda& lam) { return check_r4(g, LambdaForest(g.order(), lam)); }

std::vector<std::string> search_preconditions(const Graph& g) {
  std::vector<std::string> out;
  if (!is_incomplete(g)) out.emplace_back("graph is complete");
  if (!is_triangle_free(g)) out.emplace_back("graph has a triangle");
  else if (has_separating_clique(g)) out.emplace_back("graph has a separating clique");
  return out;
}

DLReport verify_fidl(const Graph& g, const Lambda& lam) {
  DLReport report;
  report.precondition_failures = search_preconditions(g);
  if (!report.preconditions_hold()) return report;
  TreeSpanReport ts = check_r1_r2_f1(g, lam);
  report.malformed = ts.malformed;
  report.coloring_mismatch = ts.coloring_mismatch;
  report.bipartite = ts.bipartite;
  report.r1 = ts.r1;
  report.r2 = ts.r2;
  report.f1 = ts.f1;
  if (!ts.passed()) {
    report.r3.message = report.r4.message = "not evaluated: R1/R2/F1 failed";
    return report;
  }
  const LambdaForest forest(g.order(), lam);
  report.r3 = check_r3(g, forest);
  report.r4 = check_r4(g, forest);
  return report;
}

std::size_t CommutingGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

Graph CommutingGraph::as_graph() const {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < adjacency.size(); ++i)
    for (int j : adjacency[i])
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
  return Graph(static_cast<int>(vertices.size()), edges);
}

CommutingGraph commuting_graph(const Graph& g, const Lambda& lam) {
  CommutingGraph delta;
  delta.vertices = lam.all_edges();
  const std::size_t m = delta.vertices.size();
  delta.adjacency.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [a, b] = delta.vertices[i];
      const auto [c, d] = delta.vertices[j];
      if (is_induced_square(g, a, b, c, d)) {
        delta.adjacency[i].push_back(static_cast<int>(j));
        delta.adjacency[j].push_back(static_cast<int>(i));
      }
    }
  const DiagonalGraph dg = diagonal_graph(g);
  for (auto [a, b] : delta.vertices) delta.embedding.push_back(dg.index_of(a, b));
  return delta;
}

}  // namespace visraag
