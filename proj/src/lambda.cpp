#include "visraag/lambda.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace visraag {

namespace {

std::vector<VertexPair> normalized(std::vector<VertexPair> edges) {
  for (auto& e : edges) e = ordered(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

Lambda::Lambda(std::vector<VertexPair> red_edges, std::vector<VertexPair> blue_edges)
    : red(normalized(std::move(red_edges))), blue(normalized(std::move(blue_edges))) {}

VertexSet Lambda::support(Color c) const {
  VertexSet s;
  for (auto [u, v] : edges(c)) s |= VertexSet{u, v};
  return s;
}

std::vector<VertexPair> Lambda::all_edges() const {
  std::vector<VertexPair> out = red;
  out.insert(out.end(), blue.begin(), blue.end());
  return out;
}

bool Lambda::contains(VertexId a, VertexId b) const {
  const VertexPair key = ordered(a, b);
  return std::binary_search(red.begin(), red.end(), key) || std::binary_search(blue.begin(), blue.end(), key);
}

Lambda Lambda::anchored() const {
  const VertexSet r = support(Color::Red);
  const VertexSet b = support(Color::Blue);
  if (b.empty() || (!r.empty() && r.first() < b.first())) return *this;
  return Lambda(blue, red);
}

bool is_forest(int order, const Lambda& lam) {
  std::vector<int> parent(static_cast<std::size_t>(order));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<VertexPair> edges = lam.all_edges();
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order || u == v) return false;
    const int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

LambdaForest::LambdaForest(int order, const Lambda& lam)
    : adj_(static_cast<std::size_t>(order)),
      ancestors_(static_cast<std::size_t>(order)),
      depth_(static_cast<std::size_t>(order), -1),
      root_(static_cast<std::size_t>(order), -1) {
  if (!is_forest(order, lam)) throw std::invalid_argument("Λ is not a forest");
  for (auto [u, v] : lam.all_edges()) {
    adj_[idx(u)].insert(v);
    adj_[idx(v)].insert(u);
  }
  for (VertexId r = 0; r < order; ++r) {
    if (depth_[idx(r)] != -1) continue;
    depth_[idx(r)] = 0;
    root_[idx(r)] = r;
    ancestors_[idx(r)] = VertexSet::single(r);
    std::vector<VertexId> queue{r};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId w : adj_[idx(u)]) {
        if (depth_[idx(w)] != -1) continue;
        depth_[idx(w)] = depth_[idx(u)] + 1;
        root_[idx(w)] = r;
        ancestors_[idx(w)] = ancestors_[idx(u)].with(w);
        queue.push_back(w);
      }
    }
  }
}

VertexSet LambdaForest::geodesic(VertexId u, VertexId w) const {
  if (!same_component(u, w)) return {};
  const VertexSet common = ancestors_[idx(u)] & ancestors_[idx(w)];
  // Common ancestors form a chain from the root; the lowest has depth |common|-1.
  VertexId lca = root_[idx(u)];
  for (VertexId c : common)
    if (depth_[idx(c)] == common.size() - 1) lca = c;
  return (ancestors_[idx(u)] ^ ancestors_[idx(w)]).with(lca);
}

VertexSet LambdaForest::component_of(VertexId v) const {
  VertexSet s;
  for (std::size_t i = 0; i < root_.size(); ++i)
    if (root_[i] == root_[idx(v)]) s.insert(static_cast<VertexId>(i));
  return s;
}

VertexSet LambdaForest::hull(VertexSet s) const {
  VertexSet out;
  VertexSet left = s;
  while (!left.empty()) {
    const VertexId anchor = left.first();
    for (VertexId v : left) {
      if (!same_component(v, anchor)) continue;
      out |= geodesic(anchor, v);
      left.erase(v);
    }
  }
  return out;
}

VertexSet lambda_hull(const Graph& g, const Lambda& lam, VertexSet s) { return LambdaForest(g.order(), lam).hull(s); }

bool is_lambda_convex(const Graph& g, const Lambda& lam, VertexSet s) { return lambda_hull(g, lam, s) == s; }

}  // namespace visraag
