#include "visraag/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace visraag {

namespace {

void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  VertexId pivot = (p | x).first();
  int best = -1;
  for (VertexId u : p | x) {
    const int k = (p & adj[static_cast<std::size_t>(u)]).size();
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  for (VertexId v : p - adj[static_cast<std::size_t>(pivot)]) {
    const VertexSet nv = adj[static_cast<std::size_t>(v)];
    bron_kerbosch(adj, r.with(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

int component_index(const Cut& k, VertexId v) {
  for (std::size_t i = 0; i < k.components.size(); ++i)
    if (k.components[i].contains(v)) return static_cast<int>(i);
  return -1;
}

}  // namespace

bool Cut::separates(VertexId u, VertexId w) const {
  const int cu = component_index(*this, u);
  const int cw = component_index(*this, w);
  return cu != -1 && cw != -1 && cu != cw;
}

std::vector<Cut> find_cuts(const Graph& g, VertexSet within) {
  std::vector<Cut> pairs, triples;
  for (VertexId a : within) {
    for (VertexId b : within - VertexSet::prefix(a + 1) - g.neighbors(a)) {
      const VertexSet rest = within - VertexSet{a, b};
      auto comps = components(g, rest);
      if (comps.size() >= 2) {
        pairs.push_back({CutKind::Pair, a, b, std::nullopt, std::move(comps)});
        continue;
      }
      for (VertexId c : g.neighbors(a) & g.neighbors(b) & within) {
        auto parts = components(g, rest.without(c));
        if (parts.size() >= 2) triples.push_back({CutKind::Triple, a, b, c, std::move(parts)});
      }
    }
  }
  pairs.insert(pairs.end(), triples.begin(), triples.end());
  return pairs;
}

std::vector<Cut> find_cuts(const Graph& g) { return find_cuts(g, g.vertices()); }

bool crosses(const Cut& k1, const Cut& k2) {
  if (k1.kind != k2.kind) return false;
  if (k1.kind == CutKind::Pair) {
    if (k1.removed().intersects(k2.removed())) return false;
  } else if (k1.c != k2.c) {
    return false;
  }
  return k2.separates(k1.a, k1.b);
}

bool mixed_separation(const Cut& k1, const Cut& k2) {
  return k1.kind != k2.kind && (k2.separates(k1.a, k1.b) || k1.separates(k2.a, k2.b));
}

bool GraphOfCylinders::is_tree() const {
  const std::size_t nodes = cylinders.size() + rigid.size();
  if (nodes == 0) return true;
  if (edges.size() + 1 != nodes) return false;
  std::vector<int> parent(nodes);
  for (std::size_t i = 0; i < nodes; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [c, r] : edges) {
    const int u = find(c), w = find(static_cast<int>(cylinders.size()) + r);
    if (u == w) return false;
    parent[static_cast<std::size_t>(u)] = w;
  }
  return true;
}

VertexSet essential_vertices(const Graph& g) {
  VertexSet s;
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) s.insert(v);
  return s;
}

std::vector<VertexSet> maximal_cliques(const std::vector<VertexSet>& adj, VertexSet candidates) {
  std::vector<VertexSet> out;
  std::vector<VertexSet> restricted(adj.size());
  for (VertexId v : candidates) restricted[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)] & candidates;
  bron_kerbosch(restricted, {}, candidates, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

GraphOfCylinders graph_of_cylinders(const Graph& g) {
  GraphOfCylinders goc;
  goc.cuts = find_cuts(g);
  const auto& cuts = goc.cuts;
  std::vector<bool> crossed(cuts.size(), false);
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      if (i == j) continue;
      if (crosses(cuts[i], cuts[j])) {
        goc.crossings.emplace_back(static_cast<int>(i), static_cast<int>(j));
        crossed[i] = true;
      } else if (i < j && mixed_separation(cuts[i], cuts[j])) {
        goc.mixed_separations.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  goc.hanging = !goc.crossings.empty();
  if (goc.hanging) return goc;

  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const VertexPair p = cuts[i].pair();
    if (std::any_of(goc.cylinders.begin(), goc.cylinders.end(), [&](const Cylinder& c) { return c.pair == p; }))
      continue;
    goc.cylinders.push_back({p, VertexSet{p.first, p.second} | (g.neighbors(p.first) & g.neighbors(p.second))});
  }

  const VertexSet essential = essential_vertices(g);
  std::vector<VertexSet> together(static_cast<std::size_t>(g.order()));
  for (VertexId u : essential)
    for (VertexId w : essential) {
      if (u == w) continue;
      const bool split = std::any_of(cuts.begin(), cuts.end(), [&](const Cut& k) { return k.separates(u, w); });
      if (!split) together[static_cast<std::size_t>(u)].insert(w);
    }
  for (VertexSet b : maximal_cliques(together, essential))
    if (b.size() >= 4) goc.rigid.push_back(b);

  for (std::size_t c = 0; c < goc.cylinders.size(); ++c) {
    const auto [a, b] = goc.cylinders[c].pair;
    for (std::size_t r = 0; r < goc.rigid.size(); ++r)
      if (goc.rigid[r].contains(a) && goc.rigid[r].contains(b))
        goc.edges.emplace_back(static_cast<int>(c), static_cast<int>(r));
  }
  return goc;
}

std::vector<VertexSet> split_parts(const Cut& k) {
  std::vector<VertexSet> out;
  for (VertexSet comp : k.components) out.push_back(comp | k.removed());
  return out;
}

std::vector<InducedSubgraph> split_at_cut(const Graph& g, const Cut& k) {
  std::vector<InducedSubgraph> out;
  for (VertexSet part : split_parts(k)) out.emplace_back(g, part);
  return out;
}

Lambda lift_lambda(const InducedSubgraph& part, const Lambda& local) {
  auto lift = [&](const std::vector<VertexPair>& es) {
    std::vector<VertexPair> out;
    for (auto [u, v] : es)
      out.emplace_back(part.to_host[static_cast<std::size_t>(u)], part.to_host[static_cast<std::size_t>(v)]);
    return out;
  };
  return Lambda(lift(local.red), lift(local.blue));
}

Lambda restrict_lambda(const InducedSubgraph& part, const Lambda& host) {
  std::vector<int> local(kMaxVertices, -1);
  for (std::size_t i = 0; i < part.to_host.size(); ++i)
    local[static_cast<std::size_t>(part.to_host[i])] = static_cast<int>(i);
  auto restrict_edges = [&](const std::vector<VertexPair>& es) {
    std::vector<VertexPair> out;
    for (auto [u, v] : es) {
      const int lu = local[static_cast<std::size_t>(u)], lv = local[static_cast<std::size_t>(v)];
      if (lu != -1 && lv != -1) out.emplace_back(lu, lv);
    }
    return out;
  };
  return Lambda(restrict_edges(host.red), restrict_edges(host.blue));
}

Lambda assemble_lambdas(const Graph& g, const Cut& k, const std::vector<Lambda>& parts) {
  if (parts.size() != k.components.size())
    throw std::invalid_argument("assemble_lambdas: expected one Λ per component");
  if (parts.size() == 1) return parts.front();
  const VertexPair ab = ordered(k.a, k.b);
  std::vector<VertexPair> red, blue;
  for (const Lambda& part : parts) {
    const bool in_red = std::binary_search(part.red.begin(), part.red.end(), ab);
    const bool in_blue = std::binary_search(part.blue.begin(), part.blue.end(), ab);
    if (!in_red && !in_blue) throw std::invalid_argument("assemble_lambdas: a part lacks the edge " + describe(g, k));
    const auto& same = in_red ? part.red : part.blue;
    const auto& other = in_red ? part.blue : part.red;
    red.insert(red.end(), same.begin(), same.end());
    blue.insert(blue.end(), other.begin(), other.end());
  }
  if (k.kind == CutKind::Pair) {
    const VertexSet common = g.neighbors(k.a) & g.neighbors(k.b);
    std::optional<VertexId> hub;
    for (VertexSet comp : k.components) {
      const VertexSet here = comp & common;
      if (here.empty()) throw std::logic_error("assemble_lambdas: component without a common neighbour of the cut");
      if (!hub) hub = here.first();
      else blue.emplace_back(*hub, here.first());
    }
  }
  return Lambda(std::move(red), std::move(blue));
}

Lambda assemble_lambdas(const Graph& g, const Cut& k, const std::vector<std::pair<InducedSubgraph, Lambda>>& parts) {
  std::vector<Lambda> lifted;
  for (const auto& [sub, lam] : parts) lifted.push_back(lift_lambda(sub, lam));
  return assemble_lambdas(g, k, lifted);
}

std::string describe(const Graph& g, const Cut& k) {
  std::string s = "<" + g.name(k.a) + "," + g.name(k.b);
  if (k.c) s += ";" + g.name(*k.c);
  return s + ">";
}

}  // namespace visraag
