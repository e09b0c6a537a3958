#include "visraag/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "visraag/cycles.hpp"

namespace visraag {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

void check_vertex(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(g.order()));
}

}  // namespace

Graph::Graph(int order, std::span<const VertexPair> edges) : Graph(default_names(order), edges) {}

Graph::Graph(std::vector<std::string> names, std::span<const VertexPair> edges) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  index_names();
  build(edges);
}

Graph Graph::from_named_edges(std::vector<std::string> names,
                              std::span<const std::pair<std::string, std::string>> edges) {
  Graph probe(names, {});
  std::vector<VertexPair> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) ids.emplace_back(probe.id_of(a), probe.id_of(b));
  return Graph(std::move(names), ids);
}

void Graph::index_names() {
  by_name_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!by_name_.emplace(names_[i], static_cast<VertexId>(i)).second)
      throw std::invalid_argument("duplicate vertex name '" + names_[i] + "'");
  }
}

void Graph::build(std::span<const VertexPair> edges) {
  adj_.assign(names_.size(), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex '" + names_[static_cast<std::size_t>(u)] + "'");
    if (adj_[static_cast<std::size_t>(u)].contains(v))
      throw std::invalid_argument("repeated edge " + names_[static_cast<std::size_t>(u)] + "-" +
                                  names_[static_cast<std::size_t>(v)]);
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

const std::string& Graph::name(VertexId v) const {
  check_vertex(*this, v);
  return names_[static_cast<std::size_t>(v)];
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : neighbors(u) - VertexSet::prefix(u + 1)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexSet keep) const { return InducedSubgraph(*this, keep).graph; }

InducedSubgraph::InducedSubgraph(const Graph& host, VertexSet keep) : to_host(keep.to_vector()) {
  std::vector<int> local(static_cast<std::size_t>(host.order()), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < to_host.size(); ++i) {
    local[static_cast<std::size_t>(to_host[i])] = static_cast<int>(i);
    names.push_back(host.name(to_host[i]));
  }
  std::vector<VertexPair> edges;
  for (auto [u, v] : host.edges())
    if (keep.contains(u) && keep.contains(v))
      edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  graph = Graph(std::move(names), edges);
}

VertexSet TwoColoring::red() const {
  VertexSet s;
  for (std::size_t i = 0; i < color.size(); ++i)
    if (color[i] == Color::Red) s.insert(static_cast<VertexId>(i));
  return s;
}

VertexSet TwoColoring::blue() const {
  VertexSet s;
  for (std::size_t i = 0; i < color.size(); ++i)
    if (color[i] == Color::Blue) s.insert(static_cast<VertexId>(i));
  return s;
}

Graph complement(const Graph& g) {
  std::vector<VertexPair> edges;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.names(), edges);
}

VertexSet link(const Graph& g, VertexId v) {
  check_vertex(g, v);
  return g.neighbors(v);
}

bool is_triangle_free(const Graph& g, VertexSet within) {
  for (VertexId u : within)
    for (VertexId v : g.neighbors(u) & within)
      if (v > u && (g.neighbors(u) & g.neighbors(v) & within).size() > 0) return false;
  return true;
}

bool is_triangle_free(const Graph& g) { return is_triangle_free(g, g.vertices()); }

bool is_incomplete(const Graph& g, VertexSet within) {
  for (VertexId v : within)
    if (!(within.without(v)).is_subset_of(g.neighbors(v))) return true;
  return false;
}

bool is_incomplete(const Graph& g) { return is_incomplete(g, g.vertices()); }

namespace {

VertexSet reach(const Graph& g, VertexSet within, VertexId from) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexId v : frontier) next |= g.neighbors(v);
    next &= within;
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = reach(g, within, left.first());
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

int count_components(const Graph& g, VertexSet within, int cap) {
  int count = 0;
  VertexSet left = within;
  while (!left.empty() && count < cap) {
    left -= reach(g, within, left.first());
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g, VertexSet within) { return count_components(g, within, 2) <= 1; }

namespace {

bool separated_by(const Graph& g, VertexSet within, VertexSet clique) {
  return count_components(g, within - clique, 2) > 1;
}

bool any_clique_separates(const Graph& g, VertexSet within, VertexSet clique, VertexSet candidates) {
  if (separated_by(g, within, clique)) return true;
  for (VertexId v : candidates) {
    candidates.erase(v);
    if (any_clique_separates(g, within, clique.with(v), candidates & g.neighbors(v))) return true;
  }
  return false;
}

}  // namespace

bool has_separating_clique_exhaustive(const Graph& g, VertexSet within) {
  return any_clique_separates(g, within, VertexSet{}, within);
}

bool has_separating_clique(const Graph& g, VertexSet within) {
  if (!is_triangle_free(g, within)) return has_separating_clique_exhaustive(g, within);
  if (separated_by(g, within, VertexSet{})) return true;
  for (VertexId v : within) {
    if (separated_by(g, within, VertexSet::single(v))) return true;
    for (VertexId w : g.neighbors(v) & within)
      if (w > v && separated_by(g, within, VertexSet{v, w})) return true;
  }
  return false;
}

bool has_separating_clique(const Graph& g) { return has_separating_clique(g, g.vertices()); }

std::variant<TwoColoring, NotBipartite> bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> side(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (VertexId root = 0; root < g.order(); ++root) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId w : g.neighbors(u)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(w)] = u;
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          // Same-side edge: the two tree paths to the common ancestor close an odd cycle.
          std::vector<VertexId> up_u{u}, up_w{w};
          VertexId a = u, b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)])
            up_u.push_back(a = parent[static_cast<std::size_t>(a)]);
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)])
            up_w.push_back(b = parent[static_cast<std::size_t>(b)]);
          while (a != b) {
            up_u.push_back(a = parent[static_cast<std::size_t>(a)]);
            up_w.push_back(b = parent[static_cast<std::size_t>(b)]);
          }
          up_w.pop_back();
          std::reverse(up_w.begin(), up_w.end());
          up_u.insert(up_u.end(), up_w.begin(), up_w.end());
          return NotBipartite{std::move(up_u)};
        }
      }
    }
  }
  TwoColoring out;
  out.color.reserve(n);
  for (int s : side) out.color.push_back(s == 0 ? Color::Red : Color::Blue);
  return out;
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<TwoColoring>(bipartition(g)); }

namespace {

VertexSet dominators_of(const Graph& g, VertexSet within, VertexId v, SatelliteMode mode) {
  const VertexSet lk = g.neighbors(v) & within;
  VertexSet out;
  for (VertexId w : within.without(v)) {
    const VertexSet lw = g.neighbors(w) & within;
    if (!lk.is_subset_of(lw)) continue;
    if (mode == SatelliteMode::Strict && lk == lw) continue;
    out.insert(w);
  }
  return out;
}

}  // namespace

std::vector<Satellite> satellites(const Graph& g, VertexSet within, SatelliteMode mode) {
  std::vector<Satellite> out;
  for (VertexId v : within) {
    VertexSet dom = dominators_of(g, within, v, mode);
    if (!dom.empty()) out.push_back({v, dom});
  }
  return out;
}

std::vector<Satellite> satellites(const Graph& g, SatelliteMode mode) {
  return satellites(g, g.vertices(), mode);
}

bool is_satellite(const Graph& g, VertexSet within, VertexId v, SatelliteMode mode) {
  return !dominators_of(g, within, v, mode).empty();
}

bool is_cycle(const Graph& g, std::span<const VertexId> cycle) {
  if (cycle.size() < 3) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId v = cycle[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (!g.adjacent(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

std::vector<Chord> n_chords(const Graph& g, std::span<const VertexId> cycle, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("only 1- and 2-chords are supported");
  const auto len = static_cast<int>(cycle.size());
  std::vector<Chord> out;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const int d = j - i;
      if (std::min(d, len - d) <= n) continue;
      const VertexId x = cycle[static_cast<std::size_t>(i)];
      const VertexId y = cycle[static_cast<std::size_t>(j)];
      if (n == 1) {
        if (g.adjacent(x, y)) out.push_back({x, y, std::nullopt});
      } else {
        for (VertexId m : g.neighbors(x) & g.neighbors(y)) out.push_back({x, y, m});
      }
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> induced_cycles(const Graph& g, int max_len) {
  std::vector<std::vector<VertexId>> out;
  for_each_induced_cycle(g, max_len, [&](std::span<const VertexId> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

}  // namespace visraag
