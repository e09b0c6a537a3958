#include "visraag/generators.hpp"

#include <stdexcept>

#include "visraag/dl_checker.hpp"

namespace visraag {

namespace {

Instance with_names(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges,
                    const std::vector<std::pair<std::string, std::string>>& red,
                    const std::vector<std::pair<std::string, std::string>>& blue) {
  Graph g = Graph::from_named_edges(std::move(names), edges);
  auto ids = [&](const std::vector<std::pair<std::string, std::string>>& es) {
    std::vector<VertexPair> out;
    for (const auto& [a, b] : es) out.emplace_back(g.id_of(a), g.id_of(b));
    return out;
  };
  Lambda lam(ids(red), ids(blue));
  return {std::move(g), std::move(lam)};
}

std::string fresh_name(const Graph& g) {
  for (int k = g.order();; ++k) {
    std::string name = "x" + std::to_string(k);
    if (!g.find(name)) return name;
  }
}

/// Uniformly random connected vertex set of the forest `adj` restricted to
/// `within`, of size at least two. Returns empty if none exists.
VertexSet sample_subtree(std::mt19937_64& rng, const std::vector<VertexSet>& adj, VertexSet within) {
  const std::size_t n = adj.size();
  std::vector<VertexId> parent(n, -1);
  std::vector<VertexId> order;
  for (VertexId r : within) {
    if (parent[static_cast<std::size_t>(r)] != -1) continue;
    parent[static_cast<std::size_t>(r)] = r;
    order.push_back(r);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      const VertexId u = order[head];
      for (VertexId w : adj[static_cast<std::size_t>(u)] & within)
        if (parent[static_cast<std::size_t>(w)] == -1) {
          parent[static_cast<std::size_t>(w)] = u;
          order.push_back(w);
        }
    }
  }
  auto children = [&](VertexId u) {
    VertexSet c;
    for (VertexId w : adj[static_cast<std::size_t>(u)] & within)
      if (parent[static_cast<std::size_t>(w)] == u && w != u) c.insert(w);
    return c;
  };
  // Subtrees whose top vertex is u.
  std::vector<std::uint64_t> count(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::uint64_t f = 1;
    for (VertexId c : children(*it)) f *= 1 + count[static_cast<std::size_t>(c)];
    count[static_cast<std::size_t>(*it)] = f;
  }
  std::uint64_t total = 0;
  for (VertexId u : order) total += count[static_cast<std::size_t>(u)];
  if (total == order.size()) return {};  // only singletons

  for (;;) {
    std::uint64_t pick = uniform_below(rng, total);
    VertexId top = order.front();
    for (VertexId u : order) {
      if (pick < count[static_cast<std::size_t>(u)]) {
        top = u;
        break;
      }
      pick -= count[static_cast<std::size_t>(u)];
    }
    VertexSet chosen = VertexSet::single(top);
    std::vector<VertexId> stack{top};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId c : children(u)) {
        const std::uint64_t fc = count[static_cast<std::size_t>(c)];
        if (uniform_below(rng, fc + 1) < fc) {
          chosen.insert(c);
          stack.push_back(c);
        }
      }
    }
    if (chosen.size() >= 2) return chosen;
  }
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw < limit) return draw % bound;
  }
}

Instance square_instance() {
  return with_names({"a", "b", "c", "d"}, {{"a", "c"}, {"c", "b"}, {"b", "d"}, {"d", "a"}}, {{"a", "b"}},
                    {{"c", "d"}});
}

Instance cone_step(const Graph& g, const Lambda& lam, VertexId v, VertexSet N, std::string name) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("cone_step: unknown vertex");
  if (!N.is_subset_of(g.neighbors(v))) throw std::invalid_argument("cone_step: N is not contained in lk(v)");
  if (N.size() < 2) throw std::invalid_argument("cone_step: N has fewer than two vertices");
  if (!is_lambda_convex(g, lam, N)) throw std::invalid_argument("cone_step: N is not Λ-convex");
  std::optional<Color> color;
  if (lam.support(Color::Red).contains(v)) color = Color::Red;
  else if (lam.support(Color::Blue).contains(v)) color = Color::Blue;
  if (!color) throw std::invalid_argument("cone_step: v is not covered by Λ");
  if (g.order() >= kMaxVertices) throw std::invalid_argument("cone_step: vertex limit reached");

  const VertexId x = g.order();
  std::vector<std::string> names = g.names();
  names.push_back(name.empty() ? fresh_name(g) : std::move(name));
  std::vector<VertexPair> edges = g.edges();
  for (VertexId u : N) edges.emplace_back(u, x);
  std::vector<VertexPair> red = lam.red, blue = lam.blue;
  (*color == Color::Red ? red : blue).emplace_back(v, x);
  return {Graph(std::move(names), edges), Lambda(std::move(red), std::move(blue))};
}

ConingResult random_coning(std::uint64_t seed, int steps, ConingLimits limits) {
  std::mt19937_64 rng(seed);
  Instance cur = square_instance();
  ConingSequence seq;
  const int cap = std::min(limits.max_vertices, kMaxVertices);
  for (int step = 0; step < steps && cur.graph.order() < cap; ++step) {
    const LambdaForest forest(cur.graph.order(), cur.lambda);
    std::vector<VertexSet> adj(static_cast<std::size_t>(cur.graph.order()));
    for (VertexId u = 0; u < cur.graph.order(); ++u) adj[static_cast<std::size_t>(u)] = forest.neighbors(u);
    VertexSet candidates = cur.graph.vertices();
    VertexSet N;
    VertexId v = -1;
    while (!candidates.empty()) {
      const auto pool = candidates.to_vector();
      v = pool[static_cast<std::size_t>(uniform_below(rng, pool.size()))];
      N = sample_subtree(rng, adj, cur.graph.neighbors(v));
      if (!N.empty()) break;
      candidates.erase(v);
    }
    if (N.empty()) break;
    Instance next = cone_step(cur.graph, cur.lambda, v, N);
    seq.push_back({v, N, cur.graph.order()});
    cur = std::move(next);
  }
  return {std::move(cur.graph), std::move(cur.lambda), std::move(seq)};
}

Instance bicycle_wheel(int n) {
  if (n < 3) throw std::invalid_argument("bicycle_wheel: n must be at least 3");
  if (2 * n + 2 > kMaxVertices) throw std::invalid_argument("bicycle_wheel: too many vertices");
  std::vector<std::string> names{"x", "y"};
  auto c = [](int i) { return "c" + std::to_string(i); };
  auto d = [](int i) { return "d" + std::to_string(i); };
  for (int i = 1; i <= n; ++i) {
    names.push_back(c(i));
    names.push_back(d(i));
  }
  std::vector<std::pair<std::string, std::string>> edges{{"x", "y"}}, red, blue;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(c(i), d(i));
    edges.emplace_back(d(i), c(i % n + 1));
    edges.emplace_back(c(i), "x");
    edges.emplace_back(d(i), "y");
    red.emplace_back("x", d(i));
    blue.emplace_back("y", c(i));
  }
  return with_names(std::move(names), edges, red, blue);
}

std::optional<std::string> labelled_tree_problem(const LabelledTree& t) {
  const Graph& tree = t.tree;
  if (tree.order() < 2 || tree.edge_count() != tree.order() - 1 || !is_connected(tree, tree.vertices()))
    return "not a tree with at least one edge";
  if (static_cast<int>(t.labels.size()) != tree.order()) return "label count differs from vertex count";
  for (VertexId v = 0; v < tree.order(); ++v) {
    const int label = t.labels[static_cast<std::size_t>(v)];
    if (label < 1) return "label of " + tree.name(v) + " is not positive";
    if (label == 1 && tree.degree(v) != 1) return "label 1 on non-leaf " + tree.name(v);
    if (label == 1 && tree.order() == 2) return "single-edge tree needs both labels above 1";
  }
  return std::nullopt;
}

Graph tree_family(const LabelledTree& t) {
  if (auto problem = labelled_tree_problem(t)) throw std::invalid_argument("tree_family: " + *problem);
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> copies(static_cast<std::size_t>(t.tree.order()));
  for (VertexId v = 0; v < t.tree.order(); ++v)
    for (int i = 0; i < t.labels[static_cast<std::size_t>(v)]; ++i) {
      copies[static_cast<std::size_t>(v)].push_back(static_cast<VertexId>(names.size()));
      names.push_back(t.tree.name(v) + "_" + std::to_string(i));
    }
  std::vector<VertexPair> edges;
  for (auto [v, w] : t.tree.edges())
    for (VertexId a : copies[static_cast<std::size_t>(v)])
      for (VertexId b : copies[static_cast<std::size_t>(w)]) edges.emplace_back(a, b);
  return Graph(std::move(names), edges);
}

ConingResult cube_with_diagonal_coning() {
  Instance cur = with_names({"x", "d1", "y", "c1"}, {{"x", "y"}, {"x", "c1"}, {"d1", "y"}, {"d1", "c1"}},
                            {{"x", "d1"}}, {{"y", "c1"}});
  ConingSequence seq;
  auto step = [&](const char* v, std::initializer_list<const char*> n, const char* x) {
    VertexSet N;
    for (const char* u : n) N.insert(cur.graph.id_of(u));
    const VertexId vid = cur.graph.id_of(v);
    seq.push_back({vid, N, cur.graph.order()});
    cur = cone_step(cur.graph, cur.lambda, vid, N, x);
  };
  step("y", {"x", "d1"}, "c2");
  step("x", {"y", "c2"}, "d2");
  step("y", {"x", "d2"}, "c3");
  step("x", {"y", "c1", "c3"}, "d3");
  return {std::move(cur.graph), std::move(cur.lambda), std::move(seq)};
}

Graph glued_wheels() {
  const Graph w = bicycle_wheel(3).graph;
  std::vector<std::string> names = w.names();
  const VertexSet shared{*w.find("x"), *w.find("d1")};
  std::vector<VertexId> copy(static_cast<std::size_t>(w.order()));
  for (VertexId v = 0; v < w.order(); ++v) {
    if (shared.contains(v)) {
      copy[static_cast<std::size_t>(v)] = v;
      continue;
    }
    copy[static_cast<std::size_t>(v)] = static_cast<VertexId>(names.size());
    names.push_back(w.name(v) + "'");
  }
  std::vector<VertexPair> edges = w.edges();
  for (auto [u, v] : w.edges()) edges.emplace_back(copy[static_cast<std::size_t>(u)], copy[static_cast<std::size_t>(v)]);
  return Graph(names, edges);
}

std::map<std::string, Fixture> fixtures() {
  std::map<std::string, Fixture> out;
  {
    Instance sq = square_instance();
    out["square"] = {sq.graph, sq.lambda, Expected::Yes, "4-cycle with its two diagonals"};
  }
  for (int n = 3; n <= 6; ++n) {
    Instance w = bicycle_wheel(n);
    out["wheel" + std::to_string(n)] = {w.graph, w.lambda, Expected::Yes, "bicycle wheel, opposite-spoke stars"};
  }
  {
    ConingResult cube = cube_with_diagonal_coning();
    out["cube_with_diagonal"] = {cube.graph, cube.lambda, Expected::Yes, "built by four coning steps"};
  }
  auto numbered = [](int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
  };
  const std::vector<std::pair<std::string, std::string>> om_edges{{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"},
                                                                  {"4", "1"}, {"0", "3"}, {"2", "5"}, {"5", "0"},
                                                                  {"0", "6"}, {"6", "4"}};
  {
    Instance om = with_names(numbered(7), om_edges, {{"1", "3"}, {"1", "5"}, {"1", "6"}}, {{"0", "2"}, {"0", "4"}});
    out["ordermatters"] = {om.graph, om.lambda, Expected::Yes, "removal order of satellites matters"};
  }
  const std::vector<std::pair<std::string, std::string>> tree_a{{"1", "3"}, {"1", "5"}, {"1", "6"}},
      tree_b{{"1", "3"}, {"1", "5"}, {"3", "6"}}, path_024{{"0", "2"}, {"2", "4"}}, star_0{{"0", "2"}, {"0", "4"}};
  const std::vector<std::tuple<std::string, decltype(tree_a), decltype(tree_a), Expected>> candidates{
      {"a", tree_a, path_024, Expected::No},
      {"b", tree_b, path_024, Expected::No},
      {"c", tree_a, star_0, Expected::Yes},
      {"d", tree_b, star_0, Expected::Yes}};
  for (const auto& [tag, red, blue, exp] : candidates) {
    Instance inst = with_names(numbered(7), om_edges, red, blue);
    out["ordermatters_lambda_" + tag] = {inst.graph, inst.lambda, exp, "candidate Λ; expectation is for verification"};
  }
  {
    LabelledTree t{Graph::from_named_edges({"a", "b", "c", "d"},
                                           std::vector<std::pair<std::string, std::string>>{
                                               {"a", "b"}, {"b", "c"}, {"c", "d"}}),
                   {1, 4, 3, 2}};
    out["mixed_multiple_tree"] = {tree_family(t), std::nullopt, Expected::Yes, "labelled path a(1)-b(4)-c(3)-d(2)"};
  }
  {
    std::vector<std::pair<std::string, std::string>> hex, oct;
    for (int i = 0; i < 6; ++i) hex.emplace_back(std::to_string(i), std::to_string((i + 1) % 6));
    for (int i = 0; i < 8; ++i) oct.emplace_back(std::to_string(i), std::to_string((i + 1) % 8));
    out["hexagon"] = {Graph::from_named_edges(numbered(6), hex), std::nullopt, Expected::No, "no induced squares"};
    out["octagon"] = {Graph::from_named_edges(numbered(8), oct), std::nullopt, Expected::No,
                      "long induced cycle without 2-chord"};
  }
  {
    // Four squares glued corner to corner around a, c, b, d: {a,b} and {c,d} cross.
    std::vector<std::pair<std::string, std::string>> ring;
    const std::vector<std::tuple<std::string, std::string, std::string>> arcs{
        {"a", "c", "p"}, {"c", "b", "q"}, {"b", "d", "r"}, {"d", "a", "s"}};
    for (const auto& [u, w, tag] : arcs)
      for (const char* k : {"1", "2"}) {
        ring.emplace_back(u, tag + k);
        ring.emplace_back(w, tag + k);
      }
    out["square_ring"] = {Graph::from_named_edges(
                              {"a", "b", "c", "d", "p1", "p2", "q1", "q2", "r1", "r2", "s1", "s2"}, ring),
                          std::nullopt, Expected::No, "crossing cut pairs {a,b} and {c,d}"};
  }
  out["glued_wheels"] = {glued_wheels(), std::nullopt, Expected::Yes,
                         "two 3-wheels sharing the spoke pair {x,d1}"};
  return out;
}

}  // namespace visraag
