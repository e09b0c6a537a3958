#include <doctest.h>

#include "support/builders.hpp"
#include "visraag/dl_checker.hpp"
#include "visraag/generators.hpp"

using namespace visraag;

namespace {

VertexSet ids(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.insert(g.id_of(n));
  return s;
}

Lambda lambda_of(const Graph& g, std::vector<std::pair<const char*, const char*>> red,
                 std::vector<std::pair<const char*, const char*>> blue) {
  std::vector<VertexPair> r, b;
  for (auto [u, v] : red) r.emplace_back(g.id_of(u), g.id_of(v));
  for (auto [u, v] : blue) b.emplace_back(g.id_of(u), g.id_of(v));
  return Lambda(r, b);
}

}  // namespace

TEST_CASE("lambda hull") {
  const Instance sq = square_instance();
  const Graph& g = sq.graph;
  CHECK(lambda_hull(g, sq.lambda, ids(g, {"a", "b"})) == ids(g, {"a", "b"}));

  const Graph p = testkit::path(3);
  const Lambda chain({{0, 1}, {1, 2}}, {});
  CHECK(lambda_hull(p, chain, VertexSet{0, 2}) == VertexSet{0, 1, 2});
  CHECK_FALSE(is_lambda_convex(p, chain, VertexSet{0, 2}));
  CHECK(is_lambda_convex(p, chain, VertexSet{0, 1}));

  const Instance w = bicycle_wheel(3);
  CHECK(lambda_hull(w.graph, w.lambda, ids(w.graph, {"c1", "c3"})) == ids(w.graph, {"c1", "y", "c3"}));
  // Points in different components keep their own per-component hull.
  CHECK(lambda_hull(w.graph, w.lambda, ids(w.graph, {"c1", "d2"})) == ids(w.graph, {"c1", "d2"}));
  CHECK(lambda_hull(w.graph, w.lambda, ids(w.graph, {"c1", "c2", "d1", "d3"})) ==
        ids(w.graph, {"c1", "c2", "y", "d1", "d3", "x"}));

  const Lambda cyclic({{0, 1}, {1, 2}, {0, 2}}, {});
  CHECK_THROWS_AS(LambdaForest(3, cyclic), std::invalid_argument);
}

TEST_CASE("tree and span conditions") {
  const Instance sq = square_instance();
  CHECK(check_r1_r2_f1(sq.graph, sq.lambda).passed());

  const Lambda one_diag({sq.lambda.red}, {});
  const TreeSpanReport half = check_r1_r2_f1(sq.graph, one_diag);
  CHECK_FALSE(half.passed());
  CHECK_FALSE(half.f1.passed);

  const Instance w = bicycle_wheel(3);
  CHECK(check_r1_r2_f1(w.graph, w.lambda).passed());

  // A Λ-edge that is a Γ-edge is malformed.
  const Lambda bad = lambda_of(sq.graph, {{"a", "c"}}, {{"b", "d"}});
  CHECK_FALSE(check_r1_r2_f1(sq.graph, bad).malformed.empty());

  // d1 and c3 are non-adjacent but lie in different classes.
  const Lambda crossing = lambda_of(w.graph, {{"x", "d1"}, {"d1", "c3"}}, {{"y", "c1"}});
  const TreeSpanReport cr = check_r1_r2_f1(w.graph, crossing);
  CHECK(cr.coloring_mismatch.has_value());
  CHECK_FALSE(cr.passed());

  const Lambda cycle = lambda_of(w.graph, {{"x", "d1"}, {"d1", "d2"}, {"d2", "x"}, {"x", "d3"}},
                                 {{"y", "c1"}, {"y", "c2"}, {"y", "c3"}});
  const TreeSpanReport cy = check_r1_r2_f1(w.graph, cycle);
  CHECK_FALSE(cy.r1.passed);
  CHECK(cy.r1.witness.vertices.size() == 3);

  auto odd = check_r1_r2_f1(testkit::cycle(5), Lambda({{0, 2}}, {{1, 3}}));
  CHECK_FALSE(odd.bipartite);
  CHECK_FALSE(odd.passed());
}

TEST_CASE("R3 and R4") {
  const Instance sq = square_instance();
  CHECK(check_r3(sq.graph, sq.lambda).passed);
  CHECK(check_r4(sq.graph, sq.lambda).passed);
  const Instance w = bicycle_wheel(3);
  CHECK(check_r3(w.graph, w.lambda).passed);
  CHECK(check_r4(w.graph, w.lambda).passed);
}

TEST_CASE("verify on candidate lambdas of the order example") {
  const auto fx = fixtures();
  for (const char* tag : {"a", "b", "c", "d"}) {
    const Fixture& f = fx.at(std::string("ordermatters_lambda_") + tag);
    const DLReport report = verify_fidl(f.graph, *f.lambda);
    CAPTURE(tag);
    CHECK(report.passed() == (f.expected == Expected::Yes));
    CHECK(check_r1_r2_f1(f.graph, *f.lambda).passed());
  }
}

TEST_CASE("verify reports preconditions separately") {
  const DLReport tri = verify_fidl(testkit::complete(3), Lambda());
  CHECK_FALSE(tri.preconditions_hold());
  CHECK_FALSE(tri.r1.evaluated);
  const DLReport path = verify_fidl(testkit::path(3), Lambda({{0, 2}}, {}));
  CHECK_FALSE(path.preconditions_hold());
}

TEST_CASE("verify on worked examples") {
  const Instance sq = square_instance();
  CHECK(verify_fidl(sq.graph, sq.lambda).passed());
  for (int n = 3; n <= 6; ++n) {
    const Instance w = bicycle_wheel(n);
    CHECK(verify_fidl(w.graph, w.lambda).passed());
  }
  const ConingResult cube = cube_with_diagonal_coning();
  CHECK(verify_fidl(cube.graph, cube.lambda).passed());
}

TEST_CASE("commuting graph") {
  const Instance sq = square_instance();
  const CommutingGraph d = commuting_graph(sq.graph, sq.lambda);
  CHECK(d.vertices.size() == 2);
  CHECK(d.edge_count() == 1);
  for (int n = 3; n <= 6; ++n) {
    const Instance w = bicycle_wheel(n);
    const CommutingGraph dw = commuting_graph(w.graph, w.lambda);
    CHECK(dw.vertices.size() == static_cast<std::size_t>(2 * n));
    CHECK(dw.edge_count() == static_cast<std::size_t>(2 * n));
    for (const auto& nb : dw.adjacency) CHECK(nb.size() == 2);
    CHECK(is_connected(dw.as_graph(), dw.as_graph().vertices()));
    for (const auto& e : dw.embedding) CHECK(e.has_value());
  }
}
