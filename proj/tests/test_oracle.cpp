#include <doctest.h>

#include <set>

#include "support/builders.hpp"
#include "support/literal_fidl.hpp"
#include "support/small_graphs.hpp"
#include "visraag/generators.hpp"
#include "visraag/oracle.hpp"

using namespace visraag;

TEST_CASE("spanning trees") {
  // Cayley: K_n has n^(n-2) spanning trees.
  for (int n = 1; n <= 6; ++n) {
    const Graph k = testkit::complete(n);
    std::set<std::vector<VertexPair>> seen;
    for_each_spanning_tree(n, k.edges(), [&](const std::vector<VertexPair>& t) {
      CHECK(static_cast<int>(t.size()) == n - 1);
      std::vector<VertexPair> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      seen.insert(sorted);
      return true;
    });
    int expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    CHECK(static_cast<int>(seen.size()) == expected);
    CHECK(spanning_tree_count(n, k.edges()) == doctest::Approx(expected));
  }
  // C_5 has five; a disconnected graph has none.
  int c5 = 0;
  for_each_spanning_tree(5, testkit::cycle(5).edges(), [&](const auto&) { return ++c5, true; });
  CHECK(c5 == 5);
  CHECK(spanning_tree_count(5, testkit::cycle(5).edges()) == doctest::Approx(5));
  int none = 0;
  for_each_spanning_tree(4, {{0, 1}, {2, 3}}, [&](const auto&) { return ++none, true; });
  CHECK(none == 0);
  CHECK(spanning_tree_count(4, {{0, 1}, {2, 3}}) == doctest::Approx(0));

  // Matrix-tree count matches enumeration on random graphs.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Graph g = testkit::random_graph(rng, 6, 0.6);
    int count = 0;
    for_each_spanning_tree(6, g.edges(), [&](const auto&) { return ++count, true; });
    CHECK(spanning_tree_count(6, g.edges()) == doctest::Approx(count));
  }
}

TEST_CASE("naive search basics") {
  const Instance sq = square_instance();
  const Verdict v = naive_search(sq.graph);
  REQUIRE(v.yes());
  CHECK(*v.lambda == sq.lambda);
  CHECK(count_all_fidl(sq.graph).count == 1);

  CHECK(naive_search(fixtures().at("hexagon").graph).no());
  CHECK(naive_search(testkit::cycle(5)).reason == NoReason::NotBipartite);
  CHECK(naive_search(testkit::complete(3)).outcome == Verdict::Outcome::Refused);

  OracleLimits tiny;
  tiny.max_pairs = 10;
  CHECK(naive_search(bicycle_wheel(4).graph, tiny).outcome == Verdict::Outcome::BudgetExceeded);
  CHECK(count_all_fidl(bicycle_wheel(4).graph, tiny).budget_exceeded);
}

TEST_CASE("all passing lambdas of the order-matters graph") {
  const auto fx = fixtures();
  const Graph& g = fx.at("ordermatters").graph;
  const FidlCount all = count_all_fidl(g);
  REQUIRE(all.count > 0);
  // The two verified candidates are among them, the two rejected ones are not.
  auto listed = [&](const Lambda& lam) {
    return std::find(all.lambdas.begin(), all.lambdas.end(), lam) != all.lambdas.end() ||
           std::find(all.lambdas.begin(), all.lambdas.end(), Lambda(lam.blue, lam.red)) != all.lambdas.end();
  };
  CHECK(listed(*fx.at("ordermatters_lambda_c").lambda));
  CHECK(listed(*fx.at("ordermatters_lambda_d").lambda));
  CHECK_FALSE(listed(*fx.at("ordermatters_lambda_a").lambda));
  CHECK_FALSE(listed(*fx.at("ordermatters_lambda_b").lambda));
  // Every passing Λ is one of (c), (d) under a graph automorphism.
  const std::vector<Lambda> verified{*fx.at("ordermatters_lambda_c").lambda, *fx.at("ordermatters_lambda_d").lambda};
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<VertexPair>> images;
  do {
    bool automorphism = true;
    for (auto [u, v] : g.edges()) automorphism &= g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    if (!automorphism) continue;
    for (const Lambda& lam : verified) {
      std::vector<VertexPair> es;
      for (auto [u, v] : lam.all_edges()) es.push_back(ordered(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
      std::sort(es.begin(), es.end());
      images.insert(es);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const Lambda& lam : all.lambdas) {
    std::vector<VertexPair> es = lam.all_edges();
    std::sort(es.begin(), es.end());
    CHECK(images.contains(es));
  }
}

TEST_CASE("wheel lambdas include the opposite-spoke stars") {
  const Instance w = bicycle_wheel(3);
  const FidlCount all = count_all_fidl(w.graph);
  const bool found = std::find(all.lambdas.begin(), all.lambdas.end(), w.lambda) != all.lambdas.end() ||
                     std::find(all.lambdas.begin(), all.lambdas.end(), Lambda(w.lambda.blue, w.lambda.red)) != all.lambdas.end();
  CHECK(found);
}

TEST_CASE("checker matches a definition-literal reimplementation") {
  // Every candidate tree pair on small bipartite graphs, including failing ones.
  const auto levels = testkit::triangle_free_by_order(7);
  int compared = 0;
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : levels[static_cast<std::size_t>(n)]) {
      if (!search_preconditions(g).empty() || !is_bipartite(g)) continue;
      const TwoColoring tc = std::get<TwoColoring>(bipartition(g));
      std::vector<std::vector<VertexPair>> reds, blues;
      auto trees = [&](VertexSet cls, auto& out) {
        const std::vector<VertexId> ids = cls.to_vector();
        std::vector<VertexPair> edges;
        for (std::size_t i = 0; i < ids.size(); ++i)
          for (std::size_t j = i + 1; j < ids.size(); ++j) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        for_each_spanning_tree(static_cast<int>(ids.size()), edges, [&](const std::vector<VertexPair>& t) {
          std::vector<VertexPair> host;
          for (auto [a, b] : t) host.emplace_back(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]);
          out.push_back(host);
          return true;
        });
      };
      trees(tc.red(), reds);
      trees(tc.blue(), blues);
      for (const auto& r : reds)
        for (const auto& b : blues) {
          const Lambda lam(r, b);
          const DLReport rep = verify_fidl(g, lam);
          CHECK(rep.r3.passed == literal::r3(g, lam));
          CHECK(rep.r4.passed == literal::r4(g, lam));
          ++compared;
        }
    }
  CHECK(compared > 100);
}

TEST_CASE("oracle agrees with the dismantling search on small graphs") {
  const auto levels = testkit::triangle_free_by_order(7);
  int graphs = 0;
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : levels[static_cast<std::size_t>(n)]) {
      if (!search_preconditions(g).empty()) continue;
      ++graphs;
      const Verdict a = naive_search(g);
      const Verdict b = global_search(g);
      CHECK(a.yes() == b.yes());
      if (a.yes()) {
        // Every Λ either engine returns is in the exhaustive list.
        const FidlCount all = count_all_fidl(g);
        auto listed = [&](const Lambda& lam) {
          return std::find(all.lambdas.begin(), all.lambdas.end(), lam) != all.lambdas.end() ||
                 std::find(all.lambdas.begin(), all.lambdas.end(), Lambda(lam.blue, lam.red)) != all.lambdas.end();
        };
        CHECK(listed(*a.lambda));
        CHECK(listed(*b.lambda));
      }
    }
  CHECK(graphs > 20);
}
