#include "visraag/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "visraag/cycles.hpp"

namespace visraag {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

class TreeEnumerator {
public:
  TreeEnumerator(int order, const std::vector<VertexPair>& edges,
                 const std::function<bool(const std::vector<VertexPair>&)>& visit)
      : order_(order), edges_(edges), visit_(visit) {}

  bool run() {
    Dsu d(order_);
    return go(0, d);
  }

private:
  // Whether contracted components stay connected using the edges from idx + 1 on.
  bool connected_without(std::size_t idx, Dsu d) const {
    int parts = 0;
    for (int v = 0; v < order_; ++v) parts += d.find(v) == v;
    for (std::size_t j = idx + 1; j < edges_.size() && parts > 1; ++j)
      parts -= d.unite(edges_[j].first, edges_[j].second);
    return parts == 1;
  }

  bool go(std::size_t idx, Dsu& d) {
    if (static_cast<int>(chosen_.size()) == order_ - 1) return visit_(chosen_);
    if (idx == edges_.size()) return true;
    const auto [u, v] = edges_[idx];
    if (d.find(u) == d.find(v)) return go(idx + 1, d);
    {
      Dsu with = d;
      with.unite(u, v);
      chosen_.push_back(edges_[idx]);
      const bool cont = go(idx + 1, with);
      chosen_.pop_back();
      if (!cont) return false;
    }
    if (connected_without(idx, d)) return go(idx + 1, d);
    return true;
  }

  int order_;
  const std::vector<VertexPair>& edges_;
  const std::function<bool(const std::vector<VertexPair>&)>& visit_;
  std::vector<VertexPair> chosen_;
};

/// All pairs {u,w} of the class: the complement restricted to an independent set.
std::vector<VertexPair> class_pairs(const Graph& g, VertexSet cls) {
  std::vector<VertexPair> out;
  for (VertexId u : cls)
    for (VertexId w : cls - VertexSet::prefix(u + 1) - g.neighbors(u)) out.emplace_back(u, w);
  return out;
}

/// Spanning trees of the complement on `cls`, in host ids.
std::vector<std::vector<VertexPair>> class_trees(const Graph& g, VertexSet cls) {
  const std::vector<VertexId> ids = cls.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  std::vector<VertexPair> edges;
  for (auto [u, w] : class_pairs(g, cls)) edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(w)]);
  std::vector<std::vector<VertexPair>> out;
  if (ids.size() == 1) {
    out.emplace_back();
    return out;
  }
  for_each_spanning_tree(static_cast<int>(ids.size()), edges, [&](const std::vector<VertexPair>& t) {
    std::vector<VertexPair> host;
    for (auto [a, b] : t) host.emplace_back(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]);
    out.push_back(std::move(host));
    return true;
  });
  return out;
}

double class_tree_count(const Graph& g, VertexSet cls) {
  const std::vector<VertexId> ids = cls.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
  std::vector<VertexPair> edges;
  for (auto [u, w] : class_pairs(g, cls)) edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(w)]);
  return spanning_tree_count(static_cast<int>(ids.size()), edges);
}

/// Shared enumeration: `on_pass(red index, Λ)` returns false to stop the
/// current worker's red tree early (first-found mode).
struct PairSearch {
  const Graph& g;
  const OracleLimits& limits;
  std::vector<std::vector<VertexPair>> reds, blues;
  std::vector<std::vector<VertexId>> cycles;
  std::atomic<std::uint64_t> checked{0};
  std::atomic<bool> timed_out{false};

  bool passes(const std::vector<VertexPair>& red, const std::vector<VertexPair>& blue) {
    checked.fetch_add(1, std::memory_order_relaxed);
    const Lambda lam(red, blue);
    const LambdaForest forest(g.order(), lam);
    return check_r3(g, forest).passed && check_r4(g, forest, cycles).passed;
  }

  bool past_deadline() {
    if (limits.deadline && std::chrono::steady_clock::now() > *limits.deadline) timed_out = true;
    return timed_out;
  }

  /// Runs `body(red index)` over red trees on the configured workers.
  void parallel(const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::max(1U, std::min<unsigned>(limits.threads, static_cast<unsigned>(reds.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t r; (r = next.fetch_add(1)) < reds.size();) {
        if (past_deadline()) return;
        body(r);
      }
    };
    if (workers == 1) {
      work();
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
};

struct Prepared {
  std::vector<std::string> refusal;
  bool bipartite = true;
  VertexSet red_class, blue_class;
  double pairs = 0;
};

Prepared prepare(const Graph& g) {
  Prepared p;
  p.refusal = search_preconditions(g);
  if (!p.refusal.empty()) return p;
  auto parts = bipartition(g);
  if (!std::holds_alternative<TwoColoring>(parts)) {
    p.bipartite = false;
    return p;
  }
  const auto& tc = std::get<TwoColoring>(parts);
  for (VertexId v = 0; v < g.order(); ++v) (tc.color[static_cast<std::size_t>(v)] == Color::Red ? p.red_class : p.blue_class).insert(v);
  if (!p.red_class.contains(0)) std::swap(p.red_class, p.blue_class);
  p.pairs = class_tree_count(g, p.red_class) * class_tree_count(g, p.blue_class);
  return p;
}

}  // namespace

bool for_each_spanning_tree(int order, const std::vector<VertexPair>& edges,
                            const std::function<bool(const std::vector<VertexPair>&)>& visit) {
  if (order <= 0) return true;
  {
    Dsu d(order);
    int parts = order;
    for (auto [u, v] : edges) parts -= d.unite(u, v);
    if (parts != 1) return true;  // disconnected: no spanning tree
  }
  return TreeEnumerator(order, edges, visit).run();
}

double spanning_tree_count(int order, const std::vector<VertexPair>& edges) {
  if (order <= 1) return order == 1 ? 1.0 : 0.0;
  const int n = order - 1;  // drop the last row and column
  std::vector<std::vector<long double>> m(static_cast<std::size_t>(n), std::vector<long double>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    if (u < n) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] += 1;
    if (v < n) m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] += 1;
    if (u < n && v < n) {
      m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= 1;
      m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] -= 1;
    }
  }
  long double det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) >
          std::fabs(m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)]))
        pivot = r;
    if (std::fabs(m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)]) < 1e-12L) return 0.0;
    if (pivot != c) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const auto& row = m[static_cast<std::size_t>(c)];
    det *= row[static_cast<std::size_t>(c)];
    for (int r = c + 1; r < n; ++r) {
      auto& target = m[static_cast<std::size_t>(r)];
      const long double f = target[static_cast<std::size_t>(c)] / row[static_cast<std::size_t>(c)];
      for (int k = c; k < n; ++k) target[static_cast<std::size_t>(k)] -= f * row[static_cast<std::size_t>(k)];
    }
  }
  return static_cast<double>(std::round(det));
}

Verdict naive_search(const Graph& g, const OracleLimits& limits) {
  Verdict v;
  const Prepared p = prepare(g);
  if (!p.refusal.empty()) {
    v.outcome = Verdict::Outcome::Refused;
    v.refusal = p.refusal;
    v.stage = "preconditions";
    return v;
  }
  if (!p.bipartite) {
    v.outcome = Verdict::Outcome::No;
    v.reason = NoReason::NotBipartite;
    v.stage = "bipartite";
    v.detail = "no two trees can cover a non-bipartite graph";
    return v;
  }
  if (p.pairs > limits.max_pairs) {
    v.outcome = Verdict::Outcome::BudgetExceeded;
    v.stage = "tree_count";
    v.detail = "tree pairs: " + std::to_string(p.pairs);
    return v;
  }
  PairSearch s{g, limits, class_trees(g, p.red_class), class_trees(g, p.blue_class), induced_cycles(g)};
  // Deterministic: keep the passing pair with the smallest red index.
  std::atomic<std::size_t> best{SIZE_MAX};
  std::mutex mu;
  std::optional<Lambda> found;
  s.parallel([&](std::size_t r) {
    if (r > best.load()) return;
    for (std::size_t b = 0; b < s.blues.size(); ++b) {
      if (r > best.load() || ((b & 63) == 0 && s.past_deadline())) return;
      if (!s.passes(s.reds[r], s.blues[b])) continue;
      std::lock_guard lock(mu);
      if (r < best.load()) {
        best = r;
        found = Lambda(s.reds[r], s.blues[b]);
      }
      return;
    }
  });
  v.counters.states = s.checked.load();
  if (found) {
    v.outcome = Verdict::Outcome::Yes;
    v.report = verify_fidl(g, *found);
    v.delta = commuting_graph(g, *found);
    v.lambda = std::move(found);
    v.stage = "oracle";
    return v;
  }
  if (s.timed_out) {
    v.outcome = Verdict::Outcome::BudgetExceeded;
    v.stage = "deadline";
    return v;
  }
  v.outcome = Verdict::Outcome::No;
  v.reason = NoReason::NoLambda;
  v.stage = "oracle";
  v.detail = "none of " + std::to_string(s.checked.load()) + " tree pairs passes";
  return v;
}

FidlCount count_all_fidl(const Graph& g, const OracleLimits& limits) {
  FidlCount out;
  const Prepared p = prepare(g);
  out.refusal = p.refusal;
  if (!p.refusal.empty() || !p.bipartite) return out;
  if (p.pairs > limits.max_pairs) {
    out.budget_exceeded = true;
    return out;
  }
  PairSearch s{g, limits, class_trees(g, p.red_class), class_trees(g, p.blue_class), induced_cycles(g)};
  std::mutex mu;
  s.parallel([&](std::size_t r) {
    std::vector<Lambda> local;
    for (std::size_t b = 0; b < s.blues.size(); ++b) {
      if ((b & 63) == 0 && s.past_deadline()) return;
      if (s.passes(s.reds[r], s.blues[b])) local.emplace_back(s.reds[r], s.blues[b]);
    }
    std::lock_guard lock(mu);
    out.lambdas.insert(out.lambdas.end(), local.begin(), local.end());
  });
  std::sort(out.lambdas.begin(), out.lambdas.end());
  out.count = out.lambdas.size();
  out.pairs_checked = s.checked.load();
  out.budget_exceeded = s.timed_out;
  return out;
}

}  // namespace visraag
