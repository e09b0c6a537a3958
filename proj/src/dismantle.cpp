#include "visraag/dismantle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "visraag/cycles.hpp"
#include "visraag/square_structure.hpp"

namespace visraag {

namespace {

bool is_square(const Graph& g, VertexSet s) {
  if (s.size() != 4) return false;
  for (VertexId v : s)
    if ((g.neighbors(v) & s).size() != 2) return false;
  return is_connected(g, s);
}

/// Colour classes of g[within] (first vertex of each component red), or
/// nullopt if some component is not bipartite.
std::optional<std::pair<VertexSet, VertexSet>> two_color(const Graph& g, VertexSet within) {
  VertexSet red, blue;
  VertexSet left = within;
  while (!left.empty()) {
    const VertexId root = left.first();
    red.insert(root);
    left.erase(root);
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      const bool u_red = red.contains(u);
      for (VertexId w : g.neighbors(u) & within) {
        if ((u_red && red.contains(w)) || (!u_red && blue.contains(w))) return std::nullopt;
        if (!left.contains(w)) continue;
        left.erase(w);
        (u_red ? blue : red).insert(w);
        stack.push_back(w);
      }
    }
  }
  return std::pair{red, blue};
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = v.size();
    for (std::uint64_t x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Dismantler {
public:
  Dismantler(const Graph& g, const DismantleOptions& options,
             const std::function<bool(const DismantlingSequence&)>& visit, SearchCounters& counters)
      : g_(g), opt_(options), visit_(visit), counters_(counters) {
    for (auto [p, q] : opt_.required) {
      partners_.resize(static_cast<std::size_t>(g.order()));
      partners_[static_cast<std::size_t>(p)].insert(q);
      partners_[static_cast<std::size_t>(q)].insert(p);
    }
  }

  /// Returns {stopped, found}.
  std::pair<bool, bool> run(VertexSet s) {
    ++counters_.states;
    if (opt_.deadline && (counters_.states & 255) == 0 && std::chrono::steady_clock::now() > *opt_.deadline)
      throw SearchTimeout();
    if (s.size() == 4) {
      ++counters_.sequences;
      DismantlingSequence seq;
      seq.base = s;
      seq.steps.assign(stack_.rbegin(), stack_.rend());
      return {!visit_(seq), true};
    }
    const auto key = memo_key(s);
    if (dead_.contains(key)) {
      ++counters_.memo_hits;
      return {false, false};
    }
    bool found = false;
    for (VertexId x : candidates(s)) {
      const VertexSet rest = s.without(x);
      const VertexSet n = g_.neighbors(x) & s;
      VertexSet v_set;
      for (VertexId v : rest)
        if (n.is_subset_of(g_.neighbors(v))) v_set.insert(v);
      DismantlingStep step{x, n, v_set, std::nullopt};
      if (opt_.dagger) {
        auto choice = dagger_choice(x, rest, v_set);
        if (!choice) {
          ++counters_.dagger_rejections;
          continue;
        }
        step.chosen_v = *choice;
      }
      stack_.push_back(step);
      auto [stopped, below] = run(rest);
      stack_.pop_back();
      found |= below;
      if (stopped) return {true, true};
    }
    if (!found) dead_.insert(key);
    return {false, found};
  }

private:
  std::vector<std::uint64_t> memo_key(VertexSet s) const {
    std::vector<std::uint64_t> key;
    if (opt_.dagger)
      for (const auto& step : stack_) {
        const VertexSet live = step.N & s;
        if (live.size() >= 2) key.push_back(live.bits());
      }
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    key.insert(key.begin(), s.bits());
    return key;
  }

  std::vector<VertexId> candidates(VertexSet s) const {
    std::vector<VertexId> out;
    for (VertexId x : s) {
      const VertexSet n = g_.neighbors(x) & s;
      bool dominated = false;
      for (VertexId w : s.without(x)) {
        const VertexSet nw = g_.neighbors(w) & s;
        if (n.is_subset_of(nw) && (opt_.satellite_mode == SatelliteMode::NonStrict || n != nw)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) continue;
      const VertexSet rest = s.without(x);
      if (rest.size() == 4) {
        if (!is_square(g_, rest)) continue;
      } else {
        if (has_separating_clique(g_, rest)) continue;
        if (opt_.require_strongly_cfs && !is_strongly_cfs(g_, rest)) continue;
      }
      out.push_back(x);
    }
    std::stable_sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
      return (g_.neighbors(a) & s).size() < (g_.neighbors(b) & s).size();
    });
    return out;
  }

  std::optional<VertexId> dagger_choice(VertexId x, VertexSet rest, VertexSet v_set) const {
    VertexSet feasible = v_set;
    for (const auto& later : stack_)
      if (later.N.contains(x) && later.N.intersects(rest)) feasible &= later.N;
    std::optional<VertexId> fixed;
    if (!partners_.empty())
      for (VertexId p : partners_[static_cast<std::size_t>(x)] & rest) {
        if (!feasible.contains(p) || (fixed && *fixed != p)) return std::nullopt;
        fixed = p;
      }
    if (fixed) return fixed;
    if (feasible.empty()) return std::nullopt;
    return feasible.first();
  }

  const Graph& g_;
  const DismantleOptions& opt_;
  const std::function<bool(const DismantlingSequence&)>& visit_;
  SearchCounters& counters_;
  std::vector<VertexSet> partners_;
  std::vector<DismantlingStep> stack_;  // removal order
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> dead_;
};

std::vector<RequiredPair> normalize_required(const Graph& g, const std::vector<RequiredPair>& required) {
  std::vector<RequiredPair> out;
  for (auto [p, q] : required) {
    if (p < 0 || q < 0 || p >= g.order() || q >= g.order()) throw std::invalid_argument("required pair out of range");
    if (p == q) throw std::invalid_argument("required pair is a loop at " + g.name(p));
    if (g.adjacent(p, q))
      throw std::invalid_argument("required pair {" + g.name(p) + "," + g.name(q) + "} is an edge of the graph");
    out.push_back(ordered(p, q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Required pairs closing a cycle, as the list of pairs along it.
std::optional<std::vector<RequiredPair>> required_cycle(int order, const std::vector<RequiredPair>& pairs) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(order));
  for (auto [p, q] : pairs) {
    // Path p ~> q among earlier pairs.
    std::vector<VertexId> parent(static_cast<std::size_t>(order), -1);
    parent[static_cast<std::size_t>(p)] = p;
    std::vector<VertexId> queue{p};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (VertexId w : adj[static_cast<std::size_t>(queue[head])])
        if (parent[static_cast<std::size_t>(w)] == -1) {
          parent[static_cast<std::size_t>(w)] = queue[head];
          queue.push_back(w);
        }
    if (parent[static_cast<std::size_t>(q)] != -1) {
      std::vector<RequiredPair> cycle{{p, q}};
      for (VertexId w = q; w != p; w = parent[static_cast<std::size_t>(w)])
        cycle.push_back(ordered(w, parent[static_cast<std::size_t>(w)]));
      return cycle;
    }
    adj[static_cast<std::size_t>(p)].insert(q);
    adj[static_cast<std::size_t>(q)].insert(p);
  }
  return std::nullopt;
}

Verdict refused(std::vector<std::string> why) {
  Verdict v;
  v.outcome = Verdict::Outcome::Refused;
  v.refusal = std::move(why);
  v.stage = "preconditions";
  return v;
}

Verdict no(NoReason reason, std::string stage, std::string detail = {}) {
  Verdict v;
  v.outcome = Verdict::Outcome::No;
  v.reason = reason;
  v.stage = std::move(stage);
  v.detail = std::move(detail);
  return v;
}

Verdict budget(const SearchCounters& counters) {
  Verdict v;
  v.outcome = Verdict::Outcome::BudgetExceeded;
  v.stage = "deadline";
  v.counters = counters;
  return v;
}

/// Strongly-CFS, forbidden-cycle and (when `goc` is given) crossing-cut gates.
/// Stops at the first failure unless `all` is set; every failure is listed in
/// gate_failures and the first one decides.
std::optional<Verdict> run_gates(const Graph& g, bool all, std::optional<GraphOfCylinders>* goc = nullptr) {
  std::optional<Verdict> first;
  auto fail = [&](Verdict v) {
    const NoReason reason = *v.reason;
    const std::string detail = v.detail;
    if (!first) {
      first = std::move(v);
    } else {
      if (first->cycle.empty()) first->cycle = v.cycle;
      if (first->cuts.empty()) first->cuts = v.cuts;
    }
    first->gate_failures.emplace_back(reason, detail);
  };
  if (!is_strongly_cfs(g, g.vertices())) {
    const CfsResult cfs = cfs_status(g);
    fail(no(NoReason::NotStronglyCFS, "strongly_cfs", std::string("diagonal graph status: ") + to_string(cfs.status)));
    if (!all) return first;
  }
  if (auto bad = forbidden_cycle_check(g)) {
    const bool odd = bad->cycle.size() % 2 == 1;
    Verdict v = no(odd ? NoReason::NotBipartite : NoReason::ForbiddenCycle, "forbidden_cycle", bad->why);
    v.cycle = bad->cycle;
    fail(std::move(v));
    if (!all) return first;
  }
  if (goc) {
    *goc = graph_of_cylinders(g);
    if ((*goc)->hanging) {
      const auto [i, j] = (*goc)->crossings.front();
      const Cut& crossed = (*goc)->cuts[static_cast<std::size_t>(i)];
      const Cut& by = (*goc)->cuts[static_cast<std::size_t>(j)];
      Verdict v = no(NoReason::CrossingCuts, "crossing_cuts", describe(g, crossed) + " is crossed by " + describe(g, by));
      v.cuts = {crossed, by};
      fail(std::move(v));
    }
  }
  return first;
}

Verdict yes(const Graph& g, Lambda lam, std::optional<DismantlingSequence> seq, std::string stage) {
  Verdict v;
  DLReport report = verify_fidl(g, lam);
  if (!report.passed()) throw std::logic_error("internal error: search produced a Λ that fails verification");
  v.outcome = Verdict::Outcome::Yes;
  v.delta = commuting_graph(g, lam);
  v.lambda = std::move(lam);
  v.sequence = std::move(seq);
  v.report = std::move(report);
  v.stage = std::move(stage);
  return v;
}

}  // namespace

VertexSet DismantlingSequence::stage(std::size_t i) const {
  VertexSet s = base;
  for (std::size_t k = 0; k < i && k < steps.size(); ++k) s.insert(steps[k].x);
  return s;
}

std::optional<ForbiddenCycle> forbidden_cycle_check(const Graph& g, VertexSet within) {
  std::optional<ForbiddenCycle> out;
  // Odd cycles first: an odd induced cycle always exists in a non-bipartite graph.
  if (!two_color(g, within)) {
    for_each_induced_cycle(g, within, 0, [&](std::span<const VertexId> c) {
      if (c.size() % 2 == 0) return true;
      out = ForbiddenCycle{{c.begin(), c.end()}, "odd induced cycle of length " + std::to_string(c.size())};
      return false;
    });
    return out;
  }
  for_each_induced_cycle(g, within, 0, [&](std::span<const VertexId> c) {
    if (c.size() > 6) {
      bool chord = false;
      // A 2-chord joins cycle vertices at cycle distance >= 3 through a common neighbour.
      const int len = static_cast<int>(c.size());
      for (int i = 0; i < len && !chord; ++i)
        for (int j = i + 3; j < len && !chord; ++j) {
          if (len - (j - i) < 3) continue;
          chord = (g.neighbors(c[static_cast<std::size_t>(i)]) & g.neighbors(c[static_cast<std::size_t>(j)]) & within)
                      .size() > 0;
        }
      if (!chord) {
        out = ForbiddenCycle{{c.begin(), c.end()}, "induced " + std::to_string(len) + "-cycle without a 2-chord"};
        return false;
      }
    } else if (c.size() == 6) {
      const VertexSet x_side = g.neighbors(c[0]) & g.neighbors(c[2]) & g.neighbors(c[4]) & within;
      const VertexSet y_side = g.neighbors(c[1]) & g.neighbors(c[3]) & g.neighbors(c[5]) & within;
      bool hub = false;
      for (VertexId x : x_side) hub |= g.neighbors(x).intersects(y_side);
      if (!hub) {
        out = ForbiddenCycle{{c.begin(), c.end()}, "induced 6-cycle that is not the rim of a bicycle wheel"};
        return false;
      }
    }
    return true;
  });
  return out;
}

std::optional<ForbiddenCycle> forbidden_cycle_check(const Graph& g) { return forbidden_cycle_check(g, g.vertices()); }

bool for_each_dismantling(const Graph& g, VertexSet within, const DismantleOptions& options,
                          const std::function<bool(const DismantlingSequence&)>& visit, SearchCounters* counters) {
  SearchCounters local;
  SearchCounters& c = counters ? *counters : local;
  if (within.size() < 4) return true;
  if (within.size() == 4 && !is_square(g, within)) return true;
  Dismantler d(g, options, visit, c);
  return !d.run(within).first;
}

std::vector<DismantlingSequence> enumerate_dismantlings(const Graph& g, const DismantleOptions& options,
                                                        std::size_t limit) {
  std::vector<DismantlingSequence> out;
  if (limit == 0) return out;
  for_each_dismantling(g, g.vertices(), options, [&](const DismantlingSequence& s) {
    out.push_back(s);
    return out.size() < limit;
  });
  return out;
}

DaggerResult check_dagger(const Graph& g, const DismantlingSequence& seq, const std::vector<RequiredPair>& required) {
  DaggerResult r;
  const std::size_t n = seq.steps.size();
  std::vector<VertexSet> stages(n + 1);
  std::vector<int> added(static_cast<std::size_t>(g.order()), -1);  // step index adding the vertex
  stages[0] = seq.base;
  for (std::size_t i = 0; i < n; ++i) {
    stages[i + 1] = stages[i].with(seq.steps[i].x);
    added[static_cast<std::size_t>(seq.steps[i].x)] = static_cast<int>(i);
  }
  std::vector<VertexSet> nbhd(n);
  for (std::size_t i = 0; i < n; ++i) nbhd[i] = g.neighbors(seq.steps[i].x) & stages[i + 1];

  std::vector<std::optional<VertexId>> fixed(n);
  for (auto [p, q] : required) {
    const int ip = added[static_cast<std::size_t>(p)], iq = added[static_cast<std::size_t>(q)];
    if (ip == -1 && iq == -1) {
      if (!seq.base.contains(p) || !seq.base.contains(q) || g.adjacent(p, q)) {
        r.reason = "required pair {" + g.name(p) + "," + g.name(q) + "} is not a diagonal of the base square";
        return r;
      }
      continue;
    }
    const VertexId later = ip > iq ? p : q;
    const VertexId earlier = ip > iq ? q : p;
    const std::size_t i = static_cast<std::size_t>(std::max(ip, iq));
    if (fixed[i] && *fixed[i] != earlier) {
      r.blocking = i;
      r.reason = "conflicting required pairs at " + g.name(later);
      return r;
    }
    fixed[i] = earlier;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = seq.steps[i].x;
    VertexSet f;
    for (VertexId v : stages[i])
      if (nbhd[i].is_subset_of(g.neighbors(v))) f.insert(v);
    for (std::size_t j = i + 1; j < n; ++j)
      if (nbhd[j].contains(x) && nbhd[j].intersects(stages[i])) f &= nbhd[j];
    r.feasible.push_back(f);
    if (fixed[i] && !f.contains(*fixed[i])) {
      r.blocking = i;
      r.reason = "required partner " + g.name(*fixed[i]) + " of " + g.name(x) + " is not feasible at step " +
                 std::to_string(i);
      return r;
    }
    if (f.empty()) {
      r.blocking = i;
      r.reason = "no feasible choice at step " + std::to_string(i);
      return r;
    }
    r.choices.push_back(fixed[i] ? *fixed[i] : f.first());
  }
  r.ok = true;
  return r;
}

Lambda reconstruct_lambda(const Graph& g, const DismantlingSequence& seq) {
  const VertexSet all = seq.stage(seq.steps.size());
  auto colors = two_color(g, all);
  if (!colors) throw std::invalid_argument("reconstruct_lambda: graph is not bipartite");
  const VertexSet red_class = colors->first;
  std::vector<VertexPair> red, blue;
  auto add = [&](VertexId u, VertexId v) { (red_class.contains(u) ? red : blue).push_back(ordered(u, v)); };
  for (VertexId u : seq.base)
    for (VertexId v : seq.base - VertexSet::prefix(u + 1) - g.neighbors(u)) add(u, v);
  for (const auto& step : seq.steps) {
    if (!step.chosen_v) throw std::invalid_argument("reconstruct_lambda: step without a chosen vertex");
    add(*step.chosen_v, step.x);
  }
  return Lambda(std::move(red), std::move(blue));
}

std::optional<DismantlingSequence> dismantling_from_lambda(const Graph& g, const Lambda& lam) {
  if (!is_forest(g.order(), lam)) return std::nullopt;
  const LambdaForest forest(g.order(), lam);
  std::unordered_set<VertexSet> dead;
  std::vector<DismantlingStep> stack;
  std::optional<DismantlingSequence> result;

  std::function<bool(VertexSet)> go = [&](VertexSet s) -> bool {
    if (s.size() == 4) {
      if (!is_square(g, s)) return false;
      for (VertexId u : s)
        for (VertexId v : s - VertexSet::prefix(u + 1) - g.neighbors(u))
          if (!lam.contains(u, v)) return false;
      DismantlingSequence seq{s, {stack.rbegin(), stack.rend()}};
      const DaggerResult dr = check_dagger(g, seq);
      if (!dr.ok) return false;
      for (std::size_t i = 0; i < seq.steps.size(); ++i)
        if (!dr.feasible[i].contains(*seq.steps[i].chosen_v)) return false;
      result = std::move(seq);
      return true;
    }
    if (dead.contains(s)) return false;
    for (VertexId x : s) {
      const VertexSet lam_nb = forest.neighbors(x) & s;
      if (lam_nb.size() != 1) continue;
      const VertexId v = lam_nb.first();
      const VertexSet n = g.neighbors(x) & s;
      if (!n.is_subset_of(g.neighbors(v))) continue;
      const VertexSet rest = s.without(x);
      if (rest.size() > 4 && has_separating_clique(g, rest)) continue;
      VertexSet v_set;
      for (VertexId w : rest)
        if (n.is_subset_of(g.neighbors(w))) v_set.insert(w);
      stack.push_back({x, n, v_set, v});
      const bool ok = go(rest);
      stack.pop_back();
      if (ok) return true;
    }
    dead.insert(s);
    return false;
  };
  go(g.vertices());
  return result;
}

const char* to_string(NoReason r) {
  switch (r) {
    case NoReason::NotBipartite: return "NotBipartite";
    case NoReason::NotStronglyCFS: return "NotStronglyCFS";
    case NoReason::ForbiddenCycle: return "ForbiddenCycle";
    case NoReason::CrossingCuts: return "CrossingCuts";
    case NoReason::RequiredPairCycle: return "RequiredPairCycle";
    case NoReason::RequiredPairCrossesClasses: return "RequiredPairCrossesClasses";
    case NoReason::NoDismantling: return "NoDismantling";
    case NoReason::NoDaggerSequence: return "NoDaggerSequence";
    case NoReason::RigidPartFailed: return "RigidPartFailed";
    case NoReason::NoLambda: return "NoLambda";
  }
  return "?";
}

const char* to_string(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Yes: return "yes";
    case Verdict::Outcome::No: return "no";
    case Verdict::Outcome::Refused: return "refused";
    case Verdict::Outcome::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

Verdict relative_search(const Graph& g, const std::vector<RequiredPair>& required, const SearchOptions& options) {
  const std::vector<RequiredPair> pairs = normalize_required(g, required);
  if (auto why = search_preconditions(g); !why.empty()) return refused(std::move(why));
  if (auto stop = run_gates(g, options.all_gates)) return *stop;

  const auto colors = two_color(g, g.vertices());
  for (auto [p, q] : pairs)
    if (colors->first.contains(p) != colors->first.contains(q)) {
      Verdict v = no(NoReason::RequiredPairCrossesClasses, "required_pairs",
                     "{" + g.name(p) + "," + g.name(q) + "} joins the two colour classes");
      v.pairs = {{p, q}};
      return v;
    }
  if (auto cycle = required_cycle(g.order(), pairs)) {
    Verdict v = no(NoReason::RequiredPairCycle, "required_pairs", "required pairs contain a cycle");
    v.pairs = *cycle;
    return v;
  }

  SearchCounters counters;
  DismantleOptions dopt;
  dopt.require_strongly_cfs = options.require_strongly_cfs;
  dopt.deadline = options.deadline;
  dopt.dagger = true;
  dopt.required = pairs;
  std::optional<DismantlingSequence> found;
  try {
    for_each_dismantling(g, g.vertices(), dopt, [&](const DismantlingSequence& s) {
      found = s;
      return false;
    }, &counters);
    if (found) {
      Verdict v = yes(g, reconstruct_lambda(g, *found), found, "dismantle");
      for (auto [p, q] : pairs)
        if (!v.lambda->contains(p, q)) throw std::logic_error("internal error: required pair missing from Λ");
      v.counters = counters;
      return v;
    }
    dopt.dagger = false;
    dopt.required.clear();
    bool any = false;
    for_each_dismantling(g, g.vertices(), dopt, [&](const DismantlingSequence&) {
      any = true;
      return false;
    }, &counters);
    Verdict v = any ? no(NoReason::NoDaggerSequence, "dagger", "every dismantling sequence violates (†)")
                    : no(NoReason::NoDismantling, "dismantle", "no satellite-dismantling sequence to a square");
    v.counters = counters;
    return v;
  } catch (const SearchTimeout&) {
    return budget(counters);
  }
}

namespace {

struct GlobalSolver {
  const Graph& g;
  const SearchOptions& options;
  SearchCounters counters;
  int leaves = 0;
  bool single_leaf = true;
  std::optional<DismantlingSequence> leaf_sequence;

  bool valid_part(VertexSet part) const {
    return is_incomplete(g, part) && is_triangle_free(g, part) && !has_separating_clique(g, part);
  }

  std::optional<std::pair<Cut, std::vector<VertexSet>>> find_split(VertexSet h, const std::vector<RequiredPair>& req) {
    const std::vector<Cut> cuts = find_cuts(g, h);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      bool crossed = false;
      for (std::size_t j = 0; j < cuts.size() && !crossed; ++j) crossed = i != j && crosses(cuts[i], cuts[j]);
      if (crossed) continue;
      const Cut& k = cuts[i];
      const auto parts = split_parts(k);
      if (!std::all_of(parts.begin(), parts.end(), [&](VertexSet p) { return valid_part(p); })) continue;
      const bool straddles = std::any_of(req.begin(), req.end(), [&](RequiredPair r) { return k.separates(r.first, r.second); });
      if (straddles) continue;
      return std::pair{k, parts};
    }
    return std::nullopt;
  }

  /// Λ in host ids, or a No/Budget verdict.
  std::variant<Lambda, Verdict> solve(VertexSet h, std::vector<RequiredPair> req) {
    if (options.split_at_cuts && h.size() > 4) {
      if (auto split = find_split(h, req)) {
        single_leaf = false;
        const auto& [k, parts] = *split;
        std::vector<Lambda> lambdas;
        for (VertexSet part : parts) {
          std::vector<RequiredPair> sub{ordered(k.a, k.b)};
          for (auto r : req)
            if (part.contains(r.first) && part.contains(r.second)) sub.push_back(r);
          auto result = solve(part, std::move(sub));
          if (auto* v = std::get_if<Verdict>(&result)) return std::move(*v);
          lambdas.push_back(std::get<Lambda>(std::move(result)));
        }
        return assemble_lambdas(g, k, lambdas);
      }
    }
    const int id = leaves++;
    const InducedSubgraph sub(g, h);
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i) local[static_cast<std::size_t>(sub.to_host[i])] = static_cast<int>(i);
    std::vector<RequiredPair> local_req;
    for (auto [p, q] : req) local_req.emplace_back(local[static_cast<std::size_t>(p)], local[static_cast<std::size_t>(q)]);
    if (h != g.vertices())
      for (const Cut& k : find_cuts(sub.graph)) local_req.push_back(ordered(k.a, k.b));
    Verdict leaf = relative_search(sub.graph, local_req, options);
    counters.states += leaf.counters.states;
    counters.memo_hits += leaf.counters.memo_hits;
    counters.sequences += leaf.counters.sequences;
    counters.dagger_rejections += leaf.counters.dagger_rejections;
    if (leaf.yes()) {
      if (h == g.vertices()) leaf_sequence = leaf.sequence;
      return lift_lambda(sub, *leaf.lambda);
    }
    if (leaf.outcome == Verdict::Outcome::BudgetExceeded || h == g.vertices()) return leaf;
    Verdict v = no(NoReason::RigidPartFailed, "rigid_part",
                   std::string("part ") + std::to_string(id) + " failed: " +
                       (leaf.reason ? to_string(*leaf.reason) : to_string(leaf.outcome)));
    v.part = id;
    v.part_vertices = h;
    v.sub = std::make_shared<Verdict>(std::move(leaf));
    return v;
  }
};

}  // namespace

Verdict global_search(const Graph& g, const SearchOptions& options) {
  if (auto why = search_preconditions(g); !why.empty()) return refused(std::move(why));
  if (g.order() == 4) {
    Verdict v = relative_search(g, {}, options);
    v.stage = "square";
    return v;
  }
  std::optional<GraphOfCylinders> gated;
  if (auto stop = run_gates(g, options.all_gates, &gated)) return *stop;
  const GraphOfCylinders& goc = *gated;
  std::vector<RequiredPair> required;
  for (const Cut& k : goc.cuts) required.push_back(ordered(k.a, k.b));
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());

  GlobalSolver solver{g, options, {}, 0, true, std::nullopt};
  std::variant<Lambda, Verdict> result;
  try {
    result = solver.solve(g.vertices(), required);
  } catch (const SearchTimeout&) {
    return budget(solver.counters);
  }
  if (auto* v = std::get_if<Verdict>(&result)) {
    v->counters = solver.counters;
    return std::move(*v);
  }
  Lambda lam = std::get<Lambda>(std::move(result));
  std::optional<DismantlingSequence> seq = solver.single_leaf ? solver.leaf_sequence : dismantling_from_lambda(g, lam);
  Verdict v = yes(g, std::move(lam), std::move(seq), solver.single_leaf ? "dismantle" : "assembled");
  v.counters = solver.counters;
  return v;
}

}  // namespace visraag
