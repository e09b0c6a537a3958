#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "visraag/cuts.hpp"
#include "visraag/dl_checker.hpp"

namespace visraag {

/// One satellite removal, in coning order: Γ_{i+1} = Γ_i ∪ {x}.
struct DismantlingStep {
  VertexId x = -1;
  VertexSet N;  // lk_{Γ_{i+1}}(x)
  VertexSet V;  // {v ∈ Γ_i : N ⊆ lk(v)}
  std::optional<VertexId> chosen_v;
};

struct DismantlingSequence {
  VertexSet base;                      // the four vertices of Γ_0
  std::vector<DismantlingStep> steps;  // i = 0..n-1

  /// Vertex set of Γ_i.
  VertexSet stage(std::size_t i) const;
};

/// Unordered pair demanded as a Λ-edge.
using RequiredPair = VertexPair;

struct ForbiddenCycle {
  std::vector<VertexId> cycle;
  std::string why;
};

/// Bipartite; every induced cycle longer than 6 has a 2-chord; every induced
/// 6-cycle is the rim of a bicycle wheel.
std::optional<ForbiddenCycle> forbidden_cycle_check(const Graph& g, VertexSet within);
std::optional<ForbiddenCycle> forbidden_cycle_check(const Graph& g);

/// Thrown when a search deadline passes.
struct SearchTimeout : std::runtime_error {
  SearchTimeout() : std::runtime_error("search deadline exceeded") {}
};

struct SearchCounters {
  std::uint64_t states = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t sequences = 0;
  std::uint64_t dagger_rejections = 0;
};

struct DismantleOptions {
  bool require_strongly_cfs = true;
  /// Reject removals as soon as (†) or a required pair cannot be met.
  bool dagger = false;
  std::vector<RequiredPair> required;
  SatelliteMode satellite_mode = SatelliteMode::NonStrict;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Backtracking over removal orders of g[within]. Calls `visit` for each
/// sequence reaching an induced square; `visit` returns false to stop.
/// Returns false when stopped by the visitor.
bool for_each_dismantling(const Graph& g, VertexSet within, const DismantleOptions& options,
                          const std::function<bool(const DismantlingSequence&)>& visit,
                          SearchCounters* counters = nullptr);

/// Collecting form, capped at `limit` sequences.
std::vector<DismantlingSequence> enumerate_dismantlings(const Graph& g, const DismantleOptions& options = {},
                                                        std::size_t limit = SIZE_MAX);

struct DaggerResult {
  bool ok = false;
  std::vector<VertexId> choices;       // v_i per step
  std::vector<VertexSet> feasible;     // F_i per step (as far as computed)
  std::optional<std::size_t> blocking; // first failing index
  std::string reason;
};

/// Per-index feasibility of (†) with the relative constraints of `required`.
DaggerResult check_dagger(const Graph& g, const DismantlingSequence& seq, const std::vector<RequiredPair>& required = {});

/// Base diagonals plus {v_i, x_{i+1}}; colours follow the bipartition.
/// Requires chosen_v on every step.
Lambda reconstruct_lambda(const Graph& g, const DismantlingSequence& seq);

/// A dismantling sequence whose reconstruction is exactly `lam`, removing
/// Λ-leaves that are satellites of their Λ-neighbour.
std::optional<DismantlingSequence> dismantling_from_lambda(const Graph& g, const Lambda& lam);

enum class NoReason {
  NotBipartite,
  NotStronglyCFS,
  ForbiddenCycle,
  CrossingCuts,
  RequiredPairCycle,
  RequiredPairCrossesClasses,
  NoDismantling,
  NoDaggerSequence,
  RigidPartFailed,
  /// Exhaustive enumeration found no Λ (oracle).
  NoLambda,
};

const char* to_string(NoReason r);

struct Verdict {
  enum class Outcome { Yes, No, Refused, BudgetExceeded };
  Outcome outcome = Outcome::No;

  // Yes
  std::optional<Lambda> lambda;
  std::optional<CommutingGraph> delta;
  std::optional<DismantlingSequence> sequence;
  std::optional<DLReport> report;

  // No
  std::optional<NoReason> reason;
  std::vector<VertexId> cycle;              // forbidden or odd cycle
  std::vector<RequiredPair> pairs;          // offending required pairs
  std::vector<Cut> cuts;                    // crossing cuts (crossed, crossing)
  std::optional<int> part;                  // failed part index
  VertexSet part_vertices;
  std::shared_ptr<const Verdict> sub;       // verdict of the failed part

  // Refused
  std::vector<std::string> refusal;

  std::string detail;
  /// Every failing gate (strongly CFS, forbidden cycle, crossing cuts) when
  /// SearchOptions::all_gates is set; the first one is `reason`.
  std::vector<std::pair<NoReason, std::string>> gate_failures;
  /// Name of the stage that decided, e.g. "strongly_cfs", "dismantle".
  std::string stage;
  SearchCounters counters;

  bool yes() const { return outcome == Outcome::Yes; }
  bool no() const { return outcome == Outcome::No; }
};

const char* to_string(Verdict::Outcome o);

struct SearchOptions {
  bool require_strongly_cfs = true;
  bool split_at_cuts = true;
  /// Keep evaluating the cheap gates after the first failure (diagnostics).
  bool all_gates = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Relative search on g. Yes verdicts carry Λ verified by verify_fidl.
/// Throws std::invalid_argument for a required pair that is a Γ-edge, a loop
/// or out of range.
Verdict relative_search(const Graph& g, const std::vector<RequiredPair>& required, const SearchOptions& options = {});

/// Full decision procedure with gates and splitting at uncrossed cuts.
Verdict global_search(const Graph& g, const SearchOptions& options = {});

}  // namespace visraag
