// Command-line front end: check, search, verify, gen, batch, jsj.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "visraag/cuts.hpp"
#include "visraag/dismantle.hpp"
#include "visraag/generators.hpp"
#include "visraag/graph6.hpp"
#include "visraag/oracle.hpp"
#include "visraag/serialize.hpp"

using namespace visraag;
namespace fs = std::filesystem;

namespace {

enum Exit { kDecision = 0, kUsage = 1, kRefused = 2, kDisagree = 3, kBudget = 4, kVerifyFailed = 5 };

struct Common {
  std::string format = "json";
  bool no_timing = false;
};

struct Loaded {
  Graph graph;
  std::optional<Lambda> lambda;
};

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_source(const std::string& source) {
  if (source == "-") return slurp(std::cin);
  std::ifstream f(source);
  if (!f) throw ParseError("cannot open '" + source + "'", 0);
  return slurp(f);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// JSON graph, JSON fixture ({"graph", "lambda"}), graph6 text, or fixture:NAME.
/// An input that is neither a file nor "-" is read as a graph6 literal.
Loaded load(const std::string& source) {
  if (source.starts_with("fixture:")) {
    const auto all = fixtures();
    const auto it = all.find(source.substr(8));
    if (it == all.end()) throw ParseError("unknown fixture '" + source.substr(8) + "'", 0);
    return {it->second.graph, it->second.lambda};
  }
  const bool is_file = source == "-" || fs::exists(source);
  const std::string text = trim(is_file ? read_source(source) : source);
  if (text.starts_with("{")) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("JSON: ") + e.what(), e.byte);
    }
    if (j.contains("graph")) {
      Fixture f = fixture_from_json(j);
      return {f.graph, f.lambda};
    }
    return {graph_from_json(j), std::nullopt};
  }
  const std::string first = trim(text.substr(0, text.find('\n')));
  return {from_graph6(first), std::nullopt};
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

std::string verdict_text(const Graph& g, const Verdict& v) {
  std::ostringstream out;
  out << to_string(v.outcome);
  if (v.reason) out << " (" << to_string(*v.reason) << ")";
  out << " at stage " << v.stage << "\n";
  if (!v.detail.empty()) out << "  " << v.detail << "\n";
  for (const auto& r : v.refusal) out << "  refused: " << r << "\n";
  if (v.lambda) {
    out << "  red:";
    for (auto [a, b] : v.lambda->red) out << " " << g.name(a) << "-" << g.name(b);
    out << "\n  blue:";
    for (auto [a, b] : v.lambda->blue) out << " " << g.name(a) << "-" << g.name(b);
    out << "\n";
  }
  if (v.delta) out << "  delta: " << v.delta->vertices.size() << " vertices, " << v.delta->edge_count() << " edges\n";
  return out.str();
}

int exit_for(const Verdict& v) {
  switch (v.outcome) {
    case Verdict::Outcome::Refused: return kRefused;
    case Verdict::Outcome::BudgetExceeded: return kBudget;
    default: return kDecision;
  }
}

std::optional<std::chrono::steady_clock::time_point> deadline_after(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::steady_clock::now() + std::chrono::microseconds(static_cast<long long>(seconds * 1e6));
}

unsigned default_threads() {
  if (const char* env = std::getenv("VISRAAG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

VertexPair parse_pair(const Graph& g, const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("required pair '" + s + "' must be p,q", 0);
  auto id = [&](const std::string& name) {
    const auto v = g.find(trim(name));
    if (!v) throw ParseError("unknown vertex '" + name + "' in required pair", 0);
    return *v;
  };
  return {id(s.substr(0, comma)), id(s.substr(comma + 1))};
}

// ---- check ----------------------------------------------------------------

int cmd_check(const Common& c, const std::string& input) {
  const Graph g = load(input).graph;
  Json j;
  j["graph6"] = to_graph6(g);
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  j["connected"] = is_connected(g, g.vertices());
  j["incomplete"] = is_incomplete(g);
  j["triangle_free"] = is_triangle_free(g);
  const bool tf = is_triangle_free(g);
  j["separating_clique"] = tf ? Json(has_separating_clique(g)) : Json(nullptr);
  j["bipartite"] = is_bipartite(g);
  const CfsResult cfs = cfs_status(g);
  j["cfs"] = to_string(cfs.status);
  if (!cfs.diagnostic.empty()) j["cfs_diagnostic"] = cfs.diagnostic;
  j["diagonals"] = diagonal_graph(g).diagonals.size();
  j["preconditions"] = search_preconditions(g);

  std::ostringstream t;
  t << to_graph6(g) << ": " << g.order() << " vertices, " << g.edge_count() << " edges\n";
  if (!is_incomplete(g)) t << "complete\n";
  t << (tf ? "triangle-free\n" : "not triangle-free\n");
  if (tf) t << (has_separating_clique(g) ? "has a separating clique\n" : "no separating clique\n");
  t << (is_bipartite(g) ? "bipartite\n" : "not bipartite\n");
  t << to_string(cfs.status) << "\n";
  emit(c, j, t.str());
  return kDecision;
}

// ---- search ---------------------------------------------------------------

struct SearchFlags {
  bool oracle = false, dismantle = false, both = false, all_gates = false;
  std::vector<std::string> require;
  double timeout = 0;
  double max_pairs = 5e7;
  unsigned threads = 0;
};

struct EngineRun {
  Verdict verdict;
  double ms = 0;
};

EngineRun run_dismantle(const Graph& g, const std::vector<RequiredPair>& req, bool relative, const SearchFlags& f) {
  SearchOptions o;
  o.deadline = deadline_after(f.timeout);
  o.all_gates = f.all_gates;
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = relative ? relative_search(g, req, o) : global_search(g, o);
  return {std::move(v), ms_since(t0)};
}

EngineRun run_oracle(const Graph& g, const SearchFlags& f) {
  OracleLimits l;
  l.deadline = deadline_after(f.timeout);
  l.max_pairs = f.max_pairs;
  l.threads = f.threads ? f.threads : 1;
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = naive_search(g, l);
  return {std::move(v), ms_since(t0)};
}

bool decided(const Verdict& v) { return v.yes() || v.no(); }

int cmd_search(const Common& c, const std::string& input, const SearchFlags& f) {
  const Graph g = load(input).graph;
  std::vector<RequiredPair> req;
  for (const auto& s : f.require) req.push_back(parse_pair(g, s));
  const bool relative = !f.require.empty();
  const bool use_oracle = f.oracle || f.both;
  const bool use_dismantle = f.dismantle || f.both || !f.oracle;
  if (relative && use_oracle) {
    std::cerr << "error: --require works with the dismantling engine only\n";
    return kUsage;
  }

  Json j;
  j["graph6"] = to_graph6(g);
  std::ostringstream t;
  std::optional<EngineRun> dis, ora;
  if (use_dismantle) {
    try {
      dis = run_dismantle(g, req, relative, f);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    j["dismantle"] = to_json(g, dis->verdict);
    if (!c.no_timing) j["dismantle"]["ms"] = dis->ms;
    t << "dismantle: " << verdict_text(g, dis->verdict);
  }
  if (use_oracle) {
    ora = run_oracle(g, f);
    j["oracle"] = to_json(g, ora->verdict);
    if (!c.no_timing) j["oracle"]["ms"] = ora->ms;
    t << "oracle: " << verdict_text(g, ora->verdict);
  }
  if (dis && ora) {
    const bool comparable = decided(dis->verdict) && decided(ora->verdict);
    const bool agree = !comparable || dis->verdict.yes() == ora->verdict.yes();
    j["agree"] = comparable ? Json(agree) : Json(nullptr);
    if (!agree) {
      j["bug_report"] = {{"graph6", to_graph6(g)},
                         {"dismantle", to_string(dis->verdict.outcome)},
                         {"oracle", to_string(ora->verdict.outcome)}};
      t << "DISAGREEMENT on " << to_graph6(g) << "\n";
    }
    emit(c, j, t.str());
    if (!agree) return kDisagree;
    if (dis->verdict.outcome == Verdict::Outcome::Refused) return kRefused;
    if (!comparable) return kBudget;
    return kDecision;
  }
  emit(c, j, t.str());
  return exit_for(dis ? dis->verdict : ora->verdict);
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Common& c, const std::string& input, const std::string& lambda_source) {
  const Loaded l = load(input);
  std::optional<Lambda> lam = l.lambda;
  if (!lambda_source.empty()) {
    Json j;
    try {
      j = Json::parse(read_source(lambda_source));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("JSON: ") + e.what(), e.byte);
    }
    lam = lambda_from_json(l.graph, j.contains("lambda") ? j["lambda"] : j);
  }
  if (!lam) {
    std::cerr << "error: no Λ given (pass a Λ file or an input that carries one)\n";
    return kUsage;
  }
  const DLReport r = verify_fidl(l.graph, *lam);
  std::ostringstream t;
  t << (r.passed() ? "pass" : "fail") << "\n";
  for (const auto& p : r.precondition_failures) t << "  precondition: " << p << "\n";
  for (const auto& m : r.malformed) t << "  malformed: " << m << "\n";
  const std::pair<const char*, const ConditionResult*> conds[] = {
      {"R1", &r.r1}, {"R2", &r.r2}, {"R3", &r.r3}, {"R4", &r.r4}, {"F1", &r.f1}};
  for (auto [name, cr] : conds)
    t << "  " << name << ": " << (!cr->evaluated ? "not evaluated" : cr->passed ? "pass" : "fail")
      << (cr->message.empty() ? "" : " - " + cr->message) << "\n";
  emit(c, to_json(l.graph, r), t.str());
  if (!r.preconditions_hold()) return kRefused;
  return r.passed() ? kDecision : kVerifyFailed;
}

// ---- gen ------------------------------------------------------------------

struct GenFlags {
  std::string family;
  int n = 3;
  int steps = 10;
  std::uint64_t seed = 1;
  std::string tree, labels, name, out;
};

LabelledTree parse_labelled_tree(const std::string& tree, const std::string& labels) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> names;
  auto note = [&](const std::string& v) {
    if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
  };
  std::stringstream es(tree);
  for (std::string e; std::getline(es, e, ',');) {
    const auto dash = e.find('-');
    if (dash == std::string::npos) throw ParseError("tree edge '" + e + "' must be u-v", 0);
    edges.emplace_back(trim(e.substr(0, dash)), trim(e.substr(dash + 1)));
    note(edges.back().first);
    note(edges.back().second);
  }
  LabelledTree t{Graph::from_named_edges(names, edges), std::vector<int>(names.size(), 0)};
  std::stringstream ls(labels);
  for (std::string kv; std::getline(ls, kv, ',');) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("label '" + kv + "' must be v=k", 0);
    const auto v = t.tree.find(trim(kv.substr(0, eq)));
    if (!v) throw ParseError("label for unknown tree vertex '" + kv.substr(0, eq) + "'", 0);
    t.labels[static_cast<std::size_t>(*v)] = std::stoi(kv.substr(eq + 1));
  }
  return t;
}

int cmd_gen(const Common& c, const GenFlags& f) {
  std::optional<Lambda> lam;
  std::optional<Graph> g;
  Json extra;
  if (f.family == "square") {
    Instance i = square_instance();
    g = i.graph;
    lam = i.lambda;
  } else if (f.family == "wheel") {
    Instance i = bicycle_wheel(f.n);
    g = i.graph;
    lam = i.lambda;
  } else if (f.family == "coning") {
    ConingResult r = random_coning(f.seed, f.steps);
    g = r.graph;
    lam = r.lambda;
    Json seq = Json::array();
    for (const ConingStep& s : r.sequence)
      seq.push_back({{"v", r.graph.name(s.v)}, {"N", to_json(r.graph, s.N)}, {"x", r.graph.name(s.x)}});
    extra["coning_sequence"] = seq;
  } else if (f.family == "tree-family") {
    const LabelledTree t = parse_labelled_tree(f.tree, f.labels);
    if (auto problem = labelled_tree_problem(t)) {
      std::cerr << "error: " << *problem << "\n";
      return kUsage;
    }
    g = tree_family(t);
  } else if (f.family == "fixture") {
    const auto all = fixtures();
    if (!f.out.empty()) {
      fs::create_directories(f.out);
      for (const auto& [name, fx] : all) {
        std::ofstream(fs::path(f.out) / (name + ".json")) << to_json(fx).dump(2) << "\n";
      }
      return kDecision;
    }
    const auto it = all.find(f.name);
    if (it == all.end()) {
      std::cerr << "error: unknown fixture '" << f.name << "'\n";
      return kUsage;
    }
    emit(c, to_json(it->second), to_graph6(it->second.graph) + "\n");
    return kDecision;
  } else {
    std::cerr << "error: unknown family '" << f.family << "'\n";
    return kUsage;
  }
  if (c.format == "graph6") {
    std::cout << to_graph6(*g) << "\n";
    return kDecision;
  }
  if (c.format == "dot") {
    std::cout << to_dot(*g, lam.value_or(Lambda{}));
    return kDecision;
  }
  Json j;
  j["graph"] = to_json(*g);
  j["lambda"] = lam ? to_json(*g, *lam) : Json(nullptr);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(c, j, to_graph6(*g) + "\n");
  return kDecision;
}

// ---- batch ----------------------------------------------------------------

struct BatchRow {
  std::string graph6;
  int order = 0;
  std::optional<EngineRun> dis, ora;
  std::optional<bool> agree;
};

std::vector<Graph> load_batch(const std::string& input) {
  std::vector<Graph> out;
  auto from_stream = [&](std::istream& in) {
    for (Graph& g : read_graph6_stream(in)) out.push_back(std::move(g));
  };
  if (input != "-" && fs::is_directory(input)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(input))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      if (p.extension() == ".json") out.push_back(load(p.string()).graph);
      else if (p.extension() == ".g6" || p.extension() == ".txt") {
        std::ifstream in(p);
        from_stream(in);
      }
    }
    return out;
  }
  if (input == "-") {
    from_stream(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open '" + input + "'", 0);
    from_stream(in);
  }
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

int cmd_batch(const Common& c, const std::string& input, const SearchFlags& f) {
  const std::vector<Graph> graphs = load_batch(input);
  const bool use_oracle = f.oracle || f.both;
  const bool use_dismantle = f.dismantle || f.both || !f.oracle;
  const unsigned workers = std::max(1U, std::min<unsigned>(f.threads ? f.threads : default_threads(),
                                                           static_cast<unsigned>(std::max<std::size_t>(1, graphs.size()))));
  std::vector<BatchRow> rows(graphs.size());
  std::atomic<std::size_t> next{0};
  SearchFlags per = f;
  per.threads = 1;  // parallelism is across graphs
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      const Graph& g = graphs[i];
      BatchRow& r = rows[i];
      r.graph6 = to_graph6(g);
      r.order = g.order();
      if (use_dismantle) r.dis = run_dismantle(g, {}, false, per);
      if (use_oracle) r.ora = run_oracle(g, per);
      if (r.dis && r.ora && decided(r.dis->verdict) && decided(r.ora->verdict))
        r.agree = r.dis->verdict.yes() == r.ora->verdict.yes();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  // Aggregates.
  std::map<std::string, int> outcomes, stages, oracle_outcomes;
  std::vector<double> dis_ms, ora_ms;
  int disagreements = 0, budget = 0;
  for (const BatchRow& r : rows) {
    if (r.dis) {
      outcomes[to_string(r.dis->verdict.outcome)]++;
      if (!r.dis->verdict.yes()) stages[r.dis->verdict.stage]++;
      dis_ms.push_back(r.dis->ms);
      budget += r.dis->verdict.outcome == Verdict::Outcome::BudgetExceeded;
    }
    if (r.ora) {
      oracle_outcomes[to_string(r.ora->verdict.outcome)]++;
      ora_ms.push_back(r.ora->ms);
      budget += r.ora->verdict.outcome == Verdict::Outcome::BudgetExceeded;
    }
    disagreements += r.agree && !*r.agree;
  }
  Json summary;
  summary["graphs"] = rows.size();
  if (use_dismantle) {
    summary["dismantle_outcomes"] = outcomes;
    summary["refusal_stages"] = stages;
    if (!c.no_timing) summary["dismantle_median_ms"] = median(dis_ms);
  }
  if (use_oracle) {
    summary["oracle_outcomes"] = oracle_outcomes;
    if (!c.no_timing) summary["oracle_median_ms"] = median(ora_ms);
  }
  if (use_oracle && use_dismantle) summary["disagreements"] = disagreements;
  summary["budget_exceeded"] = budget;

  if (c.format == "csv") {
    std::cout << "index,graph6,order";
    if (use_dismantle) std::cout << ",dismantle,stage,reason" << (c.no_timing ? "" : ",dismantle_ms");
    if (use_oracle) std::cout << ",oracle" << (c.no_timing ? "" : ",oracle_ms");
    if (use_oracle && use_dismantle) std::cout << ",agree";
    std::cout << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const BatchRow& r = rows[i];
      std::cout << i << "," << r.graph6 << "," << r.order;
      if (r.dis)
        std::cout << "," << to_string(r.dis->verdict.outcome) << "," << r.dis->verdict.stage << ","
                  << (r.dis->verdict.reason ? to_string(*r.dis->verdict.reason) : "")
                  << (c.no_timing ? "" : "," + std::to_string(r.dis->ms));
      if (r.ora)
        std::cout << "," << to_string(r.ora->verdict.outcome) << (c.no_timing ? "" : "," + std::to_string(r.ora->ms));
      if (use_oracle && use_dismantle) std::cout << "," << (r.agree ? (*r.agree ? "yes" : "no") : "");
      std::cout << "\n";
    }
    std::cerr << summary.dump(2) << "\n";
  } else {
    Json results = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const BatchRow& r = rows[i];
      Json e;
      e["index"] = i;
      e["graph6"] = r.graph6;
      e["order"] = r.order;
      if (r.dis) {
        e["dismantle"] = {{"outcome", to_string(r.dis->verdict.outcome)}, {"stage", r.dis->verdict.stage}};
        if (r.dis->verdict.reason) e["dismantle"]["reason"] = to_string(*r.dis->verdict.reason);
        if (!c.no_timing) e["dismantle"]["ms"] = r.dis->ms;
      }
      if (r.ora) {
        e["oracle"] = {{"outcome", to_string(r.ora->verdict.outcome)}};
        if (!c.no_timing) e["oracle"]["ms"] = r.ora->ms;
      }
      if (r.agree) e["agree"] = *r.agree;
      results.push_back(e);
    }
    std::ostringstream t;
    for (const auto& e : results) {
      t << e["index"].get<std::size_t>() << " " << e["graph6"].get<std::string>();
      if (e.contains("dismantle")) t << " " << e["dismantle"]["outcome"].get<std::string>() << "@" << e["dismantle"]["stage"].get<std::string>();
      if (e.contains("oracle")) t << " oracle:" << e["oracle"]["outcome"].get<std::string>();
      t << "\n";
    }
    t << summary.dump(2) << "\n";
    emit(c, Json{{"results", results}, {"summary", summary}}, t.str());
  }
  if (disagreements) return kDisagree;
  if (budget) return kBudget;
  return kDecision;
}

// ---- jsj ------------------------------------------------------------------

int cmd_jsj(const Common& c, const std::string& input) {
  const Graph g = load(input).graph;
  if (auto why = search_preconditions(g); !why.empty()) {
    Json j;
    j["refusal"] = why;
    emit(c, j, "refused: " + why.front() + "\n");
    return kRefused;
  }
  const GraphOfCylinders goc = graph_of_cylinders(g);
  if (c.format == "dot") {
    std::cout << to_dot(g, goc);
    return kDecision;
  }
  std::ostringstream t;
  t << (goc.hanging ? "hanging (crossed cuts)\n" : "")
    << goc.cuts.size() << " cuts, " << goc.cylinders.size() << " cylinders, " << goc.rigid.size() << " rigid\n";
  for (const Cut& k : goc.cuts) t << "  " << describe(g, k) << "\n";
  emit(c, to_json(g, goc), t.str());
  return kDecision;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-index visual RAAG subgroups of right-angled Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "json, text; gen also takes graph6, dot; batch also csv; jsj also dot")
      ->check(CLI::IsMember({"json", "text", "graph6", "dot", "csv"}));
  app.add_flag("--no-timing", common.no_timing, "omit wall-clock fields");

  std::string input, lambda_file;

  auto* check = app.add_subcommand("check", "graph properties and diagonal-graph status");
  check->add_option("input", input, "graph6 literal, graph6/JSON file, '-' or fixture:NAME")->required();

  SearchFlags sf;
  auto engine_flags = [&](CLI::App* sub) {
    sub->add_flag("--oracle", sf.oracle, "exhaustive Λ enumeration");
    sub->add_flag("--dismantle", sf.dismantle, "satellite-dismantling search (default)");
    sub->add_flag("--both", sf.both, "run both engines and compare");
    sub->add_option("--timeout", sf.timeout, "seconds per graph and engine (0 = none)");
    sub->add_option("--max-pairs", sf.max_pairs, "oracle tree-pair budget");
    sub->add_option("--threads", sf.threads, "worker threads (batch default: VISRAAG_THREADS or all cores)");
  };
  auto* search = app.add_subcommand("search", "decide whether a FIDL-Λ exists");
  search->add_option("input", input, "graph input")->required();
  engine_flags(search);
  search->add_option("--require", sf.require, "required Λ-edge p,q (repeatable; relative search)")
      ->allow_extra_args(false);
  search->add_flag("--all-gates", sf.all_gates, "evaluate every cheap gate after the first failure");

  auto* verify = app.add_subcommand("verify", "check a given Λ");
  verify->add_option("input", input, "graph input (a fixture or JSON carrying a Λ may omit the Λ file)")->required();
  verify->add_option("lambda", lambda_file, "JSON file with red and blue edge lists");

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->add_option("family", gf.family, "square, wheel, coning, tree-family, fixture")->required();
  gen->add_option("n", gf.n, "wheel size");
  gen->add_option("--steps", gf.steps, "coning steps");
  gen->add_option("--seed", gf.seed, "coning seed");
  gen->add_option("--tree", gf.tree, "tree edges, e.g. a-b,b-c");
  gen->add_option("--labels", gf.labels, "labels, e.g. a=1,b=4,c=2");
  gen->add_option("--name", gf.name, "fixture name");
  gen->add_option("--out", gf.out, "write every fixture as JSON into this directory");

  auto* batch = app.add_subcommand("batch", "run engines over a graph6 stream or a directory");
  batch->add_option("input", input, "graph6 file, '-' or directory of .json/.g6 files")->required();
  engine_flags(batch);

  auto* jsj = app.add_subcommand("jsj", "cuts and graph of cylinders");
  jsj->add_option("input", input, "graph input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(common, input);
    if (*search) return cmd_search(common, input, sf);
    if (*verify) return cmd_verify(common, input, lambda_file);
    if (*gen) return cmd_gen(common, gf);
    if (*batch) return cmd_batch(common, input, sf);
    if (*jsj) return cmd_jsj(common, input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
