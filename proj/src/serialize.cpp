#include "visraag/serialize.hpp"

#include <sstream>

#include "visraag/graph6.hpp"

namespace visraag {

namespace {

Json pair_json(const Graph& g, VertexPair p) { return Json::array({g.name(p.first), g.name(p.second)}); }

Json pairs_json(const Graph& g, const std::vector<VertexPair>& ps) {
  Json out = Json::array();
  for (auto p : ps) out.push_back(pair_json(g, p));
  return out;
}

Json ids_json(const Graph& g, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

VertexId vertex_from_json(const Graph& g, const Json& j) {
  if (!j.is_string()) throw ParseError("vertex name must be a string", 0);
  const auto id = g.find(j.get<std::string>());
  if (!id) throw ParseError("unknown vertex '" + j.get<std::string>() + "'", 0);
  return *id;
}

std::vector<VertexPair> pairs_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw ParseError("edge list must be an array", 0);
  std::vector<VertexPair> out;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair", 0);
    out.emplace_back(vertex_from_json(g, e[0]), vertex_from_json(g, e[1]));
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.names();
  j["edges"] = pairs_json(g, g.edges());
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph needs \"vertices\" and \"edges\"", 0);
  std::vector<std::string> names;
  if (j["vertices"].is_number_integer()) {
    for (int i = 0; i < j["vertices"].get<int>(); ++i) names.push_back(std::to_string(i));
  } else {
    for (const Json& n : j["vertices"]) {
      if (n.is_string()) names.push_back(n.get<std::string>());
      else if (n.is_number_integer()) names.push_back(std::to_string(n.get<int>()));
      else throw ParseError("vertex names must be strings", 0);
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair", 0);
    auto name = [](const Json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()); };
    edges.emplace_back(name(e[0]), name(e[1]));
  }
  try {
    return Graph::from_named_edges(names, edges);
  } catch (const std::exception& ex) {
    throw ParseError(ex.what(), 0);
  }
}

Json to_json(const Graph& g, const Lambda& lam) {
  Json j;
  j["red"] = pairs_json(g, lam.red);
  j["blue"] = pairs_json(g, lam.blue);
  return j;
}

Lambda lambda_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("red") || !j.contains("blue")) throw ParseError("Λ needs \"red\" and \"blue\"", 0);
  return Lambda(pairs_from_json(g, j["red"]), pairs_from_json(g, j["blue"]));
}

Json to_json(const Graph& g, VertexSet s) { return ids_json(g, s.to_vector()); }

Json to_json(const Graph& g, const Cut& k) {
  Json j;
  j["kind"] = k.kind == CutKind::Pair ? "pair" : "triple";
  j["pair"] = pair_json(g, k.pair());
  j["third"] = k.c ? Json(g.name(*k.c)) : Json(nullptr);
  Json comps = Json::array();
  for (VertexSet c : k.components) comps.push_back(to_json(g, c));
  j["components"] = comps;
  return j;
}

Json to_json(const Graph& g, const ConditionResult& c) {
  Json j;
  j["evaluated"] = c.evaluated;
  j["passed"] = c.passed;
  if (!c.message.empty()) j["message"] = c.message;
  if (!c.witness.vertices.empty()) j["witness_vertices"] = ids_json(g, c.witness.vertices);
  if (c.witness.pair) j["witness_pair"] = pair_json(g, *c.witness.pair);
  if (c.witness.color) j["witness_color"] = *c.witness.color == Color::Red ? "red" : "blue";
  return j;
}

Json to_json(const Graph& g, const DLReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["preconditions"] = r.precondition_failures;
  j["malformed"] = r.malformed;
  j["bipartite"] = r.bipartite;
  if (r.coloring_mismatch) j["coloring_mismatch"] = pair_json(g, *r.coloring_mismatch);
  j["R1"] = to_json(g, r.r1);
  j["R2"] = to_json(g, r.r2);
  j["R3"] = to_json(g, r.r3);
  j["R4"] = to_json(g, r.r4);
  j["F1"] = to_json(g, r.f1);
  return j;
}

Json to_json(const Graph& g, const DiagonalGraph& dg) {
  Json j;
  Json ds = Json::array();
  for (const Diagonal& d : dg.diagonals) ds.push_back(pair_json(g, {d.a, d.b}));
  j["diagonals"] = ds;
  Json es = Json::array();
  for (auto [u, v] : dg.edges()) es.push_back(Json::array({u, v}));
  j["edges"] = es;
  j["components"] = dg.components();
  return j;
}

Json to_json(const Graph& g, const CommutingGraph& delta) {
  Json j;
  j["vertices"] = pairs_json(g, delta.vertices);
  Json es = Json::array();
  for (std::size_t i = 0; i < delta.adjacency.size(); ++i)
    for (int k : delta.adjacency[i])
      if (static_cast<int>(i) < k) es.push_back(Json::array({i, k}));
  j["edges"] = es;
  Json emb = Json::array();
  for (const auto& e : delta.embedding) emb.push_back(e ? Json(*e) : Json(nullptr));
  j["embedding"] = emb;
  return j;
}

Json to_json(const Graph& g, const DismantlingSequence& s) {
  Json j;
  j["base"] = to_json(g, s.base);
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    Json e;
    e["x"] = g.name(st.x);
    e["N"] = to_json(g, st.N);
    e["V"] = to_json(g, st.V);
    e["v"] = st.chosen_v ? Json(g.name(*st.chosen_v)) : Json(nullptr);
    steps.push_back(e);
  }
  j["steps"] = steps;
  return j;
}

Json to_json(const Graph& g, const GraphOfCylinders& goc) {
  Json j;
  j["hanging_flag"] = goc.hanging;
  Json cuts = Json::array();
  for (const Cut& k : goc.cuts) cuts.push_back(to_json(g, k));
  j["cuts"] = cuts;
  Json crossings = Json::array();
  for (auto [a, b] : goc.crossings) crossings.push_back(Json::array({a, b}));
  j["crossings"] = crossings;
  Json mixed = Json::array();
  for (auto [a, b] : goc.mixed_separations) mixed.push_back(Json::array({a, b}));
  j["mixed_separations"] = mixed;
  Json cyl = Json::array();
  for (const Cylinder& c : goc.cylinders) {
    Json e;
    e["pair"] = pair_json(g, c.pair);
    e["vertices"] = to_json(g, c.vertices);
    cyl.push_back(e);
  }
  j["cylinder_vertices"] = cyl;
  Json rigid = Json::array();
  for (VertexSet b : goc.rigid) rigid.push_back(to_json(g, b));
  j["rigid_vertices"] = rigid;
  Json edges = Json::array();
  for (auto [c, r] : goc.edges) edges.push_back(Json::array({c, r}));
  j["edges"] = edges;
  j["is_tree"] = goc.is_tree();
  return j;
}

Json to_json(const SearchCounters& c) {
  Json j;
  j["states"] = c.states;
  j["memo_hits"] = c.memo_hits;
  j["sequences"] = c.sequences;
  j["dagger_rejections"] = c.dagger_rejections;
  return j;
}

Json to_json(const Graph& g, const Verdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  j["stage"] = v.stage;
  if (!v.detail.empty()) j["detail"] = v.detail;
  switch (v.outcome) {
    case Verdict::Outcome::Yes:
      j["lambda"] = to_json(g, *v.lambda);
      if (v.delta) j["delta"] = to_json(g, *v.delta);
      j["sequence"] = v.sequence ? to_json(g, *v.sequence) : Json(nullptr);
      if (v.report) j["report"] = to_json(g, *v.report);
      break;
    case Verdict::Outcome::No:
      if (v.reason) j["reason"] = to_string(*v.reason);
      if (!v.cycle.empty()) j["cycle"] = ids_json(g, v.cycle);
      if (!v.pairs.empty()) j["pairs"] = pairs_json(g, v.pairs);
      if (!v.cuts.empty()) {
        Json cs = Json::array();
        for (const Cut& k : v.cuts) cs.push_back(to_json(g, k));
        j["cuts"] = cs;
      }
      if (v.part) {
        j["part"] = *v.part;
        j["part_vertices"] = to_json(g, v.part_vertices);
      }
      if (v.sub) {
        // The sub-verdict lives on the induced part; report it with local indices.
        const InducedSubgraph part(g, v.part_vertices);
        j["sub"] = to_json(part.graph, *v.sub);
      }
      break;
    case Verdict::Outcome::Refused:
      j["refusal"] = v.refusal;
      break;
    case Verdict::Outcome::BudgetExceeded:
      break;
  }
  if (!v.gate_failures.empty()) {
    Json gates = Json::array();
    for (const auto& [r, d] : v.gate_failures) gates.push_back(Json{{"reason", to_string(r)}, {"detail", d}});
    j["gate_failures"] = gates;
  }
  j["counters"] = to_json(v.counters);
  return j;
}

Json to_json(const Fixture& f) {
  Json j;
  j["graph"] = to_json(f.graph);
  j["lambda"] = f.lambda ? to_json(f.graph, *f.lambda) : Json(nullptr);
  j["expected"] = f.expected == Expected::Yes ? "yes" : "no";
  j["note"] = f.note;
  return j;
}

Fixture fixture_from_json(const Json& j) {
  Fixture f{graph_from_json(j.at("graph")), std::nullopt, Expected::No, j.value("note", "")};
  if (j.contains("lambda") && !j["lambda"].is_null()) f.lambda = lambda_from_json(f.graph, j["lambda"]);
  const std::string e = j.value("expected", "no");
  if (e != "yes" && e != "no") throw ParseError("expected must be \"yes\" or \"no\"", 0);
  f.expected = e == "yes" ? Expected::Yes : Expected::No;
  return f;
}

std::string to_dot(const Graph& g, const DiagonalGraph& dg) {
  std::ostringstream out;
  out << "graph diagonals {\n";
  for (std::size_t i = 0; i < dg.diagonals.size(); ++i)
    out << "  d" << i << " [label=" << quoted(g.name(dg.diagonals[i].a) + "," + g.name(dg.diagonals[i].b)) << "];\n";
  for (auto [u, v] : dg.edges()) out << "  d" << u << " -- d" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g, const GraphOfCylinders& goc) {
  std::ostringstream out;
  out << "graph cylinders {\n";
  if (goc.hanging) out << "  label=\"hanging\";\n";
  auto set_label = [&](VertexSet s) {
    std::string l;
    for (VertexId v : s) l += (l.empty() ? "" : " ") + g.name(v);
    return quoted(l);
  };
  for (std::size_t i = 0; i < goc.cylinders.size(); ++i)
    out << "  c" << i << " [shape=box,label=" << set_label(goc.cylinders[i].vertices) << "];\n";
  for (std::size_t i = 0; i < goc.rigid.size(); ++i) out << "  r" << i << " [label=" << set_label(goc.rigid[i]) << "];\n";
  for (auto [c, r] : goc.edges) out << "  c" << c << " -- r" << r << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g, const Lambda& lam) {
  std::ostringstream out;
  out << "graph theta {\n";
  for (VertexId v = 0; v < g.order(); ++v) out << "  " << quoted(g.name(v)) << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << quoted(g.name(u)) << " -- " << quoted(g.name(v)) << ";\n";
  for (auto [u, v] : lam.red)
    out << "  " << quoted(g.name(u)) << " -- " << quoted(g.name(v)) << " [style=dashed,color=red];\n";
  for (auto [u, v] : lam.blue)
    out << "  " << quoted(g.name(u)) << " -- " << quoted(g.name(v)) << " [style=dashed,color=blue];\n";
  out << "}\n";
  return out.str();
}

}  // namespace visraag
