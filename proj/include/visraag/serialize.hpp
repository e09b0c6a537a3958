#pragma once

#include <string>

#include <json.hpp>

#include "visraag/cuts.hpp"
#include "visraag/dismantle.hpp"
#include "visraag/generators.hpp"
#include "visraag/square_structure.hpp"

namespace visraag {

using Json = nlohmann::ordered_json;

/// {"vertices": [names], "edges": [[u, v], ...]} with vertex names.
Json to_json(const Graph& g);
/// Throws ParseError on malformed input.
Graph graph_from_json(const Json& j);

/// {"red": [[u, v], ...], "blue": [...]} with vertex names of g.
Json to_json(const Graph& g, const Lambda& lam);
Lambda lambda_from_json(const Graph& g, const Json& j);

Json to_json(const Graph& g, VertexSet s);
Json to_json(const Graph& g, const Cut& k);
Json to_json(const Graph& g, const ConditionResult& c);
Json to_json(const Graph& g, const DLReport& r);
Json to_json(const Graph& g, const DiagonalGraph& dg);
Json to_json(const Graph& g, const CommutingGraph& delta);
Json to_json(const Graph& g, const DismantlingSequence& s);
Json to_json(const Graph& g, const GraphOfCylinders& goc);
Json to_json(const Graph& g, const Verdict& v);
Json to_json(const SearchCounters& c);

/// {"graph": ..., "lambda": ... | null, "expected": "yes" | "no", "note": ...}
Json to_json(const Fixture& f);
Fixture fixture_from_json(const Json& j);

std::string to_dot(const Graph& g, const DiagonalGraph& dg);
/// Cylinders as boxes, rigid vertices as ellipses.
std::string to_dot(const Graph& g, const GraphOfCylinders& goc);
/// Γ-edges solid, Λ-edges dashed in their colour.
std::string to_dot(const Graph& g, const Lambda& lam);

}  // namespace visraag
