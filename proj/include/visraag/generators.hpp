#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "visraag/lambda.hpp"

namespace visraag {

/// A graph together with a candidate (usually FIDL) Λ.
struct Instance {
  Graph graph;
  Lambda lambda;
};

struct ConingStep {
  VertexId v;   // vertex whose link receives the cone
  VertexSet N;  // coned-off set, N ⊆ lk(v)
  VertexId x;   // new vertex
};

using ConingSequence = std::vector<ConingStep>;

/// The square a-c-b-d with Λ = its two diagonals ({a,b} red, {c,d} blue).
Instance square_instance();

/// Adds a vertex adjacent to exactly N and the Λ-edge {v, x}. Throws
/// std::invalid_argument naming the failed clause when N ⊄ lk(v), |N| < 2,
/// N is not Λ-convex, or v carries no Λ-colour. An empty name picks "x<k>".
Instance cone_step(const Graph& g, const Lambda& lam, VertexId v, VertexSet N, std::string name = {});

struct ConingLimits {
  int max_vertices = kMaxVertices;
};

struct ConingResult {
  Graph graph;
  Lambda lambda;
  ConingSequence sequence;
};

/// Random coning from the square: v uniform among vertices, N uniform among
/// Λ-convex subsets of lk(v) with at least two vertices. Stops early at the
/// vertex cap. Deterministic for a given seed on every platform.
ConingResult random_coning(std::uint64_t seed, int steps, ConingLimits limits = {});

/// Uniform integer in [0, bound) using rejection on raw 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Hub edge x-y, rim c1,d1,...,cn,dn, spokes c_i-x and d_i-y. Λ: red star
/// x-d_i, blue star y-c_i. Throws for n < 3.
Instance bicycle_wheel(int n);

struct LabelledTree {
  Graph tree;
  std::vector<int> labels;  // indexed by tree vertex
};

/// Validates the labelled-tree conditions; returns a message on failure.
std::optional<std::string> labelled_tree_problem(const LabelledTree& t);

/// Blow-up: vertex v becomes labels[v] copies "v_0".."v_{k-1}", copies
/// adjacent iff their tree vertices are. Throws on an invalid tree.
Graph tree_family(const LabelledTree& t);

enum class Expected { Yes, No };

struct Fixture {
  Graph graph;
  std::optional<Lambda> lambda;
  Expected expected;
  std::string note;
};

/// Named worked examples.
std::map<std::string, Fixture> fixtures();

/// Two copies of the 3-wheel identified along the non-adjacent pair {x,d1}.
Graph glued_wheels();

/// Coning sequence of the cube with a space diagonal from the square.
ConingResult cube_with_diagonal_coning();

}  // namespace visraag
