#pragma once

// Rank-one model: the (q_E + 1)-regular tree X_E truncated at gallery radius L
// around a root edge e0, with the (q_F + 1)-regular subtree X_F marked.
// Chambers are edges, panels are vertices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stdist/rational.hpp"

namespace stdist::tree {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Vertex {
  VertexId id = kNoVertex;
  int label = 0;              // bipartition class, 0 or 1
  bool in_F = false;
  bool interior = false;      // all q_E + 1 neighbours materialized
  int level = 0;              // distance to the nearer endpoint of e0
  VertexId parent = kNoVertex;  // towards e0; the other endpoint for e0's endpoints
  std::vector<EdgeId> edges;  // parent edge (or e0) first, then children in creation order
};

struct Edge {
  EdgeId id = kNoEdge;
  VertexId inner = kNoVertex;  // endpoint nearer to e0
  VertexId outer = kNoVertex;
  bool in_F = false;
  int gallery_distance = 0;    // to e0
  int delta = 0;               // gallery distance to the nearest F-edge
};

inline constexpr std::size_t kDefaultVertexBudget = 4'000'000;

class TreePair {
 public:
  std::int64_t q_F() const { return q_F_; }
  std::int64_t q_E() const { return q_E_; }
  int depth() const { return depth_; }
  EdgeId root_edge() const { return 0; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  VertexId other_end(EdgeId e, VertexId v) const;
  // Neighbouring vertices of v, in the order of v.edges.
  std::vector<VertexId> neighbours(VertexId v) const;
  EdgeId edge_between(VertexId a, VertexId b) const;  // kNoEdge if not adjacent

 private:
  friend TreePair build_tree_pair(std::int64_t q_F, int depth, std::size_t vertex_budget);

  std::int64_t q_F_ = 2;
  std::int64_t q_E_ = 4;
  int depth_ = 1;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

// Number of vertices of the truncated tree: 2 (1 + q_E + ... + q_E^depth).
std::uint64_t tree_vertex_count(std::int64_t q_F, int depth);

// q_F in {2,3,4,5,7,8,9}, depth >= 1. Throws BudgetExceededError naming the
// smallest depth whose vertex count exceeds the budget.
TreePair build_tree_pair(std::int64_t q_F, int depth,
                         std::size_t vertex_budget = kDefaultVertexBudget);

struct StructureReport {
  std::vector<std::string> violations;
  std::vector<std::uint64_t> f_sphere_sizes;  // |Sigma_F(k)|, k = 0..depth
  std::vector<std::uint64_t> e_sphere_sizes;  // |Sigma_E(k)|
  bool ok() const { return violations.empty(); }
};

// Exhaustive check of the panel counts, bipartition, F-subtree connectivity,
// the delta layering and the sphere census |Sigma_F(k)| = 2 q_F^k, |Sigma_E(k)| = 2 q_E^k.
StructureReport verify_structure(const TreePair& tree);

// Exact rational value per edge id.
class EdgeCocycle {
 public:
  EdgeCocycle() = default;
  explicit EdgeCocycle(std::size_t num_edges) : values_(num_edges, Rational(0)) {}
  explicit EdgeCocycle(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](EdgeId e) const { return values_.at(e); }
  Rational& operator[](EdgeId e) { return values_.at(e); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

EdgeCocycle constant_cocycle(const TreePair& tree, const Rational& value);

// f(e) = (-1/q_E)^{d_g(e0, e)}.
EdgeCocycle iwahori_cocycle(const TreePair& tree);

struct HarmonicityReport {
  std::vector<VertexId> violations;   // interior vertices with nonzero sum
  std::size_t interior_checked = 0;
  std::size_t boundary_skipped = 0;
  bool harmonic() const { return violations.empty(); }
};

HarmonicityReport verify_harmonic(const TreePair& tree, const EdgeCocycle& cocycle);

// S_m = sum of f over F-edges at gallery distance <= m, for m = 0..depth.
std::vector<Rational> tree_period(const TreePair& tree, const EdgeCocycle& cocycle);

int distance_to_F(const TreePair& tree, EdgeId edge);

// max_e |f(e)| q_E^{d_g(e0, e)}.
Rational decay_check(const TreePair& tree, const EdgeCocycle& cocycle);

struct InvariantSolution {
  int dimension = 0;
  std::vector<Rational> profile;  // c_0 = 1, c_1, ..., c_max_delta
  HarmonicityReport harmonicity;  // of the cocycle e -> c_{delta(e)}
};

// Harmonic cocycles constant on each distance class Ch(X_F, delta): builds the
// panel equations over all interior vertices and computes the solution space.
// Throws ModelError unless the dimension is exactly 1 and the resulting
// cocycle is harmonic.
InvariantSolution invariant_solver(const TreePair& tree);

// Rank of the class-constant harmonicity system and its nullspace dimension,
// without the dimension-one requirement.
int invariant_space_dimension(const TreePair& tree);

struct LayerValues {
  int delta = 0;
  std::map<EdgeId, Rational> values;
};

// All edges of Ch(X_F, delta), in id order.
std::vector<EdgeId> distance_layer(const TreePair& tree, int delta);

// Values on Ch(X_F, delta + 1) forced by harmonicity at the panels shared with
// Ch(X_F, delta): v = -(sum over C_M^delta) / |C_M^{delta+1}|. The input must
// cover the whole layer and be constant on it; throws InvalidArgumentError otherwise.
LayerValues reconstruct_layer(const TreePair& tree, const LayerValues& layer);

}  // namespace stdist::tree
