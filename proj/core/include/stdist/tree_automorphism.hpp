#pragma once

// Partial automorphisms of the truncated tree and the sign character they induce.

#include <cstdint>
#include <random>
#include <vector>

#include "stdist/tree.hpp"

namespace stdist::tree {

// Adjacency-preserving injective partial map of the truncated tree into itself.
// vertex_image[v] == kNoVertex outside the domain; an edge is in the domain when
// both endpoints are. X_F need not be preserved.
class TreeAutomorphism {
 public:
  // Validates injectivity and that edges of the domain map to edges.
  static TreeAutomorphism from_vertex_map(const TreePair& tree, std::vector<VertexId> vertex_image);

  VertexId operator()(VertexId v) const { return vertex_image_.at(v); }
  const std::vector<VertexId>& vertex_image() const { return vertex_image_; }
  // Edge ids of the domain paired with their images.
  std::vector<std::pair<EdgeId, EdgeId>> edge_map(const TreePair& tree) const;
  bool type_preserving() const { return type_preserving_; }

  // (*this) after rhs, defined where both steps are.
  TreeAutomorphism compose(const TreePair& tree, const TreeAutomorphism& rhs) const;

 private:
  std::vector<VertexId> vertex_image_;
  bool type_preserving_ = true;
};

TreeAutomorphism identity_automorphism(const TreePair& tree);

// Extends the oriented-edge assignment (from_a, from_b) -> (to_a, to_b) to the
// largest subtree it can reach: at each mapped pair of interior vertices the
// remaining neighbours are matched in order, after an optional random
// shuffle of the target order driven by `rng`.
TreeAutomorphism extend_from_edge(const TreePair& tree, VertexId from_a, VertexId from_b,
                                  VertexId to_a, VertexId to_b, std::mt19937_64* rng = nullptr);

// Swaps the endpoints of e0, extended level by level.
TreeAutomorphism endpoint_swap(const TreePair& tree);

// Fixes e0 pointwise and permutes children randomly at every interior vertex.
TreeAutomorphism random_child_permutation(const TreePair& tree, std::mt19937_64& rng);

// Translation by `steps` (>= 1) along the axis through e0 that follows first
// children on the side of e0's second endpoint. Requires depth > steps.
TreeAutomorphism axis_translation(const TreePair& tree, int steps);

// +1 if bipartition labels are preserved, -1 if swapped, evaluated on every
// edge of the domain as the signature of the induced permutation of the two
// vertex types. Throws InvalidArgumentError if edges disagree or the domain
// has no edge.
int epsilon_tree(const TreePair& tree, const TreeAutomorphism& g);

struct SignSampleReport {
  int pairs_checked = 0;
  int failures = 0;
  int swap_sign = 0;  // epsilon of the e0 endpoint swap
};

// Samples `pairs` composable pairs from a pool of swaps, child permutations,
// translations and their composites, and checks
// epsilon(g h) = epsilon(g) epsilon(h) on each.
SignSampleReport sample_sign_homomorphism(const TreePair& tree, int pairs, std::uint64_t seed);

}  // namespace stdist::tree
