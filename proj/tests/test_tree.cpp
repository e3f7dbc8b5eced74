#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "stdist/coxeter.hpp"
#include "stdist/errors.hpp"
#include "stdist/period.hpp"
#include "stdist/tree.hpp"
#include "stdist/tree_automorphism.hpp"

using namespace stdist;
using namespace stdist::tree;

namespace {

// Chamber-graph BFS: two edges are adjacent when they share a vertex.
std::vector<int> chamber_distances(const TreePair& t, const std::vector<EdgeId>& sources) {
  std::vector<int> dist(t.edges().size(), -1);
  std::deque<EdgeId> queue;
  for (EdgeId e : sources) {
    dist[e] = 0;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const EdgeId e = queue.front();
    queue.pop_front();
    for (VertexId v : {t.edge(e).inner, t.edge(e).outer})
      for (EdgeId f : t.vertex(v).edges)
        if (dist[f] < 0) {
          dist[f] = dist[e] + 1;
          queue.push_back(f);
        }
  }
  return dist;
}

std::vector<EdgeId> f_edges(const TreePair& t) {
  std::vector<EdgeId> out;
  for (const Edge& e : t.edges())
    if (e.in_F) out.push_back(e.id);
  return out;
}

std::vector<VertexId> children(const TreePair& t, VertexId v) {
  std::vector<VertexId> out;
  for (EdgeId e : t.vertex(v).edges) {
    const VertexId w = t.other_end(e, v);
    if (t.vertex(w).parent == v && t.vertex(v).parent != w) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST(BuildTreePair, EdgeCountsAtDepthOne) {
  const TreePair t2 = build_tree_pair(2, 1);
  EXPECT_EQ(t2.edges().size(), 9u);
  EXPECT_EQ(f_edges(t2).size(), 5u);
  const TreePair t3 = build_tree_pair(3, 1);
  EXPECT_EQ(t3.edges().size(), 19u);
  EXPECT_EQ(f_edges(t3).size(), 7u);
  EXPECT_EQ(t3.q_E(), 9);
}

TEST(BuildTreePair, PanelCountsAtDepthThree) {
  const TreePair t = build_tree_pair(2, 3);
  int interior_f = 0;
  for (const Vertex& v : t.vertices()) {
    if (!v.interior) continue;
    int f_degree = 0;
    for (EdgeId e : v.edges) f_degree += t.edge(e).in_F ? 1 : 0;
    EXPECT_EQ(v.edges.size(), 5u);
    if (v.in_F) {
      ++interior_f;
      EXPECT_EQ(f_degree, 3);
    } else {
      EXPECT_EQ(f_degree, 0);
    }
  }
  EXPECT_GT(interior_f, 0);
}

TEST(BuildTreePair, StructureAndCensus) {
  for (std::int64_t q : {2, 3, 4, 5}) {
    const int depth = q <= 3 ? 5 : 3;
    const TreePair t = build_tree_pair(q, depth);
    const StructureReport r = verify_structure(t);
    EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_EQ(t.vertices().size(), tree_vertex_count(q, depth));
    std::uint64_t qf = 1, qe = 1;
    for (int k = 1; k <= depth; ++k) {
      qf *= q;
      qe *= q * q;
      EXPECT_EQ(r.f_sphere_sizes[k], 2 * qf);
      EXPECT_EQ(r.e_sphere_sizes[k], 2 * qe);
    }
  }
}

TEST(BuildTreePair, LabelsAlternateAndRootEdgeInF) {
  const TreePair t = build_tree_pair(3, 3);
  EXPECT_TRUE(t.edge(t.root_edge()).in_F);
  for (const Edge& e : t.edges()) EXPECT_NE(t.vertex(e.inner).label, t.vertex(e.outer).label);
}

TEST(BuildTreePair, GalleryDistanceMatchesBfs) {
  const TreePair t = build_tree_pair(2, 4);
  const auto dist = chamber_distances(t, {t.root_edge()});
  for (const Edge& e : t.edges()) EXPECT_EQ(e.gallery_distance, dist[e.id]);
}

TEST(BuildTreePair, RejectsBadInput) {
  EXPECT_THROW(build_tree_pair(6, 2), InvalidArgumentError);
  EXPECT_THROW(build_tree_pair(2, 0), InvalidArgumentError);
  EXPECT_THROW(build_tree_pair(9, 8), BudgetExceededError);
  EXPECT_THROW(build_tree_pair(2, 6, 1000), BudgetExceededError);
}

TEST(IwahoriCocycle, Values) {
  const TreePair t = build_tree_pair(2, 3);
  const EdgeCocycle f = iwahori_cocycle(t);
  EXPECT_EQ(f[t.root_edge()], 1);
  for (const Edge& e : t.edges()) {
    if (e.gallery_distance == 1) EXPECT_EQ(f[e.id], make_rational(-1, 4));
    if (e.gallery_distance == 2) EXPECT_EQ(f[e.id], make_rational(1, 16));
  }
}

TEST(VerifyHarmonic, IwahoriHasNoViolations) {
  const TreePair t = build_tree_pair(2, 5);
  const HarmonicityReport r = verify_harmonic(t, iwahori_cocycle(t));
  EXPECT_TRUE(r.harmonic());
  EXPECT_GT(r.interior_checked, 0u);
  EXPECT_GT(r.boundary_skipped, 0u);
  EXPECT_EQ(r.interior_checked + r.boundary_skipped, t.vertices().size());
}

TEST(VerifyHarmonic, ConstantCocycleViolatesEverywhere) {
  const TreePair t = build_tree_pair(2, 3);
  const HarmonicityReport r = verify_harmonic(t, constant_cocycle(t, 1));
  EXPECT_EQ(r.violations.size(), r.interior_checked);
}

TEST(VerifyHarmonic, RootIndicatorViolatesAtItsEndpoints) {
  const TreePair t = build_tree_pair(3, 3);
  EdgeCocycle f(t.edges().size());
  f[t.root_edge()] = 1;
  HarmonicityReport r = verify_harmonic(t, f);
  ASSERT_EQ(r.violations.size(), 2u);
  std::sort(r.violations.begin(), r.violations.end());
  std::vector<VertexId> ends{t.edge(0).inner, t.edge(0).outer};
  std::sort(ends.begin(), ends.end());
  EXPECT_EQ(r.violations, ends);
}

TEST(TreePeriod, Examples) {
  const TreePair t3 = build_tree_pair(3, 2);
  EXPECT_EQ(tree_period(t3, iwahori_cocycle(t3))[1], make_rational(1, 3));
  const auto zero = tree_period(t3, constant_cocycle(t3, 0));
  for (const Rational& s : zero) EXPECT_EQ(s, 0);
}

TEST(TreePeriod, ConvergesToRankOneFormula) {
  const TreePair t = build_tree_pair(2, 8);
  const auto sums = tree_period(t, iwahori_cocycle(t));
  const Rational limit = make_rational(1, 3);
  EXPECT_LE(abs(sums.back() - limit), rational_pow(make_rational(1, 2), 8));
  EXPECT_GT(sums[0], limit);
  EXPECT_LT(sums[1], limit);
}

TEST(TreePeriod, IncrementsMatchPeriodSeries) {
  const auto series = coxeter::growth_coefficients(coxeter::build_affine_system(coxeter::Family::A, 1), 6);
  for (std::int64_t q : {2, 3}) {
    const TreePair t = build_tree_pair(q, 6);
    EXPECT_EQ(tree_period(t, iwahori_cocycle(t)), period::period_series(series, q, 6));
  }
}

TEST(DistanceToF, Examples) {
  const TreePair t = build_tree_pair(2, 4);
  EXPECT_EQ(distance_to_F(t, t.root_edge()), 0);
  bool saw_one = false, saw_two = false;
  for (const Edge& e : t.edges()) {
    const Vertex& inner = t.vertex(e.inner);
    if (!e.in_F && inner.in_F) {
      EXPECT_EQ(distance_to_F(t, e.id), 1);
      saw_one = true;
      for (VertexId c : children(t, e.outer)) {
        EXPECT_EQ(distance_to_F(t, t.edge_between(e.outer, c)), 2);
        saw_two = true;
      }
    }
  }
  EXPECT_TRUE(saw_one);
  EXPECT_TRUE(saw_two);
}

TEST(DistanceToF, MatchesChamberBfs) {
  for (std::int64_t q : {2, 3}) {
    const TreePair t = build_tree_pair(q, 4);
    const auto dist = chamber_distances(t, f_edges(t));
    for (const Edge& e : t.edges()) {
      EXPECT_EQ(e.delta, dist[e.id]);
      EXPECT_EQ(distance_to_F(t, e.id), dist[e.id]);
    }
  }
}

TEST(DecayCheck, Examples) {
  const TreePair t = build_tree_pair(3, 4);
  EXPECT_EQ(decay_check(t, iwahori_cocycle(t)), 1);
  EXPECT_EQ(decay_check(t, constant_cocycle(t, 0)), 0);
  EXPECT_EQ(decay_check(t, constant_cocycle(t, 1)), rational_pow(Rational(9), 4));
}

TEST(InvariantSolver, DimensionOneAndProfile) {
  for (std::int64_t q : {2, 3, 4, 5}) {
    const TreePair t = build_tree_pair(q, q <= 3 ? 5 : 3);
    const InvariantSolution s = invariant_solver(t);
    EXPECT_EQ(s.dimension, 1);
    EXPECT_EQ(invariant_space_dimension(t), 1);
    EXPECT_TRUE(s.harmonicity.harmonic());
    ASSERT_GE(s.profile.size(), 2u);
    const std::int64_t qe = q * q;
    EXPECT_EQ(s.profile[0], 1);
    EXPECT_EQ(s.profile[1], make_rational(-(q + 1), qe - q));
    for (std::size_t d = 1; d + 1 < s.profile.size(); ++d)
      EXPECT_EQ(s.profile[d + 1], -s.profile[d] / qe);
  }
}

TEST(InvariantSolver, KnownProfiles) {
  const auto p2 = invariant_solver(build_tree_pair(2, 4)).profile;
  EXPECT_EQ(p2[1], make_rational(-3, 2));
  EXPECT_EQ(p2[2], make_rational(3, 8));
  const auto p3 = invariant_solver(build_tree_pair(3, 4)).profile;
  EXPECT_EQ(p3[1], make_rational(-2, 3));
  EXPECT_EQ(p3[2], make_rational(2, 27));
}

TEST(ReconstructLayer, Examples) {
  const TreePair t = build_tree_pair(2, 4);
  LayerValues base{0, {}};
  for (EdgeId e : distance_layer(t, 0)) base.values[e] = 1;
  const LayerValues one = reconstruct_layer(t, base);
  EXPECT_EQ(one.delta, 1);
  EXPECT_EQ(one.values.size(), distance_layer(t, 1).size());
  for (const auto& [e, v] : one.values) EXPECT_EQ(v, make_rational(-3, 2));
  const LayerValues two = reconstruct_layer(t, one);
  for (const auto& [e, v] : two.values) EXPECT_EQ(v, make_rational(3, 8));

  LayerValues zero{0, {}};
  for (EdgeId e : distance_layer(t, 0)) zero.values[e] = 0;
  for (const auto& [e, v] : reconstruct_layer(t, zero).values) EXPECT_EQ(v, 0);
}

TEST(ReconstructLayer, ReproducesSolverProfile) {
  for (std::int64_t q : {2, 3, 4, 5}) {
    const TreePair t = build_tree_pair(q, q <= 3 ? 5 : 3);
    const auto profile = invariant_solver(t).profile;
    LayerValues layer{0, {}};
    for (EdgeId e : distance_layer(t, 0)) layer.values[e] = 1;
    for (std::size_t d = 1; d < profile.size(); ++d) {
      layer = reconstruct_layer(t, layer);
      ASSERT_FALSE(layer.values.empty());
      for (const auto& [e, v] : layer.values) EXPECT_EQ(v, profile[d]) << "q=" << q << " delta=" << d;
    }
  }
}

TEST(ReconstructLayer, RejectsNonConstantInput) {
  const TreePair t = build_tree_pair(2, 3);
  LayerValues layer{0, {}};
  for (EdgeId e : distance_layer(t, 0)) layer.values[e] = 1;
  layer.values.begin()->second = 2;
  EXPECT_THROW(reconstruct_layer(t, layer), InvalidArgumentError);
  layer.values.erase(layer.values.begin());
  EXPECT_THROW(reconstruct_layer(t, layer), InvalidArgumentError);
}

TEST(EpsilonTree, Examples) {
  const TreePair t = build_tree_pair(2, 4);
  EXPECT_EQ(epsilon_tree(t, identity_automorphism(t)), 1);
  const TreeAutomorphism swap = endpoint_swap(t);
  EXPECT_FALSE(swap.type_preserving());
  EXPECT_EQ(epsilon_tree(t, swap), -1);
  EXPECT_EQ(epsilon_tree(t, axis_translation(t, 2)), 1);
  EXPECT_EQ(epsilon_tree(t, axis_translation(t, 1)), -1);
  std::mt19937_64 rng(7);
  EXPECT_EQ(epsilon_tree(t, random_child_permutation(t, rng)), 1);
}

TEST(EpsilonTree, RejectsMixedMap) {
  const TreePair t = build_tree_pair(2, 4);
  const VertexId a = t.edge(0).inner, b = t.edge(0).outer;
  const VertexId c = children(t, children(t, a).front()).front();
  const VertexId d = children(t, c).front();
  std::vector<VertexId> image(t.vertices().size(), kNoVertex);
  image[a] = a;
  image[b] = b;
  image[c] = d;
  image[d] = c;
  const TreeAutomorphism g = TreeAutomorphism::from_vertex_map(t, image);
  EXPECT_THROW(epsilon_tree(t, g), InvalidArgumentError);
}

TEST(TreeAutomorphism, RejectsNonAdjacencyPreservingMaps) {
  const TreePair t = build_tree_pair(2, 3);
  const VertexId a = t.edge(0).inner, b = t.edge(0).outer;
  std::vector<VertexId> image(t.vertices().size(), kNoVertex);
  image[a] = a;
  image[b] = children(t, children(t, a).front()).front();
  EXPECT_THROW(TreeAutomorphism::from_vertex_map(t, image), InvalidArgumentError);
  image[b] = a;
  EXPECT_THROW(TreeAutomorphism::from_vertex_map(t, image), InvalidArgumentError);
}

TEST(TreeAutomorphism, SwapIsAnInvolution) {
  const TreePair t = build_tree_pair(3, 3);
  const TreeAutomorphism swap = endpoint_swap(t);
  const TreeAutomorphism twice = swap.compose(t, swap);
  for (std::size_t v = 0; v < t.vertices().size(); ++v)
    if (twice(static_cast<VertexId>(v)) != kNoVertex) EXPECT_EQ(twice(static_cast<VertexId>(v)), static_cast<VertexId>(v));
}

TEST(SignCharacter, SampledPairsAreMultiplicative) {
  for (std::int64_t q : {2, 3}) {
    const TreePair t = build_tree_pair(q, 4);
    const SignSampleReport r = sample_sign_homomorphism(t, 50, 0x5eed2024);
    EXPECT_GE(r.pairs_checked, 50);
    EXPECT_EQ(r.failures, 0);
    EXPECT_EQ(r.swap_sign, -1);
  }
}

TEST(SignCharacter, SamplingIsDeterministic) {
  const TreePair t = build_tree_pair(2, 4);
  const SignSampleReport a = sample_sign_homomorphism(t, 60, 11);
  const SignSampleReport b = sample_sign_homomorphism(t, 60, 11);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
  EXPECT_EQ(a.failures, b.failures);
}
