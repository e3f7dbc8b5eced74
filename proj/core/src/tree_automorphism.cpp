#include "stdist/tree_automorphism.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "stdist/errors.hpp"

namespace stdist::tree {

TreeAutomorphism TreeAutomorphism::from_vertex_map(const TreePair& tree,
                                                   std::vector<VertexId> vertex_image) {
  const std::size_t n = tree.vertices().size();
  if (vertex_image.size() != n)
    throw InvalidArgumentError("vertex map has " + std::to_string(vertex_image.size()) +
                               " entries, tree has " + std::to_string(n) + " vertices");
  std::vector<bool> hit(n, false);
  for (VertexId image : vertex_image) {
    if (image == kNoVertex) continue;
    if (image < 0 || static_cast<std::size_t>(image) >= n)
      throw InvalidArgumentError("vertex map points outside the tree");
    if (hit[image]) throw InvalidArgumentError("vertex map is not injective");
    hit[image] = true;
  }
  TreeAutomorphism g;
  g.vertex_image_ = std::move(vertex_image);
  bool labelled = false;
  for (const Edge& e : tree.edges()) {
    const VertexId a = g.vertex_image_[e.inner];
    const VertexId b = g.vertex_image_[e.outer];
    if (a == kNoVertex || b == kNoVertex) continue;
    if (tree.edge_between(a, b) == kNoEdge)
      throw InvalidArgumentError("vertex map sends edge " + std::to_string(e.id) + " to a non-edge");
    if (!labelled) {
      g.type_preserving_ = tree.vertex(a).label == tree.vertex(e.inner).label;
      labelled = true;
    }
  }
  return g;
}

std::vector<std::pair<EdgeId, EdgeId>> TreeAutomorphism::edge_map(const TreePair& tree) const {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (const Edge& e : tree.edges()) {
    const VertexId a = vertex_image_[e.inner];
    const VertexId b = vertex_image_[e.outer];
    if (a != kNoVertex && b != kNoVertex) out.emplace_back(e.id, tree.edge_between(a, b));
  }
  return out;
}

TreeAutomorphism TreeAutomorphism::compose(const TreePair& tree, const TreeAutomorphism& rhs) const {
  std::vector<VertexId> image(vertex_image_.size(), kNoVertex);
  for (std::size_t v = 0; v < image.size(); ++v) {
    const VertexId mid = rhs.vertex_image_[v];
    if (mid != kNoVertex) image[v] = vertex_image_[mid];
  }
  return from_vertex_map(tree, std::move(image));
}

TreeAutomorphism identity_automorphism(const TreePair& tree) {
  std::vector<VertexId> image(tree.vertices().size());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = static_cast<VertexId>(v);
  return TreeAutomorphism::from_vertex_map(tree, std::move(image));
}

TreeAutomorphism extend_from_edge(const TreePair& tree, VertexId from_a, VertexId from_b,
                                  VertexId to_a, VertexId to_b, std::mt19937_64* rng) {
  if (tree.edge_between(from_a, from_b) == kNoEdge || tree.edge_between(to_a, to_b) == kNoEdge)
    throw InvalidArgumentError("extend_from_edge needs two edges");
  std::vector<VertexId> image(tree.vertices().size(), kNoVertex);
  image[from_a] = to_a;
  image[from_b] = to_b;

  // (source vertex, target vertex, source neighbour already mapped, its target)
  std::deque<std::tuple<VertexId, VertexId, VertexId, VertexId>> queue{
      {from_a, to_a, from_b, to_b}, {from_b, to_b, from_a, to_a}};
  while (!queue.empty()) {
    const auto [x, y, x_prev, y_prev] = queue.front();
    queue.pop_front();
    if (!tree.vertex(x).interior || !tree.vertex(y).interior) continue;
    std::vector<VertexId> sources;
    std::vector<VertexId> targets;
    for (VertexId n : tree.neighbours(x))
      if (n != x_prev) sources.push_back(n);
    for (VertexId n : tree.neighbours(y))
      if (n != y_prev) targets.push_back(n);
    if (rng != nullptr) std::shuffle(targets.begin(), targets.end(), *rng);
    for (std::size_t i = 0; i < sources.size(); ++i) {
      image[sources[i]] = targets[i];
      queue.emplace_back(sources[i], targets[i], x, y);
    }
  }
  return TreeAutomorphism::from_vertex_map(tree, std::move(image));
}

namespace {

std::pair<VertexId, VertexId> root_endpoints(const TreePair& tree) {
  const Edge& e0 = tree.edge(tree.root_edge());
  return {e0.inner, e0.outer};
}

}  // namespace

TreeAutomorphism endpoint_swap(const TreePair& tree) {
  const auto [a, b] = root_endpoints(tree);
  return extend_from_edge(tree, a, b, b, a);
}

TreeAutomorphism random_child_permutation(const TreePair& tree, std::mt19937_64& rng) {
  const auto [a, b] = root_endpoints(tree);
  return extend_from_edge(tree, a, b, a, b, &rng);
}

TreeAutomorphism axis_translation(const TreePair& tree, int steps) {
  if (steps < 1 || steps >= tree.depth() + 1)
    throw InvalidArgumentError("axis translation by " + std::to_string(steps) +
                               " needs 1 <= steps <= depth");
  const auto [a, b] = root_endpoints(tree);
  std::vector<VertexId> axis{a, b};
  while (static_cast<int>(axis.size()) < steps + 2) {
    const Vertex& last = tree.vertex(axis.back());
    axis.push_back(tree.other_end(last.edges.at(1), last.id));  // first child
  }
  return extend_from_edge(tree, axis[0], axis[1], axis[steps], axis[steps + 1]);
}

int epsilon_tree(const TreePair& tree, const TreeAutomorphism& g) {
  int sign = 0;
  for (const auto& [source, target] : g.edge_map(tree)) {
    const Edge& e = tree.edge(source);
    // Permutation of the two vertex types {0, 1} induced on this edge.
    const int type_of_inner = tree.vertex(g(e.inner)).label;
    const int type_of_outer = tree.vertex(g(e.outer)).label;
    const bool identity = type_of_inner == tree.vertex(e.inner).label &&
                          type_of_outer == tree.vertex(e.outer).label;
    const int edge_sign = identity ? 1 : -1;
    if (sign == 0) {
      sign = edge_sign;
    } else if (sign != edge_sign) {
      throw InvalidArgumentError("map mixes type-preserving and type-swapping edges; "
                                 "not an automorphism");
    }
    (void)target;
  }
  if (sign == 0) throw InvalidArgumentError("automorphism has no edge in its domain");
  return sign;
}

SignSampleReport sample_sign_homomorphism(const TreePair& tree, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TreeAutomorphism> pool;
  pool.push_back(identity_automorphism(tree));
  pool.push_back(endpoint_swap(tree));
  for (int i = 0; i < 4; ++i) pool.push_back(random_child_permutation(tree, rng));
  for (int steps = 1; steps <= std::min(2, tree.depth() - 1); ++steps)
    pool.push_back(axis_translation(tree, steps));
  const std::size_t base = pool.size();
  std::uniform_int_distribution<std::size_t> pick_base(0, base - 1);
  for (int i = 0; i < 6; ++i) {
    TreeAutomorphism composite = pool[pick_base(rng)].compose(tree, pool[pick_base(rng)]);
    if (!composite.edge_map(tree).empty()) pool.push_back(std::move(composite));
  }

  SignSampleReport report;
  report.swap_sign = epsilon_tree(tree, pool[1]);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int attempt = 0; report.pairs_checked < pairs && attempt < 20 * pairs; ++attempt) {
    const TreeAutomorphism& g = pool[pick(rng)];
    const TreeAutomorphism& h = pool[pick(rng)];
    const TreeAutomorphism gh = g.compose(tree, h);
    if (gh.edge_map(tree).empty()) continue;
    ++report.pairs_checked;
    if (epsilon_tree(tree, gh) != epsilon_tree(tree, g) * epsilon_tree(tree, h)) ++report.failures;
  }
  return report;
}

}  // namespace stdist::tree
