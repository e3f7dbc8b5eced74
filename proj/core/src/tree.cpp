#include "stdist/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "stdist/errors.hpp"

namespace stdist::tree {

VertexId TreePair::other_end(EdgeId e, VertexId v) const {
  const Edge& edge = edges_.at(e);
  return edge.inner == v ? edge.outer : edge.inner;
}

std::vector<VertexId> TreePair::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  const Vertex& vertex = vertices_.at(v);
  out.reserve(vertex.edges.size());
  for (EdgeId e : vertex.edges) out.push_back(other_end(e, v));
  return out;
}

EdgeId TreePair::edge_between(VertexId a, VertexId b) const {
  for (EdgeId e : vertices_.at(a).edges)
    if (other_end(e, a) == b) return e;
  return kNoEdge;
}

std::uint64_t tree_vertex_count(std::int64_t q_F, int depth) {
  const std::uint64_t q_E = static_cast<std::uint64_t>(q_F * q_F);
  std::uint64_t per_side = 0;
  std::uint64_t layer = 1;
  for (int k = 0; k <= depth; ++k) {
    per_side += layer;
    layer *= q_E;
  }
  return 2 * per_side;
}

TreePair build_tree_pair(std::int64_t q_F, int depth, std::size_t vertex_budget) {
  static const std::set<std::int64_t> kSupported{2, 3, 4, 5, 7, 8, 9};
  if (kSupported.count(q_F) == 0)
    throw InvalidArgumentError("tree model supports q_F in {2,3,4,5,7,8,9}, got " +
                               std::to_string(q_F));
  if (depth < 1) throw InvalidArgumentError("tree depth must be >= 1");
  if (tree_vertex_count(q_F, depth) > vertex_budget) {
    int failing = 1;
    while (tree_vertex_count(q_F, failing) <= vertex_budget) ++failing;
    throw BudgetExceededError("tree with q_F = " + std::to_string(q_F) + " exceeds the budget of " +
                              std::to_string(vertex_budget) + " vertices from depth " +
                              std::to_string(failing));
  }

  TreePair tree;
  tree.q_F_ = q_F;
  tree.q_E_ = q_F * q_F;
  tree.depth_ = depth;
  const std::int64_t q_E = tree.q_E_;
  const std::size_t num_vertices = tree_vertex_count(q_F, depth);
  tree.vertices_.reserve(num_vertices);
  tree.edges_.reserve(num_vertices - 1);

  auto add_vertex = [&](int label, bool in_F, int level, VertexId parent) {
    Vertex v;
    v.id = static_cast<VertexId>(tree.vertices_.size());
    v.label = label;
    v.in_F = in_F;
    v.level = level;
    v.interior = level < depth;
    v.parent = parent;
    v.edges.reserve(v.interior ? q_E + 1 : 1);
    tree.vertices_.push_back(std::move(v));
    return tree.vertices_.back().id;
  };

  const VertexId left = add_vertex(0, true, 0, kNoVertex);
  const VertexId right = add_vertex(1, true, 0, left);
  tree.vertices_[left].parent = right;
  tree.edges_.push_back(Edge{0, left, right, true, 0, 0});
  tree.vertices_[left].edges.push_back(0);
  tree.vertices_[right].edges.push_back(0);

  std::deque<VertexId> queue{left, right};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (!tree.vertices_[v].interior) continue;
    const int level = tree.vertices_[v].level;
    const bool parent_in_F = tree.vertices_[v].in_F;
    const int label = tree.vertices_[v].label;
    const int parent_delta = tree.edges_[tree.vertices_[v].edges.front()].delta;
    for (std::int64_t child = 0; child < q_E; ++child) {
      const bool in_F = parent_in_F && child < q_F;
      const VertexId w = add_vertex(1 - label, in_F, level + 1, v);
      Edge e;
      e.id = static_cast<EdgeId>(tree.edges_.size());
      e.inner = v;
      e.outer = w;
      e.in_F = in_F;
      e.gallery_distance = level + 1;
      e.delta = in_F ? 0 : (parent_in_F ? 1 : parent_delta + 1);
      tree.edges_.push_back(e);
      tree.vertices_[v].edges.push_back(e.id);
      tree.vertices_[w].edges.push_back(e.id);
      queue.push_back(w);
    }
  }
  return tree;
}

StructureReport verify_structure(const TreePair& tree) {
  StructureReport report;
  const std::int64_t q_E = tree.q_E();
  const std::int64_t q_F = tree.q_F();
  auto violation = [&](const std::string& text) {
    if (report.violations.size() < 64) report.violations.push_back(text);
  };

  for (const Vertex& v : tree.vertices()) {
    const auto f_edges = std::count_if(v.edges.begin(), v.edges.end(),
                                       [&](EdgeId e) { return tree.edge(e).in_F; });
    const std::string name = "vertex " + std::to_string(v.id);
    if (v.interior) {
      if (static_cast<std::int64_t>(v.edges.size()) != q_E + 1)
        violation(name + ": interior with " + std::to_string(v.edges.size()) + " edges");
      if (v.in_F && f_edges != q_F + 1)
        violation(name + ": interior F-vertex with " + std::to_string(f_edges) + " F-edges");
    } else if (v.edges.size() != 1) {
      violation(name + ": boundary vertex with " + std::to_string(v.edges.size()) + " edges");
    }
    if (!v.in_F && f_edges != 0) violation(name + ": non-F vertex carries F-edges");
  }

  for (const Edge& e : tree.edges()) {
    if (tree.vertex(e.inner).label == tree.vertex(e.outer).label)
      violation("edge " + std::to_string(e.id) + ": labels do not alternate");
    if (e.in_F && !(tree.vertex(e.inner).in_F && tree.vertex(e.outer).in_F))
      violation("edge " + std::to_string(e.id) + ": F-edge with a non-F endpoint");
    if (e.delta >= 1) {
      // The closer panel is the inner endpoint; it holds the F-edges (delta = 1)
      // or exactly the one edge of the previous layer (delta >= 2).
      const Vertex& panel = tree.vertex(e.inner);
      const auto lower = std::count_if(panel.edges.begin(), panel.edges.end(), [&](EdgeId x) {
        return tree.edge(x).delta == e.delta - 1;
      });
      const std::int64_t expected = e.delta == 1 ? q_F + 1 : 1;
      if (lower != expected)
        violation("edge " + std::to_string(e.id) + ": closer panel has " + std::to_string(lower) +
                  " edges in layer " + std::to_string(e.delta - 1));
    }
  }

  // F-subtree connectivity from e0 through F-vertices.
  std::size_t total_f = std::count_if(tree.edges().begin(), tree.edges().end(),
                                      [](const Edge& e) { return e.in_F; });
  std::vector<bool> seen(tree.edges().size(), false);
  std::vector<EdgeId> stack{tree.root_edge()};
  seen[tree.root_edge()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const EdgeId e = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId end : {tree.edge(e).inner, tree.edge(e).outer}) {
      for (EdgeId x : tree.vertex(end).edges) {
        if (!seen[x] && tree.edge(x).in_F) {
          seen[x] = true;
          stack.push_back(x);
        }
      }
    }
  }
  if (reached != total_f)
    violation("F-subtree is disconnected: reached " + std::to_string(reached) + " of " +
              std::to_string(total_f) + " F-edges");

  report.f_sphere_sizes.assign(tree.depth() + 1, 0);
  report.e_sphere_sizes.assign(tree.depth() + 1, 0);
  for (const Edge& e : tree.edges()) {
    ++report.e_sphere_sizes[e.gallery_distance];
    if (e.in_F) ++report.f_sphere_sizes[e.gallery_distance];
  }
  std::uint64_t f_power = 1;
  std::uint64_t e_power = 1;
  for (int k = 1; k <= tree.depth(); ++k) {
    f_power *= static_cast<std::uint64_t>(q_F);
    e_power *= static_cast<std::uint64_t>(q_E);
    if (report.f_sphere_sizes[k] != 2 * f_power)
      violation("|Sigma_F(" + std::to_string(k) + ")| = " +
                std::to_string(report.f_sphere_sizes[k]));
    if (report.e_sphere_sizes[k] != 2 * e_power)
      violation("|Sigma_E(" + std::to_string(k) + ")| = " +
                std::to_string(report.e_sphere_sizes[k]));
  }
  return report;
}

EdgeCocycle constant_cocycle(const TreePair& tree, const Rational& value) {
  return EdgeCocycle(std::vector<Rational>(tree.edges().size(), value));
}

EdgeCocycle iwahori_cocycle(const TreePair& tree) {
  std::vector<Rational> by_distance(tree.depth() + 1);
  by_distance[0] = 1;
  const Rational step = make_rational(-1, tree.q_E());
  for (int k = 1; k <= tree.depth(); ++k) by_distance[k] = by_distance[k - 1] * step;
  EdgeCocycle cocycle(tree.edges().size());
  for (const Edge& e : tree.edges()) cocycle[e.id] = by_distance[e.gallery_distance];
  return cocycle;
}

HarmonicityReport verify_harmonic(const TreePair& tree, const EdgeCocycle& cocycle) {
  if (cocycle.size() != tree.edges().size())
    throw InvalidArgumentError("cocycle does not cover the tree's edges");
  HarmonicityReport report;
  for (const Vertex& v : tree.vertices()) {
    if (!v.interior) {
      ++report.boundary_skipped;
      continue;
    }
    ++report.interior_checked;
    Rational sum = 0;
    for (EdgeId e : v.edges) sum += cocycle[e];
    if (sum != 0) report.violations.push_back(v.id);
  }
  return report;
}

std::vector<Rational> tree_period(const TreePair& tree, const EdgeCocycle& cocycle) {
  if (cocycle.size() != tree.edges().size())
    throw InvalidArgumentError("cocycle does not cover the tree's edges");
  std::vector<Rational> sphere_sums(tree.depth() + 1, Rational(0));
  for (const Edge& e : tree.edges())
    if (e.in_F) sphere_sums[e.gallery_distance] += cocycle[e.id];
  std::vector<Rational> partial;
  Rational running = 0;
  for (const Rational& s : sphere_sums) {
    running += s;
    partial.push_back(running);
  }
  return partial;
}

int distance_to_F(const TreePair& tree, EdgeId edge) {
  // Layered BFS over the chamber graph; edges sharing a vertex are adjacent.
  std::set<EdgeId> seen{edge};
  std::vector<EdgeId> frontier{edge};
  for (int distance = 0; !frontier.empty(); ++distance) {
    std::vector<EdgeId> next;
    for (EdgeId e : frontier) {
      if (tree.edge(e).in_F) return distance;
      for (VertexId end : {tree.edge(e).inner, tree.edge(e).outer})
        for (EdgeId x : tree.vertex(end).edges)
          if (seen.insert(x).second) next.push_back(x);
    }
    frontier = std::move(next);
  }
  throw ModelError("edge " + std::to_string(edge) + " cannot reach the F-subtree");
}

Rational decay_check(const TreePair& tree, const EdgeCocycle& cocycle) {
  if (cocycle.size() != tree.edges().size())
    throw InvalidArgumentError("cocycle does not cover the tree's edges");
  std::vector<Rational> scale(tree.depth() + 1);
  scale[0] = 1;
  for (int k = 1; k <= tree.depth(); ++k) scale[k] = scale[k - 1] * tree.q_E();
  Rational best = 0;
  for (const Edge& e : tree.edges()) best = std::max(best, abs(cocycle[e.id]) * scale[e.gallery_distance]);
  return best;
}

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<Row>& rows, int columns) {
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (Rational& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (int c = 0; c < columns; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

int max_delta(const TreePair& tree) {
  int best = 0;
  for (const Edge& e : tree.edges()) best = std::max(best, e.delta);
  return best;
}

// One row per distinct interior-panel equation: counts of incident edges per delta class.
std::vector<Row> class_equations(const TreePair& tree, int columns) {
  std::set<std::vector<std::int64_t>> distinct;
  for (const Vertex& v : tree.vertices()) {
    if (!v.interior) continue;
    std::vector<std::int64_t> counts(columns, 0);
    for (EdgeId e : v.edges) ++counts[tree.edge(e).delta];
    distinct.insert(std::move(counts));
  }
  std::vector<Row> rows;
  for (const auto& counts : distinct) {
    Row row;
    for (std::int64_t c : counts) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int invariant_space_dimension(const TreePair& tree) {
  const int columns = max_delta(tree) + 1;
  std::vector<Row> rows = class_equations(tree, columns);
  return columns - static_cast<int>(row_reduce(rows, columns).size());
}

InvariantSolution invariant_solver(const TreePair& tree) {
  if (tree.depth() < 2) throw InvalidArgumentError("invariant_solver needs depth >= 2");
  const int columns = max_delta(tree) + 1;
  std::vector<Row> rows = class_equations(tree, columns);
  const std::vector<int> pivots = row_reduce(rows, columns);

  InvariantSolution solution;
  solution.dimension = columns - static_cast<int>(pivots.size());
  if (solution.dimension != 1)
    throw ModelError("space of class-constant harmonic cocycles has dimension " +
                     std::to_string(solution.dimension) + ", expected 1");

  int free_column = 0;
  while (std::find(pivots.begin(), pivots.end(), free_column) != pivots.end()) ++free_column;
  std::vector<Rational> basis(columns, Rational(0));
  basis[free_column] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis[pivots[r]] = -rows[r][free_column];
  if (basis[0] == 0) throw ModelError("invariant cocycle vanishes on X_F");
  const Rational c0 = basis[0];
  for (Rational& c : basis) c /= c0;
  solution.profile = basis;

  EdgeCocycle cocycle(tree.edges().size());
  for (const Edge& e : tree.edges()) cocycle[e.id] = solution.profile[e.delta];
  solution.harmonicity = verify_harmonic(tree, cocycle);
  if (!solution.harmonicity.harmonic())
    throw ModelError("class-constant solution is not harmonic at every interior vertex");
  return solution;
}

std::vector<EdgeId> distance_layer(const TreePair& tree, int delta) {
  std::vector<EdgeId> layer;
  for (const Edge& e : tree.edges())
    if (e.delta == delta) layer.push_back(e.id);
  return layer;
}

LayerValues reconstruct_layer(const TreePair& tree, const LayerValues& layer) {
  const std::vector<EdgeId> expected = distance_layer(tree, layer.delta);
  if (layer.values.size() != expected.size())
    throw InvalidArgumentError("layer values do not cover Ch(X_F, " + std::to_string(layer.delta) +
                               ")");
  for (EdgeId e : expected)
    if (layer.values.count(e) == 0)
      throw InvalidArgumentError("edge " + std::to_string(e) + " of the layer has no value");
  if (!layer.values.empty()) {
    const Rational& first = layer.values.begin()->second;
    for (const auto& [edge, value] : layer.values)
      if (value != first)
        throw InvalidArgumentError("layer values are not constant on Ch(X_F, " +
                                   std::to_string(layer.delta) + ")");
  }

  LayerValues out;
  out.delta = layer.delta + 1;
  for (EdgeId d : distance_layer(tree, out.delta)) {
    const Vertex& panel = tree.vertex(tree.edge(d).inner);
    Rational lower_sum = 0;
    std::int64_t upper_count = 0;
    for (EdgeId x : panel.edges) {
      const int delta = tree.edge(x).delta;
      if (delta == layer.delta) {
        lower_sum += layer.values.at(x);
      } else if (delta == out.delta) {
        ++upper_count;
      } else {
        throw ModelError("panel " + std::to_string(panel.id) + " meets a third distance class");
      }
    }
    out.values.emplace(d, -lower_sum / Rational(upper_count));
  }
  return out;
}

}  // namespace stdist::tree
