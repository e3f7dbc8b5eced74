#include "stdist/coxeter.hpp"

#include <unordered_set>
#include <utility>

#include "stdist/errors.hpp"

namespace stdist::coxeter {

AffineMap::AffineMap(int dim, std::vector<std::int64_t> linear,
                     std::vector<std::int64_t> translation)
    : dim_(dim), data_(std::move(linear)) {
  if (static_cast<int>(data_.size()) != dim * dim || static_cast<int>(translation.size()) != dim)
    throw InvalidArgumentError("AffineMap: inconsistent dimensions");
  data_.insert(data_.end(), translation.begin(), translation.end());
}

AffineMap AffineMap::identity(int dim) {
  std::vector<std::int64_t> linear(dim * dim, 0);
  for (int i = 0; i < dim; ++i) linear[i * dim + i] = 1;
  return AffineMap(dim, std::move(linear), std::vector<std::int64_t>(dim, 0));
}

AffineMap AffineMap::compose(const AffineMap& rhs) const {
  const int n = dim_;
  AffineMap out;
  out.dim_ = n;
  out.data_.assign(n * n + n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t lhs = linear(i, k);
      if (lhs == 0) continue;
      for (int j = 0; j < n; ++j) out.data_[i * n + j] += lhs * rhs.linear(k, j);
      out.data_[n * n + i] += lhs * rhs.translation(k);
    }
    out.data_[n * n + i] += translation(i);
  }
  return out;
}

AffineMap AffineMap::power(int exponent) const {
  AffineMap result = identity(dim_);
  for (int i = 0; i < exponent; ++i) result = compose(result);
  return result;
}

std::vector<std::int64_t> AffineMap::apply(const std::vector<std::int64_t>& point) const {
  std::vector<std::int64_t> out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    std::int64_t value = translation(i);
    for (int j = 0; j < dim_; ++j) value += linear(i, j) * point[j];
    out[i] = value;
  }
  return out;
}

bool AffineMap::is_identity() const { return *this == identity(dim_); }

std::size_t AffineMapHash::operator()(const AffineMap& map) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t v : map.raw()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int affine_order(const AffineMap& map, int search_limit) {
  AffineMap acc = map;
  for (int k = 1; k <= search_limit; ++k) {
    if (acc.is_identity()) return k;
    acc = map.compose(acc);
  }
  return kInfiniteOrder;
}

namespace {

int order_from_cartan_product(int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteOrder;
  }
}

}  // namespace

CoxeterSystem build_affine_system(Family family, int rank) {
  const CoxeterType type{family, rank};
  validate_type(type);

  CoxeterSystem system;
  system.type_ = type;
  system.roots_ = root_data(type);
  const IntMatrix& a = system.roots_.cartan;
  const std::vector<int>& theta = system.roots_.highest_root;
  const std::vector<int>& theta_co = system.roots_.highest_root_coroot;
  const int n = rank;

  // Affine Cartan matrix with alpha_0 = delta - theta.
  IntMatrix affine(n + 1, std::vector<int>(n + 1, 0));
  affine[0][0] = 2;
  for (int j = 0; j < n; ++j) {
    int co_theta_on_j = 0;  // <theta^vee, alpha_j>
    int j_on_theta = 0;     // <alpha_j^vee, theta>
    for (int k = 0; k < n; ++k) {
      co_theta_on_j += theta_co[k] * a[k][j];
      j_on_theta += a[j][k] * theta[k];
    }
    affine[0][j + 1] = -co_theta_on_j;
    affine[j + 1][0] = -j_on_theta;
    for (int k = 0; k < n; ++k) affine[j + 1][k + 1] = a[j][k];
  }
  system.affine_cartan_ = affine;

  system.coxeter_matrix_.assign(n + 1, std::vector<int>(n + 1, 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) system.coxeter_matrix_[i][j] = order_from_cartan_product(affine[i][j] * affine[j][i]);

  // s_0(x) = x - (theta(x) - 1) theta^vee, where theta(x) = sum_k x_k <alpha_k^vee, theta>.
  {
    std::vector<std::int64_t> linear(n * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        int theta_on_k = 0;
        for (int j = 0; j < n; ++j) theta_on_k += a[k][j] * theta[j];
        linear[i * n + k] = (i == k ? 1 : 0) - static_cast<std::int64_t>(theta_co[i]) * theta_on_k;
      }
    }
    std::vector<std::int64_t> translation(theta_co.begin(), theta_co.end());
    system.generators_.emplace_back(n, std::move(linear), std::move(translation));
  }
  // s_i(x) = x - alpha_i(x) alpha_i^vee, where alpha_i(x) = sum_k x_k <alpha_k^vee, alpha_i>.
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> linear(n * n, 0);
    for (int r = 0; r < n; ++r) linear[r * n + r] = 1;
    for (int k = 0; k < n; ++k) linear[i * n + k] -= a[k][i];
    system.generators_.emplace_back(n, std::move(linear), std::vector<std::int64_t>(n, 0));
  }

  const auto& gens = system.generators_;
  for (int i = 0; i <= n; ++i) {
    if (!gens[i].compose(gens[i]).is_identity())
      throw ModelError("generator s_" + std::to_string(i) + " of " + to_string(type) +
                       " is not an involution");
    for (int j = i + 1; j <= n; ++j) {
      const int expected = system.coxeter_matrix_[i][j];
      const int actual = affine_order(gens[i].compose(gens[j]));
      if (actual != expected)
        throw ModelError("s_" + std::to_string(i) + " s_" + std::to_string(j) + " of " +
                         to_string(type) + " has order " + std::to_string(actual) +
                         ", expected " + std::to_string(expected));
    }
  }

  // Irreducibility: the affine diagram must be connected.
  std::vector<bool> reached(n + 1, false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w <= n; ++w) {
      if (!reached[w] && system.coxeter_matrix_[v][w] != 2 && v != w) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (bool r : reached)
    if (!r) throw ModelError("affine diagram of " + to_string(type) + " is disconnected");

  return system;
}

GrowthSeries growth_coefficients(const CoxeterSystem& system, int max_length,
                                 std::size_t element_budget) {
  if (max_length < 0) throw InvalidArgumentError("growth_coefficients: K must be >= 0");

  GrowthSeries series;
  series.type = system.type();
  series.source = SeriesSource::Enumerated;
  series.coefficients.push_back(1);

  // Cayley graph of a Coxeter group is bipartite by length parity, so every
  // neighbour of layer k lies in layer k-1 or k+1.
  using Layer = std::unordered_set<AffineMap, AffineMapHash>;
  Layer previous;
  Layer current{AffineMap::identity(system.rank())};
  std::size_t total = 1;

  for (int k = 1; k <= max_length; ++k) {
    Layer next;
    for (const AffineMap& w : current) {
      for (const AffineMap& s : system.generators()) {
        AffineMap candidate = s.compose(w);
        if (previous.count(candidate) != 0 || next.count(candidate) != 0) continue;
        if (total + next.size() + 1 > element_budget) {
          throw GrowthBudgetError("growth enumeration of " + to_string(system.type()) +
                                      " exceeded the budget of " + std::to_string(element_budget) +
                                      " elements at length " + std::to_string(k),
                                  series.coefficients);
        }
        next.insert(std::move(candidate));
      }
    }
    total += next.size();
    series.coefficients.push_back(next.size());
    previous = std::move(current);
    current = std::move(next);
  }
  return series;
}

}  // namespace stdist::coxeter
