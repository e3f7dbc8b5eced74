// Cartan data, finite Weyl group Poincare polynomials, exponents and Omega tables.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "stdist/coxeter.hpp"
#include "stdist/errors.hpp"

namespace stdist::coxeter {

char family_letter(Family family) {
  static constexpr char kLetters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return kLetters[static_cast<int>(family)];
}

Family parse_family(const std::string& text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw InvalidArgumentError("unknown Coxeter family '" + text + "' (expected one of A B C D E F G)");
}

void validate_type(CoxeterType type) {
  const int d = type.rank;
  const std::string name(1, family_letter(type.family));
  auto fail = [&](const std::string& constraint) {
    throw InvalidArgumentError("invalid type " + name + std::to_string(d) + ": " + constraint);
  };
  switch (type.family) {
    case Family::A: if (d < 1) fail("family A requires rank >= 1"); break;
    case Family::B: if (d < 3) fail("family B requires rank >= 3"); break;
    case Family::C: if (d < 2) fail("family C requires rank >= 2"); break;
    case Family::D: if (d < 4) fail("family D requires rank >= 4"); break;
    case Family::E: if (d < 6 || d > 8) fail("family E requires rank in {6, 7, 8}"); break;
    case Family::F: if (d != 4) fail("family F requires rank 4"); break;
    case Family::G: if (d != 2) fail("family G requires rank 2"); break;
  }
}

std::string to_string(CoxeterType type) {
  validate_type(type);
  return std::string(1, family_letter(type.family)) + std::to_string(type.rank);
}

IntMatrix finite_cartan_matrix(CoxeterType type) {
  validate_type(type);
  const int n = type.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  // Bourbaki node k is index k-1. link(i, j, x, y) sets a[i][j] = x, a[j][i] = y.
  auto link = [&](int i, int j, int x = -1, int y = -1) {
    a[i - 1][j - 1] = x;
    a[j - 1][i - 1] = y;
  };
  switch (type.family) {
    case Family::A:
      for (int k = 1; k < n; ++k) link(k, k + 1);
      break;
    case Family::B:
      for (int k = 1; k < n - 1; ++k) link(k, k + 1);
      link(n - 1, n, -1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int k = 1; k < n - 1; ++k) link(k, k + 1);
      link(n - 1, n, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int k = 1; k < n - 1; ++k) link(k, k + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int k = 3; k < n; ++k) link(k, k + 1);
      break;
    case Family::F:
      link(1, 2);
      link(2, 3, -1, -2);  // alpha_3 short
      link(3, 4);
      break;
    case Family::G:
      link(1, 2, -3, -1);  // alpha_1 short
      break;
  }
  return a;
}

RootData root_data(CoxeterType type) {
  RootData data;
  data.cartan = finite_cartan_matrix(type);
  const auto& a = data.cartan;
  const int n = type.rank;

  // Close the simple roots (paired with their coroots) under the simple reflections.
  std::map<std::vector<int>, std::vector<int>> coroot_of;
  std::vector<std::vector<int>> stack;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    coroot_of[e] = e;
    stack.push_back(e);
  }
  while (!stack.empty()) {
    const std::vector<int> root = stack.back();
    stack.pop_back();
    const std::vector<int> coroot = coroot_of.at(root);
    for (int j = 0; j < n; ++j) {
      int pairing = 0;     // <alpha_j^vee, root>
      int co_pairing = 0;  // <coroot, alpha_j>
      for (int k = 0; k < n; ++k) {
        pairing += root[k] * a[j][k];
        co_pairing += coroot[k] * a[k][j];
      }
      std::vector<int> image = root;
      std::vector<int> co_image = coroot;
      image[j] -= pairing;
      co_image[j] -= co_pairing;
      if (coroot_of.emplace(image, co_image).second) stack.push_back(image);
    }
  }

  int best_height = 0;
  for (const auto& [root, coroot] : coroot_of) {
    if (std::all_of(root.begin(), root.end(), [](int c) { return c >= 0; })) {
      data.positive_roots.push_back(root);
      data.positive_coroots.push_back(coroot);
      const int height = std::accumulate(root.begin(), root.end(), 0);
      if (height > best_height) {
        best_height = height;
        data.highest_root = root;
        data.highest_root_coroot = coroot;
      }
    }
  }
  return data;
}

namespace {

IntPolynomial multiply(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  IntPolynomial out(lhs.size() + rhs.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  return out;
}

// Length generating function of minimal coset representatives W_S / W_{S \ {node}},
// read off as BFS levels of the W_S-orbit of the fundamental weight of `node`.
IntPolynomial orbit_series(const IntMatrix& cartan, const std::vector<int>& nodes, int node) {
  const int n = static_cast<int>(cartan.size());
  std::vector<int> start(n, 0);
  start[node] = 1;
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> level{start};
  IntPolynomial series;
  while (!level.empty()) {
    series.push_back(static_cast<std::int64_t>(level.size()));
    std::vector<std::vector<int>> next;
    for (const auto& weight : level) {
      for (int j : nodes) {
        if (weight[j] <= 0) continue;  // only length-increasing steps
        std::vector<int> image = weight;
        const int c = weight[j];
        for (int k : nodes) image[k] -= c * cartan[k][j];
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    level = std::move(next);
  }
  return series;
}

IntPolynomial parabolic_poincare(const IntMatrix& cartan, std::vector<int> nodes) {
  if (nodes.empty()) return {1};
  const int node = nodes.back();
  const IntPolynomial cosets = orbit_series(cartan, nodes, node);
  nodes.pop_back();
  return multiply(parabolic_poincare(cartan, nodes), cosets);
}

}  // namespace

IntPolynomial poincare_finite(Family family, int rank) {
  const IntMatrix cartan = finite_cartan_matrix({family, rank});
  std::vector<int> nodes(rank);
  std::iota(nodes.begin(), nodes.end(), 0);
  return parabolic_poincare(cartan, nodes);
}

std::vector<int> factor_exponents(const IntPolynomial& poincare, int rank) {
  // P(t)(1-t)^d = prod (1 - t^{m_i+1}); peel factors off by lowest nonconstant term.
  IntPolynomial product = poincare;
  for (int i = 0; i < rank; ++i) product = multiply(product, {1, -1});
  while (!product.empty() && product.back() == 0) product.pop_back();

  std::vector<int> result;
  for (int factor = 0; factor < rank; ++factor) {
    std::size_t degree = 1;
    while (degree < product.size() && product[degree] == 0) ++degree;
    if (degree >= product.size() || product[degree] >= 0)
      throw ModelError("Poincare polynomial does not factor into q-integers");
    // Divide by (1 - t^degree): out[k] = product[k] + out[k - degree].
    IntPolynomial quotient(product.size(), 0);
    for (std::size_t k = 0; k < product.size(); ++k)
      quotient[k] = product[k] + (k >= degree ? quotient[k - degree] : 0);
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
    product = std::move(quotient);
    result.push_back(static_cast<int>(degree) - 1);
  }
  if (product != IntPolynomial{1})
    throw ModelError("Poincare polynomial has a residual factor after extracting exponents");
  return result;
}

std::vector<int> exponents(Family family, int rank) {
  return factor_exponents(poincare_finite(family, rank), rank);
}

OmegaElement OmegaElement::compose(const OmegaElement& rhs) const {
  OmegaElement out;
  out.image.resize(rhs.image.size());
  for (std::size_t i = 0; i < rhs.image.size(); ++i) out.image[i] = image[rhs.image[i]];
  return out;
}

bool OmegaElement::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

bool preserves_coxeter_matrix(const OmegaElement& omega, const IntMatrix& coxeter_matrix) {
  const std::size_t n = coxeter_matrix.size();
  if (omega.image.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coxeter_matrix[omega.image[i]][omega.image[j]] != coxeter_matrix[i][j]) return false;
  return true;
}

int epsilon_of_omega(const OmegaElement& omega) {
  // Sign from the cycle decomposition: each cycle of length L contributes (-1)^(L-1).
  std::vector<bool> visited(omega.image.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < omega.image.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = omega.image[i]) {
      visited[i] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

namespace {

std::vector<OmegaElement> generate_group(const std::vector<OmegaElement>& generators, int size) {
  std::vector<int> id(size);
  std::iota(id.begin(), id.end(), 0);
  std::vector<OmegaElement> group{OmegaElement{id}};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : generators) {
      OmegaElement next = g.compose(group[i]);
      if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(next);
    }
  }
  return group;
}

}  // namespace

std::vector<OmegaElement> omega_group(Family family, int rank) {
  validate_type({family, rank});
  const int d = rank;
  const int size = d + 1;
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<OmegaElement> generators;

  switch (family) {
    case Family::A:
      for (int i = 0; i < size; ++i) perm[i] = (i + 1) % size;
      generators.push_back({perm});
      break;
    case Family::B:
      std::swap(perm[0], perm[1]);
      generators.push_back({perm});
      break;
    case Family::C:
      for (int i = 0; i < size; ++i) perm[i] = d - i;
      generators.push_back({perm});
      break;
    case Family::D:
      if (d % 2 == 0) {
        std::vector<int> flip = perm;
        std::swap(flip[0], flip[1]);
        std::swap(flip[d - 1], flip[d]);
        std::vector<int> reverse(size);
        for (int i = 0; i < size; ++i) reverse[i] = d - i;
        generators.push_back({flip});
        generators.push_back({reverse});
      } else {
        // 0 -> d -> 1 -> d-1 -> 0, middle nodes reversed.
        for (int i = 2; i <= d - 2; ++i) perm[i] = d - i;
        perm[0] = d;
        perm[d] = 1;
        perm[1] = d - 1;
        perm[d - 1] = 0;
        generators.push_back({perm});
      }
      break;
    case Family::E:
      if (d == 6) {
        perm = {1, 6, 3, 5, 4, 2, 0};
        generators.push_back({perm});
      } else if (d == 7) {
        perm = {7, 6, 2, 5, 4, 3, 1, 0};
        generators.push_back({perm});
      }
      break;
    case Family::F:
    case Family::G:
      break;
  }

  std::vector<OmegaElement> group = generate_group(generators, size);
  std::sort(group.begin(), group.end(),
            [](const OmegaElement& x, const OmegaElement& y) { return x.image < y.image; });
  const CoxeterSystem system = build_affine_system(family, rank);
  for (const auto& omega : group) {
    if (!preserves_coxeter_matrix(omega, system.coxeter_matrix()))
      throw ModelError("tabulated Omega element is not a diagram automorphism of " +
                       to_string({family, rank}));
  }
  return group;
}

}  // namespace stdist::coxeter
