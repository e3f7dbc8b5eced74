#pragma once

// Irreducible affine Coxeter systems realized as groups of integral affine
// transformations, enumerated by length.
//
// Node 0 is always the affine node; nodes 1..d follow Bourbaki numbering.
// Points of the d-dimensional space are written in the basis of simple
// coroots, so every generator has integer linear and translation parts.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stdist::coxeter {

enum class Family { A, B, C, D, E, F, G };

struct CoxeterType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

char family_letter(Family family);
Family parse_family(const std::string& text);

// "A2", "E8", ... ; throws InvalidArgumentError on an invalid (family, rank) pair.
std::string to_string(CoxeterType type);
void validate_type(CoxeterType type);

using IntMatrix = std::vector<std::vector<int>>;

// m_ij value standing for an infinite order.
inline constexpr int kInfiniteOrder = 0;

// x -> linear * x + translation, exact integers, row-major linear part.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(int dim, std::vector<std::int64_t> linear, std::vector<std::int64_t> translation);

  static AffineMap identity(int dim);

  int dim() const { return dim_; }
  std::int64_t linear(int row, int col) const { return data_[row * dim_ + col]; }
  std::int64_t translation(int row) const { return data_[dim_ * dim_ + row]; }

  // (*this) after `rhs`: x -> this(rhs(x)).
  AffineMap compose(const AffineMap& rhs) const;
  AffineMap power(int exponent) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& point) const;
  bool is_identity() const;

  const std::vector<std::int64_t>& raw() const { return data_; }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  int dim_ = 0;
  std::vector<std::int64_t> data_;  // linear part (dim*dim) then translation (dim)
};

struct AffineMapHash {
  std::size_t operator()(const AffineMap& map) const noexcept;
};

// Root data of the finite root system, in the simple-root / simple-coroot bases.
struct RootData {
  IntMatrix cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>, 0-based over nodes 1..d
  std::vector<std::vector<int>> positive_roots;
  std::vector<std::vector<int>> positive_coroots;  // coroot of positive_roots[k]
  std::vector<int> highest_root;                   // theta
  std::vector<int> highest_root_coroot;            // theta^vee
};

IntMatrix finite_cartan_matrix(CoxeterType type);
RootData root_data(CoxeterType type);

class CoxeterSystem {
 public:
  CoxeterType type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_generators() const { return type_.rank + 1; }

  // (d+1)x(d+1) Coxeter matrix, m_ii = 1, kInfiniteOrder for infinity.
  const IntMatrix& coxeter_matrix() const { return coxeter_matrix_; }
  // (d+1)x(d+1) affine Cartan matrix.
  const IntMatrix& affine_cartan() const { return affine_cartan_; }
  const std::vector<AffineMap>& generators() const { return generators_; }
  const RootData& roots() const { return roots_; }

 private:
  friend CoxeterSystem build_affine_system(Family family, int rank);

  CoxeterType type_;
  IntMatrix coxeter_matrix_;
  IntMatrix affine_cartan_;
  std::vector<AffineMap> generators_;
  RootData roots_;
};

// Builds the affine system and verifies generator involutions and exact orders.
CoxeterSystem build_affine_system(Family family, int rank);
inline CoxeterSystem build_affine_system(CoxeterType type) {
  return build_affine_system(type.family, type.rank);
}

// Order of an affine map, or kInfiniteOrder if no power up to `search_limit` is the identity.
int affine_order(const AffineMap& map, int search_limit = 12);

enum class SeriesSource { Enumerated, ClosedForm };

struct GrowthSeries {
  CoxeterType type;
  std::vector<std::uint64_t> coefficients;  // a_0..a_K
  SeriesSource source = SeriesSource::Enumerated;

  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
};

inline constexpr std::size_t kDefaultElementBudget = 2'000'000;

// a_k = #{w : l(w) = k} for k <= K by breadth-first search over the Cayley graph.
// Throws GrowthBudgetError (carrying the completed coefficients) when more than
// `element_budget` elements would be enumerated.
GrowthSeries growth_coefficients(const CoxeterSystem& system, int max_length,
                                 std::size_t element_budget = kDefaultElementBudget);

using IntPolynomial = std::vector<std::int64_t>;  // coefficient of t^i at index i

// Poincare polynomial of the finite Weyl group on nodes 1..d.
IntPolynomial poincare_finite(Family family, int rank);

// Exponents m_1 <= ... <= m_d such that poincare_finite = prod (1 + t + ... + t^{m_i}).
std::vector<int> exponents(Family family, int rank);

// Exponents extracted from a polynomial; throws ModelError if it does not factor.
std::vector<int> factor_exponents(const IntPolynomial& poincare, int rank);

// Fundamental-group element acting on the affine diagram: image[i] is where node i goes.
struct OmegaElement {
  std::vector<int> image;

  OmegaElement compose(const OmegaElement& rhs) const;  // this after rhs
  bool is_identity() const;

  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
};

// Tabulated Omega; every element is checked to preserve the Coxeter matrix.
std::vector<OmegaElement> omega_group(Family family, int rank);

// Signature of the permutation of the d+1 vertex types.
int epsilon_of_omega(const OmegaElement& omega);

bool preserves_coxeter_matrix(const OmegaElement& omega, const IntMatrix& coxeter_matrix);

}  // namespace stdist::coxeter
