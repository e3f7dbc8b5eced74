#pragma once

// Residue fields k_F = F_q inside k_E = F_{q^2}, and brute-force orbit checks
// for the moves x -> a^2 x + b and x -> 1 / (a^2 x c + b) on k_E \ k_F.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stdist::residue {

// Elements of k_F are 0..q-1 (coefficients base p, c_0 least significant);
// elements of k_E are u + q v standing for u + v X, X a root of modulus_ext.
// k_F embeds as the elements with v = 0.
using Element = int;

class FiniteFieldPair {
 public:
  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }
  int extension_size() const { return q_ * q_; }
  // c_0..c_n with c_n = 1; least monic irreducible by the integer sum c_i p^i.
  const std::vector<int>& modulus_base() const { return modulus_base_; }
  // c_0, c_1, 1 over k_F; least monic irreducible by c_0 + q c_1.
  const std::vector<int>& modulus_ext() const { return modulus_ext_; }

  // k_F arithmetic.
  Element base_add(Element a, Element b) const { return base_add_[a * q_ + b]; }
  Element base_mul(Element a, Element b) const { return base_mul_[a * q_ + b]; }
  Element base_neg(Element a) const;
  Element base_inv(Element a) const;  // a != 0
  bool base_is_square(Element a) const;  // nonzero squares only

  // k_E arithmetic.
  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;  // x != 0
  Element pow(Element x, std::int64_t e) const;
  Element frobenius(Element x) const { return pow(x, q_); }

  Element embed(Element a) const { return a; }
  bool in_base(Element x) const { return x < q_; }
  int characteristic() const { return p_; }

 private:
  friend FiniteFieldPair build_fields(int p, int n);

  int p_ = 2;
  int n_ = 1;
  int q_ = 2;
  std::vector<int> modulus_base_;
  std::vector<int> modulus_ext_;
  std::vector<Element> base_add_;
  std::vector<Element> base_mul_;
  std::vector<Element> base_inv_;
  std::vector<Element> ext_mul_;
  std::vector<Element> ext_inv_;
};

// p prime, 1 <= n <= 4, q = p^n <= 16.
FiniteFieldPair build_fields(int p, int n);

// A move family as a partial map on k_E: image[x] == -1 outside the domain.
struct MoveSet {
  std::string name;
  std::vector<std::vector<Element>> maps;
};

struct OrbitReport {
  std::string moves;
  int orbit_count = 0;
  std::vector<int> orbit_sizes;                 // sorted by representative
  std::vector<Element> representatives;         // least element of each orbit
  int elements = 0;                             // q^2 - q
};

// {x -> a^2 x + b : a in k_F^*, b in k_F} restricted to k_E \ k_F.
MoveSet affine_square_moves(const FiniteFieldPair& fields);

// {x -> 1 / (a^2 x c + b)} with c = x0^-2, restricted to inputs with a nonzero
// denominator whose image lies outside k_F.
MoveSet inversion_moves(const FiniteFieldPair& fields, Element x0);

// Orbits of the group generated by the given moves on k_E \ k_F.
OrbitReport orbits(const FiniteFieldPair& fields, const std::vector<MoveSet>& move_sets);

OrbitReport affine_square_orbits(const FiniteFieldPair& fields);

// Every x0 in k_E \ k_F with x0^2 in k_F, ascending. Empty in characteristic 2,
// where squaring is a bijection of k_E preserving k_F.
std::vector<Element> square_roots_of_base(const FiniteFieldPair& fields);

// Least x0 in k_E \ k_F with x0^2 in k_F; throws ModelError if none exists in odd characteristic.
Element select_x0(const FiniteFieldPair& fields);

// c = x0^-2, an element of k_F.
Element twist_constant(const FiniteFieldPair& fields, Element x0);

// In characteristic 2 returns affine_square_orbits unchanged; otherwise adds the
// inversion moves for x0 (default: select_x0) and recomputes the closure.
OrbitReport inversion_closure_orbits(const FiniteFieldPair& fields,
                                     std::optional<Element> x0 = std::nullopt);

struct FractionIdentityReport {
  int checked = 0;
  int skipped = 0;   // (a, b) with a vanishing denominator
  int failures = 0;
  bool holds() const { return failures == 0 && checked > 0; }
};

// For both square roots x of 1/c, checks
//   1/(a^2 x c + b) = (a^2 x c - b)/(a^4 c - b^2) = (x - b/(a^2 c))/(a^2 - b^2/(a^2 c))
// over all (a, b), a in k_F^*, b in k_F, or over the first `samples` pairs when
// samples > 0. Requires odd characteristic.
FractionIdentityReport verify_fraction_identity(const FiniteFieldPair& fields, Element c,
                                                int samples = 0);

struct NonsquareWitness {
  Element a = 0;
  Element b = 0;
  Element value = 0;  // a^2 - b^2/(a^2 c), a non-square of k_F^*
};

// Lexicographically first (a, b) with a^2 - b^2/(a^2 c) a non-square in k_F^*.
// Requires odd characteristic and 1/c a non-square; throws ModelError when no
// witness exists.
NonsquareWitness exists_nonsquare_value(const FiniteFieldPair& fields, Element c);

struct MoveAudit {
  bool injective = true;
  bool lands_outside_base = true;
  int applications = 0;
};

// Exhaustive injectivity and image checks for every map of a move set.
MoveAudit audit_moves(const FiniteFieldPair& fields, const MoveSet& moves);

std::string element_to_string(const FiniteFieldPair& fields, Element x);

}  // namespace stdist::residue
