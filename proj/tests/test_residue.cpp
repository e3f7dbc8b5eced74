#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "stdist/errors.hpp"
#include "stdist/residue.hpp"

using namespace stdist;
using namespace stdist::residue;

namespace {

std::vector<int> sorted_sizes(const OrbitReport& r) {
  std::vector<int> sizes = r.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

int total(const OrbitReport& r) {
  int sum = 0;
  for (int s : r.orbit_sizes) sum += s;
  return sum;
}

const std::vector<std::pair<int, int>> kAllFields{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                                   {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};

}  // namespace

TEST(BuildFields, Examples) {
  const FiniteFieldPair f2 = build_fields(2, 1);
  EXPECT_EQ(f2.q(), 2);
  EXPECT_EQ(f2.extension_size(), 4);
  const FiniteFieldPair f3 = build_fields(3, 1);
  EXPECT_EQ(f3.extension_size(), 9);
  const FiniteFieldPair f4 = build_fields(2, 2);
  EXPECT_EQ(f4.q(), 4);
  EXPECT_EQ(f4.extension_size(), 16);
}

TEST(BuildFields, BaseIsTheFrobeniusFixedSubfield) {
  for (const auto& [p, n] : kAllFields) {
    const FiniteFieldPair f = build_fields(p, n);
    int fixed = 0;
    for (Element x = 0; x < f.extension_size(); ++x) {
      const bool is_fixed = f.frobenius(x) == x;
      EXPECT_EQ(is_fixed, f.in_base(x)) << p << "^" << n << " x=" << x;
      fixed += is_fixed ? 1 : 0;
    }
    EXPECT_EQ(fixed, f.q());
  }
}

TEST(BuildFields, FieldAxioms) {
  for (const auto& [p, n] : kAllFields) {
    const FiniteFieldPair f = build_fields(p, n);
    const int size = f.extension_size();
    for (Element x = 1; x < size; ++x) {
      EXPECT_EQ(f.mul(x, f.inv(x)), 1);
      EXPECT_EQ(f.pow(x, size - 1), 1);
    }
    for (Element x = 0; x < size; x += 3)
      for (Element y = 0; y < size; y += 5) {
        EXPECT_EQ(f.mul(x, y), f.mul(y, x));
        EXPECT_EQ(f.add(x, f.neg(x)), 0);
        for (Element z = 0; z < size; z += 7)
          EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      }
    for (Element a = 0; a < f.q(); ++a)
      for (Element b = 0; b < f.q(); ++b) {
        EXPECT_EQ(f.add(f.embed(a), f.embed(b)), f.base_add(a, b));
        EXPECT_EQ(f.mul(f.embed(a), f.embed(b)), f.base_mul(a, b));
      }
  }
}

TEST(BuildFields, ModuliAreLeastIrreducible) {
  EXPECT_EQ(build_fields(2, 2).modulus_base(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(build_fields(2, 3).modulus_base(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(build_fields(3, 1).modulus_ext(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(build_fields(2, 1).modulus_ext(), (std::vector<int>{1, 1, 1}));
}

TEST(BuildFields, RejectsInvalidInput) {
  EXPECT_THROW(build_fields(4, 1), InvalidArgumentError);
  EXPECT_THROW(build_fields(2, 5), InvalidArgumentError);
  EXPECT_THROW(build_fields(5, 2), InvalidArgumentError);
  EXPECT_THROW(build_fields(3, 0), InvalidArgumentError);
}

TEST(AffineSquareOrbits, Examples) {
  const OrbitReport r2 = affine_square_orbits(build_fields(2, 1));
  EXPECT_EQ(r2.orbit_count, 1);
  EXPECT_EQ(sorted_sizes(r2), (std::vector<int>{2}));
  const OrbitReport r4 = affine_square_orbits(build_fields(2, 2));
  EXPECT_EQ(sorted_sizes(r4), (std::vector<int>{12}));
  const OrbitReport r3 = affine_square_orbits(build_fields(3, 1));
  EXPECT_EQ(sorted_sizes(r3), (std::vector<int>{3, 3}));
}

TEST(AffineSquareOrbits, CharacteristicTwoIsTransitive) {
  for (int n = 1; n <= 4; ++n) {
    const FiniteFieldPair f = build_fields(2, n);
    const OrbitReport r = affine_square_orbits(f);
    EXPECT_EQ(r.orbit_count, 1) << "q=" << f.q();
    EXPECT_EQ(r.elements, f.q() * f.q() - f.q());
    EXPECT_EQ(total(r), r.elements);
  }
}

TEST(AffineSquareOrbits, OddCharacteristicHasTwoEqualOrbits) {
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    const FiniteFieldPair f = build_fields(p, n);
    const OrbitReport r = affine_square_orbits(f);
    const int half = (f.q() * f.q() - f.q()) / 2;
    EXPECT_EQ(sorted_sizes(r), (std::vector<int>{half, half})) << "q=" << f.q();
  }
}

TEST(AffineSquareOrbits, MatchIndependentPrimeFieldModel) {
  for (int p : {3, 5, 7, 11}) {
    EXPECT_EQ(sorted_sizes(affine_square_orbits(build_fields(p, 1))), oracle::prime_orbits(p, false));
    EXPECT_EQ(sorted_sizes(inversion_closure_orbits(build_fields(p, 1))), oracle::prime_orbits(p, true));
  }
}

TEST(InversionClosure, Examples) {
  EXPECT_EQ(sorted_sizes(inversion_closure_orbits(build_fields(3, 1))), (std::vector<int>{6}));
  EXPECT_EQ(sorted_sizes(inversion_closure_orbits(build_fields(5, 1))), (std::vector<int>{20}));
  EXPECT_EQ(sorted_sizes(inversion_closure_orbits(build_fields(3, 2))), (std::vector<int>{72}));
}

TEST(InversionClosure, IndependentOfTheSquareRootChosen) {
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const FiniteFieldPair f = build_fields(p, n);
    const auto roots = square_roots_of_base(f);
    ASSERT_FALSE(roots.empty());
    for (Element x0 : roots) {
      EXPECT_TRUE(f.in_base(f.mul(x0, x0)));
      EXPECT_FALSE(f.in_base(x0));
      EXPECT_EQ(inversion_closure_orbits(f, x0).orbit_count, 1);
    }
    EXPECT_EQ(select_x0(f), roots.front());
  }
  EXPECT_TRUE(square_roots_of_base(build_fields(2, 2)).empty());
}

TEST(Moves, AreInjectiveAndStayOutsideBase) {
  for (const auto& [p, n] : kAllFields) {
    const FiniteFieldPair f = build_fields(p, n);
    const MoveAudit affine = audit_moves(f, affine_square_moves(f));
    EXPECT_TRUE(affine.injective);
    EXPECT_TRUE(affine.lands_outside_base);
    if (p != 2) {
      const MoveAudit inversion = audit_moves(f, inversion_moves(f, select_x0(f)));
      EXPECT_TRUE(inversion.injective);
      EXPECT_TRUE(inversion.lands_outside_base);
    }
  }
}

TEST(FractionIdentity, HoldsExhaustively) {
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const FiniteFieldPair f = build_fields(p, n);
    const Element c = twist_constant(f, select_x0(f));
    EXPECT_TRUE(f.in_base(c));
    const FractionIdentityReport r = verify_fraction_identity(f, c);
    EXPECT_TRUE(r.holds()) << "q=" << f.q();
    EXPECT_EQ(r.checked + r.skipped, 2 * (f.q() - 1) * f.q());
  }
}

TEST(FractionIdentity, ZeroShiftReducesToScaling) {
  const FiniteFieldPair f = build_fields(5, 1);
  const Element x0 = select_x0(f);
  const Element c = twist_constant(f, x0);
  EXPECT_EQ(f.mul(x0, f.mul(x0, c)), 1);
  for (Element a = 1; a < f.q(); ++a) {
    const Element a2 = f.mul(a, a);
    EXPECT_EQ(f.inv(f.mul(a2, f.mul(x0, c))), f.mul(x0, f.inv(a2)));
  }
}

TEST(FractionIdentity, SampledVariantChecksFewerPairs) {
  const FiniteFieldPair f = build_fields(7, 1);
  const Element c = twist_constant(f, select_x0(f));
  const FractionIdentityReport r = verify_fraction_identity(f, c, 5);
  EXPECT_TRUE(r.holds());
  EXPECT_LE(r.checked + r.skipped, 2 * 5);
}

TEST(FractionIdentity, RequiresOddCharacteristic) {
  EXPECT_THROW(verify_fraction_identity(build_fields(2, 2), 1), InvalidArgumentError);
}

TEST(NonsquareWitness, ExistsAndIsANonsquare) {
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const FiniteFieldPair f = build_fields(p, n);
    const Element c = twist_constant(f, select_x0(f));
    const NonsquareWitness w = exists_nonsquare_value(f, c);
    EXPECT_NE(w.a, 0);
    EXPECT_NE(w.value, 0);
    EXPECT_FALSE(f.base_is_square(w.value));
    std::set<Element> squares;
    for (Element s = 1; s < f.q(); ++s) squares.insert(f.base_mul(s, s));
    EXPECT_EQ(squares.count(w.value), 0u);
    const Element a2 = f.base_mul(w.a, w.a);
    const Element b2 = f.base_mul(w.b, w.b);
    const Element expected = f.base_add(a2, f.base_neg(f.base_mul(b2, f.base_inv(f.base_mul(a2, c)))));
    EXPECT_EQ(w.value, expected);
  }
}
