#include <random>

#include <gtest/gtest.h>

#include "relgw/theta_ring.hpp"
#include "test_support.hpp"

using namespace relgw;
using relgw::testing::random_element;
using relgw::testing::solved;

using Element = ThetaElement<Rational>;

TEST(ThetaRing, Generators) {
  const auto zero = Element::theta(0, 2);
  EXPECT_EQ(zero.support(), std::vector<int>{0});
  EXPECT_EQ(Element::theta(5, 2).support(), std::vector<int>{5});
  const auto twice = Element::theta(3, 2) + Element::theta(3, 2);
  EXPECT_EQ(twice.coefficient(3, 0), Rational(2));
  EXPECT_TRUE((twice - twice).is_zero());
}

TEST(ThetaRing, MulBasisOneTwo) {
  const auto& table = solved(1).table;
  const auto product = mul_basis(1, 2, 1, ConcreteMode(table));
  Element expected = Element::theta(3, 1);
  expected.add_term(0, 1, Rational(6));
  EXPECT_EQ(product, expected);
  EXPECT_EQ(to_string(product), "θ_3 + 6 t θ_0");
  EXPECT_EQ(mul_basis(2, 1, 1, ConcreteMode(table)), product);
}

TEST(ThetaRing, MulBasisOneFive) {
  const auto& table = solved(2).table;
  const auto product = mul_basis(1, 5, 2, ConcreteMode(table));
  EXPECT_EQ(to_string(product), "θ_6 + 2 t θ_3 + 30 t^2 θ_0");
  EXPECT_EQ(to_string(product, Notation::Ascii), "theta_6 + 2 t theta_3 + 30 t^2 theta_0");
}

TEST(ThetaRing, ZeroIsIdentityOnBasis) {
  const auto& table = solved(2).table;
  for (int q = 0; q <= 12; ++q) {
    EXPECT_EQ(mul_basis(0, q, 2, ConcreteMode(table)), Element::theta(q, 2));
    EXPECT_EQ(mul_basis(q, 0, 2, ConcreteMode(table)), Element::theta(q, 2));
  }
  EXPECT_EQ(to_string(mul_basis(0, 7, 2, ConcreteMode(table))), "θ_7");
}

TEST(ThetaRing, IdentityOnRandomElements) {
  std::mt19937 rng(17);
  for (int bound = 0; bound <= 3; ++bound) {
    const auto& table = solved(std::max(bound, 1)).table;
    for (int i = 0; i < 30; ++i) {
      const auto x = random_element(rng, bound, 9);
      EXPECT_EQ(mul(Element::theta(0, bound), x, ConcreteMode(table)), x);
      EXPECT_EQ(mul(x, Element::theta(0, bound), ConcreteMode(table)), x);
    }
  }
}

TEST(ThetaRing, BasisCommutative) {
  const auto& table = solved(3).table;
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; q <= 12; ++q)
      EXPECT_EQ(mul_basis(p, q, 3, ConcreteMode(table)), mul_basis(q, p, 3, ConcreteMode(table))) << p << "," << q;
}

TEST(ThetaRing, RandomProductsCommute) {
  std::mt19937 rng(23);
  const auto& table = solved(3).table;
  for (int i = 0; i < 40; ++i) {
    const auto x = random_element(rng, 3, 8), y = random_element(rng, 3, 8);
    EXPECT_EQ(mul(x, y, ConcreteMode(table)), mul(y, x, ConcreteMode(table)));
  }
}

TEST(ThetaRing, GradingAndFiniteness) {
  const auto& table = solved(3).table;
  const auto before = grading_stats();
  for (int p = 0; p <= 12; ++p) {
    for (int q = 0; q <= 12; ++q) {
      const auto product = mul_basis(p, q, 3, ConcreteMode(table));
      for (const auto& [r, series] : product.terms()) {
        EXPECT_GE(r, 0);
        EXPECT_LE(r, p + q);
        for (int k = 0; k <= 3; ++k) {
          if (!series[k].is_zero()) EXPECT_EQ(p + q - r, 3 * k) << p << "," << q << " -> " << r << "," << k;
        }
      }
    }
  }
  const auto after = grading_stats();
  EXPECT_GT(after.terms, before.terms);
  EXPECT_EQ(after.violations, before.violations);
}

TEST(ThetaRing, GradingRecorderFlagsViolations) {
  const auto before = grading_stats();
  EXPECT_TRUE(record_graded_term(4, 2, 3, 1));
  EXPECT_FALSE(record_graded_term(4, 2, 2, 1));
  const auto after = grading_stats();
  EXPECT_EQ(after.terms - before.terms, 2U);
  EXPECT_EQ(after.violations - before.violations, 1U);
  reset_grading_stats();
  EXPECT_EQ(grading_stats().violations, 0U);
}

TEST(ThetaRing, AssociativeAtBoundTwo) {
  const auto& table = solved(2).table;
  const ConcreteMode mode(table);
  const auto t1 = Element::theta(1, 2), t2 = Element::theta(2, 2);
  EXPECT_EQ(mul(mul(t1, t2, mode), t1, mode), mul(t1, mul(t2, t1, mode), mode));
}

TEST(ThetaRing, AssociativeOnRandomElements) {
  std::mt19937 rng(29);
  const auto& table = solved(3).table;
  ThetaMultiplier<ConcreteMode> ring(ConcreteMode(table), 3);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_element(rng, 3, 6), y = random_element(rng, 3, 6), z = random_element(rng, 3, 6);
    EXPECT_EQ(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z)));
  }
}

TEST(ThetaRing, UnsolvedDegreePropagates) {
  const auto& table = solved(1).table;
  EXPECT_THROW(mul_basis(1, 5, 2, ConcreteMode(table)), UnsolvedDegree);
  // At bound 1 the degree-2 terms are dropped before lookup.
  EXPECT_NO_THROW(mul_basis(1, 5, 1, ConcreteMode(table)));
}

TEST(ThetaRing, BoundMismatch) {
  const auto& table = solved(2).table;
  EXPECT_THROW(mul(Element::theta(1, 1), Element::theta(1, 2), ConcreteMode(table)), BoundMismatch);
}

TEST(ThetaRing, SymbolicBasisCarriesUnknownsAtTopDegree) {
  const auto& table = solved(1).table;
  const auto product = mul_basis(1, 5, 2, SymbolicMode(table, 2));
  EXPECT_EQ(product.coefficient(0, 2), LinForm::unknown(UnknownId::three_point_r0(1, 5)));
  EXPECT_EQ(product.coefficient(3, 1), LinForm(2));
  EXPECT_EQ(to_string(product), "θ_6 + 2 t θ_3 + N_{1,5,0}^2 t^2 θ_0");
  const Assignment pins{{UnknownId::three_point_r0(1, 5), Rational(30)}};
  EXPECT_EQ(mul_basis(1, 5, 2, SymbolicMode(table, 2, pins)).coefficient(0, 2), LinForm(30));
}
