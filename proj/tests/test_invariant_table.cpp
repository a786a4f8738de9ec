#include <gtest/gtest.h>

#include "relgw/errors.hpp"
#include "relgw/invariant_table.hpp"

using namespace relgw;

namespace {

Assignment degree_one() {
  return {{UnknownId::two_point(1, 2), Rational(1)},
          {UnknownId::two_point(2, 1), Rational(4)},
          {UnknownId::three_point_r0(1, 2), Rational(6)}};
}

Assignment degree_two() {
  return {{UnknownId::two_point(1, 5), Rational(1)},       {UnknownId::two_point(5, 1), Rational(25)},
          {UnknownId::two_point(2, 4), Rational(7, 2)},    {UnknownId::two_point(4, 2), Rational(14)},
          {UnknownId::two_point(3, 3), Rational(9)},       {UnknownId::three_point_r0(1, 5), Rational(30)},
          {UnknownId::three_point_r0(2, 4), Rational(42)}, {UnknownId::three_point_r0(3, 3), Rational(54)}};
}

InvariantTable solved_through_two() {
  InvariantTable t;
  t.commit_degree(1, degree_one());
  t.commit_degree(2, degree_two());
  return t;
}

}  // namespace

TEST(UnknownId, Canonicalization) {
  EXPECT_EQ(UnknownId::three_point_r0(5, 1), UnknownId::three_point_r0(1, 5));
  EXPECT_NE(UnknownId::two_point(5, 1), UnknownId::two_point(1, 5));
  EXPECT_EQ(UnknownId::three_point_r0(4, 2).key(), "N_{2,4,0}^2");
  EXPECT_EQ(UnknownId::two_point(4, 2).key(), "N_{4,2}");
  EXPECT_THROW(UnknownId::two_point(2, 2), Error);
  EXPECT_THROW(UnknownId::three_point_r0(0, 3), Error);
  EXPECT_EQ(parse_unknown_key("N_{2,4,0}^2"), UnknownId::three_point_r0(2, 4));
  EXPECT_EQ(parse_unknown_key("N_{11,1}"), UnknownId::two_point(11, 1));
  EXPECT_THROW(parse_unknown_key("N_{2,4,0}^3"), ParseError);
}

TEST(UnknownId, UnknownsAtDegree) {
  EXPECT_EQ(unknowns_at_degree(1).size(), 3U);
  EXPECT_EQ(unknowns_at_degree(2).size(), 8U);
  EXPECT_EQ(unknowns_at_degree(5).size(), 14U + 7U);
  EXPECT_TRUE(unknowns_at_degree(0).empty());
}

TEST(InvariantTable, TwoPointExamples) {
  const auto t = solved_through_two();
  EXPECT_EQ(t.two_point(1, 2), Rational(1));
  EXPECT_EQ(t.two_point(4, -1), Rational(0));
  EXPECT_EQ(t.two_point(2, 2), Rational(0));
  EXPECT_EQ(t.two_point(2, 4), Rational(7, 2));
}

TEST(InvariantTable, ThreePointExamples) {
  const auto t = solved_through_two();
  EXPECT_EQ(t.three_point_r0(1, 2), Rational(6));
  EXPECT_EQ(t.three_point_r0(3, 3), Rational(54));
  EXPECT_EQ(t.three_point_r0(0, 3), Rational(0));
}

TEST(InvariantTable, UnsolvedDegree) {
  const auto t = solved_through_two();
  EXPECT_THROW(t.two_point(8, 1), UnsolvedDegree);
  EXPECT_THROW(t.three_point_r0(4, 5), UnsolvedDegree);
  // Illegal keys resolve by rule even beyond the solved degree.
  EXPECT_EQ(t.two_point(8, 2), Rational(0));
}

TEST(InvariantTable, SymbolicLookups) {
  const auto t = solved_through_two();
  EXPECT_EQ(t.two_point_form(8, 1, 3), LinForm::unknown(UnknownId::two_point(8, 1)));
  EXPECT_EQ(t.two_point_form(2, 4, 3), LinForm(Rational(7, 2)));
  EXPECT_EQ(t.three_point_r0_form(5, 4, 3), LinForm::unknown(UnknownId::three_point_r0(4, 5)));
  EXPECT_TRUE(t.two_point_form(0, 9, 3).is_zero());
  EXPECT_THROW(t.two_point_form(11, 1, 3), UnsolvedDegree);
}

TEST(InvariantTable, VanishingRulesScan) {
  const auto t = solved_through_two();
  for (int a = -5; a <= 15; ++a) {
    for (int b = -5; b <= 15; ++b) {
      if (a > 0 && b > 0 && (a + b) % 3 == 0) continue;
      EXPECT_EQ(t.two_point(a, b), Rational(0)) << a << "," << b;
      EXPECT_EQ(t.three_point_r0(a, b), Rational(0)) << a << "," << b;
      EXPECT_TRUE(t.two_point_form(a, b, 3).is_zero());
    }
  }
}

TEST(InvariantTable, ThreePointSymmetric) {
  const auto t = solved_through_two();
  for (int a = -2; a <= 6; ++a)
    for (int b = -2; a + b <= 6; ++b) EXPECT_EQ(t.three_point_r0(a, b), t.three_point_r0(b, a));
}

TEST(InvariantTable, DegreeZeroThreePoint) {
  EXPECT_EQ(degree_zero_three_point(2, 3, 5), Rational(1));
  EXPECT_EQ(degree_zero_three_point(2, 3, 4), Rational(0));
  EXPECT_EQ(degree_zero_three_point(0, 0, 0), Rational(1));
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; q <= 8; ++q)
      for (int r = 0; r <= 20; ++r) EXPECT_EQ(degree_zero_three_point(p, q, r), Rational(r == p + q ? 1 : 0));
}

TEST(InvariantTable, Commit) {
  InvariantTable t;
  t.commit_degree(1, degree_one());
  EXPECT_EQ(t.solved_through_degree(), 1);
  EXPECT_EQ(t.size(), 3U);
  t.commit_degree(2, degree_two());
  EXPECT_EQ(t.solved_through_degree(), 2);
  EXPECT_EQ(t.size(), 11U);
}

TEST(InvariantTable, CommitErrors) {
  InvariantTable t;
  EXPECT_THROW(t.commit_degree(3, {}), CommitError);
  auto partial = degree_one();
  partial.erase(UnknownId::three_point_r0(1, 2));
  EXPECT_THROW(t.commit_degree(1, partial), CommitError);
  auto extra = degree_one();
  extra.emplace(UnknownId::two_point(5, 1), Rational(25));
  EXPECT_THROW(t.commit_degree(1, extra), CommitError);
  EXPECT_EQ(t.solved_through_degree(), 0);
  EXPECT_EQ(t.size(), 0U);
}
