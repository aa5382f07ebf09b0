#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skewnabla/nabla.hpp"
#include "skewnabla/serialize.hpp"

using namespace skewnabla;

TEST(Nabla, Examples) {
  EXPECT_EQ(to_text(nabla(parse_multipoly("x1*x2", 2))), "x1 + x2");
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(nabla(complete_homogeneous(1, n)), MultiPoly::constant(n, static_cast<long long>(n)));
  }
  const auto d = nabla(skew_schur(SkewShape({2, 1}, {0, 0})));
  EXPECT_EQ(to_text(d), "x1^2 + 4*x1*x2 + x2^2");
  EXPECT_EQ(expand_schur_basis(d), (SchurExpansion{{Partition{2, 0}, 1}, {Partition{1, 1}, 3}}));
}

TEST(Nabla, MatchesOracleSumOfPartials) {
  SchurTable table;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions(n, 5)) {
      const auto s = table.schur(lambda);
      oracle::Poly want;
      for (std::size_t k = 1; k <= n; ++k) want = oracle::add(want, oracle::derivative(oracle::from(s), static_cast<int>(k)));
      ASSERT_EQ(oracle::from(nabla(s)), want);
    }
  }
}

TEST(Nabla, ThreeVariableSkewExample) {
  // Frozen from the oracle's sum of partial derivatives of the tableau sum.
  const auto d = nabla(skew_schur(SkewShape({3, 2, 1}, {1, 1, 0})));
  EXPECT_EQ(to_text(d),
            "2*x1^3 + 11*x1^2*x2 + 11*x1^2*x3 + 11*x1*x2^2 + 24*x1*x2*x3 + 11*x1*x3^2 + 2*x2^3 + "
            "11*x2^2*x3 + 11*x2*x3^2 + 2*x3^3");
}

TEST(NablaH, Examples) {
  EXPECT_TRUE(nabla_h_check(1, 2));
  EXPECT_TRUE(nabla_h_check(0, 3));
  EXPECT_TRUE(nabla_h_check(3, 3));
  const auto d = nabla(complete_homogeneous(3, 3));
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(d, Integer(5) * complete_homogeneous(2, 3));
  for (int n = -2; n <= 10; ++n)
    for (std::size_t nv = 0; nv <= 5; ++nv) EXPECT_TRUE(nabla_h_check(n, nv)) << n << " " << nv;
}

TEST(NablaPrime, Examples) {
  EXPECT_EQ(nabla_prime(parse_multipoly("x1^2", 1)), MultiPoly::constant(1, 2));
  EXPECT_TRUE(nabla_prime(parse_multipoly("x1*x2", 2)).is_zero());
  EXPECT_EQ(nabla_prime(complete_homogeneous(2, 2)), MultiPoly::constant(2, 4));
}

TEST(NablaPrime, LaplacianOfS530) {
  const auto e = expand_schur_basis(nabla_prime(skew_schur(SkewShape({5, 3, 0}, {0, 0, 0}))));
  EXPECT_EQ(to_text(e), "8*s(5,1,0) + 8*s(4,2,0) + 30*s(3,3,0) + 2*s(2,2,2)");
}

TEST(CornerSum, RhsCornerTermsOfWorkedExample) {
  const SkewShape shape({3, 2, 1}, {1, 1, 0});
  for (std::int64_t a = -2; a <= 5; ++a) {
    const auto rep = theorem1_rhs(shape, a, 2 - a);
    ASSERT_EQ(rep.outer_terms.size(), 3u);
    EXPECT_EQ(rep.outer_terms[0].coefficient, 2 + a);
    EXPECT_EQ(rep.outer_terms[1].coefficient, 0 + a);
    EXPECT_EQ(rep.outer_terms[2].coefficient, -2 + a);
    EXPECT_EQ(rep.outer_terms[1].part, (Partition{3, 1, 1}));
    ASSERT_EQ(rep.inner_terms.size(), 2u);
    EXPECT_EQ(rep.inner_terms[0].index, 1u);
    EXPECT_EQ(rep.inner_terms[1].index, 3u);
    EXPECT_EQ(rep.inner_terms[0].coefficient, (2 - a) - 0);
    EXPECT_EQ(rep.inner_terms[1].coefficient, (2 - a) + 3);
    EXPECT_EQ(rep.inner_terms[0].part, (Partition{2, 1, 0}));
  }
}

TEST(CornerSum, RhsExamples) {
  const auto rep = theorem1_rhs(SkewShape({2, 1}, {0, 0}), 2, -1);
  EXPECT_EQ(to_text(rep.rhs), "x1^2 + 4*x1*x2 + x2^2");
  ASSERT_EQ(rep.inner_terms.size(), 1u);
  EXPECT_EQ(rep.inner_terms[0].coefficient, 0);
  const auto zero = theorem1_rhs(SkewShape(Partition::zero(3), Partition::zero(3)), 1, 1);
  EXPECT_TRUE(zero.rhs.is_zero());
  EXPECT_TRUE(zero.outer_terms.empty());
  ASSERT_EQ(zero.inner_terms.size(), 1u);
  EXPECT_EQ(zero.inner_terms[0].coefficient, 2);
}

TEST(CornerSum, CheckExamples) {
  EXPECT_TRUE(check_theorem1(SkewShape({3, 2, 1}, {1, 1, 0}), 2, 0).verdict);
  SchurTable table;
  const auto rep = check_theorem1(SkewShape({2, 1}, {0, 0}), 2, -1, table);
  EXPECT_TRUE(rep.verdict);
  EXPECT_TRUE(inner_sum_vanishes(rep, table));
  const auto empty = check_theorem1(SkewShape({1, 0}, {2, 0}), 0, 1);
  EXPECT_TRUE(empty.verdict);
  EXPECT_TRUE(empty.lhs.is_zero());
  EXPECT_TRUE(empty.rhs.is_zero());
}

TEST(CornerSum, ParameterConstraint) {
  EXPECT_THROW(check_theorem1(SkewShape({2, 1}, {0, 0}), 2, 0), ParameterError);
  EXPECT_THROW(theorem1_rhs(SkewShape({2, 1}, {0, 0}), 0, 0), ParameterError);
}

TEST(CornerSumProperty, HoldsForEveryA) {
  SchurTable table;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    for (const auto& lambda : partitions(n, 5)) {
      for (const auto& mu : partitions(n, lambda.size())) {
        const SkewShape shape(lambda, mu);
        for (std::int64_t a = -2; a <= nn + 2; ++a) {
          ASSERT_TRUE(check_theorem1(shape, a, nn - 1 - a, table).verdict) << to_string(shape) << " a=" << a;
        }
      }
    }
  }
}

TEST(PlainCornerSums, Examples) {
  const auto [left, right] = corollary2_sides(SkewShape({2, 1}, {1, 0}));
  EXPECT_EQ(to_text(left), "2*x1 + 2*x2");
  EXPECT_EQ(left, right);
  const Partition lambda{2, 2, 1};
  const auto [l0, r0] = corollary2_sides(SkewShape(lambda, lambda));
  EXPECT_TRUE(l0.is_zero());
  EXPECT_TRUE(r0.is_zero());
  const auto [l1, r1] = corollary2_sides(SkewShape({1, 0, 0}, {0, 0, 0}));
  EXPECT_EQ(l1, MultiPoly::one(3));
  EXPECT_EQ(r1, MultiPoly::one(3));
}
