#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skewnabla/nabla.hpp"
#include "skewnabla/random.hpp"
#include "skewnabla/serialize.hpp"
#include "skewnabla/symfunc.hpp"

using namespace skewnabla;

namespace {

std::vector<int> vec(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST(CompleteHomogeneous, Examples) {
  EXPECT_EQ(complete_homogeneous(0, 3), MultiPoly::one(3));
  EXPECT_TRUE(complete_homogeneous(-2, 3).is_zero());
  EXPECT_EQ(to_text(complete_homogeneous(2, 2)), "x1^2 + x1*x2 + x2^2");
}

TEST(CompleteHomogeneous, MatchesOracle) {
  for (int n = -1; n <= 5; ++n)
    for (int nv = 0; nv <= 4; ++nv) EXPECT_EQ(oracle::from(complete_homogeneous(n, nv)), oracle::h(n, nv));
}

TEST(JtMatrix, Examples) {
  const auto m1 = jt_matrix(SkewShape({1, 0}, {0, 0}));
  EXPECT_EQ(m1(0, 0), 1);
  EXPECT_EQ(m1(0, 1), 2);
  EXPECT_EQ(m1(1, 0), -1);
  EXPECT_EQ(m1(1, 1), 0);
  const auto m2 = jt_matrix(SkewShape({2, 1}, {1, 0}));
  EXPECT_EQ(m2(0, 0), 1);
  EXPECT_EQ(m2(0, 1), 3);
  EXPECT_EQ(m2(1, 0), -1);
  EXPECT_EQ(m2(1, 1), 1);
  const auto m3 = jt_matrix(SkewShape({3, 2, 1}, {1, 1, 0}));
  EXPECT_EQ(m3(0, 0), 2);
  EXPECT_EQ(m3(0, 1), 3);
  EXPECT_EQ(m3(0, 2), 5);
}

TEST(Determinant, Examples) {
  const std::size_t n = 2;
  SchurTable t;
  Matrix<MultiPoly> id(3, std::vector<MultiPoly>(3, MultiPoly(3)));
  for (std::size_t i = 0; i < 3; ++i) id[i][i] = MultiPoly::one(3);
  EXPECT_EQ(det_poly(id, 3), MultiPoly::one(3));

  Matrix<MultiPoly> tri{{t.h(1, n), t.h(2, n)}, {MultiPoly(n), MultiPoly::one(n)}};
  EXPECT_EQ(det_poly(tri, n), t.h(1, n));

  Matrix<MultiPoly> jt{{t.h(2, n), t.h(3, n)}, {t.h(0, n), t.h(1, n)}};
  for (auto backend : {DetBackend::bareiss, DetBackend::leibniz}) {
    EXPECT_EQ(to_text(det_poly(jt, n, backend)), "x1^2*x2 + x1*x2^2");
  }
  const oracle::Poly expect = oracle::add(oracle::mul(oracle::h(2, 2), oracle::h(1, 2)), oracle::h(3, 2), -1);
  EXPECT_EQ(oracle::from(det_poly(jt, n)), expect);
}

TEST(Determinant, Errors) {
  Matrix<MultiPoly> ragged{{MultiPoly::one(1), MultiPoly::one(1)}, {MultiPoly::one(1)}};
  EXPECT_THROW(det_poly(ragged, 1), Error);
  Matrix<MultiPoly> mixed{{MultiPoly::one(2)}};
  EXPECT_THROW(det_poly(mixed, 1), VariableCountError);
}

TEST(Determinant, ZeroPivotNeedsRowSwap) {
  const std::size_t n = 1;
  const auto x = MultiPoly::variable(n, 1);
  Matrix<MultiPoly> m{{MultiPoly(n), x}, {x + MultiPoly::one(n), MultiPoly::one(n)}};
  EXPECT_EQ(det_poly(m, n), -(x * (x + MultiPoly::one(n))));
}

TEST(SkewSchur, Examples) {
  EXPECT_EQ(to_text(skew_schur(SkewShape({2, 1}, {0, 0}))), "x1^2*x2 + x1*x2^2");
  EXPECT_EQ(to_text(skew_schur(SkewShape({1, 1}, {1, 0}))), "x1 + x2");
  EXPECT_TRUE(skew_schur(SkewShape({1, 0}, {2, 0})).is_zero());
}

TEST(SkewSchur, TableauOracleExamples) {
  EXPECT_EQ(to_text(ssyt_skew_schur(SkewShape({1, 0}, {0, 0}))), "x1 + x2");
  EXPECT_EQ(to_text(ssyt_skew_schur(SkewShape({1, 1}, {0, 0}))), "x1*x2");
  EXPECT_EQ(to_text(ssyt_skew_schur(SkewShape({2, 1}, {0, 0}))), "x1^2*x2 + x1*x2^2");
  EXPECT_TRUE(ssyt_skew_schur(SkewShape({1, 0}, {2, 0})).is_zero());
}

TEST(SkewSchurProperty, AgreesWithBruteForceOracles) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions(n, 4)) {
      for (const auto& mu : partitions(n, lambda.size())) {
        const SkewShape shape(lambda, mu);
        const auto want = oracle::ssyt(vec(lambda), vec(mu));
        ASSERT_EQ(oracle::from(skew_schur(shape)), want) << to_string(shape);
        ASSERT_EQ(oracle::from(ssyt_skew_schur(shape)), want) << to_string(shape);
        if (contains(mu, lambda)) {
          ASSERT_EQ(oracle::jacobi_trudi(vec(lambda), vec(mu)), want) << to_string(shape);
        }
      }
    }
  }
}

TEST(SkewSchurProperty, SymmetricHomogeneousAndBackendIndependent) {
  SchurTable bareiss(DetBackend::bareiss), leibniz(DetBackend::leibniz);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions(n, 6)) {
      for (const auto& mu : subpartitions(lambda)) {
        const SkewShape shape(lambda, mu);
        const auto& s = bareiss.skew_schur(shape);
        ASSERT_EQ(s, leibniz.skew_schur(shape)) << to_string(shape);
        ASSERT_TRUE(s.is_homogeneous());
        ASSERT_EQ(s.total_degree(), lambda.size() - mu.size());
        for (const auto& [e, c] : s.terms()) {
          for (std::size_t k = 0; k + 1 < n; ++k) {
            auto swapped = e;
            std::swap(swapped[k], swapped[k + 1]);
            ASSERT_EQ(s.coefficient(swapped), c);
          }
        }
      }
    }
  }
}

TEST(SchurExpansion, Examples) {
  const auto s21 = skew_schur(SkewShape({2, 1}, {0, 0}));
  EXPECT_EQ(expand_schur_basis(s21), (SchurExpansion{{Partition{2, 1}, 1}}));
  EXPECT_EQ(expand_schur_basis(complete_homogeneous(2, 2)), (SchurExpansion{{Partition{2, 0}, 1}}));
  const auto e = expand_schur_basis(nabla_prime(skew_schur(SkewShape({5, 3, 0}, {0, 0, 0}))));
  ASSERT_TRUE(e.contains(Partition{2, 2, 2}));
  EXPECT_EQ(e.at(Partition{2, 2, 2}), 2);
}

TEST(SchurExpansion, RejectsNonSymmetric) {
  EXPECT_THROW(expand_schur_basis(MultiPoly::variable(2, 1)), NotSymmetricError);
}

TEST(SchurExpansionProperty, ReconstructsRandomSymmetricPolynomials) {
  Rng rng(5);
  SchurTable table;
  for (int iter = 0; iter < 50; ++iter) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    MultiPoly p(n);
    for (int k = 0; k < 3; ++k) {
      const auto parts = partitions(n, 4);
      const auto& lam = parts[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(parts.size()) - 1))];
      p += Integer(uniform(rng, -3, 3)) * table.schur(lam);
    }
    ASSERT_EQ(reconstruct(expand_schur_basis(p, table), n, table), p);
  }
}
