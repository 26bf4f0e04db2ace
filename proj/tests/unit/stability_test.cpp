#include <gtest/gtest.h>

#include "qmod/catalog.hpp"
#include "qmod/stability.hpp"
#include "support/oracles.hpp"

using namespace qmod;

namespace {

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }
Weight wt(std::vector<int> v) { return Weight(std::move(v)); }

Matrix mat(std::size_t rows, std::size_t cols, std::vector<Elem> entries) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[i * cols + j];
  return m;
}

// Kronecker module with a = identity and b = the given 2x2 matrix.
Module pencil(AlgebraPtr alg, const Field& f, std::vector<Elem> b) {
  return Module(alg, f, dv({2, 2}), {mat(2, 2, {1, 0, 0, 1}), mat(2, 2, std::move(b))});
}

}  // namespace

TEST(Stability, KroneckerBrick) {
  auto alg = catalog_algebra("kronecker");
  const Field f(5);
  const Module m(alg, f, dv({1, 1}), {mat(1, 1, {1}), mat(1, 1, {2})});
  EXPECT_TRUE(is_stable(m, wt({1, -1})));
  EXPECT_FALSE(is_semistable(m, wt({-1, 1})));
  EXPECT_TRUE(is_semistable(m, wt({0, 0})));
  EXPECT_FALSE(is_stable(m, wt({0, 0})));
}

TEST(Stability, SemisimpleIsNotSemistable) {
  auto alg = catalog_algebra("kronecker");
  const Module m(alg, Field(3), dv({1, 1}), {mat(1, 1, {0}), mat(1, 1, {0})});
  EXPECT_FALSE(is_semistable(m, wt({1, -1})));
}

TEST(Stability, ScalingInvariance) {
  auto alg = catalog_algebra("a3-relation");
  const Field f(3);
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Module m = qmod::testing::random_module(alg, f, dv({1, 2, 1}), rng);
    for (const Weight& theta : {wt({2, -1, 0}), wt({1, 0, -1}), wt({0, 1, -2})}) {
      Weight doubled = theta;
      for (std::size_t x = 0; x < doubled.size(); ++x) doubled[x] *= 3;
      EXPECT_EQ(is_semistable(m, theta), is_semistable(m, doubled));
      EXPECT_EQ(is_stable(m, theta), is_stable(m, doubled));
    }
  }
}

TEST(Gr, DistinctEigenvalues) {
  auto alg = catalog_algebra("kronecker");
  const auto gr = gr_theta(pencil(alg, Field(5), {1, 0, 0, 3}), wt({1, -1}));
  ASSERT_EQ(gr.size(), 2u);
  EXPECT_EQ(gr[0].multiplicity, 1);
  EXPECT_EQ(gr[1].multiplicity, 1);
  EXPECT_TRUE(is_polystable(gr, wt({1, -1})));
}

TEST(Gr, JordanBlockCollapses) {
  auto alg = catalog_algebra("kronecker");
  const auto gr = gr_theta(pencil(alg, Field(5), {2, 1, 0, 2}), wt({1, -1}));
  ASSERT_EQ(gr.size(), 1u);
  EXPECT_EQ(gr[0].multiplicity, 2);
  EXPECT_EQ(gr[0].module.dim(), dv({1, 1}));
}

TEST(Gr, IrreduciblePencilIsStableOverFp) {
  auto alg = catalog_algebra("kronecker");
  // x^2 - 2 has no root mod 5.
  const Module m = pencil(alg, Field(5), {0, 2, 1, 0});
  EXPECT_TRUE(is_stable(m, wt({1, -1})));
  EXPECT_EQ(hom_dim(m, m), 2u);
  EXPECT_EQ(gr_theta(m, wt({1, -1})).size(), 1u);
}

TEST(Screen, SoundAgainstOracle) {
  const Field f(3);
  Rng rng(5);
  for (const char* name : {"kronecker", "a3-relation", "ringel5"}) {
    auto alg = catalog_algebra(name);
    const std::size_t n = alg->vertex_count();
    for (int i = 0; i < 60; ++i) {
      DimVector d(n);
      for (std::size_t x = 0; x < n; ++x) d[x] = static_cast<int>(rng.below(2)) + (x == 0 ? 1 : 0);
      const Module m = qmod::testing::random_module(alg, f, d, rng);
      Weight theta(n);
      for (std::size_t x = 0; x + 1 < n; ++x) theta[x] = static_cast<int>(rng.below(5)) - 2;
      // Put the remaining weight on a vertex with nonzero dimension.
      const long long rest = weight_pairing(theta, d);
      if (rest % d[0] != 0) continue;
      theta[0] -= static_cast<int>(rest / d[0]);
      if (find_destabilizer(m, theta, false)) EXPECT_FALSE(is_semistable(m, theta));
      if (find_destabilizer(m, theta, true)) EXPECT_FALSE(is_stable(m, theta));
    }
  }
}
