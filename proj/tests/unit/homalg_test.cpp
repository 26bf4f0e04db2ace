#include <gtest/gtest.h>

#include "qmod/catalog.hpp"
#include "qmod/error.hpp"
#include "qmod/homalg.hpp"
#include "qmod/strings.hpp"
#include "support/oracles.hpp"

using namespace qmod;

namespace {

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }

Module kronecker_module(const Field& f, Matrix a, Matrix b) {
  auto alg = catalog_algebra("kronecker");
  DimVector d(2);
  d[0] = static_cast<int>(a.cols());
  d[1] = static_cast<int>(a.rows());
  return Module(alg, f, d, {std::move(a), std::move(b)});
}

}  // namespace

TEST(Hom, SimplesAreOrthogonalSchurModules) {
  auto alg = catalog_algebra("ringel5");
  Field f(5);
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = 0; y < 5; ++y)
      EXPECT_EQ(hom_dim(simple_module(alg, f, x), simple_module(alg, f, y)), x == y ? 1u : 0u);
}

TEST(Hom, ProjectiveRepresentsEvaluation) {
  auto alg = catalog_algebra("kronecker");
  Field f(10007);
  Rng rng(3);
  Module n = kronecker_module(f, random_matrix(f, 2, 3, rng), random_matrix(f, 2, 3, rng));
  EXPECT_EQ(hom_dim(projective(alg, f, 0), n), 3u);
  EXPECT_EQ(hom_dim(projective(alg, f, 1), n), 2u);
}

TEST(Hom, DimensionAgreesAcrossPrimes) {
  auto alg = catalog_algebra("a3-relation");
  for (std::uint32_t p : {3u, 10007u}) {
    Field f(p);
    Module m = projective(alg, f, 2);
    EXPECT_EQ(hom_dim(m, m), 1u);
    EXPECT_EQ(hom_dim(projective(alg, f, 1), m), 1u);
  }
}

TEST(Projective, RingelVertexThreeHasThreeBasisPaths) {
  auto alg = catalog_algebra("ringel5");
  Module p3 = projective(alg, Field(7), 2);
  EXPECT_EQ(p3.dim(), dv({1, 1, 1, 0, 0}));
}

TEST(Ext, SimpleExtensionOnA2) {
  auto alg = catalog_algebra("a3-relation");
  Field f(5);
  EXPECT_EQ(ext1_dim(simple_module(alg, f, 1), simple_module(alg, f, 0)), 1u);
  EXPECT_EQ(ext1_dim(simple_module(alg, f, 0), simple_module(alg, f, 1)), 0u);
}

TEST(Ext, ProjectivesHaveNoExtensions) {
  auto alg = catalog_algebra("ringel5");
  Field f(5);
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = 0; y < 5; ++y) EXPECT_EQ(ext1_dim(projective(alg, f, x), simple_module(alg, f, y)), 0u);
}

TEST(Ext, RelationGivesSecondExtension) {
  auto alg = catalog_algebra("ringel5");
  Field f(5);
  EXPECT_EQ(ext_dim(2, simple_module(alg, f, 2), simple_module(alg, f, 0)), 1u);
  EXPECT_EQ(projective_dimension(simple_module(alg, f, 2)), 2u);
}

TEST(Ext, EulerCharacteristicMatchesEulerForm) {
  auto alg = catalog_algebra("ringel5");
  Field f(5);
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = 0; y < 5; ++y) {
      const Module sx = simple_module(alg, f, x), sy = simple_module(alg, f, y);
      EXPECT_EQ(ext_euler_characteristic(sx, sy), euler_form(*alg, sx.dim(), sy.dim()));
    }
  DimVector ones(std::vector<int>(5, 1));
  EXPECT_EQ(euler_form(*alg, ones, ones), 1);
}

TEST(Quotient, TrivialCasesAndDefiningSequence) {
  auto alg = catalog_algebra("a3-relation");
  Field f(5);
  Module p2 = projective(alg, f, 1);
  Rng rng(1);
  EXPECT_TRUE(isomorphic(quotient(p2, zero_submodule(p2)), p2, rng));
  EXPECT_EQ(quotient(p2, whole_module(p2)).total_dim(), 0);
  Submodule s1 = generated_submodule(p2, {Matrix::identity(1), empty_basis(1), empty_basis(0)});
  EXPECT_TRUE(isomorphic(quotient(p2, s1), simple_module(alg, f, 1), rng));
}

TEST(Decompose, SemisimpleUnderBaseChange) {
  auto alg = catalog_algebra("kronecker");
  Field f(101);
  Module s = simple_module(alg, f, 0);
  Rng rng(5);
  Module m = direct_sum(s, s);
  m = base_change(m, random_base_change(m, rng));
  auto parts = decompose(m, 9);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].multiplicity, 2);
  EXPECT_EQ(parts[0].module.dim(), s.dim());
}

TEST(Decompose, KroneckerPencilSplitsIntoTwoBands) {
  Field f(10007);
  Matrix a = Matrix::identity(2), b(2, 2);
  b(0, 0) = 2;
  b(1, 1) = 3;
  Module m = kronecker_module(f, a, b);
  Rng rng(2);
  m = base_change(m, random_base_change(m, rng));
  auto parts = decompose(m, 4);
  ASSERT_EQ(parts.size(), 2u);
  for (const Summand& s : parts) {
    EXPECT_EQ(s.module.dim(), dv({1, 1}));
    EXPECT_EQ(s.multiplicity, 1);
    EXPECT_TRUE(s.absolutely_indecomposable);
  }
}

TEST(Decompose, IrreducibleBandIsFlagged) {
  Field f(7);
  // x^2 + 1 has no roots mod 7.
  Matrix a = Matrix::identity(2), b(2, 2);
  b(0, 1) = f.neg(1);
  b(1, 0) = 1;
  auto parts = decompose(kronecker_module(f, a, b), 1);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_FALSE(parts[0].absolutely_indecomposable);
}

TEST(Decompose, StringOfLengthThreeIsIndecomposable) {
  auto alg = catalog_algebra("d5");
  Field f(101);
  Module m = string_module(alg, f, parse_walk(*alg, "alpha epsilon^-1 gamma^-1"));
  EXPECT_EQ(hom_dim(m, m), 1u);
  auto parts = decompose(m, 2);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].multiplicity, 1);
}

TEST(Decompose, ResummingRecoversModule) {
  auto alg = catalog_algebra("ringel5");
  Field f(101);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Module> parts;
    for (int k = 0; k < 3; ++k) parts.push_back(projective(alg, f, rng.below(5)));
    parts.push_back(simple_module(alg, f, rng.below(5)));
    Module m = direct_sum(parts, alg, f);
    m = base_change(m, random_base_change(m, rng));
    std::vector<Module> pieces;
    for (const Summand& s : decompose(m, trial))
      for (int k = 0; k < s.multiplicity; ++k) pieces.push_back(s.module);
    EXPECT_TRUE(isomorphic(direct_sum(pieces, alg, f), m, rng));
  }
}

TEST(Submodules, SimpleHasTwo) {
  auto alg = catalog_algebra("kronecker");
  Module s = simple_module(alg, Field(2), 1);
  EXPECT_EQ(submodule_dimension_vectors(s), (std::set<DimVector>{dv({0, 0}), dv({0, 1})}));
}

TEST(Submodules, KroneckerBand) {
  Field f(2);
  Matrix one(1, 1);
  one(0, 0) = 1;
  Module m = kronecker_module(f, one, one);
  const std::set<DimVector> expected{dv({0, 0}), dv({0, 1}), dv({1, 1})};
  EXPECT_EQ(submodule_dimension_vectors(m), expected);
  EXPECT_EQ(coordinate_submodule_dimension_vectors(m), expected);
}

TEST(Submodules, StringFastPath) {
  auto alg = catalog_algebra("a3-relation");
  Module m = string_module(alg, Field(3), parse_walk(*alg, "a"));
  EXPECT_EQ(coordinate_submodule_dimension_vectors(m),
            (std::set<DimVector>{dv({0, 0, 0}), dv({1, 0, 0}), dv({1, 1, 0})}));
}

TEST(Submodules, DirectSumContainsSums) {
  auto alg = catalog_algebra("a3-relation");
  Field f(3);
  Module x = projective(alg, f, 1), y = simple_module(alg, f, 2);
  auto sx = submodule_dimension_vectors(x), sy = submodule_dimension_vectors(y);
  auto sxy = submodule_dimension_vectors(direct_sum(x, y));
  for (const auto& u : sx)
    for (const auto& v : sy) EXPECT_TRUE(sxy.count(u + v));
}

TEST(Submodules, OracleGuard) {
  auto alg = catalog_algebra("kronecker");
  EXPECT_THROW(submodule_dimension_vectors(simple_module(alg, Field(7), 0)), Error);
  Module big = direct_sum(projective(alg, Field(2), 0), projective(alg, Field(2), 0));
  big = direct_sum(big, big);
  try {
    submodule_dimension_vectors(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleScaleExceeded);
  }
}

TEST(RandomModule, SatisfiesRelationsOnEveryCatalogAlgebra) {
  Rng rng(8);
  for (const std::string& name : catalog_names()) {
    auto alg = catalog_algebra(name);
    for (int i = 0; i < 20; ++i) {
      DimVector d(alg->vertex_count());
      for (std::size_t x = 0; x < d.size(); ++x) d[x] = static_cast<int>(rng.below(3));
      EXPECT_NO_THROW(qmod::testing::random_module(alg, Field(5), d, rng)) << name;
    }
  }
}

TEST(Decompose, BasisInvariant) {
  auto alg = catalog_algebra("kronecker-tail");
  Field f(101);
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    Module m = qmod::testing::random_module(alg, f, DimVector(std::vector<int>{2, 2, 1}), rng);
    Module g = base_change(m, random_base_change(m, rng));
    auto a = decompose(m, 1), b = decompose(g, 2);
    ASSERT_EQ(a.size(), b.size());
    for (const Summand& s : a) {
      bool matched = false;
      for (const Summand& t : b)
        matched = matched || (s.multiplicity == t.multiplicity && s.module.dim() == t.module.dim() &&
                              isomorphic(s.module, t.module, rng));
      EXPECT_TRUE(matched);
    }
  }
}
