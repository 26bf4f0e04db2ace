#include <gtest/gtest.h>

#include <set>

#include "qmod/catalog.hpp"
#include "qmod/components.hpp"
#include "qmod/rng.hpp"
#include "qmod/error.hpp"
#include "qmod/homalg.hpp"
#include "support/oracles.hpp"

using namespace qmod;
using qmod::testing::brute_force_components;
using qmod::testing::for_each_dim;

namespace {

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }
RankSequence rs(std::vector<int> v) { return RankSequence(std::move(v)); }

}  // namespace

TEST(Components, RingelFiveUnitVector) {
  auto alg = catalog_algebra("ringel5");
  auto comps = enumerate_components(alg, dv({1, 1, 1, 1, 1}));
  ASSERT_EQ(comps.size(), 2u);
  // Arrow order: alpha, beta, gamma, delta, epsilon.
  EXPECT_EQ(comps[0].ranks, rs({0, 1, 1, 1, 1}));
  EXPECT_EQ(comps[1].ranks, rs({1, 0, 1, 1, 1}));
}

TEST(Components, KroneckerIsIrreducible) {
  auto alg = catalog_algebra("kronecker");
  auto comps = enumerate_components(alg, dv({2, 3}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].ranks, rs({2, 2}));
  EXPECT_EQ(component_dimension(comps[0]), 12);
}

TEST(Components, A3WithRelation) {
  auto alg = catalog_algebra("a3-relation");
  auto comps = enumerate_components(alg, dv({1, 2, 1}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].ranks, rs({1, 1}));
  EXPECT_EQ(component_dimension(Component{alg, dv({1, 1, 1}), rs({1, 0})}), 1);
}

TEST(Components, UnsupportedOutsideDisjointChain) {
  auto alg = std::make_shared<const Algebra>(
      make_algebra("overlap", {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "3"}},
                   {{"a", "b"}, {"a", "c"}}));
  try {
    enumerate_components(alg, dv({1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedClass);
  }
}

TEST(Components, MatchesBruteForceOnCatalog) {
  for (const std::string& name : catalog_names()) {
    auto alg = catalog_algebra(name);
    if (!alg->classification().disjoint_chain) continue;
    const int max = alg->vertex_count() > 4 ? 2 : 3;
    for_each_dim(alg->vertex_count(), max, [&](const DimVector& d) {
      auto seqs = maximal_rank_sequences(*alg, d);
      EXPECT_EQ(std::set<RankSequence>(seqs.begin(), seqs.end()), brute_force_components(*alg, d))
          << name << " " << to_string(d);
    });
  }
}

TEST(Components, DimensionMatchesTangentSpace) {
  for (const std::string& name : catalog_names()) {
    auto alg = catalog_algebra(name);
    if (!alg->classification().disjoint_chain) continue;
    for_each_dim(alg->vertex_count(), 2, [&](const DimVector& d) {
      for (const Component& c : enumerate_components(alg, d)) {
        Module m = generic_module(c, Field(10007), 17);
        EXPECT_EQ(tangent_space_dimension(m), component_dimension(c)) << name << " " << to_string(d);
      }
    });
  }
}

TEST(Components, PointCountOverTinyFields) {
  // A3 with relation, d = (1,1,1): the variety {ab = 0} in A^2 has
  // 2p - 1 points, the stratum r = (1,0) has p - 1.
  auto alg = catalog_algebra("a3-relation");
  for (std::uint32_t p : {2u, 3u, 5u}) {
    int stratum = 0;
    for (std::uint32_t x = 0; x < p; ++x)
      for (std::uint32_t y = 0; y < p; ++y)
        if (static_cast<std::uint64_t>(x) * y % p == 0 && x != 0 && y == 0) ++stratum;
    EXPECT_EQ(stratum, static_cast<int>(p) - 1);
  }
  EXPECT_EQ(component_dimension(Component{alg, dv({1, 1, 1}), rs({1, 0})}), 1);
}

TEST(GenericModule, RealizesRanksExactly) {
  for (const std::string& name : {"ringel5", "a3-relation", "kronecker-tail", "ringel-family-n6"}) {
    auto alg = catalog_algebra(name);
    DimVector d(alg->vertex_count(), 2);
    d[0] = 3;
    for (const Component& c : enumerate_components(alg, d))
      for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_EQ(generic_module(c, Field(10007), seed).rank_sequence(), c.ranks);
  }
}

TEST(GenericModule, RelationHoldsOnA3) {
  auto alg = catalog_algebra("a3-relation");
  Component c{alg, dv({1, 2, 1}), rs({1, 1})};
  Field f(10007);
  Module m = generic_module(c, f, 3);
  EXPECT_TRUE(multiply(f, m.map(0), m.map(1)).is_zero());
}

TEST(GenericModule, RingelAlphaZero) {
  auto alg = catalog_algebra("ringel5");
  Component c{alg, dv({1, 1, 2, 1, 1}), rs({0, 1, 1, 1, 1})};
  Module m = generic_module(c, Field(10007), 0);
  EXPECT_TRUE(m.map(0).is_zero());
  EXPECT_EQ(rank(m.field(), m.map(1)), 1u);
}

TEST(GenericModule, DeterministicGivenSeed) {
  auto alg = catalog_algebra("kronecker");
  Component c{alg, dv({2, 2}), rs({2, 2})};
  EXPECT_EQ(generic_module(c, Field(10007), 9).maps(), generic_module(c, Field(10007), 9).maps());
}

TEST(StringDefect, Examples) {
  auto kr = catalog_algebra("kronecker");
  EXPECT_EQ(string_defect(Component{kr, dv({1, 1}), rs({1, 1})}), 0);
  EXPECT_TRUE(is_regular(Component{kr, dv({1, 1}), rs({1, 1})}));
  auto a3 = catalog_algebra("a3-relation");
  EXPECT_EQ(string_defect(Component{a3, dv({1, 1, 1}), rs({1, 0})}), 2);
  EXPECT_EQ(string_defect(Component{a3, dv({0, 1, 0}), rs({0, 0})}), 1);
  EXPECT_THROW(string_defect(Component{catalog_algebra("ringel5"), dv({1, 1, 1, 1, 1}), rs({1, 0, 1, 1, 1})}),
               Error);
}

TEST(StringDefect, CountsStringSummands) {
  for (const std::string& name : {"kronecker", "a3-relation", "kronecker-tail"}) {
    auto alg = catalog_algebra(name);
    for_each_dim(alg->vertex_count(), 2, [&](const DimVector& d) {
      for (const Component& c : enumerate_components(alg, d)) {
        auto g = generic_decomposition(c, 2, 1);
        long long strings = 0;
        for (const auto& s : g.summands)
          if (s.dim.total() - s.ranks.total() == 1) strings += s.multiplicity;
        EXPECT_EQ(strings, string_defect(c)) << name << " " << to_string(d);
      }
    });
  }
}

TEST(GenericDecomposition, KroneckerTwoBands) {
  auto alg = catalog_algebra("kronecker");
  auto g = generic_decomposition(Component{alg, dv({2, 2}), rs({2, 2})}, 5, 0);
  ASSERT_EQ(g.summands.size(), 1u);
  EXPECT_EQ(g.summands[0].dim, dv({1, 1}));
  EXPECT_EQ(g.summands[0].multiplicity, 2);
  EXPECT_EQ(g.summands[0].representatives.size(), 2u);
  EXPECT_TRUE(g.ext1_certified);
}

TEST(GenericDecomposition, A3StringPlusSimple) {
  auto alg = catalog_algebra("a3-relation");
  auto g = generic_decomposition(Component{alg, dv({1, 1, 1}), rs({1, 0})}, 5, 0);
  ASSERT_EQ(g.summands.size(), 2u);
  EXPECT_EQ(g.summands[0].dim, dv({0, 0, 1}));
  EXPECT_EQ(g.summands[1].dim, dv({1, 1, 0}));
  EXPECT_EQ(g.summands[1].ranks, rs({1, 0}));
}

// One trial of this seed draws a module with ker beta = ker epsilon.
TEST(GenericDecomposition, RedrawsSpecialSamples) {
  auto alg = catalog_algebra("ringel5");
  const Component c{alg, dv({1, 2, 2, 2, 0}), rs({1, 1, 2, 0, 1})};
  const auto g = generic_decomposition(c, 5, derive_seed(0, "decomposition/(1,2,2,2,0)(1,1,2,0,1)"));
  ASSERT_EQ(g.summands.size(), 2u);
  EXPECT_EQ(g.summands[0].dim, dv({0, 1, 1, 1, 0}));
  EXPECT_EQ(g.summands[1].dim, dv({1, 1, 1, 1, 0}));
  EXPECT_GE(g.resamples, 1);
}

TEST(GenericDecomposition, MultiplicitiesSumToDimension) {
  auto alg = catalog_algebra("ringel5");
  for_each_dim(5, 1, [&](const DimVector& d) {
    for (const Component& c : enumerate_components(alg, d)) {
      DimVector sum(5);
      for (const auto& s : generic_decomposition(c, 3, 2).summands) sum += s.multiplicity * s.dim;
      EXPECT_EQ(sum, d);
    }
  });
}

TEST(Ext1Generic, Examples) {
  auto kr = catalog_algebra("kronecker");
  Component band{kr, dv({1, 1}), rs({1, 1})};
  EXPECT_EQ(ext1_generic(band, band, 10, 0), 0u);
  EXPECT_EQ(euler_form(*kr, band.dim, band.dim), 0);
  auto a3 = catalog_algebra("a3-relation");
  Component s2{a3, dv({0, 1, 0}), rs({0, 0})}, s1{a3, dv({1, 0, 0}), rs({0, 0})};
  EXPECT_EQ(ext1_generic(s2, s1, 3, 0), 1u);
}
