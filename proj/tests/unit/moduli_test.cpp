#include <gtest/gtest.h>

#include "qmod/catalog.hpp"
#include "qmod/error.hpp"
#include "qmod/moduli.hpp"

using namespace qmod;

namespace {

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }
Weight wt(std::vector<int> v) { return Weight(std::move(v)); }
RankSequence rs(std::vector<int> v) { return RankSequence(std::move(v)); }

const ComponentReport& find(const ModuliReport& r, const RankSequence& ranks) {
  for (const auto& c : r.components)
    if (c.component.ranks == ranks) return c;
  throw std::runtime_error("component not found");
}

}  // namespace

TEST(Moduli, KroneckerProjectiveSpaces) {
  auto alg = catalog_algebra("kronecker");
  for (int n = 1; n <= 3; ++n) {
    auto report = moduli_shape(alg, dv({n, n}), wt({1, -1}), StabilityOptions{});
    ASSERT_EQ(report.components.size(), 1u);
    EXPECT_EQ(report.components[0].shape.to_string(), "P^" + std::to_string(n));
    EXPECT_FALSE(report.components[0].shape.conjectural);
  }
}

TEST(Moduli, RingelBandComponent) {
  auto alg = catalog_algebra("ringel5");
  auto one = moduli_shape(alg, dv({1, 1, 2, 1, 1}), wt({-1, -1, 0, 1, 1}), StabilityOptions{});
  const auto& band = find(one, rs({0, 1, 1, 1, 1}));
  EXPECT_EQ(band.shape.to_string(), "P^1");
  EXPECT_TRUE(band.shape.conjectural);
  auto two = moduli_shape(alg, dv({2, 2, 4, 2, 2}), wt({-1, -1, 0, 1, 1}), StabilityOptions{});
  EXPECT_EQ(find(two, rs({0, 2, 2, 2, 2})).shape.to_string(), "P^2");
}

TEST(Moduli, NonzeroPairingIsEmpty) {
  auto alg = catalog_algebra("kronecker");
  auto report = moduli_shape(alg, dv({1, 2}), wt({1, -1}), StabilityOptions{});
  for (const auto& c : report.components) EXPECT_TRUE(c.shape.empty);
}

TEST(Moduli, ZeroDimensionIsPoint) {
  auto alg = catalog_algebra("ringel5");
  auto report = moduli_shape(alg, dv({0, 0, 0, 0, 0}), wt({1, 0, 0, 0, -1}), StabilityOptions{});
  ASSERT_EQ(report.components.size(), 1u);
  EXPECT_TRUE(report.components[0].shape.is_point());
}

TEST(ComposeModuli, Rules) {
  auto alg = catalog_algebra("kronecker");
  StableDecomposition d;
  d.semistable = true;
  d.factors = {StableFactor{2, dv({1, 1}), rs({1, 1}), false}};
  EXPECT_EQ(compose_moduli(d, *alg).to_string(), "P^2");
  d.factors = {StableFactor{3, dv({1, 0}), rs({0, 0}), true}, StableFactor{1, dv({1, 1}), rs({1, 1}), false}};
  EXPECT_EQ(compose_moduli(d, *alg).to_string(), "P^1");
  d.factors = {StableFactor{3, dv({1, 0}), rs({0, 0}), true}};
  EXPECT_TRUE(compose_moduli(d, *alg).is_point());
  d.semistable = false;
  EXPECT_TRUE(compose_moduli(d, *alg).empty);
}

TEST(ClassifyStable, Examples) {
  StabilityCache cache{StabilityOptions{}};
  auto kr = catalog_algebra("kronecker");
  EXPECT_EQ(classify_stable_component(Component{kr, dv({1, 1}), rs({1, 1})}, wt({1, -1}), cache), Base::ProjLine);
  EXPECT_EQ(classify_stable_component(Component{kr, dv({1, 2}), rs({1, 1})}, wt({2, -1}), cache), Base::Point);
  auto r5 = catalog_algebra("ringel5");
  EXPECT_EQ(classify_stable_component(Component{r5, dv({1, 1, 2, 1, 1}), rs({0, 1, 1, 1, 1})},
                                      wt({-1, -1, 0, 1, 1}), cache),
            Base::RationalCurve);
  EXPECT_THROW(classify_stable_component(Component{kr, dv({2, 2}), rs({2, 2})}, wt({1, -1}), cache), Error);
}
