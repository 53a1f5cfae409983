//
// Copyright 2026 The LDP Sampling Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "ldp_sampling/numerics.h"

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "ldp_sampling/quadrature.h"

namespace ldp_sampling {
namespace {

TEST(BisectTest, FindsSquareRootOfTwo) {
  auto f = [](double x) { return x * x - 2; };
  absl::StatusOr<Bracket> bracket = MakeBracket(f, 0, 2);
  ASSERT_TRUE(bracket.ok());
  absl::StatusOr<double> root = Bisect(f, *bracket, 1e-14);
  ASSERT_TRUE(root.ok());
  EXPECT_NEAR(*root, std::sqrt(2.0), 1e-13);
}

TEST(BisectTest, DecreasingFunction) {
  auto f = [](double x) { return std::exp(-x) - 0.5; };
  absl::StatusOr<double> root = Bisect(f, *MakeBracket(f, 0, 5), 1e-15);
  ASSERT_TRUE(root.ok());
  EXPECT_NEAR(*root, std::log(2.0), 1e-13);
}

TEST(BisectTest, RejectsMissingSignChange) {
  auto f = [](double x) { return x * x + 1; };
  EXPECT_FALSE(MakeBracket(f, -1, 1).ok());
  EXPECT_FALSE(MakeBracket(f, 1, -1).ok());
  EXPECT_FALSE(Bisect(f, Bracket{-1, 1, 2, 2}, 1e-12).ok());
}

TEST(BisectTest, EndpointRootWithinTolerance) {
  auto f = [](double x) { return x - 1; };
  absl::StatusOr<Bracket> bracket = MakeBracket(f, 1, 3, 1e-12);
  ASSERT_TRUE(bracket.ok());
  EXPECT_EQ(*Bisect(f, *bracket, 1e-12), 1.0);
}

TEST(MinimizeScalarTest, Parabola) {
  absl::StatusOr<ScalarMinimum> m = MinimizeScalar(
      [](double x) { return (x - 1.3) * (x - 1.3) + 2; }, -5, 5, 64, 1e-12);
  ASSERT_TRUE(m.ok());
  EXPECT_NEAR(m->argmin, 1.3, 1e-6);
  EXPECT_NEAR(m->value, 2, 1e-12);
}

TEST(MinimizeScalarTest, MinimumAtEndpoint) {
  absl::StatusOr<ScalarMinimum> m =
      MinimizeScalar([](double x) { return x; }, 0, 1, 64, 1e-12);
  ASSERT_TRUE(m.ok());
  EXPECT_NEAR(m->value, 0, 1e-12);
}

TEST(MinimizeScalarTest, RejectsBadArguments) {
  auto f = [](double x) { return x; };
  EXPECT_FALSE(MinimizeScalar(f, 1, 0, 64, 1e-9).ok());
  EXPECT_FALSE(MinimizeScalar(f, 0, 1, 8, 1e-9).ok());
}

TEST(NormalTest, CdfValues) {
  EXPECT_NEAR(StandardNormalCdf(0), 0.5, 1e-16);
  EXPECT_NEAR(StandardNormalCdf(-1), 0.158655253931457, 1e-15);
  EXPECT_NEAR(StandardNormalCdf(1.959963984540054), 0.975, 1e-15);
  EXPECT_NEAR(StandardNormalCdf(-10), 7.61985302416047e-24, 1e-36);
}

TEST(NormalTest, QuantileInvertsCdf) {
  for (double p : {1e-12, 1e-6, 0.01, 0.02425, 0.3, 0.5, 0.77, 0.999}) {
    const double x = StandardNormalQuantile(p);
    EXPECT_NEAR(StandardNormalCdf(x), p, 1e-14 * std::max(1.0, p / 1e-3))
        << p;
  }
  EXPECT_TRUE(std::isinf(StandardNormalQuantile(0)));
  EXPECT_TRUE(std::isinf(StandardNormalQuantile(1)));
}

TEST(RngStreamTest, DeterministicPerKey) {
  RngStream a(7, "exp", 3, RngPurpose::kMixtureGeneration);
  RngStream b(7, "exp", 3, RngPurpose::kMixtureGeneration);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(RngStreamTest, KeysSeparateStreams) {
  std::set<uint64_t> firsts;
  for (uint64_t seed : {1, 2}) {
    for (const char* id : {"x", "y"}) {
      for (uint64_t client : {0, 1}) {
        for (RngPurpose purpose :
             {RngPurpose::kMixtureGeneration, RngPurpose::kSamplerDraw}) {
          firsts.insert(RngStream(seed, id, client, purpose)());
        }
      }
    }
  }
  EXPECT_EQ(firsts.size(), 16u);
}

TEST(RngStreamTest, SplitIsIndependentOfParentPosition) {
  RngStream parent(11);
  RngStream child_before = parent.Split(4);
  parent();
  parent();
  RngStream child_after = parent.Split(4);
  EXPECT_EQ(child_before(), child_after());
  EXPECT_NE(parent.Split(4)(), parent.Split(5)());
}

TEST(RngStreamTest, UniformMoments) {
  RngStream rng(3);
  const int n = 200000;
  double sum = 0;
  double sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.UniformOpen();
    ASSERT_GT(u, 0);
    ASSERT_LT(u, 1);
    sum += u;
    sum_sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(sum_sq / n - 0.25, 1.0 / 12, 0.005);
}

TEST(RngStreamTest, LaplaceAndExponentialMoments) {
  RngStream rng(5);
  const int n = 200000;
  double abs_sum = 0;
  double exp_sum = 0;
  double poisson_sum = 0;
  for (int i = 0; i < n; ++i) {
    abs_sum += std::abs(rng.StandardLaplace());
    exp_sum += rng.StandardExponential();
    poisson_sum += static_cast<double>(rng.Poisson(2.0));
  }
  EXPECT_NEAR(abs_sum / n, 1, 0.01);
  EXPECT_NEAR(exp_sum / n, 1, 0.01);
  EXPECT_NEAR(poisson_sum / n, 2, 0.02);
  EXPECT_EQ(rng.Poisson(0), 0);
}

TEST(StableHashTest, KnownValue) {
  EXPECT_EQ(StableHash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(StableHash("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(QuadratureTest, TrapezoidIntegratesLaplace) {
  absl::StatusOr<QuadratureGrid> grid =
      QuadratureGrid::Create(QuadratureConfig::Box(1, 30, 65536));
  ASSERT_TRUE(grid.ok());
  const double total = grid->Integrate(grid->Evaluate(
      [](std::span<const double> x) { return 0.5 * std::exp(-std::abs(x[0])); }));
  EXPECT_NEAR(total, 1, 1e-6);
}

TEST(QuadratureTest, GaussLegendreIsExactOnPolynomials) {
  QuadratureConfig config = QuadratureConfig::Box(1, 1, 32);
  config.scheme = QuadratureScheme::kGaussLegendre;
  absl::StatusOr<QuadratureGrid> grid = QuadratureGrid::Create(config);
  ASSERT_TRUE(grid.ok());
  const double total = grid->Integrate(grid->Evaluate(
      [](std::span<const double> x) { return std::pow(x[0], 10); }));
  EXPECT_NEAR(total, 2.0 / 11, 1e-14);
}

TEST(QuadratureTest, TwoDimensionalPointOrder) {
  QuadratureConfig config;
  config.bounds_per_axis = {{0, 1}, {10, 11}};
  config.points_per_axis = 16;
  absl::StatusOr<QuadratureGrid> grid = QuadratureGrid::Create(config);
  ASSERT_TRUE(grid.ok());
  EXPECT_EQ(grid->size(), 256u);
  std::vector<double> point(2);
  grid->Point(1, point);
  EXPECT_DOUBLE_EQ(point[0], 0);
  EXPECT_DOUBLE_EQ(point[1], 10 + 1.0 / 15);
  double total = 0;
  for (double w : grid->weights()) total += w;
  EXPECT_NEAR(total, 1, 1e-14);
}

TEST(QuadratureTest, RejectsBadConfigs) {
  QuadratureConfig config;
  EXPECT_FALSE(config.Validate().ok());
  config.bounds_per_axis = {{1, 0}};
  EXPECT_FALSE(config.Validate().ok());
  config.bounds_per_axis = {{0, 1}};
  config.points_per_axis = 4;
  EXPECT_FALSE(config.Validate().ok());
  config.points_per_axis = 40;
  config.scheme = QuadratureScheme::kGaussLegendre;
  EXPECT_FALSE(config.Validate().ok());
  EXPECT_FALSE(QuadratureConfig::Box(3, 1, 4096).Validate().ok());
}

}  // namespace
}  // namespace ldp_sampling
