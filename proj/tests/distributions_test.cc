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

#include "ldp_sampling/distributions.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"

namespace ldp_sampling {
namespace {

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

TEST(DiscretePmfTest, CreateValidates) {
  EXPECT_TRUE(DiscretePmf::Create({0.25, 0.75}).ok());
  EXPECT_FALSE(DiscretePmf::Create({1.0}).ok());
  EXPECT_FALSE(DiscretePmf::Create({0.5, 0.6}).ok());
  EXPECT_FALSE(DiscretePmf::Create({1.5, -0.5}).ok());
  const DiscretePmf u = DiscretePmf::Uniform(4);
  EXPECT_EQ(u.size(), 4);
  EXPECT_EQ(u[2], 0.25);
}

TEST(LaplaceMixtureTest, CenteredDensity) {
  const LaplaceMixture h = LaplaceMixture::Centered(1, 2);
  const std::vector<double> x = {1};
  EXPECT_NEAR(*h.Density(x), std::exp(-0.5) / 4, 1e-15);
  const LaplaceMixture h2 = LaplaceMixture::Centered(2, 1);
  const std::vector<double> y = {1, -1};
  EXPECT_NEAR(*h2.Density(y), std::exp(-2.0) / 4, 1e-15);
  EXPECT_FALSE(h2.Density(x).ok());
}

TEST(LaplaceMixtureTest, CreateValidates) {
  EXPECT_FALSE(LaplaceMixture::Create(1, 0, {1.0}, {{0.0}}).ok());
  EXPECT_FALSE(LaplaceMixture::Create(1, 1, {0.5}, {{0.0}}).ok());
  EXPECT_FALSE(LaplaceMixture::Create(1, 1, {1.0}, {{0.0, 1.0}}).ok());
  EXPECT_FALSE(LaplaceMixture::Create(1, 1, {0.5, 0.5}, {{0.0}}).ok());
  EXPECT_FALSE(LaplaceMixture::Create(0, 1, {1.0}, {{}}).ok());
}

TEST(LaplaceMixtureTest, RandomMixturesIntegrateToOne) {
  const QuadratureGrid grid =
      *QuadratureGrid::Create(QuadratureConfig::Box(1, 40, 65536));
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    absl::StatusOr<LaplaceMixture> m =
        GenerateRandomMixture(MixtureGenConfig{}, seed);
    ASSERT_TRUE(m.ok());
    double total = 0;
    DiscretizeOnGrid(
        [&](std::span<const double> x) { return m->DensityUnchecked(x); },
        grid, &total);
    EXPECT_NEAR(total, 1, 1e-6) << seed;
  }
}

TEST(LaplaceMixtureTest, SampleMoments) {
  const LaplaceMixture m =
      *LaplaceMixture::Create(1, 1, {0.25, 0.75}, {{-2.0}, {2.0}});
  const auto draws = m.Sample(9, 100000);
  double mean = 0;
  for (const auto& x : draws) mean += x[0];
  mean /= draws.size();
  EXPECT_NEAR(mean, 1.0, 0.02);
  EXPECT_EQ(m.Sample(9, 5), m.Sample(9, 5));
}

TEST(GenerateRandomMixtureTest, RespectsConfig) {
  MixtureGenConfig config;
  config.dim = 2;
  config.k_max = 4;
  RngStream rng(17);
  for (int i = 0; i < 50; ++i) {
    absl::StatusOr<LaplaceMixture> m = GenerateRandomMixture(config, rng);
    ASSERT_TRUE(m.ok());
    EXPECT_GE(m->num_components(), 1);
    EXPECT_LE(m->num_components(), 4);
    EXPECT_NEAR(Sum(m->weights()), 1, 1e-15);
    for (const auto& mean : m->means()) {
      EXPECT_LE(std::abs(mean[0]) + std::abs(mean[1]), 1.0);
    }
  }
  config.k_max = 0;
  EXPECT_FALSE(GenerateRandomMixture(config, 1).ok());
}

TEST(UniverseTest, CreateValidates) {
  EXPECT_TRUE(UniverseSpec::Create(0, 3, DiscretePmf::Uniform(3)).ok());
  EXPECT_FALSE(UniverseSpec::Create(1, 3, DiscretePmf::Uniform(3)).ok());
  EXPECT_FALSE(UniverseSpec::Create(0.5, 0.9, DiscretePmf::Uniform(3)).ok());
  EXPECT_FALSE(UniverseSpec::Create(-0.1, 3, DiscretePmf::Uniform(3)).ok());
  EXPECT_TRUE(UniverseSpec::AllPmfs(5).CheckIntegral().ok());
  EXPECT_FALSE(
      UniverseSpec::Create(0.2, 3, DiscretePmf::Uniform(3))->CheckIntegral().ok());
  EXPECT_DOUBLE_EQ(
      Neighborhood::Create(DiscretePmf::Uniform(3), 9)->AsUniverse()
          ->Multiplicity(),
      10);
}

TEST(UniverseTest, DiscreteMembership) {
  const Neighborhood nb = *Neighborhood::Create(DiscretePmf::Uniform(4), 2);
  EXPECT_TRUE(*NeighborhoodContains(nb, *DiscretePmf::Create(
                                            {0.5, 0.125, 0.125, 0.25})));
  EXPECT_FALSE(*NeighborhoodContains(nb, *DiscretePmf::Create(
                                             {0.55, 0.1, 0.1, 0.25})));
  EXPECT_FALSE(
      NeighborhoodContains(nb, *DiscretePmf::Create({0.5, 0.5})).ok());
  const BandCheck check =
      CheckBand(std::vector<double>{0.55, 0.1, 0.1, 0.25},
                DiscretePmf::Uniform(4).probs(), 0.5, 2);
  EXPECT_FALSE(check.contains);
  EXPECT_EQ(check.violation_index, 0);
  EXPECT_NEAR(check.max_ratio, 2.2, 1e-15);
  EXPECT_NEAR(check.min_ratio, 0.4, 1e-15);
}

TEST(UniverseTest, ContinuousMembership) {
  const Neighborhood nb =
      *Neighborhood::Create(LaplaceMixture::Centered(1, 1), 3);
  const QuadratureConfig grid = QuadratureConfig::Box(1, 30, 1024);
  // A shift by s has ratio within [e^{-s}, e^{s}].
  EXPECT_TRUE(*NeighborhoodContains(
      nb, *LaplaceMixture::Create(1, 1, {1.0}, {{1.0}}), grid));
  EXPECT_FALSE(*NeighborhoodContains(
      nb, *LaplaceMixture::Create(1, 1, {1.0}, {{1.2}}), grid));
  EXPECT_FALSE(*NeighborhoodContains(
      nb, *LaplaceMixture::Create(1, 0.5, {1.0}, {{0.0}}), grid));
}

TEST(BandSamplingTest, MembersStayInBand) {
  const std::vector<double> ref = DiscretePmf::Uniform(20).probs();
  RngStream rng(4);
  for (int i = 0; i < 200; ++i) {
    for (const auto& p : {RandomBandMember(ref, 1.0 / 9, 9, rng),
                          RandomBandExtreme(ref, 1.0 / 9, 9, rng)}) {
      EXPECT_NEAR(Sum(p), 1, 1e-12);
      EXPECT_TRUE(CheckBand(p, ref, 1.0 / 9, 9).contains);
    }
  }
}

TEST(BandSamplingTest, ExtremesSitOnTheBoundary) {
  const std::vector<double> ref = DiscretePmf::Uniform(10).probs();
  RngStream rng(8);
  const std::vector<double> p = RandomBandExtreme(ref, 0, 10, rng);
  int interior = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double ratio = p[i] / ref[i];
    if (ratio > 1e-12 && ratio < 10 - 1e-9) ++interior;
  }
  EXPECT_LE(interior, 1);
}

}  // namespace
}  // namespace ldp_sampling
