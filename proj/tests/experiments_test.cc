// Copyright 2026 The bdp-markov Authors
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

#include "bdp/experiments.h"

#include <cmath>
#include <string>

#include "bdp/calibration.h"
#include "bdp/privacy_bounds.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace bdp {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::testing::Optional;

TEST(LinearGridTest, InclusiveEnds) {
  EXPECT_THAT(LinearGrid(1.0, 2.0, 0.25), ElementsAre(1.0, 1.25, 1.5, 1.75, 2.0));
  EXPECT_EQ(LinearGrid(1.0, 4.0, 0.25).size(), 13u);
  EXPECT_THAT(LinearGrid(3.0, 3.0, 0.5), ElementsAre(3.0));
}

TEST(ChargedEpsilonTest, Values) {
  EXPECT_NEAR(*ChargedEpsilon(0.5), 0.0, 1e-15);
  EXPECT_NEAR(*ChargedEpsilon(0.622), 0.4985, 1e-3);
  for (double eps : {0.1, 0.5, 2.0}) {
    EXPECT_NEAR(*ChargedEpsilon(SuccessBoundDp(eps)), eps, 1e-12);
  }
  EXPECT_FALSE(ChargedEpsilon(0.0).ok());
  EXPECT_FALSE(ChargedEpsilon(1.0).ok());
}

DpInsufficiencyConfig SmallDpConfig() {
  DpInsufficiencyConfig config;
  config.thetas = {0.0, 0.05, 0.475};
  config.databases = 20;
  config.sanitizations = 200;
  return config;
}

TEST(DpInsufficiencyTest, SmallRun) {
  const DpInsufficiencyResult result = *RunDpInsufficiency(SmallDpConfig());
  EXPECT_NEAR(result.rho, *DpNoise(0.5), 1e-15);
  ASSERT_EQ(result.rows.size(), 3u);
  for (const DpInsufficiencyRow& row : result.rows) {
    EXPECT_EQ(row.single_bit.indicators.size(), 4000u);
    EXPECT_LE(row.single_bit.accuracy,
              SuccessBoundDp(0.5) + 3 * row.single_bit.standard_error);
  }
  // Strong correlation lets the posterior attacker beat the DP bound.
  EXPECT_GT(result.rows[1].correlation_aware.accuracy, 0.7);
  EXPECT_THAT(result.rows[1].charged_correlation_aware, Optional(testing::Gt(1.0)));
  const DpInsufficiencyRow& loose = result.rows[2];
  EXPECT_NEAR(loose.correlation_aware.accuracy, loose.single_bit.accuracy,
              3 * loose.single_bit.standard_error);

  const ResultTable success = result.SuccessTable();
  EXPECT_EQ(success.columns(), kSuccessColumns);
  EXPECT_THAT(success.Get(1, 0), Optional(0.05));
  EXPECT_THAT(success.Get(1, 2), Optional(result.rows[1].correlation_aware.accuracy));
  EXPECT_EQ(result.ChargedTable().columns(), kChargedColumns);
}

TEST(DpInsufficiencyTest, Deterministic) {
  DpInsufficiencyConfig config = SmallDpConfig();
  config.databases = 5;
  const std::string a = RunDpInsufficiency(config)->SuccessTable().ToCsv();
  const std::string b = RunDpInsufficiency(config)->SuccessTable().ToCsv();
  EXPECT_EQ(a, b);
  config.seed = 2;
  EXPECT_NE(RunDpInsufficiency(config)->SuccessTable().ToCsv(), a);
}

TEST(DpInsufficiencyTest, Validation) {
  DpInsufficiencyConfig config = SmallDpConfig();
  config.thetas = {0.5};
  EXPECT_FALSE(RunDpInsufficiency(config).ok());
  config = SmallDpConfig();
  config.target = 31;
  EXPECT_FALSE(RunDpInsufficiency(config).ok());
  config = SmallDpConfig();
  config.sanitizations = 0;
  EXPECT_FALSE(RunDpInsufficiency(config).ok());
}

TEST(NoisePrivacyTest, OrderingAndPlumbing) {
  const std::vector<NoisePrivacyRow> rows = *RunNoisePrivacyComparison({});
  ASSERT_EQ(rows.size(), 13u);
  for (const NoisePrivacyRow& row : rows) {
    EXPECT_DOUBLE_EQ(row.rho_exact, *CalibrateSymmetricExact(0.35, row.epsilon));
    EXPECT_DOUBLE_EQ(row.rho_closed_form, *RhoSufficientSymmetric(0.35, row.epsilon));
    EXPECT_LE(row.rho_exact, row.rho_closed_form);
    ASSERT_TRUE(row.rho_zhao.has_value());
    EXPECT_LE(row.rho_closed_form, *row.rho_zhao);
  }
  const ResultTable table = NoisePrivacyTable(rows);
  EXPECT_EQ(table.columns(), kNoisePrivacyColumns);
  EXPECT_EQ(table.num_rows(), 13u);
}

TEST(NoisePrivacyTest, InfeasibleZhaoRowIsKeptAndEmpty) {
  NoisePrivacyConfig config;
  config.theta = 0.1;
  config.n = 2;
  config.epsilons = {0.5, 14.0};
  const std::vector<NoisePrivacyRow> rows = *RunNoisePrivacyComparison(config);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].rho_zhao.has_value());
  EXPECT_TRUE(rows[1].rho_zhao.has_value());
  const ResultTable table = NoisePrivacyTable(rows);
  EXPECT_EQ(table.Get(0, 1), std::nullopt);
}

TEST(ReconstructionTest, SyntheticRunStaysBelowBound) {
  ReconstructionConfig config;
  config.n = 4000;
  config.epsilons = {1.0, 2.5, 4.0};
  const ReconstructionResult result = *RunReconstructionVsBound(config);
  EXPECT_DOUBLE_EQ(result.chain.q(), 0.0893);
  ASSERT_EQ(result.rows.size(), 3u);
  for (const ReconstructionRow& row : result.rows) {
    EXPECT_LE(row.viterbi.accuracy, row.bdp_bound + 3 * row.viterbi.standard_error);
    EXPECT_DOUBLE_EQ(row.bdp_bound, *SuccessBoundBdp(result.chain, row.epsilon));
  }
  const ResultTable table = result.Table();
  EXPECT_EQ(table.columns(), kReconstructionColumns);
  EXPECT_EQ(table.Get(0, 2), std::nullopt);
}

TEST(ReconstructionTest, LargeBudgetApproachesNoiseless) {
  ReconstructionConfig config;
  config.n = 3000;
  config.epsilons = {10.0};
  const ReconstructionResult result = *RunReconstructionVsBound(config);
  EXPECT_GT(result.rows[0].viterbi.accuracy, 0.99);
  EXPECT_GT(result.rows[0].bdp_bound, 0.9999);
}

TEST(ReconstructionTest, EstimatesChainFromData) {
  ReconstructionConfig config;
  config.data = *Sample(*BinaryMarkovChain::Create(0.2384, 0.3831), 5000, 3);
  config.epsilons = {2.0};
  const ReconstructionResult result = *RunReconstructionVsBound(config);
  EXPECT_NEAR(result.chain.q(), 0.2384, 0.03);
  EXPECT_NEAR(result.chain.r(), 0.3831, 0.03);
  EXPECT_FALSE(result.estimate_clamped);
  EXPECT_EQ(result.rows[0].viterbi.indicators.size(), 5000u);
}

TEST(ReconstructionTest, Deterministic) {
  ReconstructionConfig config;
  config.n = 500;
  config.epsilons = {1.0, 3.0};
  config.sanitizations = 2;
  EXPECT_EQ(RunReconstructionVsBound(config)->Table().ToCsv(),
            RunReconstructionVsBound(config)->Table().ToCsv());
}

TEST(MergeLstmColumnTest, FillsMatchingRows) {
  ResultTable table(kReconstructionColumns);
  ASSERT_TRUE(table.AddRow({1.0, 0.7, std::nullopt, 0.8}).ok());
  ASSERT_TRUE(table.AddRow({1.25, 0.72, std::nullopt, 0.82}).ok());
  ASSERT_TRUE(MergeLstmColumn(table, "eps,lstm_accuracy\n1.0000000001,0.65\n").ok());
  EXPECT_THAT(table.Get(0, 2), Optional(DoubleNear(0.65, 1e-15)));
  EXPECT_EQ(table.Get(1, 2), std::nullopt);
  EXPECT_FALSE(MergeLstmColumn(table, "eps,accuracy\n1,0.6\n").ok());
}

TEST(FeasibleRegionTest, LargerBudgetContainsSmaller) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.35);
  const ResultTable tight = *FeasibleRegion(chain, 0.5, 60);
  const ResultTable loose = *FeasibleRegion(chain, 2.0, 60);
  ASSERT_EQ(tight.num_rows(), 3600u);
  EXPECT_EQ(tight.columns(), kRegionColumns);
  std::size_t tight_count = 0, loose_count = 0;
  for (std::size_t k = 0; k < tight.num_rows(); ++k) {
    EXPECT_EQ(tight.Get(k, 0), loose.Get(k, 0));
    EXPECT_EQ(tight.Get(k, 1), loose.Get(k, 1));
    if (*tight.Get(k, 2) == 1.0) {
      EXPECT_EQ(*loose.Get(k, 2), 1.0);
      ++tight_count;
    }
    loose_count += *loose.Get(k, 2) == 1.0;
  }
  EXPECT_GT(tight_count, 0u);
  EXPECT_GT(loose_count, tight_count);
  EXPECT_THAT(tight.Get(0, 0), Optional(0.5 * 0.5 / 60));
}

TEST(FeasibleRegionTest, NearHalfCornerIsFeasible) {
  for (double eps : {0.01, 0.5, 2.0}) {
    EXPECT_TRUE(*IsFeasible(*BinaryMarkovChain::Create(0.2, 0.35),
                            *NoiseParams::Create(0.5 - 1e-7, 0.5 - 1e-7), eps));
  }
}

TEST(FeasibleRegionTest, AsymmetricCalibrationSitsOnTheBoundary) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.35);
  const double eps = 0.5;
  const NoiseParams noise = CalibrateAsymmetric(chain, eps)->noise;
  EXPECT_TRUE(*IsFeasible(chain, noise, eps));
  const double step = 0.5 / 200;
  if (noise.rho0() > step) {
    EXPECT_FALSE(*IsFeasible(
        chain, *NoiseParams::Create(noise.rho0() - step, noise.rho1()), eps));
  }
  if (noise.rho1() > step) {
    EXPECT_FALSE(*IsFeasible(
        chain, *NoiseParams::Create(noise.rho0(), noise.rho1() - step), eps));
  }
}

}  // namespace
}  // namespace bdp
