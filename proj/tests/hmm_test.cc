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

#include "bdp/hmm.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bdp/hmm_oracle.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace bdp {
namespace {

struct Instance {
  BinaryMarkovChain chain;
  NoiseParams noise;
  BitSeries z;
};

Instance RandomInstance(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> param(0.02, 0.48);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = coin(gen);
  auto chain = BinaryMarkovChain::Create(param(gen), param(gen));
  auto noise = NoiseParams::Create(param(gen), param(gen));
  return {*chain, *noise, *BitSeries::FromBits(bits)};
}

double RelativeError(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Pr[Z_{t+1:n} = z_{t+1:n} | X_t = x] by enumerating the hidden suffix.
double SuffixProbability(const BinaryMarkovChain& chain,
                         const NoiseParams& noise, const BitSeries& z,
                         std::size_t t, int x) {
  const std::size_t m = z.size() - t;
  double total = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    const BitSeries tail = BitSeries::FromInteger(v, m);
    double p = 1.0;
    int prev = x;
    for (std::size_t k = 0; k < m; ++k) {
      p *= chain.Transition(prev, tail[k]) * noise.Emission(tail[k], z[t + k]);
      prev = tail[k];
    }
    total += p;
  }
  return total;
}

// Joint Pr[X = x, Z = z].
double Joint(const BinaryMarkovChain& chain, const NoiseParams& noise,
             const BitSeries& x, const BitSeries& z) {
  const auto pi = *chain.Stationary();
  double p = pi[x[0]] * noise.Emission(x[0], z[0]);
  for (std::size_t t = 1; t < x.size(); ++t) {
    p *= chain.Transition(x[t - 1], x[t]) * noise.Emission(x[t], z[t]);
  }
  return p;
}

TEST(ForwardTest, SingleStep) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.3);
  const NoiseParams noise = *NoiseParams::Create(0.1, 0.4);
  for (int z1 : {0, 1}) {
    auto alpha = Forward(chain, noise, *BitSeries::FromBits({uint8_t(z1)}));
    ASSERT_TRUE(alpha.ok());
    EXPECT_EQ((*alpha)[0][0], 0.0);
    EXPECT_EQ((*alpha)[0][1], 0.0);
    for (int x : {0, 1}) {
      EXPECT_NEAR(std::exp((*alpha)[1][x]), noise.Emission(x, z1), 1e-15);
    }
  }
}

TEST(ForwardBackwardTest, UninformativeNoise) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.1, 0.35);
  const NoiseParams noise = *NoiseParams::Create(0.5, 0.5);
  const BitSeries z = *BitSeries::Parse("0110100");
  const LikelihoodTables tables = *ComputeTables(chain, noise, z);
  const std::size_t n = z.size();
  for (std::size_t t = 1; t <= n; ++t) {
    for (int x : {0, 1}) {
      EXPECT_NEAR(tables.LogAlpha(t, x), -static_cast<double>(t) * std::log(2), 1e-12);
      EXPECT_NEAR(tables.LogBeta(t, x), -static_cast<double>(n - t) * std::log(2),
                  1e-12);
      EXPECT_NEAR(tables.LogLikelihood(t, x), -static_cast<double>(n) * std::log(2),
                  1e-12);
    }
  }
}

TEST(ForwardBackwardTest, BackwardMatchesSuffixEnumeration) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomInstance(gen, 9);
    const LikelihoodTables tables = *ComputeTables(inst.chain, inst.noise, inst.z);
    for (std::size_t t = 1; t <= inst.z.size(); ++t) {
      for (int x : {0, 1}) {
        const double want = SuffixProbability(inst.chain, inst.noise, inst.z, t, x);
        EXPECT_LT(RelativeError(std::exp(tables.LogBeta(t, x)), want), 1e-10);
      }
    }
  }
}

TEST(ForwardBackwardTest, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Instance inst = RandomInstance(gen, n);
    const LikelihoodTables tables = *ComputeTables(inst.chain, inst.noise, inst.z);
    for (std::size_t i = 1; i <= n; ++i) {
      for (int x : {0, 1}) {
        const double want =
            *BruteForceLogLikelihood(inst.chain, inst.noise, inst.z, i, x);
        EXPECT_LT(RelativeError(std::exp(tables.LogLikelihood(i, x)), std::exp(want)),
                  1e-10)
            << "trial " << trial << " i " << i << " x " << x;
      }
    }
    // alpha_n alone is the full likelihood given X_n.
    for (int x : {0, 1}) {
      const double want =
          *BruteForceLogLikelihood(inst.chain, inst.noise, inst.z, n, x);
      EXPECT_LT(RelativeError(std::exp(tables.LogAlpha(n, x)), std::exp(want)), 1e-10);
    }
  }
}

TEST(ForwardBackwardTest, LikelihoodsSumToOne) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.15, 0.4);
  const NoiseParams noise = *NoiseParams::Create(0.2, 0.35);
  const std::size_t n = 12;
  double totals[3][2] = {};
  const std::size_t positions[3] = {1, 6, 12};
  for (std::uint64_t v = 0; v < (1u << n); ++v) {
    const LikelihoodTables tables =
        *ComputeTables(chain, noise, BitSeries::FromInteger(v, n));
    for (int k = 0; k < 3; ++k) {
      for (int x : {0, 1}) totals[k][x] += std::exp(tables.LogLikelihood(positions[k], x));
    }
  }
  for (auto& row : totals) {
    EXPECT_NEAR(row[0], 1.0, 1e-9);
    EXPECT_NEAR(row[1], 1.0, 1e-9);
  }
}

TEST(ForwardBackwardTest, LongSeriesStaysFinite) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.0893, 0.1092);
  const NoiseParams noise = *NoiseParams::Create(0.3, 0.35);
  const BitSeries x = *Sample(chain, 30000, 3);
  const BitSeries z = SanitizeIndependent(x, noise, 4);
  const LikelihoodTables tables = *ComputeTables(chain, noise, z);
  for (std::size_t i = 1; i <= z.size(); i += 997) {
    EXPECT_TRUE(std::isfinite(tables.LogLikelihood(i, 0)));
    EXPECT_TRUE(std::isfinite(tables.LogLikelihood(i, 1)));
  }
  EXPECT_TRUE(std::isfinite(*LogLikelihoodGivenState(chain, noise, z, 30000, 1)));
}

TEST(ForwardBackwardTest, DomainErrors) {
  const NoiseParams noise = *NoiseParams::Create(0.2, 0.2);
  const BitSeries z = *BitSeries::Parse("010");
  EXPECT_FALSE(Forward(*BinaryMarkovChain::Create(0.0, 0.2), noise, z).ok());
  EXPECT_FALSE(Backward(*BinaryMarkovChain::Create(0.2, 0.0), noise, z).ok());
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.2);
  EXPECT_EQ(LogLikelihoodGivenState(chain, noise, z, 0, 0).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_EQ(LogLikelihoodGivenState(chain, noise, z, 4, 0).status().code(),
            absl::StatusCode::kOutOfRange);
  EXPECT_FALSE(Forward(chain, noise, BitSeries()).ok());
}

TEST(BruteForceTest, SingleEmission) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.3);
  const NoiseParams noise = *NoiseParams::Create(0.1, 0.4);
  EXPECT_NEAR(*BruteForceLogLikelihood(chain, noise, *BitSeries::Parse("1"), 1, 0),
              std::log(0.1), 1e-15);
  EXPECT_NEAR(*BruteForceLogLikelihood(chain, noise, *BitSeries::Parse("1"), 1, 1),
              std::log(0.6), 1e-15);
}

TEST(BruteForceTest, UninformativeAndSizeGuard) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.3);
  const NoiseParams half = *NoiseParams::Create(0.5, 0.5);
  EXPECT_NEAR(*BruteForceLogLikelihood(chain, half, BitSeries::Zeros(6), 3, 1),
              -6 * std::log(2.0), 1e-12);
  EXPECT_FALSE(BruteForceLogLikelihood(chain, half, BitSeries::Zeros(21), 1, 0).ok());
}

TEST(PosteriorTest, UninformativeNoiseGivesPrior) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.35);
  const NoiseParams noise = *NoiseParams::Create(0.5, 0.5);
  const auto pi = *chain.Stationary();
  for (const char* text : {"0000", "1011", "1111"}) {
    const auto post = *Posterior(chain, noise, *BitSeries::Parse(text), 2);
    EXPECT_NEAR(post[0], pi[0], 1e-12);
    EXPECT_NEAR(post[1], pi[1], 1e-12);
  }
}

TEST(PosteriorTest, NoiselessLimit) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.35);
  const NoiseParams noise = *NoiseParams::Create(1e-12, 1e-12);
  const BitSeries z = *BitSeries::Parse("0110");
  for (std::size_t i = 1; i <= z.size(); ++i) {
    EXPECT_GT((*Posterior(chain, noise, z, i))[z[i - 1]], 1.0 - 1e-9);
  }
}

TEST(PosteriorTest, MatchesBayesRuleFromJointEnumeration) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10;
    const Instance inst = RandomInstance(gen, n);
    std::vector<double> mass(n, 0.0);  // Pr[X_i = 1, Z = z]
    double total = 0.0;
    for (std::uint64_t v = 0; v < (1u << n); ++v) {
      const BitSeries x = BitSeries::FromInteger(v, n);
      const double p = Joint(inst.chain, inst.noise, x, inst.z);
      total += p;
      for (std::size_t t = 0; t < n; ++t) {
        if (x[t]) mass[t] += p;
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      const auto post = *Posterior(inst.chain, inst.noise, inst.z, i);
      EXPECT_NEAR(post[0] + post[1], 1.0, 1e-12);
      EXPECT_NEAR(post[1], mass[i - 1] / total, 1e-10);
      // The posterior mode is the single-bit MAP.
      const bool map_is_one = mass[i - 1] > total - mass[i - 1];
      EXPECT_EQ(post[1] > post[0], map_is_one);
    }
  }
}

TEST(ViterbiTest, NoiselessReturnsObservation) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.35);
  const NoiseParams noise = *NoiseParams::Create(1e-12, 1e-12);
  const BitSeries z = *BitSeries::Parse("0110100111");
  EXPECT_EQ(*Viterbi(chain, noise, z), z);
}

TEST(ViterbiTest, ThreeBitExample) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.2);
  const NoiseParams noise = *NoiseParams::Create(0.4, 0.4);
  const BitSeries z = *BitSeries::Parse("010");
  // The noisy middle bit is smoothed away.
  EXPECT_EQ(Viterbi(chain, noise, z)->ToString(), "000");
  EXPECT_EQ(*Viterbi(chain, noise, z), *BruteForceViterbi(chain, noise, z));
}

TEST(ViterbiTest, TiesPreferZero) {
  // Symmetric chain and noise with uninformative emissions: every constant
  // path is optimal, and 0...0 is lexicographically first.
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.2, 0.2);
  const NoiseParams noise = *NoiseParams::Create(0.5, 0.5);
  EXPECT_EQ(*Viterbi(chain, noise, *BitSeries::Parse("1111")),
            BitSeries::Zeros(4));
}

TEST(ViterbiTest, MatchesExhaustiveSearch) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Instance inst = RandomInstance(gen, n);
    const BitSeries path = *Viterbi(inst.chain, inst.noise, inst.z);
    const BitSeries best = *BruteForceViterbi(inst.chain, inst.noise, inst.z, 1e-12);
    EXPECT_NEAR(*LogJointProbability(inst.chain, inst.noise, path, inst.z),
                *LogJointProbability(inst.chain, inst.noise, best, inst.z), 1e-12);
    EXPECT_EQ(path, best) << "trial " << trial;
  }
}

TEST(ViterbiTest, AtLeastAsLikelyAsTruth) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(0.1, 0.2);
  const NoiseParams noise = *NoiseParams::Create(0.3, 0.25);
  for (RandomSeed seed = 0; seed < 10; ++seed) {
    const BitSeries x = *Sample(chain, 200, seed);
    const BitSeries z = SanitizeIndependent(x, noise, seed + 100);
    const BitSeries path = *Viterbi(chain, noise, z);
    EXPECT_GE(*LogJointProbability(chain, noise, path, z) + 1e-9,
              *LogJointProbability(chain, noise, x, z));
  }
}

TEST(CorrelatedLikelihoodTest, ComplementaryNoiseMatchesIndependent) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> param(0.05, 0.45);
  for (int trial = 0; trial < 20; ++trial) {
    const double rho = param(gen);
    const Instance inst = RandomInstance(gen, 15);
    const CorrelatedNoiseChain noise = *CorrelatedNoiseChain::Create(rho, 1 - rho);
    const NoiseParams independent = *NoiseParams::Symmetric(rho);
    const auto corr = *CorrelatedLogLikelihoods(inst.chain, noise, inst.z);
    const LikelihoodTables tables = *ComputeTables(inst.chain, independent, inst.z);
    for (std::size_t i = 1; i <= inst.z.size(); ++i) {
      for (int x : {0, 1}) {
        EXPECT_NEAR(corr[i - 1][x], tables.LogLikelihood(i, x), 1e-10);
      }
    }
  }
}

TEST(CorrelatedLikelihoodTest, MatchesPairEnumeration) {
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> param(0.05, 0.95);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = trial < 4 ? 10 : 1 + trial % 8;
    const Instance inst = RandomInstance(gen, n);
    const CorrelatedNoiseChain noise =
        *CorrelatedNoiseChain::Create(param(gen), param(gen));
    const auto corr = *CorrelatedLogLikelihoods(inst.chain, noise, inst.z);
    const std::size_t positions[] = {1, (n + 1) / 2, n};
    for (std::size_t i : positions) {
      for (int x : {0, 1}) {
        const double want =
            *BruteForceCorrelatedLogLikelihood(inst.chain, noise, inst.z, i, x);
        EXPECT_LT(RelativeError(std::exp(corr[i - 1][x]), std::exp(want)), 1e-10);
        EXPECT_DOUBLE_EQ(*CorrelatedLogLikelihood(inst.chain, noise, inst.z, i, x),
                         corr[i - 1][x]);
      }
    }
  }
}

TEST(CorrelatedLikelihoodTest, FrozenDataChainSeesPureNoise) {
  const BinaryMarkovChain chain = *BinaryMarkovChain::Create(1e-12, 1e-12);
  const CorrelatedNoiseChain noise = *CorrelatedNoiseChain::Create(0.2, 0.6);
  const BitSeries z = *SampleTwoStateChain(0.2, 0.6, 12, 3);
  double log_noise = std::log(z[0] ? 0.25 : 0.75);
  for (std::size_t t = 1; t < z.size(); ++t) {
    log_noise += std::log(noise.Transition(z[t - 1], z[t]));
  }
  EXPECT_NEAR(*CorrelatedLogLikelihood(chain, noise, z, 5, 0), log_noise, 1e-9);
}

}  // namespace
}  // namespace bdp
