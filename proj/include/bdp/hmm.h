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

#ifndef BDP_HMM_H_
#define BDP_HMM_H_

#include <array>
#include <cstddef>
#include <vector>

#include "absl/status/statusor.h"
#include "bdp/bit_series.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"

namespace bdp {

// Throughout this header `i` is a 1-based position in the chain, so that it
// lines up with the index in the privacy formulas. z[i - 1] is z_i.

using LogPair = std::array<double, 2>;

// log alpha_t(x) = log Pr[Z_{1:t} = z_{1:t} | X_t = x] for t in [0, n] and
// log beta_t(x) = log Pr[Z_{t+1:n} = z_{t+1:n} | X_t = x] for t in [1, n].
class LikelihoodTables {
 public:
  LikelihoodTables(std::vector<LogPair> alpha, std::vector<LogPair> beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  std::size_t size() const { return alpha_.size() - 1; }
  double LogAlpha(std::size_t t, int x) const { return alpha_[t][x]; }
  double LogBeta(std::size_t t, int x) const { return beta_[t][x]; }
  // log Pr[Z = z | X_i = x].
  double LogLikelihood(std::size_t i, int x) const {
    return alpha_[i][x] + beta_[i][x];
  }

 private:
  std::vector<LogPair> alpha_;  // n + 1 rows
  std::vector<LogPair> beta_;   // n + 1 rows, row 0 unused
};

// Both recurrences need 0 < q, r < 0.5 and a nonempty z.
absl::StatusOr<std::vector<LogPair>> Forward(const BinaryMarkovChain& chain,
                                             const NoiseParams& noise,
                                             const BitSeries& z);
absl::StatusOr<std::vector<LogPair>> Backward(const BinaryMarkovChain& chain,
                                              const NoiseParams& noise,
                                              const BitSeries& z);
absl::StatusOr<LikelihoodTables> ComputeTables(const BinaryMarkovChain& chain,
                                               const NoiseParams& noise,
                                               const BitSeries& z);

absl::StatusOr<double> LogLikelihoodGivenState(const BinaryMarkovChain& chain,
                                               const NoiseParams& noise,
                                               const BitSeries& z,
                                               std::size_t i, int x);

// (Pr[X_i = 0 | z], Pr[X_i = 1 | z]).
absl::StatusOr<std::array<double, 2>> Posterior(const BinaryMarkovChain& chain,
                                                const NoiseParams& noise,
                                                const BitSeries& z,
                                                std::size_t i);

// Most probable hidden sequence. Among optimal sequences the
// lexicographically smallest is returned, i.e. 0 is preferred at the earliest
// position where optimal sequences differ.
absl::StatusOr<BitSeries> Viterbi(const BinaryMarkovChain& chain,
                                  const NoiseParams& noise, const BitSeries& z);

// log Pr[x_{1:n}] + log Pr[z | x_{1:n}]; the quantity Viterbi maximizes.
absl::StatusOr<double> LogJointProbability(const BinaryMarkovChain& chain,
                                           const NoiseParams& noise,
                                           const BitSeries& x,
                                           const BitSeries& z);

// Correlated XOR mechanism. Inference runs over the product chain (X_t, Y_t);
// since z_t = x_t XOR y_t, only two of its four states are consistent with
// each observation. Row i - 1 holds log Pr[Z = z | X_i = x] for x = 0, 1.
absl::StatusOr<std::vector<LogPair>> CorrelatedLogLikelihoods(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    const BitSeries& z);
absl::StatusOr<double> CorrelatedLogLikelihood(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    const BitSeries& z, std::size_t i, int x);

}  // namespace bdp

#endif  // BDP_HMM_H_
