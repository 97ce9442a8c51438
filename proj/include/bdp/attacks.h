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

#ifndef BDP_ATTACKS_H_
#define BDP_ATTACKS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "bdp/bit_series.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"

namespace bdp {

// Positions are 1-based. Attackers are given the true model parameters.

// Guesses x_i = z_i.
absl::StatusOr<int> AttackSingleBit(const BitSeries& z, std::size_t i);

// Posterior mode at position i; 0 on ties.
absl::StatusOr<int> AttackCorrelationAware(const BinaryMarkovChain& chain,
                                           const NoiseParams& noise,
                                           const BitSeries& z, std::size_t i);

// Posterior mode at every position, from one forward-backward pass.
absl::StatusOr<BitSeries> AttackCorrelationAwareAll(
    const BinaryMarkovChain& chain, const NoiseParams& noise,
    const BitSeries& z);

// Reconstructs the whole series with Viterbi.
absl::StatusOr<BitSeries> AttackViterbi(const BinaryMarkovChain& chain,
                                        const NoiseParams& noise,
                                        const BitSeries& z);

struct AttackReport {
  std::string name;
  std::vector<std::uint8_t> indicators;  // 1 where the guess was right
  double accuracy = 0.0;
  double standard_error = 0.0;  // sqrt(p (1 - p) / trials)
};

// Accuracy of `guesses` against `truth`, position by position.
absl::StatusOr<AttackReport> Evaluate(std::string name, const BitSeries& truth,
                                      const BitSeries& guesses);

// Accuracy of a single guess of bit i (1-based).
absl::StatusOr<AttackReport> Evaluate(std::string name, const BitSeries& truth,
                                      std::size_t i, int guess);

// Report over independent trials given their success indicators.
AttackReport Summarize(std::string name, std::vector<std::uint8_t> indicators);

}  // namespace bdp

#endif  // BDP_ATTACKS_H_
