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

#ifndef BDP_HMM_ORACLE_H_
#define BDP_HMM_ORACLE_H_

#include <cstddef>

#include "absl/status/statusor.h"
#include "bdp/bit_series.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"

namespace bdp {

// Exhaustive reference implementations. They share no code with hmm.cc
// beyond the parameter types, and exist to check it.

inline constexpr std::size_t kMaxOracleLength = 20;
inline constexpr std::size_t kMaxCorrelatedOracleLength = 10;

// log Pr[Z = z | X_i = x] by summing the joint probability of every hidden
// sequence with X_i = x and dividing by pi(x). `i` is 1-based.
absl::StatusOr<double> BruteForceLogLikelihood(const BinaryMarkovChain& chain,
                                               const NoiseParams& noise,
                                               const BitSeries& z,
                                               std::size_t i, int x);

// Lexicographically first hidden sequence of maximal joint probability.
// Sequences within `tie_tolerance` (in log space) of the best one count as
// ties.
absl::StatusOr<BitSeries> BruteForceViterbi(const BinaryMarkovChain& chain,
                                            const NoiseParams& noise,
                                            const BitSeries& z,
                                            double tie_tolerance = 0.0);

// Same as BruteForceLogLikelihood for the XOR mechanism, enumerating all
// 4^n pairs of data and noise sequences.
absl::StatusOr<double> BruteForceCorrelatedLogLikelihood(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    const BitSeries& z, std::size_t i, int x);

}  // namespace bdp

#endif  // BDP_HMM_ORACLE_H_
