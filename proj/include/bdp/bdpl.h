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

#ifndef BDP_BDPL_H_
#define BDP_BDPL_H_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "absl/status/statusor.h"
#include "bdp/bit_series.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"

namespace bdp {

inline constexpr std::size_t kMaxBdplLength = 12;

// Attacker targeting position i (1-based) who knows the tuples at `known`
// (1-based, sorted, without i).
class Adversary {
 public:
  static absl::StatusOr<Adversary> Create(std::size_t i,
                                          std::vector<std::size_t> known,
                                          std::size_t n);

  std::size_t i() const { return i_; }
  const std::vector<std::size_t>& known() const { return known_; }
  std::size_t n() const { return n_; }
  bool IsKnown(std::size_t t) const;
  // Same adversary without knowledge of tuple t.
  Adversary Forget(std::size_t t) const;

 private:
  Adversary(std::size_t i, std::vector<std::size_t> known, std::size_t n)
      : i_(i), known_(std::move(known)), n_(n) {}

  std::size_t i_;
  std::vector<std::size_t> known_;
  std::size_t n_;
};

struct BdplResult {
  // sup over z and x_K of
  //   log Pr[z | X_i = x, X_K = x_K] - log Pr[z | X_i = 1 - x, X_K = x_K]
  // for x = 0 and x = 1.
  double log_bdpl_by_state[2];
  // The maximizing assignment over both directions. Ties keep the
  // lexicographically first (z, x_K), direction 0 first.
  int x_i;
  BitSeries z;
  std::vector<int> known_values;

  double log_bdpl() const {
    return std::max(log_bdpl_by_state[0], log_bdpl_by_state[1]);
  }
};

// Exact BDPL by enumeration over every hidden sequence and observation.
// Requires 0 < q, r and n <= kMaxBdplLength.
absl::StatusOr<BdplResult> ExhaustiveBdpl(const BinaryMarkovChain& chain,
                                          const NoiseParams& noise,
                                          const Adversary& adversary);

// log Pr[z = 0 | X_i = 0, X_K = 0] - log Pr[z = 0 | X_i = 1, X_K = 0], the
// loss at the all-zero assignment.
absl::StatusOr<double> AllZeroLogLoss(const BinaryMarkovChain& chain,
                                      const NoiseParams& noise,
                                      const Adversary& adversary);

// Ignorant adversary (K empty) against the XOR mechanism: the largest
// |log LR| over all z and positions, by forward-backward on the product
// chain. Requires n <= kMaxBdplLength.
absl::StatusOr<double> CorrelatedIgnorantLogBdpl(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    std::size_t n);

// The same quantity for the independent mechanism.
absl::StatusOr<double> IndependentIgnorantLogBdpl(
    const BinaryMarkovChain& chain, const NoiseParams& noise, std::size_t n);

}  // namespace bdp

#endif  // BDP_BDPL_H_
