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

#ifndef BDP_MARKOV_CHAIN_H_
#define BDP_MARKOV_CHAIN_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "bdp/bit_series.h"
#include "bdp/random.h"

namespace bdp {

// Lazy two-state chain with transition matrix
//
//   P = | 1 - q    q   |
//       |   r    1 - r |
//
// Construction only requires 0 <= q, r < 0.5. Operations that need a
// stationary distribution additionally require q + r > 0, and the privacy
// formulas require q, r > 0.
class BinaryMarkovChain {
 public:
  static absl::StatusOr<BinaryMarkovChain> Create(double q, double r);
  static absl::StatusOr<BinaryMarkovChain> Symmetric(double theta) {
    return Create(theta, theta);
  }

  double q() const { return q_; }
  double r() const { return r_; }
  double Transition(int from, int to) const;
  bool IsSymmetric() const { return q_ == r_; }
  bool IsDegenerate() const { return q_ + r_ == 0.0; }

  // (pi0, pi1) = (r / (q + r), q / (q + r)).
  absl::StatusOr<std::array<double, 2>> Stationary() const;

  // Same chain with the state labels exchanged (q <-> r).
  BinaryMarkovChain Swapped() const { return BinaryMarkovChain(r_, q_); }

 private:
  BinaryMarkovChain(double q, double r) : q_(q), r_(r) {}

  double q_;
  double r_;
};

// Detailed balance pi(x) P(x, x') = pi(x') P(x', x) within `tolerance`.
bool IsReversible(const BinaryMarkovChain& chain, double tolerance = 1e-12);

// Stationary start, then Markov transitions. X_1 = 1 iff u < pi1.
absl::StatusOr<BitSeries> Sample(const BinaryMarkovChain& chain, std::size_t n,
                                 RandomSeed seed);

// Stationary sampling for any two-state chain with 0 -> 1 probability `p01`
// and 1 -> 0 probability `p10` in [0, 1], not necessarily lazy.
absl::StatusOr<BitSeries> SampleTwoStateChain(double p01, double p10,
                                              std::size_t n, RandomSeed seed);

inline constexpr double kEstimateClampLow = 1e-6;
inline constexpr double kEstimateClampHigh = 0.5 - 1e-6;

struct ChainEstimate {
  BinaryMarkovChain chain;
  double raw_q;
  double raw_r;
  // True when either raw estimate fell outside [kEstimateClampLow,
  // kEstimateClampHigh] and was moved to the nearest bound.
  bool clamped;
};

// q = #(0->1) / #(pairs starting at 0), r = #(1->0) / #(pairs starting at 1).
absl::StatusOr<ChainEstimate> Estimate(const BitSeries& bits);

// 1 iff value > arithmetic mean; values equal to the mean map to 0.
absl::StatusOr<BitSeries> Binarize(std::span<const double> series);

// Plain text, one decimal number per line; '#' comment lines and blank lines
// are skipped. Parsing is locale-independent.
absl::StatusOr<std::vector<double>> ParseRealSeries(absl::string_view text);
absl::StatusOr<std::vector<double>> ReadRealSeriesFile(const std::string& path);

}  // namespace bdp

#endif  // BDP_MARKOV_CHAIN_H_
