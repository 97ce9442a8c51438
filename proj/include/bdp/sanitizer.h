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

#ifndef BDP_SANITIZER_H_
#define BDP_SANITIZER_H_

#include <cstddef>
#include <cstdint>

#include "absl/status/statusor.h"
#include "bdp/bit_series.h"
#include "bdp/random.h"

namespace bdp {

// Per-state flip probabilities of the independent mechanism. The emission
// matrix is
//
//   B = | 1 - rho0   rho0   |
//       |   rho1   1 - rho1 |
//
// rho = 0.5 (pure noise) is accepted so that the uninformative limit can be
// evaluated directly; the privacy formulas require the open interval.
class NoiseParams {
 public:
  static absl::StatusOr<NoiseParams> Create(double rho0, double rho1);
  static absl::StatusOr<NoiseParams> Symmetric(double rho) {
    return Create(rho, rho);
  }

  double rho0() const { return rho0_; }
  double rho1() const { return rho1_; }
  double rho(int x) const { return x == 0 ? rho0_ : rho1_; }
  // B_{x,z}.
  double Emission(int x, int z) const {
    const double flip = rho(x);
    return z == x ? 1.0 - flip : flip;
  }
  NoiseParams Swapped() const { return NoiseParams(rho1_, rho0_); }

 private:
  NoiseParams(double rho0, double rho1) : rho0_(rho0), rho1_(rho1) {}

  double rho0_;
  double rho1_;
};

// Noise Markov chain for the XOR mechanism: 0 -> 1 with probability rho0,
// 1 -> 0 with probability rho1, started from its stationary distribution
// (rho1, rho0) / (rho0 + rho1).
class CorrelatedNoiseChain {
 public:
  // Requires both parameters in (0, 1).
  static absl::StatusOr<CorrelatedNoiseChain> Create(double rho0, double rho1);

  double rho0() const { return rho0_; }
  double rho1() const { return rho1_; }
  double Transition(int from, int to) const;
  double StationaryOne() const { return rho0_ / (rho0_ + rho1_); }
  // Marginal probability that an output bit differs from its input.
  double ExpectedFlipRate() const { return StationaryOne(); }
  // rho0 < rho1 and rho0 + rho1 <= 1, the regime the privacy analysis covers.
  // Sanitization works outside it too.
  bool WithinAnalyzedRegime() const {
    return rho0_ < rho1_ && rho0_ + rho1_ <= 1.0;
  }

 private:
  CorrelatedNoiseChain(double rho0, double rho1) : rho0_(rho0), rho1_(rho1) {}

  double rho0_;
  double rho1_;
};

// Sanitizes bit `t` of a series on its own. Depends only on (bit, noise,
// seed, t), so tuple owners can run it locally and get the same output as
// SanitizeIndependent.
int SanitizeBit(int bit, const NoiseParams& noise, RandomSeed seed,
                std::uint64_t t);

BitSeries SanitizeIndependent(const BitSeries& bits, const NoiseParams& noise,
                              RandomSeed seed);

// z_t = x_t XOR y_t with y sampled from the noise chain.
BitSeries SanitizeCorrelated(const BitSeries& bits,
                             const CorrelatedNoiseChain& noise,
                             RandomSeed seed);

}  // namespace bdp

#endif  // BDP_SANITIZER_H_
