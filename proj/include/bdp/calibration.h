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

#ifndef BDP_CALIBRATION_H_
#define BDP_CALIBRATION_H_

#include <cstddef>

#include "absl/status/statusor.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"

namespace bdp {

// Largest noise level the calibration searches will return. The bounds are
// only defined for rho < 0.5.
inline constexpr double kRhoCeiling = 0.5 - 1e-12;

// Symmetric randomized-response noise giving epsilon-DP: 1 / (e^eps + 1).
absl::StatusOr<double> DpNoise(double epsilon);

// Closed-form noise level that is sufficient (not minimal) for epsilon-BDP on
// a symmetric chain. Evaluated in a rearranged form that never computes e^eps.
absl::StatusOr<double> RhoSufficientSymmetric(double theta, double epsilon);

// Smallest rho with LrBoundSymmetric(theta, rho) <= e^eps, by bisection on the
// log bound. The feasible end of the final bracket is returned.
absl::StatusOr<double> CalibrateSymmetricExact(double theta, double epsilon);

// Minimizes the expected noise pi0 rho0 + pi1 rho1 subject to both LrBound
// directions being at most e^eps.
struct AsymmetricCalibration {
  NoiseParams noise;
  double expected_noise;
};
absl::StatusOr<AsymmetricCalibration> CalibrateAsymmetric(
    const BinaryMarkovChain& chain, double epsilon);

// Noise from the epsilon_3 reduction eps_3 = eps - 6 ln((1 - theta) / theta).
// `defined` is false when eps_3 <= 0; rho is still evaluated then.
struct ZhaoNoise {
  double effective_epsilon;
  double rho;
  bool defined;
};
// rho = 2 (1 - theta)^6 / (theta^6 e^eps + (1 - theta)^6), with the leading
// factor of 2 kept.
absl::StatusOr<ZhaoNoise> ZhaoEps3NoisePrinted(double theta, double epsilon);
// rho = DpNoise(eps_3), i.e. the same expression without the factor of 2.
absl::StatusOr<ZhaoNoise> ZhaoEps3NoiseSubstituted(double theta,
                                                   double epsilon);

// eps_6 = max over t in [1, floor(n / 2)] of
// (eps - 6 ln((1 + m^t) / (1 - m^t))) / (2t - 1) with m = 1 - 2 theta, and
// rho = DpNoise(eps_6). `defined` is false when eps_6 <= 0 (rho is then NaN).
absl::StatusOr<ZhaoNoise> ZhaoEps6Noise(double theta, double epsilon,
                                        std::size_t n);

}  // namespace bdp

#endif  // BDP_CALIBRATION_H_
