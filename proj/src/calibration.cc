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

#include "bdp/calibration.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "bdp/privacy_bounds.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

absl::Status CheckTheta(double theta) {
  if (!(theta > 0.0 && theta < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("theta must lie in (0, 0.5); got ", theta));
  }
  return absl::OkStatus();
}

absl::Status CheckEpsilon(double epsilon) {
  return PrivacyBudget::Create(epsilon).status();
}

// Smallest x in (lo, hi] with feasible(x), assuming feasibility is monotone
// increasing in x and feasible(hi) holds. Stops when the bracket cannot be
// split any further.
template <typename Feasible>
double BisectFeasible(double lo, double hi, Feasible feasible) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double MaxLogBound(const BinaryMarkovChain& chain, double rho0, double rho1) {
  auto noise = NoiseParams::Create(rho0, rho1);
  auto bounds = LrBound(chain, *noise);
  return bounds->LogMax();
}

struct Candidate {
  double rho0;
  double rho1;
  double objective;
};

}  // namespace

absl::StatusOr<double> DpNoise(double epsilon) {
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  const double w = std::exp(-epsilon);
  return w / (1.0 + w);
}

absl::StatusOr<double> RhoSufficientSymmetric(double theta, double epsilon) {
  RETURN_IF_ERROR(CheckTheta(theta));
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  // The root expression, rationalized and divided through by e^eps.
  const double w = std::exp(-epsilon);
  const double t2 = theta * theta;
  const double u = (2.0 - theta) * (2.0 - theta);
  const double numerator = 4.0 * w * (u * w + t2);
  const double denominator =
      (t2 + (4.0 - 2.0 * theta) * w +
       theta * std::sqrt(t2 + 4.0 * (1.0 - theta) * w)) *
      (2.0 * t2 + 2.0 * u * w);
  return numerator / denominator;
}

absl::StatusOr<double> CalibrateSymmetricExact(double theta, double epsilon) {
  RETURN_IF_ERROR(CheckTheta(theta));
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  auto feasible = [&](double rho) {
    return *LogLrBoundSymmetric(theta, rho) <= epsilon;
  };
  if (!feasible(kRhoCeiling)) {
    return absl::FailedPreconditionError("no feasible noise level below 0.5");
  }
  return BisectFeasible(0.0, kRhoCeiling, feasible);
}

absl::StatusOr<AsymmetricCalibration> CalibrateAsymmetric(
    const BinaryMarkovChain& chain, double epsilon) {
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  if (!(chain.q() > 0.0) || !(chain.r() > 0.0)) {
    return absl::InvalidArgumentError("calibration requires 0 < q, r < 0.5");
  }
  const std::array<double, 2> pi = *chain.Stationary();
  // For fixed rho0 both bounds decrease in rho1, so the cheapest feasible
  // rho1 is a bisection away.
  auto evaluate = [&](double rho0) -> Candidate {
    const double inf = std::numeric_limits<double>::infinity();
    if (MaxLogBound(chain, rho0, kRhoCeiling) > epsilon) {
      return {rho0, kRhoCeiling, inf};
    }
    const double rho1 = BisectFeasible(0.0, kRhoCeiling, [&](double v) {
      return MaxLogBound(chain, rho0, v) <= epsilon;
    });
    return {rho0, rho1, pi[0] * rho0 + pi[1] * rho1};
  };

  constexpr int kGrid = 200;
  double lo = 0.0;
  double hi = kRhoCeiling;
  Candidate best = evaluate(kRhoCeiling);
  // Coarse grid, then repeatedly zoom into the cell around the incumbent.
  for (int round = 0; round < 40 && hi - lo > 1e-13; ++round) {
    const double step = (hi - lo) / kGrid;
    for (int k = 1; k <= kGrid; ++k) {
      const double rho0 = std::min(lo + step * k, kRhoCeiling);
      const Candidate c = evaluate(rho0);
      if (c.objective < best.objective) best = c;
    }
    lo = std::max(0.0, best.rho0 - step);
    hi = std::min(kRhoCeiling, best.rho0 + step);
  }
  if (!std::isfinite(best.objective)) {
    return absl::FailedPreconditionError("no feasible noise levels below 0.5");
  }
  ASSIGN_OR_RETURN(NoiseParams noise, NoiseParams::Create(best.rho0, best.rho1));
  return AsymmetricCalibration{noise, best.objective};
}

absl::StatusOr<ZhaoNoise> ZhaoEps3NoisePrinted(double theta, double epsilon) {
  RETURN_IF_ERROR(CheckTheta(theta));
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  const double log_odds = std::log((1.0 - theta) / theta);
  const double eps3 = epsilon - 6.0 * log_odds;
  // 2 (1-t)^6 / (t^6 e^eps + (1-t)^6), divided through by (1-t)^6 e^eps.
  const double w = std::exp(-epsilon);
  const double ratio6 = std::exp(-6.0 * log_odds);
  return ZhaoNoise{eps3, 2.0 * w / (ratio6 + w), eps3 > 0.0};
}

absl::StatusOr<ZhaoNoise> ZhaoEps3NoiseSubstituted(double theta,
                                                   double epsilon) {
  RETURN_IF_ERROR(CheckTheta(theta));
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  const double eps3 = epsilon - 6.0 * std::log((1.0 - theta) / theta);
  const double w = std::exp(-eps3);
  return ZhaoNoise{eps3, 1.0 / (1.0 + 1.0 / w), eps3 > 0.0};
}

absl::StatusOr<ZhaoNoise> ZhaoEps6Noise(double theta, double epsilon,
                                        std::size_t n) {
  RETURN_IF_ERROR(CheckTheta(theta));
  RETURN_IF_ERROR(CheckEpsilon(epsilon));
  if (n < 2) return absl::InvalidArgumentError("n must be at least 2");
  const double m = 1.0 - 2.0 * theta;
  double eps6 = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 1; t <= n / 2; ++t) {
    const double mt = std::pow(m, static_cast<double>(t));
    const double penalty = 6.0 * (std::log1p(mt) - std::log1p(-mt));
    eps6 = std::max(eps6, (epsilon - penalty) / (2.0 * t - 1.0));
  }
  if (!(eps6 > 0.0)) {
    return ZhaoNoise{eps6, std::numeric_limits<double>::quiet_NaN(), false};
  }
  return ZhaoNoise{eps6, *DpNoise(eps6), true};
}

}  // namespace bdp
