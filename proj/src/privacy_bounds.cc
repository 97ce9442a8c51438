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

#include "bdp/privacy_bounds.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

bool OpenHalf(double v) { return v > 0.0 && v < 0.5; }

absl::Status CheckBoundDomain(const BinaryMarkovChain& chain,
                              const NoiseParams& noise) {
  if (!OpenHalf(chain.q()) || !OpenHalf(chain.r()) ||
      !OpenHalf(noise.rho0()) || !OpenHalf(noise.rho1())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "bounds require 0 < q, r, rho0, rho1 < 0.5; got q=", chain.q(),
        " r=", chain.r(), " rho0=", noise.rho0(), " rho1=", noise.rho1()));
  }
  return absl::OkStatus();
}

ClosedFormConstants Constants(double q, double r, double rho0, double rho1) {
  const double x = (1.0 - rho0) * (1.0 - q);
  const double y = rho1 * (1.0 - r);
  const double s = std::sqrt((x - y) * (x - y) + 4.0 * q * r * (1.0 - rho0) * rho1);
  ClosedFormConstants k;
  k.a = x - y + s;
  k.b = x - y - s;
  k.c = 2.0 * r * rho1;
  k.d = 2.0 * r * (1.0 - rho0);
  k.lambda1 = 0.5 * (x + y + s);
  // lambda1 * lambda2 = det, which avoids cancellation in x + y - s.
  k.lambda2 = (1.0 - rho0) * rho1 * (1.0 - q - r) / k.lambda1;
  k.sigma = k.lambda2 / k.lambda1;
  k.gamma = (k.a - k.d) * (k.c - k.b) / ((k.a - k.c) * (k.d - k.b));
  return k;
}

double LogBound0(double q, double r, double rho0, double rho1) {
  const ClosedFormConstants k = Constants(q, r, rho0, rho1);
  return 2.0 * std::log(k.a) - std::log(k.c) - std::log(k.d);
}

}  // namespace

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("privacy budget must be finite and > 0; got ", epsilon));
  }
  return PrivacyBudget(epsilon);
}

absl::StatusOr<ClosedFormConstants> ComputeClosedFormConstants(
    const BinaryMarkovChain& chain, const NoiseParams& noise) {
  RETURN_IF_ERROR(CheckBoundDomain(chain, noise));
  return Constants(chain.q(), chain.r(), noise.rho0(), noise.rho1());
}

absl::StatusOr<LrBounds> LrBound(const BinaryMarkovChain& chain,
                                 const NoiseParams& noise) {
  RETURN_IF_ERROR(CheckBoundDomain(chain, noise));
  const double q = chain.q(), r = chain.r();
  const double rho0 = noise.rho0(), rho1 = noise.rho1();
  return LrBounds{LogBound0(q, r, rho0, rho1), LogBound0(r, q, rho1, rho0)};
}

absl::StatusOr<double> LogLrBoundSymmetric(double theta, double rho) {
  if (!OpenHalf(theta) || !OpenHalf(rho)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "symmetric bound requires 0 < theta, rho < 0.5; got theta=", theta,
        " rho=", rho));
  }
  const double u = 1.0 - 2.0 * rho;
  const double a =
      std::sqrt(theta * theta + (1.0 - 2.0 * theta) * u * u) + (1.0 - theta) * u;
  const double c = 2.0 * theta * (1.0 - rho);
  return std::log1p(-rho) - std::log(rho) + 2.0 * (std::log(a) - std::log(c));
}

absl::StatusOr<double> LrBoundSymmetric(double theta, double rho) {
  ASSIGN_OR_RETURN(double log_bound, LogLrBoundSymmetric(theta, rho));
  return std::exp(log_bound);
}

absl::StatusOr<RatioPair> ClosedFormRatios(const BinaryMarkovChain& chain,
                                           const NoiseParams& noise,
                                           std::size_t i, std::size_t n) {
  RETURN_IF_ERROR(CheckBoundDomain(chain, noise));
  if (i < 1 || i > n) {
    return absl::OutOfRangeError(
        absl::StrCat("position ", i, " outside [1, ", n, "]"));
  }
  const ClosedFormConstants k =
      Constants(chain.q(), chain.r(), noise.rho0(), noise.rho1());
  const double sa = std::pow(k.sigma, static_cast<double>(i));
  const double sb = std::pow(k.sigma, static_cast<double>(n - i));
  RatioPair out;
  out.alpha_ratio = (k.a * (k.c - k.b) + k.b * (k.a - k.c) * sa) /
                    (k.c * (k.c - k.b) + k.c * (k.a - k.c) * sa);
  out.beta_ratio = (k.a * (k.d - k.b) + k.b * (k.a - k.d) * sb) /
                   (k.d * (k.d - k.b) + k.d * (k.a - k.d) * sb);
  return out;
}

absl::StatusOr<ArgmaxResult> ArgmaxIndex(const BinaryMarkovChain& chain,
                                         const NoiseParams& noise,
                                         std::size_t n) {
  RETURN_IF_ERROR(CheckBoundDomain(chain, noise));
  if (n < 1) return absl::InvalidArgumentError("n must be at least 1");
  const ClosedFormConstants k =
      Constants(chain.q(), chain.r(), noise.rho0(), noise.rho1());
  const double offset = std::log(k.gamma) / (2.0 * std::log(k.sigma));
  const double v = 0.5 * static_cast<double>(n) + offset;
  const double lower = std::floor(v);
  const double frac = v - lower;
  constexpr double kHalfTolerance = 1e-9;
  double rounded;
  if (std::abs(frac - 0.5) <= kHalfTolerance) {
    rounded = offset > kHalfTolerance ? lower
              : offset < -kHalfTolerance ? lower + 1.0
                                         : lower;
  } else {
    rounded = frac < 0.5 ? lower : lower + 1.0;
  }
  rounded = std::clamp(rounded, 1.0, static_cast<double>(n));
  const std::size_t i_star = static_cast<std::size_t>(rounded);
  ASSIGN_OR_RETURN(RatioPair ratios, ClosedFormRatios(chain, noise, i_star, n));
  return ArgmaxResult{i_star, ratios.alpha_ratio * ratios.beta_ratio};
}

absl::StatusOr<HProfile> ComputeHProfile(double theta, double rho,
                                         std::size_t k_max) {
  if (!OpenHalf(theta) || !OpenHalf(rho)) {
    return absl::InvalidArgumentError(
        "h profile requires 0 < theta, rho < 0.5");
  }
  if (k_max < 1) return absl::InvalidArgumentError("k_max must be >= 1");
  const double u = 1.0 - 2.0 * rho;
  const double s = std::sqrt(theta * theta + (1.0 - 2.0 * theta) * u * u);
  const double a = s + (1.0 - theta) * u;
  const double b = -s + (1.0 - theta) * u;
  const double c = 2.0 * theta * (1.0 - rho);
  // Eigenvalues of the symmetric recurrence: 0.5 ((1 - theta) +- s).
  const double l1 = 0.5 * ((1.0 - theta) + s);
  const double l2 = 0.5 * ((1.0 - theta) - s);
  const double l = l2 / l1;
  const double m = 1.0 - 2.0 * theta;
  HProfile out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double mk = std::pow(m, static_cast<double>(k + 1));
    const double lk = std::pow(l, static_cast<double>(k));
    const double f = (1.0 - mk) / (1.0 + mk);
    const double g =
        (a * (c * (1.0 - theta) - b * theta) +
         b * lk * (a * theta - c * (1.0 - theta))) /
        (a * (c * theta - b * (1.0 - theta)) +
         b * lk * (a * (1.0 - theta) - c * theta));
    out.f.push_back(f);
    out.g.push_back(g);
    out.h.push_back(f * g);
  }
  return out;
}

double SuccessBoundDp(double epsilon) { return 1.0 / (1.0 + std::exp(-epsilon)); }

absl::StatusOr<double> SuccessBoundBdp(const BinaryMarkovChain& chain,
                                       double epsilon) {
  if (!(chain.q() > 0.0) || !(chain.r() > 0.0)) {
    return absl::InvalidArgumentError("success bound requires q, r > 0");
  }
  const double m = std::max(chain.q() / chain.r(), chain.r() / chain.q());
  return 1.0 / (1.0 + m * std::exp(-epsilon));
}

}  // namespace bdp
