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

#include "bdp/sanitizer.h"

#include <vector>

#include "absl/strings/str_cat.h"
#include "bdp/markov_chain.h"

namespace bdp {

absl::StatusOr<NoiseParams> NoiseParams::Create(double rho0, double rho1) {
  if (!(rho0 >= 0.0 && rho0 <= 0.5) || !(rho1 >= 0.0 && rho1 <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise levels must lie in [0, 0.5]; got rho0=", rho0,
                     " rho1=", rho1));
  }
  return NoiseParams(rho0, rho1);
}

absl::StatusOr<CorrelatedNoiseChain> CorrelatedNoiseChain::Create(
    double rho0, double rho1) {
  if (!(rho0 > 0.0 && rho0 < 1.0) || !(rho1 > 0.0 && rho1 < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise chain parameters must lie in (0, 1); got rho0=",
                     rho0, " rho1=", rho1));
  }
  return CorrelatedNoiseChain(rho0, rho1);
}

double CorrelatedNoiseChain::Transition(int from, int to) const {
  if (from == 0) return to == 0 ? 1.0 - rho0_ : rho0_;
  return to == 0 ? rho1_ : 1.0 - rho1_;
}

int SanitizeBit(int bit, const NoiseParams& noise, RandomSeed seed,
                std::uint64_t t) {
  const double u = UnitInterval(DeriveSeed(seed, t));
  return u < noise.rho(bit) ? 1 - bit : bit;
}

BitSeries SanitizeIndependent(const BitSeries& bits, const NoiseParams& noise,
                              RandomSeed seed) {
  BitSeries out = bits;
  for (std::size_t t = 0; t < bits.size(); ++t) {
    out.Set(t, SanitizeBit(bits[t], noise, seed, t));
  }
  return out;
}

BitSeries SanitizeCorrelated(const BitSeries& bits,
                             const CorrelatedNoiseChain& noise,
                             RandomSeed seed) {
  if (bits.empty()) return bits;
  // Parameters were validated on construction, so sampling cannot fail.
  BitSeries y =
      *SampleTwoStateChain(noise.rho0(), noise.rho1(), bits.size(), seed);
  BitSeries out = bits;
  for (std::size_t t = 0; t < bits.size(); ++t) out.Set(t, bits[t] ^ y[t]);
  return out;
}

}  // namespace bdp
