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

#ifndef BDP_RANDOM_H_
#define BDP_RANDOM_H_

#include <cstdint>
#include <random>

namespace bdp {

// Seeds are plain 64-bit integers. Every random stream in the library is
// derived from one with DeriveSeed, so results depend only on (inputs, seed)
// and never on evaluation order.
using RandomSeed = std::uint64_t;

// One round of the SplitMix64 output function (Steele, Lea & Flood 2014).
std::uint64_t SplitMix64(std::uint64_t x);

// Deterministic child seed for substream `stream` of `seed`.
RandomSeed DeriveSeed(RandomSeed seed, std::uint64_t stream);

// Maps the top 53 bits of `bits` to a double in [0, 1).
inline double UnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Sequential generator: mt19937_64 with a fixed, portable conversion to
// doubles (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(RandomSeed seed) : engine_(seed) {}

  double Uniform() { return UnitInterval(engine_()); }
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bdp

#endif  // BDP_RANDOM_H_
