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

#include "bdp/markov_chain.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace bdp {

absl::StatusOr<BinaryMarkovChain> BinaryMarkovChain::Create(double q,
                                                            double r) {
  if (!(q >= 0.0 && q < 0.5) || !(r >= 0.0 && r < 0.5)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "chain parameters must satisfy 0 <= q, r < 0.5; got q=", q, " r=", r));
  }
  return BinaryMarkovChain(q, r);
}

double BinaryMarkovChain::Transition(int from, int to) const {
  if (from == 0) return to == 0 ? 1.0 - q_ : q_;
  return to == 0 ? r_ : 1.0 - r_;
}

absl::StatusOr<std::array<double, 2>> BinaryMarkovChain::Stationary() const {
  if (IsDegenerate()) {
    return absl::FailedPreconditionError(
        "degenerate chain (q = r = 0) has no unique stationary distribution");
  }
  const double total = q_ + r_;
  return std::array<double, 2>{r_ / total, q_ / total};
}

bool IsReversible(const BinaryMarkovChain& chain, double tolerance) {
  auto pi = chain.Stationary();
  if (!pi.ok()) return false;
  const double forward = (*pi)[0] * chain.Transition(0, 1);
  const double backward = (*pi)[1] * chain.Transition(1, 0);
  return std::abs(forward - backward) <= tolerance;
}

absl::StatusOr<BitSeries> SampleTwoStateChain(double p01, double p10,
                                              std::size_t n, RandomSeed seed) {
  if (n == 0) return absl::InvalidArgumentError("length must be at least 1");
  if (!(p01 >= 0.0 && p01 <= 1.0) || !(p10 >= 0.0 && p10 <= 1.0)) {
    return absl::InvalidArgumentError("transition probabilities must be in [0, 1]");
  }
  if (p01 + p10 == 0.0) {
    return absl::FailedPreconditionError(
        "degenerate chain (both transition probabilities 0) has no unique "
        "stationary distribution");
  }
  const double pi1 = p01 / (p01 + p10);
  Rng rng(seed);
  std::vector<std::uint8_t> bits(n);
  bits[0] = rng.Bernoulli(pi1) ? 1 : 0;
  for (std::size_t t = 1; t < n; ++t) {
    const double u = rng.Uniform();
    bits[t] = bits[t - 1] == 0 ? (u < p01 ? 1 : 0) : (u < p10 ? 0 : 1);
  }
  return BitSeries::FromBits(std::move(bits));
}

absl::StatusOr<BitSeries> Sample(const BinaryMarkovChain& chain, std::size_t n,
                                 RandomSeed seed) {
  return SampleTwoStateChain(chain.q(), chain.r(), n, seed);
}

absl::StatusOr<ChainEstimate> Estimate(const BitSeries& bits) {
  std::size_t from0 = 0, from1 = 0, zero_to_one = 0, one_to_zero = 0;
  for (std::size_t t = 0; t + 1 < bits.size(); ++t) {
    if (bits[t] == 0) {
      ++from0;
      zero_to_one += bits[t + 1];
    } else {
      ++from1;
      one_to_zero += 1 - bits[t + 1];
    }
  }
  if (from0 == 0 || from1 == 0) {
    return absl::FailedPreconditionError(
        "insufficient data: need at least one transition out of each state");
  }
  const double raw_q = static_cast<double>(zero_to_one) / from0;
  const double raw_r = static_cast<double>(one_to_zero) / from1;
  auto clamp = [](double v) {
    return std::min(std::max(v, kEstimateClampLow), kEstimateClampHigh);
  };
  const double q = clamp(raw_q);
  const double r = clamp(raw_r);
  auto chain = BinaryMarkovChain::Create(q, r);
  if (!chain.ok()) return chain.status();
  return ChainEstimate{*chain, raw_q, raw_r, q != raw_q || r != raw_r};
}

absl::StatusOr<BitSeries> Binarize(std::span<const double> series) {
  if (series.empty()) return absl::InvalidArgumentError("empty series");
  double sum = 0.0;
  for (std::size_t t = 0; t < series.size(); ++t) {
    if (!std::isfinite(series[t])) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite value at index ", t));
    }
    sum += series[t];
  }
  const double mean = sum / static_cast<double>(series.size());
  std::vector<std::uint8_t> bits(series.size());
  for (std::size_t t = 0; t < series.size(); ++t) {
    bits[t] = series[t] > mean ? 1 : 0;
  }
  return BitSeries::FromBits(std::move(bits));
}

absl::StatusOr<std::vector<double>> ParseRealSeries(absl::string_view text) {
  std::vector<double> values;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    double value = 0.0;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(line.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": not a decimal number: '", line,
                       "'"));
    }
    if (!std::isfinite(value)) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": non-finite value"));
    }
    values.push_back(value);
  }
  if (values.empty()) return absl::InvalidArgumentError("empty series");
  return values;
}

absl::StatusOr<std::vector<double>> ReadRealSeriesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseRealSeries(buffer.str());
}

}  // namespace bdp
