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

#include "bdp/bit_series.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace bdp {

absl::StatusOr<BitSeries> BitSeries::FromBits(std::vector<std::uint8_t> bits) {
  for (std::size_t t = 0; t < bits.size(); ++t) {
    if (bits[t] > 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("bit ", t, " has value ", bits[t], "; expected 0 or 1"));
    }
  }
  return BitSeries(std::move(bits));
}

absl::StatusOr<BitSeries> BitSeries::Parse(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    const char ch = text[t];
    if (ch != '0' && ch != '1') {
      return absl::InvalidArgumentError(
          absl::StrCat("unexpected character at offset ", t,
                       " in bit series; expected '0' or '1'"));
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitSeries(std::move(bits));
}

BitSeries BitSeries::Zeros(std::size_t n) {
  return BitSeries(std::vector<std::uint8_t>(n, 0));
}

BitSeries BitSeries::FromInteger(std::uint64_t value, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t t = 0; t < n; ++t) {
    bits[t] = static_cast<std::uint8_t>((value >> (n - 1 - t)) & 1U);
  }
  return BitSeries(std::move(bits));
}

double BitSeries::Mean() const {
  if (bits_.empty()) return 0.0;
  std::size_t ones = 0;
  for (std::uint8_t b : bits_) ones += b;
  return static_cast<double>(ones) / static_cast<double>(bits_.size());
}

std::string BitSeries::ToString() const {
  std::string out(bits_.size(), '0');
  for (std::size_t t = 0; t < bits_.size(); ++t) {
    if (bits_[t]) out[t] = '1';
  }
  return out;
}

absl::StatusOr<BitSeries> ReadBitSeriesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<BitSeries> bits = BitSeries::Parse(buffer.str());
  if (bits.ok() && bits->empty()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": empty bit series"));
  }
  return bits;
}

std::string FormatBitSeriesFile(const BitSeries& bits) {
  return bits.ToString() + "\n";
}

}  // namespace bdp
