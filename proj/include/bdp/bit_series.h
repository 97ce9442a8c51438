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

#ifndef BDP_BIT_SERIES_H_
#define BDP_BIT_SERIES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace bdp {

// A finite sequence over {0, 1}. Used both for raw data and for sanitized
// output. Indices are 0-based in the API; the 1-based `i` of the privacy
// formulas is converted at the call sites that document it.
class BitSeries {
 public:
  BitSeries() = default;

  // Fails if any value is not 0 or 1.
  static absl::StatusOr<BitSeries> FromBits(std::vector<std::uint8_t> bits);
  // Parses a string of '0'/'1' characters; surrounding whitespace is ignored.
  static absl::StatusOr<BitSeries> Parse(absl::string_view text);
  static BitSeries Zeros(std::size_t n);
  // Bit t is ((value >> (n - 1 - t)) & 1): the first bit is most significant,
  // so iterating value = 0 .. 2^n - 1 enumerates series lexicographically.
  static BitSeries FromInteger(std::uint64_t value, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t t) const { return bits_[t]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  void Set(std::size_t t, int bit) { bits_[t] = static_cast<std::uint8_t>(bit & 1); }

  // Fraction of ones; 0 for the empty series.
  double Mean() const;
  // "0110...", no newline.
  std::string ToString() const;

  friend bool operator==(const BitSeries&, const BitSeries&) = default;

 private:
  explicit BitSeries(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::vector<std::uint8_t> bits_;
};

// On-disk format: one character per bit, single line, newline-terminated.
absl::StatusOr<BitSeries> ReadBitSeriesFile(const std::string& path);
std::string FormatBitSeriesFile(const BitSeries& bits);

}  // namespace bdp

#endif  // BDP_BIT_SERIES_H_
