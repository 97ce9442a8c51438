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

#ifndef BDP_RESULT_TABLE_H_
#define BDP_RESULT_TABLE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace bdp {

using Cell = std::optional<double>;

// Rectangular table of real values with fixed column names. Missing values
// are written as empty CSV cells.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Cell>& row(std::size_t r) const { return rows_[r]; }

  absl::Status AddRow(std::vector<Cell> row);
  // Index of `name`, or NotFound.
  absl::StatusOr<std::size_t> ColumnIndex(absl::string_view name) const;
  Cell Get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void Set(std::size_t r, std::size_t c, Cell value) { rows_[r][c] = value; }

  // Header plus one line per row, '\n' line endings. Numbers use the
  // shortest representation that round-trips. NaN is written as empty.
  std::string ToCsv() const;

  // Accepts what ToCsv writes; a header row is required.
  static absl::StatusOr<ResultTable> ParseCsv(absl::string_view text);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// Parses `text` and checks that its header is exactly `expected_columns`.
absl::StatusOr<ResultTable> ParseCsvWithSchema(
    absl::string_view text, const std::vector<std::string>& expected_columns);

// Writes to a temporary file in the same directory, then renames it over
// `path`.
absl::Status WriteFileAtomically(const std::string& path,
                                 absl::string_view contents);
absl::StatusOr<std::string> ReadFile(const std::string& path);

}  // namespace bdp

#endif  // BDP_RESULT_TABLE_H_
