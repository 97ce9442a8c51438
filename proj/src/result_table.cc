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

#include "bdp/result_table.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace bdp {
namespace {

std::string FormatCell(const Cell& cell) {
  if (!cell.has_value() || std::isnan(*cell)) return "";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), *cell);
  return std::string(buffer, ptr);
}

}  // namespace

absl::Status ResultTable::AddRow(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "row has ", row.size(), " cells, table has ", columns_.size(),
        " columns"));
  }
  rows_.push_back(std::move(row));
  return absl::OkStatus();
}

absl::StatusOr<std::size_t> ResultTable::ColumnIndex(
    absl::string_view name) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c] == name) return c;
  }
  return absl::NotFoundError(absl::StrCat("no column named ", name));
}

std::string ResultTable::ToCsv() const {
  std::string out = absl::StrJoin(columns_, ",");
  out += '\n';
  for (const auto& row : rows_) {
    out += absl::StrJoin(row, ",", [](std::string* s, const Cell& cell) {
      s->append(FormatCell(cell));
    });
    out += '\n';
  }
  return out;
}

absl::StatusOr<ResultTable> ResultTable::ParseCsv(absl::string_view text) {
  std::vector<absl::string_view> lines =
      absl::StrSplit(text, '\n', absl::SkipWhitespace());
  if (lines.empty()) return absl::InvalidArgumentError("missing CSV header");
  std::vector<std::string> columns;
  for (absl::string_view name : absl::StrSplit(lines[0], ',')) {
    columns.emplace_back(absl::StripAsciiWhitespace(name));
  }
  ResultTable table(std::move(columns));
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::vector<Cell> row;
    for (absl::string_view field : absl::StrSplit(lines[l], ',')) {
      field = absl::StripAsciiWhitespace(field);
      if (field.empty()) {
        row.push_back(std::nullopt);
        continue;
      }
      double value = 0.0;
      const char* end = field.data() + field.size();
      auto [ptr, ec] = std::from_chars(field.data(), end, value);
      if (ec != std::errc() || ptr != end) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", l + 1, ": not a number: '", field, "'"));
      }
      row.push_back(value);
    }
    if (absl::Status s = table.AddRow(std::move(row)); !s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", l + 1, ": ", s.message()));
    }
  }
  return table;
}

absl::StatusOr<ResultTable> ParseCsvWithSchema(
    absl::string_view text, const std::vector<std::string>& expected_columns) {
  absl::StatusOr<ResultTable> table = ResultTable::ParseCsv(text);
  if (!table.ok()) return table.status();
  if (table->columns() != expected_columns) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected columns '", absl::StrJoin(expected_columns, ","),
        "', got '", absl::StrJoin(table->columns(), ","), "'"));
  }
  return table;
}

absl::Status WriteFileAtomically(const std::string& path,
                                 absl::string_view contents) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", temp));
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) return absl::UnavailableError(absl::StrCat("write failed: ", temp));
  }
  if (std::rename(temp.c_str(), path.c_str()) != 0) {
    std::remove(temp.c_str());
    return absl::UnavailableError(absl::StrCat("cannot rename to ", path));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace bdp
