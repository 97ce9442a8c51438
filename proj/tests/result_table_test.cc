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

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace bdp {
namespace {

using ::testing::HasSubstr;
using ::testing::Optional;

TEST(ResultTableTest, AddRowChecksWidth) {
  ResultTable t({"a", "b"});
  EXPECT_TRUE(t.AddRow({1.0, 2.0}).ok());
  EXPECT_FALSE(t.AddRow({1.0}).ok());
  EXPECT_EQ(t.num_rows(), 1u);
  EXPECT_EQ(*t.ColumnIndex("b"), 1u);
  EXPECT_FALSE(t.ColumnIndex("c").ok());
}

TEST(ResultTableTest, WritesShortestRoundTrippingNumbers) {
  ResultTable t({"eps", "value"});
  ASSERT_TRUE(t.AddRow({0.5, 0.1}).ok());
  ASSERT_TRUE(t.AddRow({1.0, std::nullopt}).ok());
  ASSERT_TRUE(t.AddRow({2.0, std::numeric_limits<double>::quiet_NaN()}).ok());
  EXPECT_EQ(t.ToCsv(), "eps,value\n0.5,0.1\n1,\n2,\n");
}

TEST(ResultTableTest, RoundTrip) {
  ResultTable t({"x", "y", "z"});
  ASSERT_TRUE(t.AddRow({1.0 / 3.0, -2.5e-300, std::nullopt}).ok());
  ASSERT_TRUE(t.AddRow({std::nullopt, 7.0, 0.1 + 0.2}).ok());
  const ResultTable back = *ResultTable::ParseCsv(t.ToCsv());
  EXPECT_EQ(back.columns(), t.columns());
  ASSERT_EQ(back.num_rows(), 2u);
  for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(back.row(r), t.row(r));
  EXPECT_THAT(back.Get(0, 0), Optional(1.0 / 3.0));
  EXPECT_EQ(back.Get(0, 2), std::nullopt);
}

TEST(ResultTableTest, ParseErrors) {
  EXPECT_FALSE(ResultTable::ParseCsv("").ok());
  EXPECT_THAT(ResultTable::ParseCsv("a,b\n1,x\n").status().message(),
              HasSubstr("not a number"));
  EXPECT_FALSE(ResultTable::ParseCsv("a,b\n1,2,3\n").ok());
}

TEST(ResultTableTest, SchemaCheck) {
  EXPECT_TRUE(ParseCsvWithSchema("eps,lstm_accuracy\n1,0.6\n", {"eps", "lstm_accuracy"}).ok());
  EXPECT_FALSE(ParseCsvWithSchema("eps,acc\n1,0.6\n", {"eps", "lstm_accuracy"}).ok());
  EXPECT_FALSE(ParseCsvWithSchema("lstm_accuracy,eps\n", {"eps", "lstm_accuracy"}).ok());
}

TEST(ResultTableTest, SetOverwritesCell) {
  ResultTable t({"a"});
  ASSERT_TRUE(t.AddRow({std::nullopt}).ok());
  t.Set(0, 0, 4.0);
  EXPECT_THAT(t.Get(0, 0), Optional(4.0));
}

TEST(FileTest, AtomicWriteReplacesAndLeavesNoTemporary) {
  const std::filesystem::path dir =
      std::filesystem::path(::testing::TempDir()) / "result_table_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "out.csv").string();
  ASSERT_TRUE(WriteFileAtomically(path, "first\n").ok());
  ASSERT_TRUE(WriteFileAtomically(path, "second\n").ok());
  EXPECT_EQ(*ReadFile(path), "second\n");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST(FileTest, Errors) {
  EXPECT_FALSE(ReadFile("/nonexistent/dir/file.csv").ok());
  EXPECT_FALSE(WriteFileAtomically("/nonexistent/dir/file.csv", "x").ok());
}

}  // namespace
}  // namespace bdp
