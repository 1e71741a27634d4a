// Copyright 2026 The loopnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loopnet/report.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

namespace loopnet {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t count_fields(const std::string& line) {
  std::size_t fields = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++fields;
  }
  return fields;
}

TEST(CsvFieldTest, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv_field("plain text"), "plain text");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(csv_field(""), "");
}

TEST(ReportCsvTest, PetersenRow) {
  const std::vector<VerificationReport> rows{
      verify_instance(build_circulant(5, {1, 2}))};
  std::ostringstream os;
  write_report_csv(os, "hdr", rows);
  const auto lines = lines_of(os.str());
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "# hdr");
  EXPECT_EQ(lines[1], kReportCsvColumns);
  EXPECT_EQ(lines[2].rfind("5,1;2,1,1,2,1,1;2;3;4,0,0,1,1,0,0,0,thm43:", 0), 0u)
      << lines[2];
  EXPECT_EQ(count_fields(lines[2]), count_fields(lines[1]));
}

TEST(ReportCsvTest, EveryRowHasAllColumns) {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 20;
  cfg.m_set = {2, 3};
  const auto rows = run_sweep(cfg);
  std::ostringstream os;
  write_report_csv(os, "h", rows);
  const auto lines = lines_of(os.str());
  ASSERT_EQ(lines.size(), rows.size() + 2);
  const std::size_t width = count_fields(kReportCsvColumns);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    EXPECT_EQ(count_fields(lines[k]), width) << lines[k];
  }
}

TEST(ReportJsonTest, FieldsAndWitness) {
  const std::vector<VerificationReport> rows{
      verify_instance(build_circulant(5, {1, 2})),
      verify_instance(build_circulant(14, {1, 3, 4, 6}))};
  std::ostringstream os;
  write_report_json(os, "hdr", rows);
  const auto doc = nlohmann::json::parse(os.str());
  EXPECT_EQ(doc["header"], "hdr");
  ASSERT_EQ(doc["reports"].size(), 2u);
  const auto& p = doc["reports"][0];
  EXPECT_EQ(p["n"], 5);
  EXPECT_EQ(p["gens"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(p["gap"], 1);
  EXPECT_EQ(p["thm41"], true);
  EXPECT_EQ(p["thm43_consistent"], false);
  EXPECT_EQ(p["thm43_relaxed_predicts_gap_is_1"], true);
  EXPECT_FALSE(p.contains("thm41_violation"));
  ASSERT_EQ(p["anomalies"].size(), 3u);
  EXPECT_EQ(p["anomalies"][0]["witness_path"],
            nlohmann::json::array({"v0", "v3", "v1"}));
  const auto& q = doc["reports"][1];
  EXPECT_EQ(q["d_circ"], 2);
  EXPECT_EQ(q["d_ggpg"], 4);
  EXPECT_EQ(q["v_dc"], nlohmann::json::array({2, 5, 7, 9, 12}));
  EXPECT_TRUE(q["anomalies"].empty());
}

TEST(CounterexampleCsvTest, OnlyGapOneRows) {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 30;
  cfg.m_set = {2, 3};
  const auto rows = run_sweep(cfg);
  std::ostringstream os;
  write_counterexamples_csv(os, "h", rows);
  const auto lines = lines_of(os.str());
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[1], "n,gens,chords,d_circ,d_ggpg,gap");
  EXPECT_EQ(lines[2], "5,1;2,1,1,2,1");
  const GapSummary s = summarize(rows);
  EXPECT_EQ(lines.size() - 2, s.counterexamples);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    EXPECT_EQ(lines[k].substr(lines[k].size() - 2), ",1");
  }
}

TEST(FindingsCsvTest, OneLinePerAnomaly) {
  const std::vector<VerificationReport> rows{
      verify_instance(build_circulant(5, {1, 2}))};
  std::ostringstream os;
  write_findings_csv(os, "h", rows);
  const auto lines = lines_of(os.str());
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1], "n,gens,kind,detail,witness");
  EXPECT_EQ(lines[2].rfind("5,1;2,thm43,", 0), 0u);
  EXPECT_EQ(lines[2].substr(lines[2].size() - 9), ",v0;v3;v1");
}

TEST(SummaryTest, CountsPerGeneratorCount) {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 20;
  cfg.m_set = {2};
  const auto rows = run_sweep(cfg);
  const GapSummary s = summarize(rows);
  EXPECT_EQ(s.rows, 72u);
  std::size_t total = 0;
  for (const auto& [key, count] : s.counts) {
    EXPECT_EQ(key.first, 2);
    EXPECT_TRUE(key.second == 1 || key.second == 2);
    total += count;
  }
  EXPECT_EQ(total, 72u);
  std::ostringstream os;
  write_summary(os, s);
  EXPECT_NE(os.str().find("rows: 72\n"), std::string::npos);
}

}  // namespace
}  // namespace loopnet
