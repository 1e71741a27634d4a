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

#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>

#include "loopnet/theorem_lab.hpp"

namespace loopnet {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr const char* kReportCsvColumns =
    "n,gens,chords,d_circ,d_ggpg,gap,v_dc,cond_outer,cond_inner,thm41,thm42,"
    "thm43_consistent,thm44_consistent,conj45,anomalies";

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& raw);

/// "# <header>" line, column line, one row per report. Lists are
/// ';'-separated, booleans 1/0, anomalies "kind:detail" joined by " | ".
void write_report_csv(std::ostream& out, const std::string& header,
                      std::span<const VerificationReport> rows);

/// {"header": ..., "reports": [...]}: the CSV fields plus gap-condition
/// diagnostics and anomaly witness paths. Pretty-printed, key order fixed.
void write_report_json(std::ostream& out, const std::string& header,
                       std::span<const VerificationReport> rows);

/// Rows with gap 1 (each refutes the all-gaps-are-2 conjecture).
void write_counterexamples_csv(std::ostream& out, const std::string& header,
                               std::span<const VerificationReport> rows);

/// One row per anomaly: n,gens,kind,detail,witness.
void write_findings_csv(std::ostream& out, const std::string& header,
                        std::span<const VerificationReport> rows);

struct GapSummary {
  // (generator count m, gap) -> rows
  std::map<std::pair<int, int>, std::size_t> counts;
  std::size_t rows = 0;
  std::size_t counterexamples = 0;
  std::size_t thm43_inconsistent = 0;
  std::size_t thm44_inconsistent = 0;
};

GapSummary summarize(std::span<const VerificationReport> rows);
void write_summary(std::ostream& out, const GapSummary& s);

}  // namespace loopnet
