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

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace loopnet {
namespace {

template <class T>
std::string join(const std::vector<T>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) os << sep;
    os << values[k];
  }
  return os.str();
}

std::string anomaly_text(const VerificationReport& r) {
  std::vector<std::string> parts;
  for (const Anomaly& a : r.anomalies) parts.push_back(a.kind + ":" + a.detail);
  return join(parts, " | ");
}

void write_header(std::ostream& out, const std::string& header) {
  out << "# " << header << '\n';
}

}  // namespace

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_report_csv(std::ostream& out, const std::string& header,
                      std::span<const VerificationReport> rows) {
  write_header(out, header);
  out << kReportCsvColumns << '\n';
  for (const VerificationReport& r : rows) {
    out << r.n << ',' << join(r.gens, ";") << ',' << r.chord_count << ','
        << format_distance(r.d_circ) << ',' << format_distance(r.d_ggpg) << ','
        << r.gap << ',' << join(r.extremal_set, ";") << ',' << r.cond_outer
        << ',' << r.cond_inner << ',' << r.thm41_ok << ',' << r.thm42_ok << ','
        << r.thm43_consistent << ',' << r.thm44_consistent << ','
        << r.conj45_holds << ',' << csv_field(anomaly_text(r)) << '\n';
  }
}

void write_report_json(std::ostream& out, const std::string& header,
                       std::span<const VerificationReport> rows) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["header"] = header;
  doc["reports"] = ordered_json::array();
  for (const VerificationReport& r : rows) {
    ordered_json row;
    row["n"] = r.n;
    row["gens"] = r.gens;
    row["chords"] = r.chord_count;
    row["d_circ"] = r.d_circ;
    row["d_ggpg"] = r.d_ggpg;
    row["gap"] = r.gap;
    row["v_dc"] = r.extremal_set;
    row["cond_outer"] = r.cond_outer;
    row["cond_inner"] = r.cond_inner;
    row["thm41"] = r.thm41_ok;
    row["thm42"] = r.thm42_ok;
    row["thm43_consistent"] = r.thm43_consistent;
    row["thm44_consistent"] = r.thm44_consistent;
    row["conj45"] = r.conj45_holds;
    row["thm43_predicted_gap_is_1"] = r.predicted_gap_is_1;
    row["thm43_relaxed_predicts_gap_is_1"] = r.relaxed_predicts_gap_is_1;
    row["thm44_fires"] = r.thm44_fires;
    row["thm44_range_clause_s2"] = r.range_clause_s2;
    row["thm44_range_clause_sm"] = r.range_clause_sm;
    if (r.thm41_violation) {
      const auto& w = *r.thm41_violation;
      row["thm41_violation"] = {{"i", w.i},     {"j", w.j},
                                {"x", w.x},     {"y", w.y},
                                {"d_c", w.d_c}, {"d_p", w.d_p}};
    }
    row["anomalies"] = ordered_json::array();
    for (const Anomaly& a : r.anomalies) {
      row["anomalies"].push_back({{"kind", a.kind},
                                  {"detail", a.detail},
                                  {"witness_path", a.witness_path}});
    }
    doc["reports"].push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

void write_counterexamples_csv(std::ostream& out, const std::string& header,
                               std::span<const VerificationReport> rows) {
  write_header(out, header);
  out << "n,gens,chords,d_circ,d_ggpg,gap\n";
  for (const VerificationReport& r : rows) {
    if (r.gap != 1) continue;
    out << r.n << ',' << join(r.gens, ";") << ',' << r.chord_count << ','
        << r.d_circ << ',' << r.d_ggpg << ',' << r.gap << '\n';
  }
}

void write_findings_csv(std::ostream& out, const std::string& header,
                        std::span<const VerificationReport> rows) {
  write_header(out, header);
  out << "n,gens,kind,detail,witness\n";
  for (const VerificationReport& r : rows) {
    for (const Anomaly& a : r.anomalies) {
      out << r.n << ',' << join(r.gens, ";") << ',' << a.kind << ','
          << csv_field(a.detail) << ',' << join(a.witness_path, ";") << '\n';
    }
  }
}

GapSummary summarize(std::span<const VerificationReport> rows) {
  GapSummary s;
  for (const VerificationReport& r : rows) {
    ++s.rows;
    ++s.counts[{static_cast<int>(r.gens.size()), r.gap}];
    if (r.gap == 1) ++s.counterexamples;
    if (!r.thm43_consistent) ++s.thm43_inconsistent;
    if (!r.thm44_consistent) ++s.thm44_inconsistent;
  }
  return s;
}

void write_summary(std::ostream& out, const GapSummary& s) {
  out << "rows: " << s.rows << '\n';
  std::map<int, std::size_t> per_m;
  for (const auto& [key, count] : s.counts) per_m[key.first] += count;
  // Percentages are within each generator count.
  for (const auto& [key, count] : s.counts) {
    const double pct = 100.0 * static_cast<double>(count) /
                       static_cast<double>(per_m[key.first]);
    out << "m=" << key.first << " gap=" << key.second << ": " << count << " ("
        << std::fixed << std::setprecision(2) << pct << "%)\n";
  }
  out << "counterexamples (gap=1): " << s.counterexamples << '\n';
  out << "thm43 inconsistent: " << s.thm43_inconsistent << '\n';
  out << "thm44 inconsistent: " << s.thm44_inconsistent << '\n';
}

}  // namespace loopnet
