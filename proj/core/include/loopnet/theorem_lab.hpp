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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopnet/graph.hpp"
#include "loopnet/metrics.hpp"
#include "loopnet/transforms.hpp"

namespace loopnet {

/// A circulant C_n(1, s_2, ..., s_m), its expansion and the distance data
/// every check below shares. Built once per swept instance.
struct Instance {
  CirculantGraph circulant;
  GgpgGraph ggpg;
  VertexCorrespondence correspondence;
  DistanceVector from_zero;  // circulant, source 0
  Distance d_circ = 0;
  Distance d_ggpg = 0;
  std::vector<Vertex> extremal;  // V_Dc

  static Instance build(const CirculantGraph& gc, bool paranoid = false);
  int gap() const {
    return static_cast<int>(d_ggpg) - static_cast<int>(d_circ);
  }
};

/// All i with d_c(0, i) equal to the diameter, ascending.
std::vector<Vertex> extremal_vertices(const CirculantGraph& g);

struct SandwichWitness {
  Vertex i = 0;
  Vertex j = 0;
  Vertex x = 0;  // GGPG vertex in the class of i
  Vertex y = 0;  // GGPG vertex in the class of j
  Distance d_c = 0;
  Distance d_p = 0;
};

struct Thm41Result {
  bool ok = true;
  std::optional<SandwichWitness> violation;  // first in (i, j, x, y) order
};

/// d_c(i, j) <= d_p(x, y) <= d_c(i, j) + 2 for every pair of classes and
/// every choice of members. Throws InvalidParameter if gp is not the
/// expansion of gc.
Thm41Result check_thm41(const CirculantGraph& gc, const GgpgGraph& gp,
                        const VertexCorrespondence& corr);
Thm41Result check_thm41(const Instance& inst);

struct Thm42Result {
  bool ok = true;
  Distance d_circ = 0;
  Distance d_ggpg = 0;
  int gap = 0;
};

/// gap = D(GGPG) - D(C) must be 1 or 2.
Thm42Result check_thm42(const CirculantGraph& gc, const GgpgGraph& gp);
Thm42Result check_thm42(const Instance& inst);

struct Thm43Result {
  bool cond_outer = false;  // every i in V_Dc has min(i, n-i) == D
  bool cond_inner = false;  // every i in V_Dc has chord-only distance == D
  bool predicted_gap_is_1 = false;
  int actual_gap = 0;
  bool consistent = false;  // predicted_gap_is_1 <=> actual_gap == 1
  /// Same test with "== D" relaxed to "<= D + 1"; diagnostic only.
  bool relaxed_predicts_gap_is_1 = false;
  std::optional<Vertex> failing_vertex;  // first i in V_Dc failing a condition
};

Thm43Result check_thm43(const CirculantGraph& gc, const GgpgGraph& gp);
Thm43Result check_thm43(const Instance& inst);

struct Thm44Result {
  bool any_condition_fires = false;  // negation of the gap-1 conditions
  int actual_gap = 0;
  bool consistent = true;  // fires => actual_gap == 2
  /// Report-only: some i in V_Dc with s <= i <= n - s, for s = s_2 / s_m.
  bool range_clause_s2 = false;
  bool range_clause_sm = false;
  std::string notes;
};

Thm44Result check_thm44(const CirculantGraph& gc, const GgpgGraph& gp);
Thm44Result check_thm44(const Instance& inst);

struct Anomaly {
  std::string kind;    // "thm43", "thm44", "conj45"
  std::string detail;  // no commas
  std::vector<std::string> witness_path;  // GGPG vertex names

  friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

struct VerificationReport {
  int n = 0;
  std::vector<int> gens;
  int chord_count = 0;
  Distance d_circ = 0;
  Distance d_ggpg = 0;
  int gap = 0;
  std::vector<Vertex> extremal_set;
  bool cond_outer = false;
  bool cond_inner = false;
  bool thm41_ok = false;
  bool thm42_ok = false;
  bool thm43_consistent = false;
  bool thm44_consistent = false;
  bool conj45_holds = false;

  bool predicted_gap_is_1 = false;
  bool relaxed_predicts_gap_is_1 = false;
  bool thm44_fires = false;
  bool range_clause_s2 = false;
  bool range_clause_sm = false;
  std::optional<SandwichWitness> thm41_violation;
  std::vector<Anomaly> anomalies;

  bool proven_theorems_hold() const { return thm41_ok && thm42_ok; }
};

/// Runs every check on one instance. Never throws on a failed check; the
/// flags and anomalies carry the outcome.
VerificationReport verify_instance(const CirculantGraph& gc,
                                   bool paranoid = false);

/// The sandwich or gap-bound check failed; the sweep stops here.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(VerificationReport report);
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

struct SweepConfig {
  int n_min = 5;
  int n_max = 20;
  std::vector<int> m_set{2};  // |S|, generator 1 included
  std::uint64_t seed = 1;
  /// Exhaustive when an (n, m) cell has at most this many chord sets.
  std::uint64_t exhaustive_limit = 100000;
  /// Chord sets drawn per (n, m) cell above the limit.
  std::uint64_t samples = 1000;
  bool paranoid = false;
  unsigned jobs = 1;
};

/// Throws InvalidParameter for n_min < 5, empty ranges, or any m < 2.
void validate(const SweepConfig& cfg);

/// Generator sequences in sweep order: n ascending, S lexicographic.
std::vector<CirculantGraph> enumerate_instances(const SweepConfig& cfg);

/// Number of k-subsets of an N-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t pool, std::uint64_t k);

/// Verifies every enumerated instance. Rows come back in enumeration order
/// whatever cfg.jobs is. Throws TheoremViolation (earliest instance) if the
/// sandwich or gap-bound check fails anywhere.
std::vector<VerificationReport> run_sweep(const SweepConfig& cfg);

}  // namespace loopnet
