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

#include "loopnet/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace loopnet {
namespace {

void check_pair(const CirculantGraph& gc, const GgpgGraph& gp) {
  const auto& gens = gc.generators();
  const bool match = gc.has_unit_generator() &&
                     gp.ring_size() == gc.ring_size() &&
                     std::equal(gens.begin() + 1, gens.end(),
                                gp.chords().begin(), gp.chords().end());
  if (!match) {
    throw InvalidParameter(gp.name() + " is not the expansion of " +
                           gc.name());
  }
}

template <class G>
std::vector<DistanceVector> all_pairs(const G& g) {
  std::vector<DistanceVector> rows;
  rows.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) rows.push_back(bfs(g, v));
  return rows;
}

std::vector<std::string> names(const GgpgGraph& g,
                               const std::vector<Vertex>& path) {
  std::vector<std::string> out;
  out.reserve(path.size());
  for (Vertex v : path) out.push_back(g.vertex_name(v));
  return out;
}

// A GGPG path from u_0 or v_0 (in that preference) to a vertex at
// distance `target`, if one exists.
std::optional<std::vector<Vertex>> path_at_distance(const Instance& inst,
                                                    Distance target) {
  const auto& c = inst.correspondence;
  for (Side side : {Side::kOuter, Side::kInner}) {
    const Vertex src = c.member(0, side);
    const DistanceVector dv = bfs(inst.ggpg, src);
    for (Vertex y = 0; y < inst.ggpg.vertex_count(); ++y) {
      if (dv[y] == target) return shortest_path(inst.ggpg, src, y);
    }
  }
  return std::nullopt;
}

std::string describe_vertex(const Instance& inst, const DistanceVector& inner,
                            Vertex i) {
  std::ostringstream os;
  os << "i=" << i << " D=" << inst.d_circ
     << " outer=" << outer_only_distance(inst.circulant, i)
     << " inner=" << format_distance(inner[i]);
  return os.str();
}

// GGPG path showing a failing vertex is still within D + 1 on the side
// whose exact-length condition failed.
std::vector<std::string> failing_vertex_witness(const Instance& inst,
                                                Vertex i) {
  const auto& c = inst.correspondence;
  const bool outer_fails = outer_only_distance(inst.circulant, i) != inst.d_circ;
  const Side side = outer_fails ? Side::kOuter : Side::kInner;
  return names(inst.ggpg, shortest_path(inst.ggpg, c.member(0, side),
                                        c.member(i, side)));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, bound) from raw engine output; the standard
// distributions are implementation-defined and would break cross-toolchain
// reproducibility.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

void append_combinations(int n, int k, std::vector<std::vector<int>>& out) {
  const int hi = max_step(n);
  std::vector<int> chords(static_cast<std::size_t>(k));
  // Lexicographic k-subsets of [2, hi].
  for (int t = 0; t < k; ++t) chords[static_cast<std::size_t>(t)] = 2 + t;
  if (k > 0 && chords.back() > hi) return;
  while (true) {
    std::vector<int> gens{1};
    gens.insert(gens.end(), chords.begin(), chords.end());
    out.push_back(std::move(gens));
    int t = k - 1;
    while (t >= 0 && chords[static_cast<std::size_t>(t)] == hi - (k - 1 - t)) {
      --t;
    }
    if (t < 0) return;
    ++chords[static_cast<std::size_t>(t)];
    for (int r = t + 1; r < k; ++r) {
      chords[static_cast<std::size_t>(r)] =
          chords[static_cast<std::size_t>(r - 1)] + 1;
    }
  }
}

void append_samples(int n, int k, const SweepConfig& cfg,
                    std::vector<std::vector<int>>& out) {
  const int pool = max_step(n) - 1;  // chords 2..hi
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(
                          (static_cast<std::uint64_t>(n) << 32) |
                          static_cast<std::uint64_t>(k))));
  std::set<std::vector<int>> drawn;
  while (drawn.size() < cfg.samples) {
    // Floyd's algorithm for a uniform k-subset of [0, pool).
    std::set<int> pick;
    for (int j = pool - k; j < pool; ++j) {
      const int t = static_cast<int>(
          uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
      if (!pick.insert(t).second) pick.insert(j);
    }
    std::vector<int> gens{1};
    for (int p : pick) gens.push_back(p + 2);
    drawn.insert(std::move(gens));
  }
  out.insert(out.end(), drawn.begin(), drawn.end());
}

}  // namespace

// ---------------------------------------------------------------------------

Instance Instance::build(const CirculantGraph& gc, bool paranoid) {
  Expansion ex = expand(gc);
  Instance inst{gc, std::move(ex.ggpg), std::move(ex.correspondence),
                bfs(gc, 0), 0, 0, {}};
  inst.d_circ = diameter_circulant(gc, paranoid);
  inst.d_ggpg = diameter_ggpg(inst.ggpg, paranoid);
  for (Vertex i = 0; i < gc.vertex_count(); ++i) {
    if (inst.from_zero[i] == inst.d_circ) inst.extremal.push_back(i);
  }
  return inst;
}

std::vector<Vertex> extremal_vertices(const CirculantGraph& g) {
  const DistanceVector dv = bfs(g, 0);
  const Distance d = diameter_circulant(g);
  std::vector<Vertex> out;
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (dv[i] == d) out.push_back(i);
  }
  return out;
}

Thm41Result check_thm41(const CirculantGraph& gc, const GgpgGraph& gp,
                        const VertexCorrespondence& corr) {
  check_pair(gc, gp);
  if (corr.size() != gc.vertex_count()) {
    throw InvalidParameter("correspondence size does not match " + gc.name());
  }
  const auto dc = all_pairs(gc);
  const auto dp = all_pairs(gp);
  const int n = gc.vertex_count();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const Distance base = dc[static_cast<std::size_t>(i)][j];
      for (Side xs : {Side::kOuter, Side::kInner}) {
        for (Side ys : {Side::kOuter, Side::kInner}) {
          const Vertex x = corr.member(i, xs);
          const Vertex y = corr.member(j, ys);
          const Distance d = dp[static_cast<std::size_t>(x)][y];
          if (d < base || d > base + 2) {
            return {false, SandwichWitness{i, j, x, y, base, d}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

Thm41Result check_thm41(const Instance& inst) {
  return check_thm41(inst.circulant, inst.ggpg, inst.correspondence);
}

Thm42Result check_thm42(const Instance& inst) {
  const int gap = inst.gap();
  return {gap == 1 || gap == 2, inst.d_circ, inst.d_ggpg, gap};
}

Thm42Result check_thm42(const CirculantGraph& gc, const GgpgGraph& gp) {
  check_pair(gc, gp);
  return check_thm42(Instance::build(gc));
}

Thm43Result check_thm43(const Instance& inst) {
  const DistanceVector inner = inner_only_bfs(inst.circulant);
  const Distance d = inst.d_circ;
  Thm43Result r;
  r.cond_outer = true;
  r.cond_inner = true;
  r.relaxed_predicts_gap_is_1 = true;
  for (Vertex i : inst.extremal) {
    const Distance outer = outer_only_distance(inst.circulant, i);
    const bool outer_ok = outer == d;
    const bool inner_ok = inner[i] == d;
    r.cond_outer = r.cond_outer && outer_ok;
    r.cond_inner = r.cond_inner && inner_ok;
    if ((!outer_ok || !inner_ok) && !r.failing_vertex) r.failing_vertex = i;
    if (outer > d + 1 || inner[i] > d + 1) r.relaxed_predicts_gap_is_1 = false;
  }
  r.predicted_gap_is_1 = r.cond_outer && r.cond_inner;
  r.actual_gap = inst.gap();
  r.consistent = r.predicted_gap_is_1 == (r.actual_gap == 1);
  return r;
}

Thm43Result check_thm43(const CirculantGraph& gc, const GgpgGraph& gp) {
  check_pair(gc, gp);
  return check_thm43(Instance::build(gc));
}

Thm44Result check_thm44(const Instance& inst) {
  const Thm43Result t43 = check_thm43(inst);
  Thm44Result r;
  r.any_condition_fires = !t43.predicted_gap_is_1;
  r.actual_gap = t43.actual_gap;
  r.consistent = !r.any_condition_fires || r.actual_gap == 2;

  const auto& gens = inst.circulant.generators();
  const int n = inst.circulant.ring_size();
  const auto clause = [&](int s) {
    return std::any_of(inst.extremal.begin(), inst.extremal.end(),
                       [&](Vertex i) { return s <= i && i <= n - s; });
  };
  r.range_clause_s2 = clause(gens[1]);
  r.range_clause_sm = clause(gens.back());

  std::ostringstream os;
  os << "range_s2=" << r.range_clause_s2 << " range_sm=" << r.range_clause_sm;
  if (r.actual_gap == 1 && r.range_clause_s2) os << " range_s2_holds_with_gap_1";
  if (r.actual_gap == 1 && r.range_clause_sm) os << " range_sm_holds_with_gap_1";
  r.notes = os.str();
  return r;
}

Thm44Result check_thm44(const CirculantGraph& gc, const GgpgGraph& gp) {
  check_pair(gc, gp);
  return check_thm44(Instance::build(gc));
}

VerificationReport verify_instance(const CirculantGraph& gc, bool paranoid) {
  const Instance inst = Instance::build(gc, paranoid);
  const Thm41Result t41 = check_thm41(inst);
  const Thm42Result t42 = check_thm42(inst);
  const Thm43Result t43 = check_thm43(inst);
  const Thm44Result t44 = check_thm44(inst);

  VerificationReport rep;
  rep.n = gc.ring_size();
  rep.gens.assign(gc.generators().begin(), gc.generators().end());
  rep.chord_count = static_cast<int>(inst.ggpg.chord_count());
  rep.d_circ = inst.d_circ;
  rep.d_ggpg = inst.d_ggpg;
  rep.gap = inst.gap();
  rep.extremal_set = inst.extremal;
  rep.cond_outer = t43.cond_outer;
  rep.cond_inner = t43.cond_inner;
  rep.thm41_ok = t41.ok;
  rep.thm41_violation = t41.violation;
  rep.thm42_ok = t42.ok;
  rep.thm43_consistent = t43.consistent;
  rep.thm44_consistent = t44.consistent;
  rep.conj45_holds = rep.gap == 2;
  rep.predicted_gap_is_1 = t43.predicted_gap_is_1;
  rep.relaxed_predicts_gap_is_1 = t43.relaxed_predicts_gap_is_1;
  rep.thm44_fires = t44.any_condition_fires;
  rep.range_clause_s2 = t44.range_clause_s2;
  rep.range_clause_sm = t44.range_clause_sm;

  const DistanceVector inner = inner_only_bfs(gc);
  if (!t43.consistent) {
    Anomaly a{"thm43", {}, {}};
    if (t43.failing_vertex) {
      a.detail = "predicted gap!=1 but gap=" + std::to_string(rep.gap) +
                 " at " + describe_vertex(inst, inner, *t43.failing_vertex);
      a.witness_path = failing_vertex_witness(inst, *t43.failing_vertex);
    } else {
      a.detail = "predicted gap=1 but gap=" + std::to_string(rep.gap);
      if (auto p = path_at_distance(inst, inst.d_ggpg)) {
        a.witness_path = names(inst.ggpg, *p);
      }
    }
    rep.anomalies.push_back(std::move(a));
  }
  if (!t44.consistent) {
    Anomaly a{"thm44", {}, {}};
    a.detail = "conditions fire but gap=" + std::to_string(rep.gap);
    if (t43.failing_vertex) {
      a.detail += " at " + describe_vertex(inst, inner, *t43.failing_vertex);
      a.witness_path = failing_vertex_witness(inst, *t43.failing_vertex);
    }
    rep.anomalies.push_back(std::move(a));
  }
  if (rep.gap == 1) {
    Anomaly a{"conj45",
              "gap=1 d_circ=" + std::to_string(rep.d_circ) +
                  " d_ggpg=" + std::to_string(rep.d_ggpg),
              {}};
    if (auto p = path_at_distance(inst, inst.d_ggpg)) {
      a.witness_path = names(inst.ggpg, *p);
    }
    rep.anomalies.push_back(std::move(a));
  }
  return rep;
}

namespace {

std::string violation_message(const VerificationReport& r) {
  std::ostringstream os;
  os << "proven theorem violated on n=" << r.n << " gens=";
  for (std::size_t k = 0; k < r.gens.size(); ++k) {
    os << (k ? "," : "") << r.gens[k];
  }
  if (!r.thm41_ok && r.thm41_violation) {
    const auto& w = *r.thm41_violation;
    os << ": sandwich (thm41) fails at i=" << w.i << " j=" << w.j << " x=" << w.x
       << " y=" << w.y << " d_c=" << format_distance(w.d_c)
       << " d_p=" << format_distance(w.d_p);
  }
  if (!r.thm42_ok) {
    os << ": gap bound (thm42) fails with gap " << r.gap;
  }
  return os.str();
}

}  // namespace

TheoremViolation::TheoremViolation(VerificationReport report)
    : std::runtime_error(violation_message(report)),
      report_(std::move(report)) {}

std::uint64_t binomial(std::uint64_t pool, std::uint64_t k) {
  if (k > pool) return 0;
  k = std::min(k, pool - k);
  // acc stays C(pool - k + t, t); saturating early only overstates huge
  // counts, which callers compare against a much smaller limit.
  std::uint64_t acc = 1;
  for (std::uint64_t t = 1; t <= k; ++t) {
    const std::uint64_t factor = pool - k + t;
    if (acc > UINT64_MAX / factor) return UINT64_MAX;
    acc = acc * factor / t;
  }
  return acc;
}

void validate(const SweepConfig& cfg) {
  if (cfg.n_min < 5) {
    throw InvalidParameter("n must be at least 5, got range starting at " +
                           std::to_string(cfg.n_min));
  }
  if (cfg.n_max < cfg.n_min) throw InvalidParameter("empty n range");
  if (cfg.m_set.empty()) throw InvalidParameter("empty m set");
  for (int m : cfg.m_set) {
    if (m < 2) {
      throw InvalidParameter(
          "m counts generators including 1 and must be at least 2, got " +
          std::to_string(m));
    }
  }
  if (cfg.samples == 0) throw InvalidParameter("samples must be positive");
}

std::vector<CirculantGraph> enumerate_instances(const SweepConfig& cfg) {
  validate(cfg);
  std::set<int> ms(cfg.m_set.begin(), cfg.m_set.end());
  std::vector<CirculantGraph> out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<std::vector<int>> gens;
    for (int m : ms) {
      const int k = m - 1;
      const std::uint64_t cell =
          binomial(static_cast<std::uint64_t>(std::max(0, max_step(n) - 1)),
                   static_cast<std::uint64_t>(k));
      if (cell == 0) continue;
      if (cell <= cfg.exhaustive_limit || cell <= cfg.samples) {
        append_combinations(n, k, gens);
      } else {
        append_samples(n, k, cfg, gens);
      }
    }
    std::sort(gens.begin(), gens.end());
    for (auto& g : gens) out.emplace_back(n, GeneratorSequence(std::move(g)));
  }
  return out;
}

std::vector<VerificationReport> run_sweep(const SweepConfig& cfg) {
  const std::vector<CirculantGraph> instances = enumerate_instances(cfg);
  std::vector<std::optional<VerificationReport>> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  const auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t k = next.fetch_add(1);
      if (k >= instances.size()) return;
      try {
        rows[k] = verify_instance(instances[k], cfg.paranoid);
        if (!rows[k]->proven_theorems_hold()) stop = true;
      } catch (...) {
        errors[k] = std::current_exception();
        stop = true;
      }
    }
  };

  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<VerificationReport> out;
  out.reserve(instances.size());
  for (std::size_t k = 0; k < instances.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (!rows[k]) continue;  // skipped after an abort further down
    if (!rows[k]->proven_theorems_hold()) {
      throw TheoremViolation(std::move(*rows[k]));
    }
    out.push_back(std::move(*rows[k]));
  }
  if (out.size() != instances.size()) {
    throw std::logic_error("sweep stopped without a recorded failure");
  }
  return out;
}

}  // namespace loopnet
