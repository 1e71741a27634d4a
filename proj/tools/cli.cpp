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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <set>
#include <sstream>

#include "loopnet/dot.hpp"
#include "loopnet/graph.hpp"
#include "loopnet/metrics.hpp"
#include "loopnet/path_algebra.hpp"
#include "loopnet/report.hpp"
#include "loopnet/theorem_lab.hpp"
#include "loopnet/transforms.hpp"

namespace loopnet::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

int parse_int(const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidParameter("not an integer: '" + text + "'");
  }
  return value;
}

struct GraphArgs {
  std::string family = "circulant";
  int n = 0;
  std::string gens;
  std::string chords;
};

struct SweepArgs {
  std::string n_range;
  std::string m_set;
  std::string preset;
  std::string theorems = "4.1,4.2,4.3,4.4";
  std::string out;
  std::string aux_out;  // findings (verify) or counterexamples (sweep)
  std::string format = "csv";
  std::uint64_t samples = 1000;
  std::uint64_t exhaustive_limit = 100000;
  bool paranoid = false;
  unsigned jobs = 1;
};

struct Options {
  GraphArgs graph;
  SweepArgs sweep;
  bool show_vdc = false;
  bool all_sources = false;
  int source = 0;
  int target = 0;
  int from = 0;
  std::string out;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  bool paranoid = false;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           std::ostream& err) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LOOPNET_SEED")) {
    std::uint64_t value = 0;
    const std::string text(env);
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return value;
    err << "warning: ignoring unparsable LOOPNET_SEED='" << text << "'\n";
  }
  return kDefaultSeed;
}

std::vector<int> parse_steps(const std::string& text, const char* what,
                             std::ostream& err) {
  std::vector<int> steps = parse_list(text);
  if (normalize_steps(steps)) {
    err << "warning: " << what << " sorted and de-duplicated to ";
    for (std::size_t k = 0; k < steps.size(); ++k) {
      err << (k ? "," : "") << steps[k];
    }
    err << '\n';
  }
  return steps;
}

CirculantGraph make_circulant(const GraphArgs& a, std::ostream& err) {
  if (a.gens.empty()) throw InvalidParameter("--gens is required");
  return build_circulant(a.n, parse_steps(a.gens, "generators", err));
}

GgpgGraph make_ggpg(const GraphArgs& a, std::ostream& err) {
  if (a.chords.empty()) throw InvalidParameter("--chords is required");
  return build_ggpg(a.n, parse_steps(a.chords, "chords", err));
}

std::string header(const std::string& command, const std::string& flags,
                   std::uint64_t seed) {
  std::ostringstream os;
  os << "loopnet " << kVersion << " | " << command;
  if (!flags.empty()) os << ' ' << flags;
  os << " seed=" << seed;
  return os.str();
}

std::string graph_flags(const GraphArgs& a, const std::string& steps) {
  std::ostringstream os;
  os << "family=" << a.family << " n=" << a.n
     << (a.family == "ggpg" ? " chords=" : " gens=") << steps;
  return os.str();
}

// Output sink: a file when a path is given, otherwise the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::ios_base::failure("cannot open " + path);
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw std::ios_base::failure("write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--family", a.family, "circulant or ggpg")
      ->check(CLI::IsMember({"circulant", "ggpg"}));
  cmd->add_option("--n", a.n, "ring size (>= 5)")->required();
  cmd->add_option("--gens", a.gens, "circulant generators, e.g. 1,2,5,8");
  cmd->add_option("--chords", a.chords, "GGPG chords, e.g. 3,4,6");
}

void add_sweep_options(CLI::App* cmd, SweepArgs& a, Options& o) {
  cmd->add_option("--n", a.n_range, "ring sizes, e.g. 5..30");
  cmd->add_option("--m", a.m_set,
                  "generator counts |S| including 1, e.g. 2,3");
  cmd->add_option("--format", a.format)->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--samples", a.samples,
                  "chord sets drawn per (n, m) cell above the limit");
  cmd->add_option("--exhaustive-limit", a.exhaustive_limit,
                  "largest (n, m) cell enumerated exhaustively");
  cmd->add_flag("--paranoid", a.paranoid, "all-source diameter cross-check");
  cmd->add_option("--jobs", a.jobs, "worker threads");
  cmd->add_option("--seed", o.seed, "sampling seed (falls back to LOOPNET_SEED)");
}

SweepConfig make_sweep_config(const SweepArgs& a, std::uint64_t seed) {
  SweepConfig cfg;
  const auto [lo, hi] = parse_range(a.n_range);
  cfg.n_min = lo;
  cfg.n_max = hi;
  cfg.m_set = parse_list(a.m_set);
  cfg.seed = seed;
  cfg.samples = a.samples;
  cfg.exhaustive_limit = a.exhaustive_limit;
  cfg.paranoid = a.paranoid;
  cfg.jobs = std::max(1u, a.jobs);
  validate(cfg);
  return cfg;
}

std::string sweep_flags(const SweepArgs& a, const SweepConfig& cfg) {
  std::ostringstream os;
  if (!a.preset.empty()) os << "preset=" << a.preset << ' ';
  os << "n=" << cfg.n_min << ".." << cfg.n_max << " m=";
  for (std::size_t k = 0; k < cfg.m_set.size(); ++k) {
    os << (k ? "," : "") << cfg.m_set[k];
  }
  os << " samples=" << cfg.samples
     << " exhaustive_limit=" << cfg.exhaustive_limit
     << " paranoid=" << cfg.paranoid << " format=" << a.format;
  return os.str();
}

void write_reports(std::ostream& out, const std::string& format,
                   const std::string& head,
                   std::span<const VerificationReport> rows) {
  if (format == "json") {
    write_report_json(out, head, rows);
  } else {
    write_report_csv(out, head, rows);
  }
}

void print_violation(std::ostream& err, const TheoremViolation& v) {
  err << "error: " << v.what() << '\n';
  const VerificationReport rows[] = {v.report()};
  write_report_csv(err, "violating instance", rows);
}

// ---------------------------------------------------------------------------

int cmd_diameter(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.graph.family == "ggpg") {
    const GgpgGraph g = make_ggpg(o.graph, err);
    const Distance d = diameter_ggpg(g, o.paranoid);
    if (o.format == "json") {
      nlohmann::ordered_json j{{"family", "ggpg"},
                               {"n", g.ring_size()},
                               {"chords", std::vector<int>(g.chords().begin(),
                                                           g.chords().end())},
                               {"diameter", d}};
      out << j.dump() << '\n';
    } else {
      out << "family=ggpg n=" << g.ring_size()
          << " chords=" << g.chords().to_string()
          << " diameter=" << format_distance(d) << '\n';
    }
    return kOk;
  }
  const CirculantGraph g = make_circulant(o.graph, err);
  const Distance d = diameter_circulant(g, o.paranoid);
  const std::vector<Vertex> vdc = extremal_vertices(g);
  if (o.format == "json") {
    nlohmann::ordered_json j{
        {"family", "circulant"},
        {"n", g.ring_size()},
        {"gens",
         std::vector<int>(g.generators().begin(), g.generators().end())},
        {"diameter", d},
        {"v_dc_size", vdc.size()}};
    if (o.show_vdc) j["v_dc"] = vdc;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "family=circulant n=" << g.ring_size()
      << " gens=" << g.generators().to_string()
      << " diameter=" << format_distance(d) << " v_dc_size=" << vdc.size();
  if (o.show_vdc) {
    out << " v_dc=";
    for (std::size_t k = 0; k < vdc.size(); ++k) {
      out << (k ? "," : "") << vdc[k];
    }
  }
  out << '\n';
  return kOk;
}

int cmd_distances(const Options& o, std::uint64_t seed, std::ostream& out,
                  std::ostream& err) {
  Sink sink(o.out, out);
  std::ostream& s = sink.stream();
  const auto emit = [&](const auto& g, const std::string& steps) {
    std::ostringstream flags;
    flags << graph_flags(o.graph, steps)
          << (o.all_sources ? " sources=all"
                            : " source=" + std::to_string(o.source));
    s << "# " << header("distances", flags.str(), seed) << '\n';
    s << kDistanceCsvHeader << '\n';
    if (o.all_sources) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        write_distance_rows(s, g, bfs(g, v));
      }
    } else {
      write_distance_rows(s, g, bfs(g, o.source));
    }
  };
  if (o.graph.family == "ggpg") {
    const GgpgGraph g = make_ggpg(o.graph, err);
    emit(g, g.chords().to_string());
  } else {
    const CirculantGraph g = make_circulant(o.graph, err);
    emit(g, g.generators().to_string());
  }
  sink.close();
  return kOk;
}

int cmd_path(const Options& o, std::ostream& out, std::ostream& err) {
  const CirculantGraph g = make_circulant(o.graph, err);
  const int n = g.ring_size();
  if (o.from < 0 || o.from >= n || o.target < 0 || o.target >= n) {
    throw InvalidParameter("--from/--to out of range");
  }
  const PathRep rep = shortest_rep(g, o.from, o.target);
  const Realization r = realize(rep, g, o.from);
  out << g.name() << " " << o.from << " -> " << o.target << '\n';
  out << "rep=" << to_notation(rep, g) << " length=" << rep.length()
      << " outer=" << rep.outer_length() << " inner=" << rep.inner_length()
      << '\n';
  out << "vertices=";
  for (std::size_t k = 0; k < r.vertices.size(); ++k) {
    out << (k ? "," : "") << r.vertices[k];
  }
  out << " path=" << (r.is_path ? "true" : "false") << '\n';
  return kOk;
}

int cmd_export(const Options& o, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  Sink sink(o.out, out);
  if (o.graph.family == "ggpg") {
    const GgpgGraph g = make_ggpg(o.graph, err);
    write_dot(sink.stream(), g,
              header("export", graph_flags(o.graph, g.chords().to_string()),
                     seed));
  } else {
    const CirculantGraph g = make_circulant(o.graph, err);
    write_dot(sink.stream(), g,
              header("export",
                     graph_flags(o.graph, g.generators().to_string()), seed));
  }
  sink.close();
  return kOk;
}

std::set<std::string> parse_theorems(const std::string& text) {
  static const std::set<std::string> known{"4.1", "4.2", "4.3", "4.4", "4.5"};
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!known.count(item)) {
      throw InvalidParameter("unknown theorem '" + item +
                             "' (expected 4.1..4.5)");
    }
    out.insert(item);
  }
  if (out.empty()) throw InvalidParameter("--theorems is empty");
  return out;
}

int cmd_verify(Options o, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  SweepArgs& a = o.sweep;
  if (!a.preset.empty()) {
    if (a.preset != "beenker-vanlint") {
      throw InvalidParameter("unknown preset '" + a.preset + "'");
    }
    if (a.n_range.empty()) a.n_range = "5..40";
    if (!a.m_set.empty() && a.m_set != "2") {
      throw InvalidParameter("preset beenker-vanlint fixes m=2 (one chord)");
    }
    a.m_set = "2";
  }
  if (a.n_range.empty()) throw InvalidParameter("--n is required");
  if (a.m_set.empty()) throw InvalidParameter("--m is required");
  const std::set<std::string> theorems = parse_theorems(a.theorems);
  const SweepConfig cfg = make_sweep_config(a, seed);

  std::string flags = sweep_flags(a, cfg) + " theorems=";
  for (auto it = theorems.begin(); it != theorems.end(); ++it) {
    flags += (it == theorems.begin() ? "" : ",") + *it;
  }
  const std::string head = header("verify", flags, seed);

  std::vector<VerificationReport> rows;
  try {
    rows = run_sweep(cfg);
  } catch (const TheoremViolation& v) {
    print_violation(err, v);
    return kTheoremViolation;
  }

  // Keep only anomalies for the requested theorems.
  std::vector<VerificationReport> findings = rows;
  std::size_t finding_count = 0;
  for (auto& r : findings) {
    std::erase_if(r.anomalies, [&](const Anomaly& an) {
      const std::string id = an.kind == "thm43"   ? "4.3"
                             : an.kind == "thm44" ? "4.4"
                                                  : "4.5";
      return !theorems.count(id);
    });
    finding_count += r.anomalies.size();
  }

  if (!a.out.empty()) {
    Sink sink(a.out, out);
    write_reports(sink.stream(), a.format, head, rows);
    sink.close();
  }
  const std::string findings_path =
      !a.aux_out.empty() ? a.aux_out
                         : (a.out.empty() ? std::string() : a.out + ".findings.csv");
  if (!findings_path.empty()) {
    Sink sink(findings_path, out);
    write_findings_csv(sink.stream(), head, findings);
    sink.close();
  }

  out << head << '\n';
  write_summary(out, summarize(rows));
  out << "findings for selected theorems: " << finding_count << '\n';
  return finding_count ? kFindings : kOk;
}

int cmd_sweep(const Options& o, std::uint64_t seed, std::ostream& out,
              std::ostream&) {
  const SweepArgs& a = o.sweep;
  if (a.n_range.empty()) throw InvalidParameter("--n is required");
  if (a.m_set.empty()) throw InvalidParameter("--m is required");
  for (int m : parse_list(a.m_set)) {
    if (m < 2) {
      throw InvalidParameter(
          "the conjecture sweep covers m >= 2 generators; for C_n(1,s) vs "
          "GPG(n,s) use 'verify --preset beenker-vanlint'");
    }
  }
  if (a.out.empty()) throw InvalidParameter("--out is required");
  const SweepConfig cfg = make_sweep_config(a, seed);
  const std::string head = header("sweep", sweep_flags(a, cfg), seed);

  std::vector<VerificationReport> rows;
  try {
    rows = run_sweep(cfg);
  } catch (const TheoremViolation& v) {
    print_violation(out, v);
    return kTheoremViolation;
  }

  {
    Sink sink(a.out, out);
    write_reports(sink.stream(), a.format, head, rows);
    sink.close();
  }
  {
    const std::string path =
        a.aux_out.empty() ? a.out + ".counterexamples.csv" : a.aux_out;
    Sink sink(path, out);
    write_counterexamples_csv(sink.stream(), head, rows);
    sink.close();
  }
  out << head << '\n';
  write_summary(out, summarize(rows));
  return kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (hi < lo) throw InvalidParameter("empty range '" + text + "'");
  return {lo, hi};
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_int(item));
  }
  if (out.empty()) throw InvalidParameter("empty list '" + text + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"loopnet: multi-loop networks and GGPG graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("loopnet ") + kVersion);

  Options o;

  auto* diameter = app.add_subcommand("diameter", "diameter of one graph");
  add_graph_options(diameter, o.graph);
  diameter->add_flag("--vdc", o.show_vdc, "also print V_Dc (circulant)");
  diameter->add_flag("--paranoid", o.paranoid, "all-source cross-check");
  diameter->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* distances = app.add_subcommand("distances", "BFS distance dump (CSV)");
  add_graph_options(distances, o.graph);
  distances->add_option("--source", o.source, "source vertex id");
  distances->add_flag("--all", o.all_sources, "every source");
  distances->add_option("--out", o.out, "output file (default stdout)");
  distances->add_option("--seed", o.seed);

  auto* path = app.add_subcommand("path", "canonical shortest representation");
  add_graph_options(path, o.graph);
  path->add_option("--to", o.target, "target vertex")->required();
  path->add_option("--from", o.from, "source vertex (default 0)");

  auto* exp = app.add_subcommand("export", "DOT export");
  add_graph_options(exp, o.graph);
  exp->add_option("--out", o.out, "output file (default stdout)");
  exp->add_option("--seed", o.seed);

  auto* verify = app.add_subcommand("verify", "check theorems over a range");
  add_sweep_options(verify, o.sweep, o);
  verify->add_option("--theorems", o.sweep.theorems,
                     "subset of 4.1,4.2,4.3,4.4,4.5");
  verify->add_option("--preset", o.sweep.preset, "beenker-vanlint");
  verify->add_option("--out", o.sweep.out, "report file");
  verify->add_option("--findings", o.sweep.aux_out,
                     "findings file (default <out>.findings.csv)");

  auto* sweep = app.add_subcommand("sweep", "conjecture sweep");
  add_sweep_options(sweep, o.sweep, o);
  sweep->add_option("--out", o.sweep.out, "report file")->required();
  sweep->add_option("--counterexamples", o.sweep.aux_out,
                    "counterexample file (default <out>.counterexamples.csv)");

  std::vector<std::string> argv_storage{"loopnet"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    const std::uint64_t seed = resolve_seed(o.seed, err);
    if (diameter->parsed()) return cmd_diameter(o, out, err);
    if (distances->parsed()) return cmd_distances(o, seed, out, err);
    if (path->parsed()) return cmd_path(o, out, err);
    if (exp->parsed()) return cmd_export(o, seed, out, err);
    if (verify->parsed()) return cmd_verify(o, seed, out, err);
    if (sweep->parsed()) return cmd_sweep(o, seed, out, err);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kParameterError;
}

}  // namespace loopnet::cli
