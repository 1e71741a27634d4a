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
#include "loopnet/metrics.hpp"

#include "loopnet/path_algebra.hpp"

namespace loopnet {
namespace {

// The chord-only subgraph of a circulant: same ring, generator 1 removed.
class ChordSubgraph {
 public:
  explicit ChordSubgraph(const CirculantGraph& g)
      : n_(g.ring_size()),
        chords_(g.generators().begin() + 1, g.generators().end()) {}

  int vertex_count() const { return n_; }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (int s : chords_) {
      f((v + s) % n_);
      f((v - s + n_) % n_);
    }
  }

 private:
  int n_;
  std::vector<int> chords_;
};

template <class G>
void cross_check(const G& g, Distance fast) {
  const Distance full = all_source_diameter(g);
  if (full != fast) {
    throw std::logic_error("symmetry shortcut diameter " +
                           format_distance(fast) + " != all-source " +
                           format_distance(full) + " for " + g.name());
  }
}

}  // namespace

std::string format_distance(Distance d) {
  return d == kUnreachable ? std::string("inf") : std::to_string(d);
}

Distance DistanceVector::eccentricity() const {
  Distance best = 0;
  for (Distance d : dist) best = std::max(best, d);
  return best;
}

Distance diameter_circulant(const CirculantGraph& g, bool paranoid) {
  const Distance fast = eccentricity(g, 0);
  if (paranoid) cross_check(g, fast);
  return fast;
}

Distance diameter_ggpg(const GgpgGraph& g, bool paranoid) {
  const Distance fast =
      std::max(eccentricity(g, g.outer(0)), eccentricity(g, g.inner(0)));
  if (paranoid) cross_check(g, fast);
  return fast;
}

Distance outer_only_distance(const CirculantGraph& g, Vertex i) {
  const int n = g.ring_size();
  if (i < 0 || i >= n) throw std::out_of_range("vertex out of range");
  return static_cast<Distance>(std::min(i, n - i));
}

DistanceVector inner_only_bfs(const CirculantGraph& g) {
  require_unit_generator(g);
  return bfs(ChordSubgraph(g), 0);
}

Distance inner_only_distance(const CirculantGraph& g, Vertex i) {
  if (i < 0 || i >= g.ring_size()) {
    throw std::out_of_range("vertex out of range");
  }
  return inner_only_bfs(g)[i];
}

namespace {

template <class G>
void write_rows(std::ostream& out, const char* family, const G& g,
                const GeneratorSequence& steps, const DistanceVector& dv) {
  const std::string gens = steps.to_string(';');
  const std::string source = g.vertex_name(dv.source);
  for (Vertex v = 0; v < static_cast<Vertex>(dv.dist.size()); ++v) {
    out << family << ',' << g.ring_size() << ',' << gens << ',' << source
        << ',' << g.vertex_name(v) << ',' << format_distance(dv[v]) << '\n';
  }
}

}  // namespace

void write_distance_rows(std::ostream& out, const CirculantGraph& g,
                         const DistanceVector& dv) {
  write_rows(out, "circulant", g, g.generators(), dv);
}

void write_distance_rows(std::ostream& out, const GgpgGraph& g,
                         const DistanceVector& dv) {
  write_rows(out, "ggpg", g, g.chords(), dv);
}

}  // namespace loopnet
