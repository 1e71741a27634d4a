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
#include "loopnet/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loopnet {
namespace {

// Circular distance of a step, folded into [0, n/2].
int fold(int diff, int n) {
  int d = ((diff % n) + n) % n;
  return std::min(d, n - d);
}

void check_ring(int n) {
  if (n < 5) {
    throw InvalidParameter("ring size must be at least 5, got " +
                           std::to_string(n));
  }
}

void check_steps(const GeneratorSequence& steps, int lo, int n,
                 const char* what) {
  const int hi = max_step(n);
  if (steps.front() < lo || steps.back() > hi) {
    std::ostringstream os;
    os << what << " must lie in [" << lo << ", " << hi << "] for n=" << n
       << ", got " << steps.to_string();
    throw InvalidParameter(os.str());
  }
}

}  // namespace

GeneratorSequence::GeneratorSequence(std::vector<int> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidParameter("generator list must be nonempty");
  }
  if (values_.front() < 1) {
    throw InvalidParameter("generators must be positive");
  }
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (values_[k] <= values_[k - 1]) {
      throw InvalidParameter("generators must be strictly increasing: " +
                             to_string());
    }
  }
}

bool GeneratorSequence::contains(int step) const {
  return std::binary_search(values_.begin(), values_.end(), step);
}

std::string GeneratorSequence::to_string(char sep) const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values_[k]);
  }
  return out;
}

bool normalize_steps(std::vector<int>& steps) {
  const bool was_canonical =
      std::adjacent_find(steps.begin(), steps.end(),
                         [](int a, int b) { return a >= b; }) == steps.end();
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return !was_canonical;
}

// ---------------------------------------------------------------------------
// CirculantGraph

CirculantGraph::CirculantGraph(int n, GeneratorSequence gens)
    : n_(n), gens_(std::move(gens)) {
  check_ring(n_);
  check_steps(gens_, 1, n_, "generators");
}

void CirculantGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for " + name());
  }
}

int CirculantGraph::degree(Vertex v) const {
  check_vertex(v);
  return 2 * static_cast<int>(gens_.size());
}

bool CirculantGraph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return gens_.contains(fold(b - a, n_));
}

std::vector<Vertex> CirculantGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(2 * gens_.size());
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> CirculantGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex i = 0; i < n_; ++i) {
    for (int s : gens_) {
      const Vertex j = (i + s) % n_;
      out.push_back(i < j ? Edge{i, j} : Edge{j, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CirculantGraph::vertex_name(Vertex v) const {
  check_vertex(v);
  return std::to_string(v);
}

std::string CirculantGraph::name() const {
  return "C_" + std::to_string(n_) + "(" + gens_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// GgpgGraph

GgpgGraph::GgpgGraph(int n, GeneratorSequence chords)
    : n_(n), chords_(std::move(chords)) {
  check_ring(n_);
  check_steps(chords_, 2, n_, "chords");
}

void GgpgGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= 2 * n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for " + name());
  }
}

int GgpgGraph::degree(Vertex v) const {
  check_vertex(v);
  return is_outer(v) ? 3 : 2 * static_cast<int>(chords_.size()) + 1;
}

bool GgpgGraph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const int step = fold(ring_index(b) - ring_index(a), n_);
  if (is_outer(a) && is_outer(b)) return step == 1;
  if (!is_outer(a) && !is_outer(b)) return chords_.contains(step);
  return step == 0;
}

EdgeKind GgpgGraph::edge_kind(Vertex a, Vertex b) const {
  if (!has_edge(a, b)) {
    throw std::invalid_argument(vertex_name(a) + "-" + vertex_name(b) +
                                " is not an edge of " + name());
  }
  if (is_outer(a) != is_outer(b)) return EdgeKind::kSpoke;
  return is_outer(a) ? EdgeKind::kOuter : EdgeKind::kInner;
}

std::vector<Vertex> GgpgGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(2 * chords_.size() + 1);
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> GgpgGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int i = 0; i < n_; ++i) {
    const int next = (i + 1) % n_;
    out.push_back(i < next ? Edge{i, next} : Edge{next, i});
    out.push_back(Edge{outer(i), inner(i)});
    for (int s : chords_) {
      const Vertex a = inner(i);
      const Vertex b = inner((i + s) % n_);
      out.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GgpgGraph::vertex_name(Vertex v) const {
  check_vertex(v);
  return (is_outer(v) ? "u" : "v") + std::to_string(ring_index(v));
}

std::string GgpgGraph::name() const {
  return "GGPG(" + std::to_string(n_) + ";" + chords_.to_string() + ")";
}

// ---------------------------------------------------------------------------

CirculantGraph build_circulant(int n, std::vector<int> gens) {
  return CirculantGraph(n, GeneratorSequence(std::move(gens)));
}

GgpgGraph build_ggpg(int n, std::vector<int> chords) {
  return GgpgGraph(n, GeneratorSequence(std::move(chords)));
}

}  // namespace loopnet
