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
#include "loopnet/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace loopnet {
namespace {

int circular_step(Vertex a, Vertex b, int n) {
  const int d = ((b - a) % n + n) % n;
  return std::min(d, n - d);
}

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

VertexCorrespondence::VertexCorrespondence(std::vector<Edge> classes) {
  outer_.reserve(classes.size());
  inner_.reserve(classes.size());
  class_of_.assign(2 * classes.size(), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto [u, v] = classes[i];
    const auto bound = static_cast<Vertex>(class_of_.size());
    if (u < 0 || v < 0 || u >= bound || v >= bound ||
        class_of_[static_cast<std::size_t>(u)] != -1 ||
        class_of_[static_cast<std::size_t>(v)] != -1 || u == v) {
      throw std::invalid_argument("spoke classes must partition the vertices");
    }
    outer_.push_back(u);
    inner_.push_back(v);
    class_of_[static_cast<std::size_t>(u)] = static_cast<Vertex>(i);
    class_of_[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
}

Vertex VertexCorrespondence::member(Vertex i, Side side) const {
  const auto& ring = side == Side::kOuter ? outer_ : inner_;
  return ring.at(static_cast<std::size_t>(i));
}

Vertex VertexCorrespondence::circulant_vertex(Vertex x) const {
  return class_of_.at(static_cast<std::size_t>(x));
}

Side VertexCorrespondence::side_of(Vertex x) const {
  const Vertex i = circulant_vertex(x);
  return outer_[static_cast<std::size_t>(i)] == x ? Side::kOuter : Side::kInner;
}

Contraction contract_spokes(const GgpgGraph& g) {
  const int n = g.ring_size();
  const std::vector<Edge> edges = g.edges();

  // Spokes define the classes; label each class by its outer member's ring
  // position so that the circulant's ring order matches the outer cycle.
  std::vector<Edge> classes(static_cast<std::size_t>(n), Edge{-1, -1});
  for (const Edge& e : edges) {
    if (g.edge_kind(e.a, e.b) != EdgeKind::kSpoke) continue;
    const Vertex u = g.is_outer(e.a) ? e.a : e.b;
    const Vertex v = g.is_outer(e.a) ? e.b : e.a;
    classes[static_cast<std::size_t>(g.ring_index(u))] = Edge{u, v};
  }
  VertexCorrespondence corr(std::move(classes));

  std::set<Edge> merged;
  std::set<int> steps;
  for (const Edge& e : edges) {
    const Vertex a = corr.circulant_vertex(e.a);
    const Vertex b = corr.circulant_vertex(e.b);
    if (a == b) continue;  // contracted spoke
    merged.insert(ordered(a, b));
    steps.insert(circular_step(a, b, n));
  }

  CirculantGraph c(n, GeneratorSequence({steps.begin(), steps.end()}));
  const std::vector<Edge> rebuilt = c.edges();
  if (!std::equal(rebuilt.begin(), rebuilt.end(), merged.begin(),
                  merged.end())) {
    throw std::logic_error("contraction of " + g.name() +
                           " is not a circulant");
  }
  return {std::move(c), std::move(corr)};
}

Expansion expand(const CirculantGraph& g) {
  if (!g.has_unit_generator()) {
    throw InvalidParameter("expansion needs generator 1 in " + g.name());
  }
  if (g.generators().size() < 2) {
    throw InvalidParameter("expansion of " + g.name() +
                           " needs at least one chord >= 2");
  }
  const int n = g.ring_size();
  std::vector<Edge> classes;
  classes.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) classes.push_back(Edge{i, n + i});
  VertexCorrespondence corr(std::move(classes));
  const auto u = [&](Vertex i) { return corr.member(i, Side::kOuter); };
  const auto v = [&](Vertex i) { return corr.member(i, Side::kInner); };

  std::set<Edge> produced;
  std::set<int> chords;
  for (const Edge& e : g.edges()) {
    produced.insert(ordered(u(e.a), v(e.a)));
    produced.insert(ordered(u(e.b), v(e.b)));
    const int step = circular_step(e.a, e.b, n);
    if (step == 1) {
      produced.insert(ordered(u(e.a), u(e.b)));
    } else {
      produced.insert(ordered(v(e.a), v(e.b)));
      chords.insert(step);
    }
  }

  GgpgGraph h(n, GeneratorSequence({chords.begin(), chords.end()}));
  const std::vector<Edge> rebuilt = h.edges();
  if (!std::equal(rebuilt.begin(), rebuilt.end(), produced.begin(),
                  produced.end())) {
    throw std::logic_error("expansion of " + g.name() + " is not a GGPG graph");
  }
  return {std::move(h), std::move(corr)};
}

int count_spokes(const GgpgGraph& g, std::span<const Vertex> path) {
  int spokes = 0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (g.edge_kind(path[k - 1], path[k]) == EdgeKind::kSpoke) ++spokes;
  }
  return spokes;
}

ProjectedPath project_path(const GgpgGraph& g, const VertexCorrespondence& corr,
                           std::span<const Vertex> path) {
  if (path.empty()) throw InvalidParameter("empty path");
  ProjectedPath out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] < 0 || path[k] >= g.vertex_count()) {
      throw InvalidParameter("path vertex out of range");
    }
    if (k > 0) {
      if (!g.has_edge(path[k - 1], path[k])) {
        throw InvalidParameter(g.vertex_name(path[k - 1]) + "-" +
                               g.vertex_name(path[k]) + " is not an edge");
      }
      if (g.edge_kind(path[k - 1], path[k]) == EdgeKind::kSpoke) {
        ++out.spokes_removed;
        continue;
      }
    }
    out.vertices.push_back(corr.circulant_vertex(path[k]));
  }
  return out;
}

std::vector<Vertex> lift_path(const PathRep& rep, const CirculantGraph& g,
                              const VertexCorrespondence& corr, Side start,
                              Side finish, Vertex origin) {
  const Walk walk = canonical_walk(rep, g, origin);
  std::vector<Step> outer_steps;
  std::vector<Step> chord_steps;
  for (const Step& s : walk.steps) {
    (s.generator == 1 ? outer_steps : chord_steps).push_back(s);
  }
  const bool chords_first = start == Side::kInner && finish == Side::kOuter;

  const int n = g.ring_size();
  std::vector<Vertex> out;
  Vertex at = origin;
  Side side = start;
  out.push_back(corr.member(at, side));
  const auto move_to = [&](Side wanted) {
    if (side != wanted) {
      side = wanted;
      out.push_back(corr.member(at, side));
    }
  };
  const auto run = [&](const std::vector<Step>& steps, Side ring) {
    if (steps.empty()) return;
    move_to(ring);
    for (const Step& s : steps) {
      at = ((at + s.direction * s.generator) % n + n) % n;
      out.push_back(corr.member(at, side));
    }
  };
  if (chords_first) {
    run(chord_steps, Side::kInner);
    run(outer_steps, Side::kOuter);
  } else {
    run(outer_steps, Side::kOuter);
    run(chord_steps, Side::kInner);
  }
  move_to(finish);

  std::vector<Vertex> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidParameter("representation " + to_notation(rep, g) +
                           " does not lift to a path");
  }
  return out;
}

}  // namespace loopnet
