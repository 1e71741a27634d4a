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

#include <span>
#include <vector>

#include "loopnet/graph.hpp"
#include "loopnet/path_algebra.hpp"

namespace loopnet {

enum class Side { kOuter, kInner };

/// Pairing of each circulant vertex i with its spoke class {u_i, v_i}.
class VertexCorrespondence {
 public:
  VertexCorrespondence() = default;
  /// classes[i] = {outer member, inner member} of the class matching i.
  explicit VertexCorrespondence(std::vector<Edge> classes);

  int size() const { return static_cast<int>(outer_.size()); }
  Vertex member(Vertex i, Side side) const;
  /// Circulant vertex whose class contains the GGPG vertex x.
  Vertex circulant_vertex(Vertex x) const;
  Side side_of(Vertex x) const;

  friend bool operator==(const VertexCorrespondence&,
                         const VertexCorrespondence&) = default;

 private:
  std::vector<Vertex> outer_;
  std::vector<Vertex> inner_;
  std::vector<Vertex> class_of_;
};

struct Contraction {
  CirculantGraph circulant;
  VertexCorrespondence correspondence;
};

struct Expansion {
  GgpgGraph ggpg;
  VertexCorrespondence correspondence;
};

/// Merges u_i and v_i along every spoke. Outer edges become generator-1
/// edges, inner edges become chord edges; parallel edges collapse.
Contraction contract_spokes(const GgpgGraph& g);

/// Builds the GGPG graph from a circulant with s_1 = 1: a generator-1 edge
/// (i, i+1) yields u_i u_{i+1} plus both spokes, a chord edge (i, i+s)
/// yields v_i v_{i+s} plus both spokes. Requires at least one chord.
Expansion expand(const CirculantGraph& g);

struct ProjectedPath {
  std::vector<Vertex> vertices;
  int spokes_removed = 0;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Replaces each vertex by its class and drops spoke steps. The result is
/// a walk in the contracted circulant. Throws InvalidParameter if path is
/// empty or not a walk in g.
ProjectedPath project_path(const GgpgGraph& g, const VertexCorrespondence& corr,
                           std::span<const Vertex> path);

/// Embeds rep, starting at the class of origin, as a GGPG path: outer steps on
/// the u-ring, chord steps on the v-ring, one spoke where the ring changes
/// and one at each end whose requested side differs. Outer steps go first
/// unless the path starts inner and ends outer, in which case chords go
/// first; either way at most two spokes are used. Throws InvalidParameter
/// if the result repeats a vertex.
std::vector<Vertex> lift_path(const PathRep& rep, const CirculantGraph& g,
                              const VertexCorrespondence& corr, Side start,
                              Side finish, Vertex origin = 0);

/// Number of spoke edges along a GGPG vertex sequence.
int count_spokes(const GgpgGraph& g, std::span<const Vertex> path);

}  // namespace loopnet
