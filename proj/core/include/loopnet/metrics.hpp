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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopnet/graph.hpp"

namespace loopnet {

using Distance = std::uint32_t;

/// Sentinel for "no path"; serialized as "inf".
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

std::string format_distance(Distance d);

struct DistanceVector {
  Vertex source = 0;
  std::vector<Distance> dist;

  Distance operator[](Vertex v) const {
    return dist[static_cast<std::size_t>(v)];
  }
  /// Largest entry; kUnreachable if any vertex is unreachable.
  Distance eccentricity() const;
};

/// Breadth-first search over any graph exposing vertex_count() and
/// for_each_neighbor().
template <class G>
DistanceVector bfs(const G& g, Vertex src) {
  const int count = g.vertex_count();
  if (src < 0 || src >= count) {
    throw std::out_of_range("bfs source " + std::to_string(src) +
                            " out of range");
  }
  DistanceVector out{src, std::vector<Distance>(
                              static_cast<std::size_t>(count), kUnreachable)};
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(count));
  out.dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const Distance next = out.dist[static_cast<std::size_t>(v)] + 1;
    g.for_each_neighbor(v, [&](Vertex w) {
      auto& slot = out.dist[static_cast<std::size_t>(w)];
      if (slot == kUnreachable) {
        slot = next;
        queue.push_back(w);
      }
    });
  }
  return out;
}

/// One shortest path from src to dst, both ends included; empty if dst is
/// unreachable.
template <class G>
std::vector<Vertex> shortest_path(const G& g, Vertex src, Vertex dst) {
  const DistanceVector from_dst = bfs(g, dst);
  if (from_dst[src] == kUnreachable) return {};
  std::vector<Vertex> path{src};
  Vertex at = src;
  while (at != dst) {
    Vertex best = -1;
    g.for_each_neighbor(at, [&](Vertex w) {
      if (from_dst[w] + 1 == from_dst[at] && (best < 0 || w < best)) best = w;
    });
    at = best;
    path.push_back(at);
  }
  return path;
}

template <class G>
Distance eccentricity(const G& g, Vertex v) {
  return bfs(g, v).eccentricity();
}

/// Maximum eccentricity over every source. Reference for the symmetry
/// shortcuts below.
template <class G>
Distance all_source_diameter(const G& g) {
  Distance best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, eccentricity(g, v));
  }
  return best;
}

/// ecc(0); circulants are vertex-transitive. paranoid also runs all
/// sources and throws std::logic_error on disagreement.
Distance diameter_circulant(const CirculantGraph& g, bool paranoid = false);

/// max(ecc(u_0), ecc(v_0)); rotation i -> i+1 has exactly the outer and
/// inner rings as orbits. paranoid as above over all 2n sources.
Distance diameter_ggpg(const GgpgGraph& g, bool paranoid = false);

/// min(i, n - i): the two arcs of the outer cycle are the only outer-only
/// paths from 0 to i.
Distance outer_only_distance(const CirculantGraph& g, Vertex i);

/// Distances from 0 using only chord edges s_2..s_m.
DistanceVector inner_only_bfs(const CirculantGraph& g);

Distance inner_only_distance(const CirculantGraph& g, Vertex i);

inline constexpr const char* kDistanceCsvHeader =
    "family,n,gens,source,vertex,dist";

/// CSV rows in kDistanceCsvHeader order, no header line. The gens field is
/// ';'-separated (generators for circulants, chords for GGPG); vertices use
/// the graph's vertex names.
void write_distance_rows(std::ostream& out, const CirculantGraph& g,
                         const DistanceVector& dv);
void write_distance_rows(std::ostream& out, const GgpgGraph& g,
                         const DistanceVector& dv);

}  // namespace loopnet
