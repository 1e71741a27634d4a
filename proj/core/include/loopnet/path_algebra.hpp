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

#include <string>
#include <vector>

#include "loopnet/graph.hpp"

namespace loopnet {

/// Net signed step counts of a path in C_n(1, s_2, ..., s_m).
///
/// alpha counts steps along generator 1 (the outer ring), lambdas[k-2]
/// counts steps along s_k. Positive means clockwise (+s), negative
/// counterclockwise (-s).
struct PathRep {
  int alpha = 0;
  std::vector<int> lambdas;

  int outer_length() const;
  int inner_length() const;
  int length() const { return outer_length() + inner_length(); }

  friend bool operator==(const PathRep&, const PathRep&) = default;
};

struct Step {
  int generator = 1;
  int direction = +1;  // +1 or -1

  friend bool operator==(const Step&, const Step&) = default;
};

/// Walks store steps only; the vertices are derived by replay.
struct Walk {
  Vertex origin = 0;
  std::vector<Step> steps;
};

/// Vertices visited by w, origin first. Throws InvalidParameter if a step
/// uses a non-generator or a direction other than +-1.
std::vector<Vertex> replay(const Walk& w, const CirculantGraph& g);

/// Collapses a walk into its net step counts.
PathRep reduce_walk(const Walk& w, const CirculantGraph& g);

/// (origin + alpha + sum lambdas[k] * s_k) mod n.
Vertex endpoint(const PathRep& rep, const CirculantGraph& g, Vertex origin = 0);

/// Minimum-length representation reaching target from 0.
///
/// Searches representations by increasing length, magnitudes in
/// lexicographic order (|alpha|, |lambda_2|, ...), then signs with + before
/// - position by position. The first hit is returned, so the result is
/// fully deterministic. Independent of BFS.
PathRep shortest_rep(const CirculantGraph& g, Vertex target);

/// Translation of a pair (x, y) to origin form: y - x if x < y, else
/// n - x + y (taken mod n so x == y maps to 0).
Vertex translate_to_origin(int n, Vertex x, Vertex y);

/// shortest_rep for an arbitrary pair, through translate_to_origin.
PathRep shortest_rep(const CirculantGraph& g, Vertex from, Vertex to);

struct Realization {
  std::vector<Vertex> vertices;
  bool is_path = true;  // vertex-distinct
};

/// Replays rep from origin: all outer steps first, then chords in
/// ascending generator order.
Realization realize(const PathRep& rep, const CirculantGraph& g,
                    Vertex origin = 0);

/// The walk realize() follows, as explicit steps.
Walk canonical_walk(const PathRep& rep, const CirculantGraph& g,
                    Vertex origin = 0);

/// "(1a-, 1c2+, 2c5+, 0c8+)"
std::string to_notation(const PathRep& rep, const CirculantGraph& g);

/// Throws InvalidParameter unless g's first generator is 1.
void require_unit_generator(const CirculantGraph& g);

}  // namespace loopnet
