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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "loopnet/error.hpp"

namespace loopnet {

using Vertex = int;

/// Undirected edge stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Strictly increasing, nonempty list of positive step sizes.
///
/// Range checks against a concrete ring size happen when a graph is built,
/// since the admissible upper bound floor((n-1)/2) depends on n.
class GeneratorSequence {
 public:
  explicit GeneratorSequence(std::vector<int> values);

  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t k) const { return values_[k]; }
  int front() const { return values_.front(); }
  int back() const { return values_.back(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  bool contains(int step) const;

  /// "1,2,5,8"
  std::string to_string(char sep = ',') const;

  friend bool operator==(const GeneratorSequence&,
                         const GeneratorSequence&) = default;

 private:
  std::vector<int> values_;
};

/// Largest admissible step for a ring of size n.
constexpr int max_step(int n) { return (n - 1) / 2; }

/// Multi-loop network C_n(s_1, ..., s_m) on vertices {0, ..., n-1}.
///
/// Adjacency is implicit: i ~ j iff (i - j) mod n or (j - i) mod n is a
/// generator. Since every generator is at most floor((n-1)/2), the graph is
/// simple and 2m-regular with exactly n*m edges.
class CirculantGraph {
 public:
  CirculantGraph(int n, GeneratorSequence gens);

  int ring_size() const { return n_; }
  int vertex_count() const { return n_; }
  const GeneratorSequence& generators() const { return gens_; }
  std::size_t edge_count() const {
    return static_cast<std::size_t>(n_) * gens_.size();
  }
  int degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_unit_generator() const { return gens_.front() == 1; }

  /// Sorted neighbor list. Throws std::out_of_range for a bad id.
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Unchecked, unsorted neighbor visit for hot loops.
  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (int s : gens_) {
      int fwd = v + s;
      if (fwd >= n_) fwd -= n_;
      int back = v - s;
      if (back < 0) back += n_;
      f(fwd);
      f(back);
    }
  }

  /// Every edge once, sorted.
  std::vector<Edge> edges() const;

  std::string vertex_name(Vertex v) const;
  /// "C_17(1,2,5,8)"
  std::string name() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  GeneratorSequence gens_;
};

enum class EdgeKind { kOuter, kInner, kSpoke };

/// GGPG(n; s_1, ..., s_k): outer n-cycle u_i u_{i+1}, inner chord edges
/// v_i v_{i +- s}, spokes u_i v_i.
///
/// Vertex ids: u_i is i, v_i is n + i.
class GgpgGraph {
 public:
  GgpgGraph(int n, GeneratorSequence chords);

  int ring_size() const { return n_; }
  int vertex_count() const { return 2 * n_; }
  const GeneratorSequence& chords() const { return chords_; }
  std::size_t chord_count() const { return chords_.size(); }
  std::size_t edge_count() const {
    return 2 * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(n_) * chords_.size();
  }

  Vertex outer(int i) const { return i; }
  Vertex inner(int i) const { return n_ + i; }
  bool is_outer(Vertex v) const { return v < n_; }
  int ring_index(Vertex v) const { return v < n_ ? v : v - n_; }

  int degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  /// Kind of the edge {a, b}; throws std::invalid_argument if absent.
  EdgeKind edge_kind(Vertex a, Vertex b) const;

  std::vector<Vertex> neighbors(Vertex v) const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if (v < n_) {
      f(v + 1 == n_ ? 0 : v + 1);
      f(v == 0 ? n_ - 1 : v - 1);
      f(v + n_);
      return;
    }
    const int i = v - n_;
    for (int s : chords_) {
      int fwd = i + s;
      if (fwd >= n_) fwd -= n_;
      int back = i - s;
      if (back < 0) back += n_;
      f(n_ + fwd);
      f(n_ + back);
    }
    f(i);
  }

  std::vector<Edge> edges() const;

  /// "u3" / "v3"
  std::string vertex_name(Vertex v) const;
  /// "GGPG(14;3,4,6)"
  std::string name() const;

  friend bool operator==(const GgpgGraph&, const GgpgGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  GeneratorSequence chords_;
};

/// Validating factory; throws InvalidParameter.
CirculantGraph build_circulant(int n, std::vector<int> gens);
/// Validating factory; throws InvalidParameter. Rejects chord 1.
GgpgGraph build_ggpg(int n, std::vector<int> chords);

/// Sorts and de-duplicates a user-supplied list. Returns true if the input
/// was not already strictly increasing.
bool normalize_steps(std::vector<int>& steps);

}  // namespace loopnet
