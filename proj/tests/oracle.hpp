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

// Test-only reference implementations. Nothing here calls into the
// library's adjacency or BFS code: graphs are rebuilt from the family
// definitions as dense matrices and solved with Floyd-Warshall.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

namespace loopnet::oracle {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

using Matrix = std::vector<std::vector<int>>;

/// i ~ j iff |i - j| is congruent to some generator or its negative.
inline Matrix circulant_adjacency(int n, const std::vector<int>& gens) {
  Matrix adj(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int d = ((i - j) % n + n) % n;
      for (int s : gens) {
        if (d == s % n || d == (n - s % n) % n) adj[i][j] = 1;
      }
    }
  }
  return adj;
}

/// u_i = i, v_i = n + i; outer cycle, inner chords, spokes.
inline Matrix ggpg_adjacency(int n, const std::vector<int>& chords) {
  Matrix adj(2 * n, std::vector<int>(2 * n, 0));
  const auto link = [&](int a, int b) { adj[a][b] = adj[b][a] = 1; };
  for (int i = 0; i < n; ++i) {
    link(i, (i + 1) % n);
    link(i, n + i);
    for (int s : chords) link(n + i, n + (i + s) % n);
  }
  return adj;
}

inline Matrix floyd_warshall(const Matrix& adj) {
  const int count = static_cast<int>(adj.size());
  Matrix d(count, std::vector<int>(count, kInf));
  for (int i = 0; i < count; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < count; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

inline int matrix_diameter(const Matrix& dist) {
  int best = 0;
  for (const auto& row : dist) {
    for (int v : row) best = std::max(best, v);
  }
  return best;
}

inline int edge_count(const Matrix& adj) {
  int total = 0;
  for (const auto& row : adj) {
    for (int v : row) total += v;
  }
  return total / 2;
}

/// Random C_n(1, s_2, ..., s_m) parameters with m generators in total.
inline std::vector<int> random_unit_gens(std::mt19937_64& rng, int n, int m) {
  const int hi = (n - 1) / 2;
  std::vector<int> pool;
  for (int s = 2; s <= hi; ++s) pool.push_back(s);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> gens{1};
  gens.insert(gens.end(), pool.begin(),
              pool.begin() + std::min<std::size_t>(pool.size(), m - 1));
  std::sort(gens.begin(), gens.end());
  return gens;
}

/// Every C_n(1, ...) generator list with the given total count.
inline std::vector<std::vector<int>> all_unit_gens(int n, int m) {
  std::vector<std::vector<int>> out;
  const int hi = (n - 1) / 2;
  std::vector<int> cur{1};
  const auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int s = next; s <= hi; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace loopnet::oracle
