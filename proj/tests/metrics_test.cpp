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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"

namespace loopnet {
namespace {

std::vector<Distance> as_distances(const std::vector<int>& row) {
  std::vector<Distance> out;
  for (int v : row) {
    out.push_back(v >= oracle::kInf ? kUnreachable : static_cast<Distance>(v));
  }
  return out;
}

TEST(BfsTest, ExampleDistance) {
  const CirculantGraph g = build_circulant(17, {1, 2, 5, 8});
  const DistanceVector dv = bfs(g, 0);
  EXPECT_EQ(dv[11], 2u);
  EXPECT_EQ(dv[0], 0u);
  EXPECT_EQ(dv.source, 0);
}

TEST(BfsTest, C14RowMatchesFloydWarshall) {
  const CirculantGraph g = build_circulant(14, {1, 3, 4, 6});
  const auto fw =
      oracle::floyd_warshall(oracle::circulant_adjacency(14, {1, 3, 4, 6}));
  for (Vertex s = 0; s < 14; ++s) {
    EXPECT_EQ(bfs(g, s).dist, as_distances(fw[s]));
  }
  // Frozen oracle row for source 0.
  EXPECT_EQ(bfs(g, 0).dist, (std::vector<Distance>{0, 1, 2, 1, 1, 2, 1, 2, 1,
                                                    2, 1, 1, 2, 1}));
}

TEST(BfsTest, RejectsOutOfRangeSource) {
  const CirculantGraph g = build_circulant(7, {1, 2});
  EXPECT_THROW(bfs(g, 7), std::out_of_range);
  EXPECT_THROW(bfs(g, -1), std::out_of_range);
}

TEST(BfsTest, UnreachableIsSentinel) {
  // Generator 2 alone splits C_10 into two 5-cycles.
  const CirculantGraph g = build_circulant(10, {2});
  const DistanceVector dv = bfs(g, 0);
  EXPECT_EQ(dv[1], kUnreachable);
  EXPECT_EQ(dv.eccentricity(), kUnreachable);
  EXPECT_EQ(format_distance(dv[1]), "inf");
  EXPECT_EQ(format_distance(dv[2]), "1");
}

TEST(DiameterTest, FrozenValues) {
  // Values frozen from the Floyd-Warshall oracle.
  EXPECT_EQ(diameter_circulant(build_circulant(5, {1, 2})), 1u);
  EXPECT_EQ(diameter_circulant(build_circulant(17, {1, 2, 5, 8})), 2u);
  EXPECT_EQ(diameter_circulant(build_circulant(23, {1, 5, 9, 11})), 2u);
  EXPECT_EQ(diameter_ggpg(build_ggpg(5, {2})), 2u);
  EXPECT_EQ(diameter_ggpg(build_ggpg(14, {3, 4, 6})), 4u);
  EXPECT_EQ(diameter_ggpg(build_ggpg(23, {5, 9, 11})), 4u);
}

TEST(DiameterTest, FrozenValuesAgreeWithOracle) {
  const auto check_c = [](int n, std::vector<int> gens) {
    const CirculantGraph g(n, GeneratorSequence(gens));
    EXPECT_EQ(static_cast<int>(diameter_circulant(g, true)),
              oracle::matrix_diameter(oracle::floyd_warshall(
                  oracle::circulant_adjacency(n, gens))));
  };
  check_c(5, {1, 2});
  check_c(17, {1, 2, 5, 8});
  check_c(23, {1, 5, 9, 11});
  const auto check_p = [](int n, std::vector<int> chords) {
    const GgpgGraph g(n, GeneratorSequence(chords));
    const Distance d = diameter_ggpg(g, true);
    EXPECT_EQ(static_cast<int>(d), oracle::matrix_diameter(oracle::floyd_warshall(
                                       oracle::ggpg_adjacency(n, chords))));
    EXPECT_GE(d, eccentricity(g, g.outer(0)));
    EXPECT_GE(eccentricity(g, g.outer(0)), 1u);
  };
  check_p(5, {2});
  check_p(14, {3, 4, 6});
}

TEST(RestrictedDistanceTest, OuterOnly) {
  const CirculantGraph g17 = build_circulant(17, {1, 2, 5, 8});
  EXPECT_EQ(outer_only_distance(g17, 11), 6u);
  EXPECT_EQ(outer_only_distance(g17, 0), 0u);
  EXPECT_EQ(outer_only_distance(build_circulant(14, {1, 3}), 7), 7u);
  EXPECT_THROW(outer_only_distance(g17, 17), std::out_of_range);
}

TEST(RestrictedDistanceTest, InnerOnly) {
  const CirculantGraph g17 = build_circulant(17, {1, 2, 5, 8});
  EXPECT_EQ(inner_only_distance(g17, 11), 2u);
  EXPECT_EQ(inner_only_distance(g17, 0), 0u);
  const CirculantGraph g6 = build_circulant(6, {1, 2});
  EXPECT_EQ(inner_only_distance(g6, 3), kUnreachable);
  EXPECT_EQ(inner_only_distance(g6, 2), 1u);
  // No chords at all: nothing but the origin is reachable.
  EXPECT_EQ(inner_only_distance(build_circulant(9, {1}), 4), kUnreachable);
}

TEST(RestrictedDistanceTest, InnerOnlyByTwoStepEnumeration) {
  // Every vertex reachable with at most two chord steps in C_17(1,2,5,8).
  const CirculantGraph g = build_circulant(17, {1, 2, 5, 8});
  std::vector<int> best(17, 99);
  best[0] = 0;
  const std::vector<int> signed_chords{2, -2, 5, -5, 8, -8};
  for (int a : signed_chords) {
    best[((a % 17) + 17) % 17] = std::min(best[((a % 17) + 17) % 17], 1);
    for (int b : signed_chords) {
      const int v = (((a + b) % 17) + 17) % 17;
      best[v] = std::min(best[v], v == 0 ? 0 : 2);
    }
  }
  const DistanceVector inner = inner_only_bfs(g);
  for (Vertex i = 0; i < 17; ++i) {
    if (best[i] <= 2) {
      EXPECT_EQ(inner[i], static_cast<Distance>(best[i])) << i;
    } else {
      EXPECT_GT(inner[i], 2u);
    }
  }
}

TEST(ShortestPathTest, EndpointsAndLength) {
  const GgpgGraph g = build_ggpg(14, {3, 4, 6});
  const auto dv = bfs(g, g.outer(0));
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    const auto p = shortest_path(g, g.outer(0), y);
    ASSERT_EQ(p.size(), dv[y] + 1u);
    EXPECT_EQ(p.front(), g.outer(0));
    EXPECT_EQ(p.back(), y);
    for (std::size_t k = 1; k < p.size(); ++k) {
      EXPECT_TRUE(g.has_edge(p[k - 1], p[k]));
    }
  }
  EXPECT_TRUE(shortest_path(build_circulant(10, {2}), 0, 1).empty());
}

TEST(MetricsPropertyTest, ShortcutsAndRestrictionsAgainstOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 36);
    const int m = 2 + static_cast<int>(rng() % 3);
    const auto gens = oracle::random_unit_gens(rng, n, m);
    const CirculantGraph c(n, GeneratorSequence(gens));
    const auto fw = oracle::floyd_warshall(oracle::circulant_adjacency(n, gens));
    EXPECT_EQ(static_cast<int>(diameter_circulant(c)), oracle::matrix_diameter(fw));

    const std::vector<int> chords(gens.begin() + 1, gens.end());
    const GgpgGraph p(n, GeneratorSequence(chords));
    EXPECT_EQ(static_cast<int>(diameter_ggpg(p)),
              oracle::matrix_diameter(
                  oracle::floyd_warshall(oracle::ggpg_adjacency(n, chords))));

    const auto inner_fw =
        oracle::floyd_warshall(oracle::circulant_adjacency(n, chords));
    const DistanceVector inner = inner_only_bfs(c);
    for (Vertex i = 0; i < n; ++i) {
      EXPECT_EQ(inner[i], as_distances(inner_fw[0])[i]);
      EXPECT_GE(inner[i], static_cast<Distance>(fw[0][i]));
      EXPECT_GE(outer_only_distance(c, i), static_cast<Distance>(fw[0][i]));
    }
    // Triangle inequality on sampled triples.
    for (int t = 0; t < 50; ++t) {
      const int a = static_cast<int>(rng() % n);
      const int b = static_cast<int>(rng() % n);
      const int x = static_cast<int>(rng() % n);
      const auto da = bfs(c, a);
      const auto dx = bfs(c, x);
      EXPECT_LE(da[b], da[x] + dx[b]);
    }
  }
}

TEST(DistanceRowsTest, CsvSchema) {
  const GgpgGraph g = build_ggpg(5, {2});
  std::ostringstream os;
  write_distance_rows(os, g, bfs(g, g.inner(0)));
  std::istringstream in(os.str());
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "ggpg,5,2,v0,u0,1");
  EXPECT_EQ(std::string(kDistanceCsvHeader), "family,n,gens,source,vertex,dist");

  std::ostringstream cs;
  write_distance_rows(cs, build_circulant(10, {1, 4}), bfs(build_circulant(10, {1, 4}), 0));
  EXPECT_EQ(cs.str().substr(0, 23), "circulant,10,1;4,0,0,0\n");
}

}  // namespace
}  // namespace loopnet
