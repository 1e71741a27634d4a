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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"

namespace loopnet {
namespace {

TEST(GeneratorSequenceTest, RejectsEmptyUnsortedAndDuplicates) {
  EXPECT_THROW(GeneratorSequence({}), InvalidParameter);
  EXPECT_THROW(GeneratorSequence({2, 1}), InvalidParameter);
  EXPECT_THROW(GeneratorSequence({1, 3, 3}), InvalidParameter);
  EXPECT_THROW(GeneratorSequence({0, 2}), InvalidParameter);
  EXPECT_NO_THROW(GeneratorSequence({1, 2, 5, 8}));
}

TEST(GeneratorSequenceTest, ToString) {
  EXPECT_EQ(GeneratorSequence({1, 2, 5, 8}).to_string(), "1,2,5,8");
  EXPECT_EQ(GeneratorSequence({1, 2, 5, 8}).to_string(';'), "1;2;5;8");
}

TEST(NormalizeStepsTest, SortsAndDeduplicates) {
  std::vector<int> steps{5, 1, 5, 2};
  EXPECT_TRUE(normalize_steps(steps));
  EXPECT_EQ(steps, (std::vector<int>{1, 2, 5}));
  EXPECT_FALSE(normalize_steps(steps));
}

TEST(BuildCirculantTest, C17FourGenerators) {
  const CirculantGraph g = build_circulant(17, {1, 2, 5, 8});
  EXPECT_EQ(g.vertex_count(), 17);
  EXPECT_EQ(g.edge_count(), 68u);
  EXPECT_EQ(g.edges().size(), 68u);
  for (Vertex v = 0; v < 17; ++v) EXPECT_EQ(g.degree(v), 8);
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2, 5, 8, 9, 12, 15, 16}));
  EXPECT_EQ(g.name(), "C_17(1,2,5,8)");
}

TEST(BuildCirculantTest, FiveVerticesIsComplete) {
  const CirculantGraph g = build_circulant(5, {1, 2});
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = 0; b < 5; ++b) EXPECT_EQ(g.has_edge(a, b), a != b);
  }
}

TEST(BuildCirculantTest, C14Neighbors) {
  const CirculantGraph g = build_circulant(14, {1, 3, 4, 6});
  EXPECT_EQ(g.neighbors(0),
            (std::vector<Vertex>{1, 3, 4, 6, 8, 10, 11, 13}));
  EXPECT_EQ(g.edges().size(), 56u);
}

TEST(BuildCirculantTest, RejectsBadParameters) {
  EXPECT_THROW(build_circulant(4, {1}), InvalidParameter);
  EXPECT_THROW(build_circulant(10, {1, 5}), InvalidParameter);  // > (n-1)/2
  EXPECT_THROW(build_circulant(10, {2, 1}), InvalidParameter);
  EXPECT_THROW(build_circulant(10, {1, 1}), InvalidParameter);
  EXPECT_THROW(build_circulant(10, {}), InvalidParameter);
}

TEST(BuildCirculantTest, OutOfRangeVertex) {
  const CirculantGraph g = build_circulant(7, {1, 2});
  EXPECT_THROW(g.neighbors(7), std::out_of_range);
  EXPECT_THROW(g.neighbors(-1), std::out_of_range);
}

TEST(BuildGgpgTest, SingleChordGraphs) {
  const GgpgGraph p = build_ggpg(14, {5});
  EXPECT_EQ(p.vertex_count(), 28);
  EXPECT_EQ(p.edges().size(), 42u);
  for (Vertex v = 0; v < 28; ++v) EXPECT_EQ(p.degree(v), 3);

  const GgpgGraph q = build_ggpg(14, {3, 4, 6});
  EXPECT_EQ(q.vertex_count(), 28);
  EXPECT_EQ(q.edges().size(), 70u);
  EXPECT_EQ(q.edge_count(), 70u);
  EXPECT_EQ(q.degree(q.outer(3)), 3);
  EXPECT_EQ(q.degree(q.inner(3)), 7);
}

TEST(BuildGgpgTest, N23ThreeChords) {
  const GgpgGraph g = build_ggpg(23, {5, 9, 11});
  EXPECT_EQ(g.edges().size(), 23u * 2 + 23u * 3);
  EXPECT_EQ(g.name(), "GGPG(23;5,9,11)");
}

TEST(BuildGgpgTest, NeighborsOfBothRings) {
  const GgpgGraph g = build_ggpg(14, {5});
  EXPECT_EQ(g.neighbors(g.outer(0)),
            (std::vector<Vertex>{g.outer(1), g.outer(13), g.inner(0)}));
  std::vector<Vertex> expected{g.inner(5), g.inner(9), g.outer(0)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(g.neighbors(g.inner(0)), expected);
  EXPECT_EQ(g.vertex_name(g.inner(9)), "v9");
}

TEST(BuildGgpgTest, RejectsChordOneAndBadRanges) {
  EXPECT_THROW(build_ggpg(14, {1, 3}), InvalidParameter);
  EXPECT_THROW(build_ggpg(4, {2}), InvalidParameter);
  EXPECT_THROW(build_ggpg(14, {7}), InvalidParameter);
  EXPECT_THROW(build_ggpg(14, {}), InvalidParameter);
}

TEST(BuildGgpgTest, EdgeKinds) {
  const GgpgGraph g = build_ggpg(9, {2});
  EXPECT_EQ(g.edge_kind(g.outer(0), g.outer(8)), EdgeKind::kOuter);
  EXPECT_EQ(g.edge_kind(g.inner(0), g.inner(7)), EdgeKind::kInner);
  EXPECT_EQ(g.edge_kind(g.inner(4), g.outer(4)), EdgeKind::kSpoke);
  EXPECT_THROW(g.edge_kind(g.outer(0), g.inner(1)), std::invalid_argument);
}

TEST(GraphEqualityTest, ValueSemantics) {
  EXPECT_EQ(build_circulant(9, {1, 3}), build_circulant(9, {1, 3}));
  EXPECT_NE(build_circulant(9, {1, 3}), build_circulant(9, {1, 2}));
  EXPECT_NE(build_circulant(9, {1, 3}), build_circulant(11, {1, 3}));
  EXPECT_EQ(build_ggpg(9, {3}), build_ggpg(9, {3}));
}

// Adjacency must agree with the definitional oracle on every pair.
TEST(GraphPropertyTest, AdjacencyMatchesDefinitions) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 36);
    const int m = 1 + static_cast<int>(rng() % 4);
    const std::vector<int> gens = oracle::random_unit_gens(rng, n, m);
    const CirculantGraph c(n, GeneratorSequence(gens));
    const auto cadj = oracle::circulant_adjacency(n, gens);
    ASSERT_EQ(static_cast<int>(c.edges().size()), oracle::edge_count(cadj));
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(c.degree(v), 2 * static_cast<int>(gens.size()));
      for (Vertex w = 0; w < n; ++w) {
        ASSERT_EQ(c.has_edge(v, w), cadj[v][w] == 1) << c.name();
      }
      for (Vertex w : c.neighbors(v)) EXPECT_TRUE(c.has_edge(w, v));
    }
    for (const Edge& e : c.edges()) EXPECT_EQ(cadj[e.a][e.b], 1);

    if (gens.size() < 2) continue;
    const std::vector<int> chords(gens.begin() + 1, gens.end());
    const GgpgGraph p(n, GeneratorSequence(chords));
    const auto padj = oracle::ggpg_adjacency(n, chords);
    ASSERT_EQ(static_cast<int>(p.edges().size()), oracle::edge_count(padj));
    for (Vertex v = 0; v < 2 * n; ++v) {
      const int expected_degree =
          v < n ? 3 : 2 * static_cast<int>(chords.size()) + 1;
      EXPECT_EQ(p.degree(v), expected_degree);
      const auto nb = p.neighbors(v);
      EXPECT_EQ(static_cast<int>(nb.size()), expected_degree);
      for (Vertex w = 0; w < 2 * n; ++w) {
        ASSERT_EQ(p.has_edge(v, w), padj[v][w] == 1) << p.name();
      }
    }
  }
}

TEST(GraphPropertyTest, SingleChordIsGeneralizedPetersen) {
  for (int n = 5; n <= 20; ++n) {
    for (int s = 2; s <= max_step(n); ++s) {
      const GgpgGraph g = build_ggpg(n, {s});
      std::vector<Edge> gpg;
      for (int i = 0; i < n; ++i) {
        const auto add = [&](Vertex a, Vertex b) {
          gpg.push_back(a < b ? Edge{a, b} : Edge{b, a});
        };
        add(i, (i + 1) % n);
        add(n + i, n + (i + s) % n);
        add(i, n + i);
      }
      std::sort(gpg.begin(), gpg.end());
      EXPECT_EQ(g.edges(), gpg) << g.name();
    }
  }
}

}  // namespace
}  // namespace loopnet
