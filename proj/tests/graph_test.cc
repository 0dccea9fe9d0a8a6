// Copyright 2026 The pgeom Authors
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

#include "pgeom/graph.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace pgeom {
namespace {

// Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint.
Graph Petersen() {
  std::vector<int> masks;
  for (int m = 0; m < 32; ++m) {
    if (__builtin_popcount(m) == 2) masks.push_back(m);
  }
  Graph g(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) g.AddEdge(i, j);
    }
  }
  return g;
}

Graph RandomGraph(size_t n, double p, uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.AddEdge(i, j);
    }
  }
  return g;
}

int64_t CommonNeighbours(const Graph& g, size_t u, size_t v) {
  int64_t c = 0;
  for (size_t w = 0; w < g.n(); ++w) c += g.adjacent(u, w) && g.adjacent(v, w);
  return c;
}

TEST(GraphTest, SrgCheckAgreesWithPairCounts) {
  const Graph g = Petersen();
  const SrgReport r = SrgCheck(g);
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params.v, 10);
  EXPECT_EQ(r.params.k, static_cast<int64_t>(g.degree(0)));
  for (size_t u = 0; u < g.n(); ++u) {
    for (size_t v = u + 1; v < g.n(); ++v) {
      EXPECT_EQ(CommonNeighbours(g, u, v), g.adjacent(u, v) ? r.params.lambda : r.params.mu);
    }
  }
  EXPECT_TRUE(r.spectrum.feasible);
}

TEST(GraphTest, ComplementParamsMatchComplementGraph) {
  const Graph g = Petersen();
  const SrgReport r = SrgCheck(g.Complement());
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params, ComplementParams(SrgCheck(g).params));
}

TEST(GraphTest, IrregularGraphIsNotSrg) {
  Graph g(4);
  g.AddEdge(0, 1);
  g.AddEdge(1, 2);
  const SrgReport r = SrgCheck(g);
  EXPECT_FALSE(r.regular);
  EXPECT_FALSE(r.srg);
}

TEST(GraphTest, SpectrumCertificateForPetersen) {
  const SpectrumCertificate c = CertifySpectrum(Petersen(), {3, 1, -2});
  EXPECT_TRUE(c.ok());
  ASSERT_EQ(c.multiplicities.size(), 3u);
  EXPECT_EQ(c.multiplicities[1], 5);
  EXPECT_EQ(c.multiplicities[2], 4);
  EXPECT_FALSE(CertifySpectrum(Petersen(), {3, 2, -2}).annihilated);
  EXPECT_EQ(HoffmanBound(10, 3, -2), 4);
}

TEST(GraphTest, SrgEigenRejectsInfeasibleParameters) {
  EXPECT_TRUE(SrgEigen({10, 3, 0, 1}).feasible);
  EXPECT_FALSE(SrgEigen({10, 3, 1, 1}).feasible);
}

// Largest clique by trying every subset.
int BruteCliqueNumber(const Graph& g) {
  int best = 0;
  const size_t n = g.n();
  for (uint32_t m = 1; m < (1u << n); ++m) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      if (!(m >> i & 1)) continue;
      for (size_t j = i + 1; j < n && ok; ++j) ok = !(m >> j & 1) || g.adjacent(i, j);
    }
    if (ok) best = std::max(best, __builtin_popcount(m));
  }
  return best;
}

TEST(GraphTest, MaxCliqueMatchesSubsetEnumeration) {
  for (uint32_t seed = 1; seed <= 12; ++seed) {
    const Graph g = RandomGraph(13, 0.5, seed);
    const SearchResult r = MaxClique(g);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(static_cast<int>(r.witness.size()), BruteCliqueNumber(g)) << seed;
    EXPECT_EQ(static_cast<int>(MaxCoclique(g).witness.size()),
              BruteCliqueNumber(g.Complement()));
  }
}

int64_t BruteAutomorphisms(const Graph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  int64_t count = 0;
  do {
    bool ok = true;
    for (size_t i = 0; i < g.n() && ok; ++i) {
      for (size_t j = i + 1; j < g.n() && ok; ++j) {
        ok = g.adjacent(i, j) == g.adjacent(perm[i], perm[j]);
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(GraphTest, AutomorphismCountMatchesPermutationSearch) {
  for (uint32_t seed = 1; seed <= 6; ++seed) {
    const Graph g = RandomGraph(7, 0.4, seed);
    EXPECT_EQ(AutomorphismCount(g), BruteAutomorphisms(g)) << seed;
  }
  EXPECT_EQ(AutomorphismCount(Petersen()), 120);
}

TEST(GraphTest, MaximalCliqueCensusOfPathIsEdges) {
  Graph g(5);
  for (size_t i = 0; i + 1 < 5; ++i) g.AddEdge(i, i + 1);
  const CliqueCensus c = MaximalCliqueCensus(g);
  EXPECT_TRUE(c.complete);
  ASSERT_EQ(c.histogram.size(), 1u);
  EXPECT_EQ(c.histogram.at(2), 4);
}

TEST(GraphTest, TripleCensusByDirectEnumeration) {
  const Graph g = RandomGraph(14, 0.6, 7);
  std::map<int64_t, int64_t> expected;
  for (size_t u = 0; u < g.n(); ++u) {
    for (size_t v = u + 1; v < g.n(); ++v) {
      for (size_t w = v + 1; w < g.n(); ++w) {
        if (!g.adjacent(u, v) || !g.adjacent(u, w) || !g.adjacent(v, w)) continue;
        int64_t c = 0;
        for (size_t x = 0; x < g.n(); ++x) {
          c += g.adjacent(u, x) && g.adjacent(v, x) && g.adjacent(w, x);
        }
        ++expected[c];
      }
    }
  }
  EXPECT_EQ(TripleCensus(g), expected);
}

TEST(GraphTest, AdjacencyTextRoundTrip) {
  const Graph g = RandomGraph(20, 0.3, 3);
  EXPECT_EQ(ReadAdjacency(WriteAdjacency(g)), g);
  EXPECT_THROW(ReadAdjacency("3\n010\n101\n"), std::exception);
}

TEST(GraphTest, InducedAndComponents) {
  Graph g(6);
  g.AddEdge(0, 1);
  g.AddEdge(2, 3);
  g.AddEdge(3, 4);
  EXPECT_EQ(g.Components().size(), 3u);
  const Graph h = g.Induced({2, 3, 4});
  EXPECT_EQ(h.NumEdges(), 2u);
  EXPECT_TRUE(g.IsSimple());
}

}  // namespace
}  // namespace pgeom
