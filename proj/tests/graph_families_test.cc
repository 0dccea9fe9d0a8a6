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

#include "pgeom/graph_families.h"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/polar.h"
#include "pgeom/regular.h"
#include "pgeom/unital.h"

namespace pgeom {
namespace {

// Points of the diagonal Hermitian variety on the line through a and b.
int IsotropicOnLine(const Field& f, const Vec& a, const Vec& b) {
  int count = 0;
  for (const Vec& v : SubspacePoints(f, SpanPoints(f, static_cast<int>(a.size()) - 1, {a, b}))) {
    Elt s = 0;
    for (size_t i = 0; i < v.size(); ++i) s = f.add(s, f.mul(v[i], f.conj(v[i])));
    count += s == 0;
  }
  return count;
}

TEST(GraphFamiliesTest, NuAdjacencyIsTangency) {
  for (int n : {2, 3}) {
    const PointGraph g = NuGraph(n, 4);
    const Field& f = *g.field;
    for (size_t a = 0; a < g.points.size(); ++a) {
      for (size_t b = a + 1; b < g.points.size(); ++b) {
        ASSERT_EQ(g.graph.adjacent(a, b), IsotropicOnLine(f, g.points[a], g.points[b]) == 1);
      }
    }
    const SrgReport r = SrgCheck(g.graph);
    ASSERT_TRUE(r.srg);
    EXPECT_EQ(r.params, NuParams(n, 2));
  }
}

TEST(GraphFamiliesTest, NuParamsForLargerFields) {
  const SrgReport r = SrgCheck(NuGraph(2, 9).graph);
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params, NuParams(2, 3));
}

TEST(GraphFamiliesTest, DualPolarGraphSpectrum) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 5, 2);
  for (int i = 1; i <= ps->d(); ++i) {
    const Graph g = DualPolarGraph(*ps, i);
    std::vector<int64_t> claimed;
    for (const mpz_class& t : DistanceGraphEigenvalues(ps->d(), ps->e2(), ps->base(), i)) {
      claimed.push_back(t.get_si());
    }
    EXPECT_TRUE(CertifySpectrum(g, claimed).ok()) << i;
  }
}

TEST(GraphFamiliesTest, CollinearityMinimumEigenvalueGivesHoffmanBound) {
  PolarPtr ps = PolarSpace::Make(Family::kQ, 4, 3);
  const SrgParams p = CollinearityParams(ps->d(), ps->e2(), ps->base());
  const mpz_class s = CollinearityMinEigenvalue(ps->d(), ps->e2(), ps->base());
  const SrgSpectrum e = SrgEigen(p);
  EXPECT_EQ(e.s, mpq_class(s));
  // An ovoid of Q(4, q) has q^2 + 1 points and attains the bound.
  EXPECT_EQ(HoffmanBound(p.v, p.k, s.get_si()), 10);
}

TEST(GraphFamiliesTest, HemisystemLineGraphOfHermitianSurface) {
  PolarPtr ps = PolarSpace::Make(Family::kH, 3, 9);
  const SystemSearchResult s = SearchPointRegularSystem(*ps, 2, 2'000'000);
  ASSERT_TRUE(s.found);
  const SrgReport r = SrgCheck(HemisystemLineGraph(*ps, s.members));
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params, ThasLineGraphParams(3, 2));
}

TEST(GraphFamiliesTest, UnitalTangentGraph) {
  const Unital u = ClassicalUnital(2);
  const PointGraph g = UnitalTangentGraph(4, u.points);
  EXPECT_EQ(g.points.size(), 21u - 9u);
  const SrgReport r = SrgCheck(g.graph);
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params, UnitalGraphParams(2));
}

TEST(GraphFamiliesTest, LinearRepresentationIsCayleyGraph) {
  FieldPtr f = Field::OfOrder(4);
  const Unital u = ClassicalUnital(2);  // a two-intersection set of PG(2, 4)
  const Graph g = LinearRepresentationGraph(*f, 2, u.points);
  ASSERT_EQ(g.n(), 64u);
  for (size_t v = 0; v < g.n(); ++v) EXPECT_EQ(g.degree(v), 9u * 3u);
  EXPECT_TRUE(SrgCheck(g).srg);
}

TEST(GraphFamiliesTest, BlockGraphOfFanoPlaneIsComplete) {
  const std::vector<std::vector<int>> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                              {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  const Graph g = BlockGraph(fano);
  EXPECT_EQ(g.NumEdges(), 21u);
}

}  // namespace
}  // namespace pgeom
