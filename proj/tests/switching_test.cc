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

#include "pgeom/switching.h"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace pgeom {
namespace {

// Two disjoint edges l1 = {0, 1}, l2 = {2, 3}; vertex 4 sees exactly l1,
// vertex 5 sees both, vertex 6 sees neither.
Graph SmallWqhGraph() {
  Graph g(7);
  g.AddEdge(0, 1);
  g.AddEdge(2, 3);
  g.AddEdge(4, 0);
  g.AddEdge(4, 1);
  for (int v : {0, 1, 2, 3}) g.AddEdge(5, v);
  g.AddEdge(4, 6);
  return g;
}

TEST(SwitchingTest, WqhSwitchMovesExactNeighbourhoods) {
  const Graph g = SmallWqhGraph();
  WqhReport r;
  const Graph h = WqhSwitch(g, {0, 1}, {2, 3}, &r);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.to_l1, std::vector<int>{4});
  EXPECT_TRUE(h.adjacent(4, 2));
  EXPECT_TRUE(h.adjacent(4, 3));
  EXPECT_FALSE(h.adjacent(4, 0));
  EXPECT_TRUE(h.adjacent(5, 0));
  EXPECT_TRUE(h.adjacent(4, 6));
  // Switching twice restores the graph.
  EXPECT_EQ(WqhSwitch(h, {0, 1}, {2, 3}), g);
}

TEST(SwitchingTest, WqhRejectsUnbalancedVertex) {
  Graph g = SmallWqhGraph();
  g.AddEdge(6, 0);  // sees one vertex of l1 only
  const WqhReport r = CheckWqh(g, {0, 1}, {2, 3});
  EXPECT_FALSE(r.outside_ok);
  EXPECT_EQ(r.witness, 6);
  try {
    WqhSwitch(g, {0, 1}, {2, 3});
    FAIL() << "expected SwitchingError";
  } catch (const SwitchingError& e) {
    EXPECT_EQ(e.witness(), 6);
  }
  EXPECT_FALSE(CheckWqh(g, {0, 1}, {1, 2}).parts_ok);
}

TEST(SwitchingTest, SwitchedNuIsCospectralMate) {
  const SwitchedNu s = BuildSwitchedNu(4, 2, PlaneType::kLine);
  const SwitchingConfig& c = s.config;
  EXPECT_TRUE(c.wqh.ok());
  EXPECT_TRUE(c.sizes_ok);
  EXPECT_TRUE(c.in_p_perp);
  EXPECT_TRUE(c.matches_rules);
  const SwitchSizes want = ExpectedSwitchSizes(2, PlaneType::kLine);
  EXPECT_EQ(static_cast<int64_t>(c.a.size()), want.a);
  EXPECT_EQ(static_cast<int64_t>(c.a1.size()), want.a1);
  const SrgReport r = SrgCheck(s.switched);
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params, NuParams(4, 2));
  EXPECT_FALSE(s.switched == s.base.graph);
}

TEST(SwitchingTest, TriangleFormulasHoldOnSample) {
  const PointGraph nu = NuGraph(4, 4);
  const TriangleCheck t = CheckTriangleFormulas(nu, 2, 97);
  EXPECT_GT(t.triangles, 0);
  EXPECT_EQ(t.mismatches, 0);
  for (const auto& [kind, values] : t.values) {
    for (const auto& [v, n] : values) EXPECT_EQ(v, TriangleFormula(2, kind));
  }
}

TEST(SwitchingTest, PlaneTypeNamesRoundTrip) {
  for (PlaneType t : {PlaneType::kLine, PlaneType::kPencil}) {
    EXPECT_EQ(ParsePlaneType(PlaneTypeName(t)), t);
  }
  EXPECT_THROW(ParsePlaneType("plane"), std::invalid_argument);
  EXPECT_THROW(BuildSwitchedNu(2, 2, PlaneType::kLine), std::exception);
}

}  // namespace
}  // namespace pgeom
