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

#include "pgeom/constructions.h"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/codes.h"
#include "pgeom/regular.h"

namespace pgeom {
namespace {

TEST(ConstructionsTest, EllipticHemisystemIsHalfOfEveryPencil) {
  const EllipticHemisystem h = BuildEllipticHemisystem(3);
  EXPECT_TRUE(h.count_ok);
  EXPECT_TRUE(h.conditions_ok);
  EXPECT_TRUE(h.partition_ok);
  EXPECT_EQ(h.members.size(), 7u * 10 / 2);
  const PolarSpace& ps = *h.space;
  // Every point lies on q^2 + 1 lines; a hemisystem takes half.
  for (const Vec& p : ps.points()) {
    int64_t c = 0;
    for (int m : h.system) c += Contains(ps.field(), ps.Generators()[m], p);
    ASSERT_EQ(c, 5);
  }
}

TEST(ConstructionsTest, ChainLiftDoublesThroughParabolicSpace) {
  const EllipticHemisystem h = BuildEllipticHemisystem(3);
  PolarPtr big = ParabolicOverElliptic(5, 3);
  const std::vector<int> lift = ChainLift(*h.space, *big, h.system);
  const RegularSystemReport r = VerifyRegularSystemIndices(*big, lift, 1);
  EXPECT_TRUE(r.regular);
  EXPECT_EQ(r.m, 20);
}

TEST(ConstructionsTest, OneSystemOfQ63) {
  const OneSystemQ63 s = BuildOneSystemQ63();
  EXPECT_TRUE(s.one_system);
  EXPECT_EQ(s.lines.size(), 28u);
  // Members are pairwise disjoint lines of the quadric.
  const Field& f = s.space->field();
  for (size_t a = 0; a < s.lines.size(); ++a) {
    EXPECT_TRUE(s.space->TotallyIsotropic(s.lines[a]));
    for (size_t b = a + 1; b < s.lines.size(); ++b) {
      EXPECT_EQ(Meet(f, s.lines[a], s.lines[b]).dim(), 0);
    }
  }
}

TEST(ConstructionsTest, HyperbolicClassesSplitGenerators) {
  PolarPtr ps = PolarSpace::Make(Family::kQPlus, 5, 2);
  const GeneratorClasses c = HyperbolicClasses(*ps);
  EXPECT_EQ(c.latin.size(), c.greek.size());
  EXPECT_EQ(c.latin.size() + c.greek.size(), ps->Generators().size());
  // Same class: even codimension intersection, i.e. meet in a point or equal.
  const Field& f = ps->field();
  for (size_t i = 0; i < c.latin.size(); i += 3) {
    for (size_t j = 0; j < c.latin.size(); j += 5) {
      const int d = Meet(f, ps->Generators()[c.latin[i]], ps->Generators()[c.latin[j]]).dim();
      EXPECT_EQ((3 - d) % 2, 0);
    }
  }
}

TEST(ConstructionsTest, GeneratorsThroughAPoint) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  const Subspace p = SpanPoints(ps->field(), 3, {ps->point(0)});
  EXPECT_EQ(GeneratorsThrough(*ps, p).size(), 4u);
}

TEST(ConstructionsTest, HermitianKleinImageOfHemisystemIsTwoIntersectionSet) {
  PolarPtr herm = PolarSpace::Make(Family::kH, 3, 9);
  PolarPtr quad = HermitianKleinQuadric(3);
  const SystemSearchResult s = SearchPointRegularSystem(*herm, 2, 2'000'000);
  ASSERT_TRUE(s.found);
  std::vector<Vec> image;
  std::set<Vec> distinct;
  for (int m : s.members) {
    Vec v = HermitianKleinPoint(*herm, herm->Generators()[m]);
    EXPECT_TRUE(quad->Isotropic(v));
    distinct.insert(v);
    image.push_back(std::move(v));
  }
  EXPECT_EQ(distinct.size(), 56u);
  const TwoWeightBridge b = CheckTwoWeightBridge(quad->form().field, image);
  EXPECT_TRUE(b.two_intersection);
  EXPECT_TRUE(b.consistent());
}

}  // namespace
}  // namespace pgeom
