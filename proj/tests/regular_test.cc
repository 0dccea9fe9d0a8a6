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

#include "pgeom/regular.h"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/polar.h"

namespace pgeom {
namespace {

// Members through every point, by direct containment.
std::set<int64_t> MembersPerPoint(const PolarSpace& ps, const std::vector<int>& members) {
  std::set<int64_t> counts;
  for (const Vec& p : ps.points()) {
    int64_t c = 0;
    for (int m : members) c += Contains(ps.field(), ps.Generators()[m], p);
    counts.insert(c);
  }
  return counts;
}

TEST(RegularSystemTest, AllGeneratorsFormARegularSystem) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 2);
  std::vector<int> all(ps->Generators().size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const RegularSystemReport r = VerifyRegularSystemIndices(*ps, all, 1);
  EXPECT_TRUE(r.members_ok);
  EXPECT_TRUE(r.regular);
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(MembersPerPoint(*ps, all), std::set<int64_t>{3});
  EXPECT_TRUE(r.size_formula_ok);
  EXPECT_EQ(RegularSystemSize(*ps, 3, 1), 15);
}

TEST(RegularSystemTest, SingleLineIsNotRegular) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  const RegularSystemReport r = VerifyRegularSystemIndices(*ps, {0}, 1);
  EXPECT_FALSE(r.regular);
  EXPECT_GE(r.witness_count, 0);
}

TEST(RegularSystemTest, NonGeneratorIsRejected) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  // A line of PG(3, 3) that is not totally isotropic.
  for (const Subspace& l : EnumerateSubspaces(ps->field(), 3, 1)) {
    if (ps->TotallyIsotropic(l)) continue;
    const RegularSystemReport r = VerifyRegularSystem(*ps, {l}, 1);
    EXPECT_FALSE(r.members_ok);
    EXPECT_EQ(r.bad_member, 0);
    break;
  }
}

TEST(RegularSystemTest, SpreadSearchOnSymplecticQuadrangle) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  const SystemSearchResult s = SearchPointRegularSystem(*ps, 1, 1'000'000);
  ASSERT_TRUE(s.found);
  EXPECT_EQ(s.members.size(), 10u);
  EXPECT_EQ(MembersPerPoint(*ps, s.members), std::set<int64_t>{1});
}

TEST(RegularSystemTest, HermitianSurfaceHasNoSpread) {
  PolarPtr ps = PolarSpace::Make(Family::kH, 3, 4);
  const SystemSearchResult s = SearchPointRegularSystem(*ps, 1, 5'000'000);
  EXPECT_FALSE(s.found);
  EXPECT_TRUE(s.exhausted);
}

TEST(RegularSystemTest, HemisystemHalvesEveryPencil) {
  PolarPtr ps = PolarSpace::Make(Family::kH, 3, 9);
  const SystemSearchResult s = SearchPointRegularSystem(*ps, 2, 2'000'000);
  ASSERT_TRUE(s.found);
  EXPECT_EQ(s.members.size(), 56u);
  EXPECT_EQ(MembersPerPoint(*ps, s.members), std::set<int64_t>{2});
  EXPECT_TRUE(VerifyRegularSystemIndices(*ps, s.members, 1).regular);
}

}  // namespace
}  // namespace pgeom
