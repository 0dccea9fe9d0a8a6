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

#include "pgeom/codes.h"

#include <cstdint>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/polar.h"

namespace pgeom {
namespace {

std::map<int, uint64_t> BruteWeights(const Field& f, const std::vector<Vec>& pts) {
  const int k = static_cast<int>(pts.front().size());
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= f.q();
  std::map<int, uint64_t> out;
  for (uint64_t c = 0; c < total; ++c) {
    Vec x(k);
    uint64_t r = c;
    for (int i = 0; i < k; ++i, r /= f.q()) x[i] = static_cast<Elt>(r % f.q());
    int w = 0;
    for (const Vec& p : pts) w += Dot(f, x, p) != 0;
    ++out[w];
  }
  return out;
}

TEST(CodesTest, WeightEnumeratorMatchesBruteForce) {
  // Elliptic quadric of PG(3, 3): an ovoid, so a two-weight code.
  PolarPtr ps = PolarSpace::Make(Family::kQMinus, 3, 3);
  const LinearCode code = CodeFromSet(ps->form().field, ps->points());
  EXPECT_EQ(code.k, 4);
  EXPECT_EQ(code.n, 10);
  const WeightDistribution w = WeightEnumerator(code);
  const std::map<int, uint64_t> brute = BruteWeights(ps->field(), ps->points());
  for (int i = 0; i <= code.n; ++i) {
    const auto it = brute.find(i);
    EXPECT_EQ(w.counts[i], it == brute.end() ? 0 : it->second) << i;
  }
  EXPECT_EQ(w.total, 81u);
  EXPECT_EQ(w.support, (std::vector<int>{6, 9}));
  EXPECT_EQ(w.min_distance, 6);
}

TEST(CodesTest, HyperplaneIntersectionsOfOvoid) {
  PolarPtr ps = PolarSpace::Make(Family::kQMinus, 3, 3);
  const std::map<int, int64_t> h = HyperplaneIntersections(ps->field(), ps->points());
  // Tangent planes meet in one point, the others in a conic.
  EXPECT_EQ(h, (std::map<int, int64_t>{{1, 10}, {4, 30}}));
}

TEST(CodesTest, BridgeIsConsistentForOvoidAndNotTwoWeightForLine) {
  PolarPtr ps = PolarSpace::Make(Family::kQMinus, 3, 3);
  const TwoWeightBridge b = CheckTwoWeightBridge(ps->form().field, ps->points());
  EXPECT_TRUE(b.two_weight);
  EXPECT_TRUE(b.two_intersection);
  EXPECT_TRUE(b.graph_srg);
  EXPECT_TRUE(b.identity_holds);
  EXPECT_TRUE(b.consistent());

  // A frame of PG(2, 3) plus one point: hyperplane sizes 0..3 occur.
  FieldPtr f = Field::OfOrder(3);
  const std::vector<Vec> frame = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 0}};
  const TwoWeightBridge c = CheckTwoWeightBridge(f, frame);
  EXPECT_FALSE(c.two_weight);
  EXPECT_TRUE(c.consistent());
}

TEST(CodesTest, RejectsNonSpanningSet) {
  FieldPtr f = Field::OfOrder(2);
  EXPECT_THROW(CodeFromSet(f, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), std::invalid_argument);
}

}  // namespace
}  // namespace pgeom
