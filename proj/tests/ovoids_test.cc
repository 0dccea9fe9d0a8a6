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

#include "pgeom/ovoids.h"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace pgeom {
namespace {

// No two points of the set are collinear, by evaluating the polarity.
bool PairwiseNonCollinear(const PolarSpace& ps, const std::vector<Vec>& pts) {
  for (size_t a = 0; a < pts.size(); ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (ps.Beta(pts[a], pts[b]) == 0) return false;
    }
  }
  return true;
}

TEST(OvoidsTest, PartialOvoidVerifierAgreesWithPairCheck) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  std::vector<Vec> set;
  for (const Vec& p : ps->points()) {
    set.push_back(p);
    if (!PairwiseNonCollinear(*ps, set)) set.pop_back();
  }
  const PartialOvoidReport r = VerifyPartialOvoid(*ps, set, true, true);
  EXPECT_TRUE(r.points_ok);
  EXPECT_TRUE(r.partial_ovoid);
  EXPECT_TRUE(r.generator_check_ok);
  EXPECT_TRUE(r.maximal);  // greedy sets cannot be extended

  set.push_back(set.front());
  EXPECT_FALSE(VerifyPartialOvoid(*ps, set).points_ok);
  set.pop_back();
  // Add a point collinear with the first one.
  for (const Vec& p : ps->points()) {
    if (p != set.front() && ps->Beta(p, set.front()) == 0) {
      set.push_back(p);
      break;
    }
  }
  const PartialOvoidReport bad = VerifyPartialOvoid(*ps, set);
  EXPECT_FALSE(bad.partial_ovoid);
  EXPECT_EQ(bad.bad_a, 0);
}

TEST(OvoidsTest, TwistedCubicOvoidOfW39) {
  const TwistedCubicOvoid o = BuildTwistedCubicOvoid(25);
  EXPECT_EQ(o.cubic.size(), 26u);
  const PartialOvoidReport r = VerifyPartialOvoid(*o.space, o.points, true);
  EXPECT_TRUE(r.partial_ovoid);
  EXPECT_TRUE(PairwiseNonCollinear(*o.space, o.points));
}

TEST(OvoidsTest, CyclicAndEvenOvoidsOfW5) {
  const CyclicOvoidW5 c = BuildCyclicOvoidW5(3);
  EXPECT_TRUE(c.big_pairs_ok);
  EXPECT_TRUE(c.form_in_subfield);
  EXPECT_TRUE(PairwiseNonCollinear(*c.space, c.points));

  const EvenOvoidW5 e = BuildEvenOvoidW5(4);
  EXPECT_EQ(e.points.size(), 2u * 16 - 4 + 1);
  EXPECT_TRUE(PairwiseNonCollinear(*e.space, e.points));
  EXPECT_TRUE(VerifyPartialOvoid(*e.space, e.points).partial_ovoid);
}

TEST(OvoidsTest, LeastArtinSchreierHasNoRoot) {
  for (uint64_t q : {2, 4, 8, 16}) {
    FieldPtr f = Field::OfOrder(q);
    const Elt d = LeastArtinSchreierIrreducible(*f);
    for (Elt x = 0; x < q; ++x) EXPECT_NE(f->add(f->add(f->mul(x, x), x), d), 0u);
    for (Elt s = 0; s < d; ++s) {
      bool root = false;
      for (Elt x = 0; x < q; ++x) root = root || f->add(f->add(f->mul(x, x), x), s) == 0;
      EXPECT_TRUE(root) << q << " " << s;
    }
  }
}

int64_t BruteSherk(const Field& big, uint64_t q, Elt alpha, Elt beta, Elt gamma, Elt delta) {
  auto tr = [&](Elt x) { return big.add(big.add(x, big.pow(x, q)), big.pow(x, q * q)); };
  int64_t n = alpha == 0;
  for (Elt x = 0; x < big.q(); ++x) {
    const Elt norm = big.mul(big.mul(x, big.pow(x, q)), big.pow(x, q * q));
    Elt v = big.mul(alpha, norm);
    v = big.add(v, tr(big.mul(big.pow(beta, q * q), big.pow(x, q + 1))));
    v = big.add(v, tr(big.mul(gamma, x)));
    v = big.add(v, delta);
    n += v == 0;
  }
  return n;
}

TEST(OvoidsTest, SherkSurfaceSizes) {
  FieldPtr big = Field::OfOrder(8);
  EXPECT_EQ(SherkSurface(*big, 1, 0, 0, 0, 1).size(), 1);  // only the point at infinity
  EXPECT_EQ(SherkSurface(*big, 1, 1, 0, 0, 1).size(), 7);  // norm-one elements
  for (Elt b = 0; b < 8; b += 3) {
    for (Elt g = 0; g < 8; g += 2) {
      for (Elt a : {0u, 1u}) {
        EXPECT_EQ(SherkSurface(*big, 1, a, b, g, 1).size(), BruteSherk(*big, 2, a, b, g, 1));
      }
    }
  }
  EXPECT_THROW(SherkSurface(*Field::OfOrder(16), 1, 0, 0, 0, 1), std::invalid_argument);
}

TEST(OvoidsTest, TangentSetAndItsLift) {
  const TangentSet t = BuildTangentSet(2);
  const TangentSetReport r = VerifyTangentSet(*t.herm, t.points, true);
  EXPECT_TRUE(r.tangent_set);
  const HermitianLift lift = LiftTangentSet(t);
  EXPECT_EQ(static_cast<int64_t>(lift.points.size()), lift.expected_size);
  EXPECT_TRUE(PairwiseNonCollinear(*lift.space, lift.points));
}

TEST(OvoidsTest, FanPartitionsHermitianSurfaceIntoOvoids) {
  PolarPtr h = PolarSpace::Make(Family::kH, 3, 4);
  const Fan fan = BuildFan(*h);
  EXPECT_EQ(fan.ovoids.size(), 5u);  // q^2 + 1 members, one per point of t
  EXPECT_TRUE(fan.partition);
  EXPECT_TRUE(fan.all_ovoids);
  std::set<int32_t> seen;
  for (const auto& o : fan.ovoids) {
    EXPECT_EQ(o.size(), 9u);
    seen.insert(o.begin(), o.end());
  }
  EXPECT_EQ(seen.size(), h->num_points());
}

}  // namespace
}  // namespace pgeom
