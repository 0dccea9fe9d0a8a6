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

#include "pgeom/unital.h"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace pgeom {
namespace {

// Every line of PG(2, q^2) meets the set in 1 or q + 1 points.
bool BruteUnital(const Field& f, const std::vector<Vec>& pts) {
  const uint64_t q = f.sqrt_q();
  for (const Vec& line : EnumeratePoints(f, 2)) {
    uint64_t c = 0;
    for (const Vec& p : pts) c += Dot(f, line, p) == 0;
    if (c != 1 && c != q + 1) return false;
  }
  return pts.size() == q * q * q + 1;
}

TEST(UnitalTest, ClassicalUnitals) {
  for (uint64_t q : {2, 3, 4}) {
    const Unital u = ClassicalUnital(q);
    EXPECT_TRUE(BruteUnital(*u.field, u.points)) << q;
    const UnitalReport r = VerifyUnital(*u.field, u.points);
    EXPECT_TRUE(r.ok()) << q;
    EXPECT_EQ(r.tangents, static_cast<int64_t>(q * q * q + 1));
    EXPECT_EQ(r.design.k, static_cast<int64_t>(q + 1));
  }
}

TEST(UnitalTest, BuekenhoutMetzParametersByBruteForce) {
  const Unital u = BuekenhoutMetzUnital(3);
  EXPECT_TRUE(BruteUnital(*u.field, u.points));
  EXPECT_TRUE(VerifyUnital(*u.field, u.points).ok());
  // Least-pair rule: nothing smaller in (alpha, beta) order is valid.
  const Field& f = *u.field;
  for (Elt a = 1; a <= u.alpha; ++a) {
    for (Elt b = 0; b < f.q(); ++b) {
      if (a == u.alpha && b == u.beta) break;
      EXPECT_FALSE(ValidBuekenhoutMetzParams(f, a, b));
    }
  }
  EXPECT_THROW(BuekenhoutMetzUnital(3, std::make_pair(Elt{0}, Elt{0})), std::invalid_argument);
}

TEST(UnitalTest, BuekenhoutTitsUnitalOfOrderEight) {
  const Unital u = BuekenhoutTitsUnital(8);
  EXPECT_EQ(u.points.size(), 513u);
  EXPECT_TRUE(VerifyUnital(*u.field, u.points).ok());
  EXPECT_THROW(BuekenhoutTitsUnital(4), std::invalid_argument);
}

TEST(UnitalTest, DesignVerifier) {
  const std::vector<std::vector<int>> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                              {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  EXPECT_TRUE(VerifyDesign(7, fano).ok);
  auto broken = fano;
  broken.pop_back();
  const DesignReport r = VerifyDesign(7, broken);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.bad_count, 3);
}

TEST(UnitalTest, DualONanCountMatchesQuadrupleEnumeration) {
  const Unital u = ClassicalUnital(2);
  const PointGraph g = UnitalTangentGraph(4, u.points);
  const Field& f = *g.field;
  const int n = static_cast<int>(g.points.size());
  auto line3 = [&](int a, int b, int c) {
    return Rank(f, {g.points[a], g.points[b], g.points[c]}) < 3;
  };
  int64_t count = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const std::vector<int> v = {a, b, c, d};
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i) {
            for (int j = i + 1; j < 4 && ok; ++j) ok = g.graph.adjacent(v[i], v[j]);
          }
          ok = ok && !line3(a, b, c) && !line3(a, b, d) && !line3(a, c, d) && !line3(b, c, d);
          count += ok;
        }
      }
    }
  }
  const ONanSearch s = FindDualONan(g, true);
  EXPECT_EQ(s.count, count);
  EXPECT_EQ(s.found, count > 0);
}

}  // namespace
}  // namespace pgeom
