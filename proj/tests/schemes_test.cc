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

#include "pgeom/schemes.h"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/polar.h"

namespace pgeom {
namespace {

TEST(SchemeTest, IntersectionNumbersByCounting) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 5, 2);
  const Scheme s = SchemeFromPolar(*ps);
  ASSERT_EQ(s.n(), 135u);
  ASSERT_EQ(s.classes(), 3);
  const int d = s.classes();
  for (size_t x = 0; x < s.n(); x += 17) {
    for (size_t y = 0; y < s.n(); y += 13) {
      const int k = s.relation(x, y);
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
          int64_t c = 0;
          for (size_t z = 0; z < s.n(); ++z) c += s.relation(x, z) == i && s.relation(z, y) == j;
          ASSERT_EQ(c, s.p(i, j, k));
        }
      }
    }
  }
  for (int i = 0; i <= d; ++i) EXPECT_EQ(s.valency(i), s.p(i, i, 0));
}

TEST(SchemeTest, IdempotentsMatchRelationSpectrum) {
  PolarPtr ps = PolarSpace::Make(Family::kQ, 4, 3);
  const Scheme s = SchemeFromPolar(*ps);
  const Idempotents e = MinimalIdempotents(s);
  EXPECT_TRUE(e.identities_ok);
  EXPECT_TRUE(e.krein_nonnegative);
  mpq_class total = 0;
  for (const auto& m : e.multiplicities) total += m;
  EXPECT_EQ(total, static_cast<int64_t>(s.n()));
  std::vector<int64_t> claimed;
  for (const auto& t : e.theta) claimed.push_back(mpz_class(t.get_num()).get_si());
  const SpectrumCertificate c = CertifySpectrum(s.RelationGraph(1), claimed);
  EXPECT_TRUE(c.ok());
}

TEST(SchemeTest, FullSetIsADesignOfEveryStrength) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  const Scheme s = SchemeFromPolar(*ps);
  const Idempotents e = MinimalIdempotents(s);
  std::vector<int> all(s.n());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const std::vector<int> dd = DualDegreeSet(s, e, all);
  EXPECT_TRUE(dd.empty());
  EXPECT_TRUE(IsKDesign(dd, s.classes()));
  // A single generator is only a 0-design.
  const std::vector<int> one = DualDegreeSet(s, e, {0});
  EXPECT_FALSE(IsKDesign(one, 1));
}

}  // namespace
}  // namespace pgeom
