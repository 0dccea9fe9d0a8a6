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

#include "pgeom/polar.h"

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/graph_families.h"

namespace pgeom {
namespace {

int64_t Pw(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Textbook point and generator counts, with q the square root of the
// field order for H.
int64_t PointsOf(Family fam, int n, int64_t q) {
  switch (fam) {
    case Family::kW: return (Pw(q, n + 1) - 1) / (q - 1);
    case Family::kQPlus: return (Pw(q, (n + 1) / 2) - 1) * (Pw(q, (n - 1) / 2) + 1) / (q - 1);
    case Family::kQ: return (Pw(q, n) - 1) / (q - 1);
    case Family::kQMinus: return (Pw(q, (n - 1) / 2) - 1) * (Pw(q, (n + 1) / 2) + 1) / (q - 1);
    case Family::kH: {
      const int64_t s = n % 2 ? -1 : 1;
      return (Pw(q, n + 1) + s) * (Pw(q, n) - s) / (q * q - 1);
    }
  }
  return -1;
}

int64_t GeneratorsOf(Family fam, int n, int64_t q) {
  int64_t r = 1;
  switch (fam) {
    case Family::kW:
      for (int i = 1; i <= (n + 1) / 2; ++i) r *= Pw(q, i) + 1;
      return r;
    case Family::kQPlus:
      for (int i = 0; i < (n + 1) / 2; ++i) r *= Pw(q, i) + 1;
      return r;
    case Family::kQ:
      for (int i = 1; i <= n / 2; ++i) r *= Pw(q, i) + 1;
      return r;
    case Family::kQMinus:
      for (int i = 2; i <= (n + 1) / 2; ++i) r *= Pw(q, i) + 1;
      return r;
    case Family::kH:
      for (int i = 1; i <= (n + 1) / 2; ++i) r *= Pw(q, 2 * i - 1 + (n % 2 == 0 ? 2 : 0)) + 1;
      return r;
  }
  return -1;
}

struct Case {
  std::string descriptor;
  int64_t q;  // square root of the field order for H
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.descriptor; }

class PolarCountTest : public ::testing::TestWithParam<Case> {};

TEST_P(PolarCountTest, PointsAndGeneratorsMatchTextbookCounts) {
  const Descriptor d = ParseDescriptor(GetParam().descriptor);
  PolarPtr ps = PolarSpace::Make(d);
  const int64_t q = GetParam().q;
  EXPECT_EQ(static_cast<int64_t>(ps->num_points()), PointsOf(d.family, d.n, q));
  EXPECT_EQ(PolarPointCount(ps->d(), ps->e2(), ps->base()), PointsOf(d.family, d.n, q));
  EXPECT_EQ(static_cast<int64_t>(ps->Generators().size()), GeneratorsOf(d.family, d.n, q));
  EXPECT_EQ(ps->ComputedWittIndex(), ps->d());
}

TEST_P(PolarCountTest, PolarityIsAnInvolutionOnLines) {
  PolarPtr ps = PolarSpace::Make(ParseDescriptor(GetParam().descriptor));
  if (ps->family() == Family::kQ && ps->field().p() == 2) {
    GTEST_SKIP() << "the bilinear form has a nucleus";
  }
  const ProjectiveSpace& pg = ps->pg();
  for (size_t i = 0; i < pg.num_points(); i += 29) {
    const size_t j = (i * 7 + 3) % pg.num_points();
    if (i == j) continue;
    const Subspace l = SpanPoints(ps->field(), ps->n(), {pg.point(i), pg.point(j)});
    const Subspace perp = ps->Perp(l);
    EXPECT_EQ(perp.dim(), ps->n() + 1 - 2);
    EXPECT_EQ(ps->Perp(perp), l);
  }
}

TEST_P(PolarCountTest, CollinearityGraphHasPredictedParameters) {
  PolarPtr ps = PolarSpace::Make(ParseDescriptor(GetParam().descriptor));
  if (ps->num_points() > 400) GTEST_SKIP() << "large";
  if (ps->d() < 2) GTEST_SKIP() << "rank one: no two points collinear";
  const SrgReport r = SrgCheck(CollinearityGraph(*ps));
  ASSERT_TRUE(r.srg);
  EXPECT_EQ(r.params, CollinearityParams(ps->d(), ps->e2(), ps->base()));
}

TEST_P(PolarCountTest, SatisfiesPolarSpaceAxioms) {
  PolarPtr ps = PolarSpace::Make(ParseDescriptor(GetParam().descriptor));
  if (ps->num_points() > 400) GTEST_SKIP() << "large";
  const AxiomReport a = VerifyPolarAxioms(*ps);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.is_gq, ps->d() == 2);
}

INSTANTIATE_TEST_SUITE_P(
    Families, PolarCountTest,
    ::testing::Values(Case{"W:3:2", 2}, Case{"W:3:3", 3}, Case{"W:5:2", 2}, Case{"Q+:3:3", 3},
                      Case{"Q+:5:2", 2}, Case{"Q:4:3", 3}, Case{"Q:6:2", 2}, Case{"Q-:5:2", 2},
                      Case{"Q-:3:4", 4}, Case{"H:2:q2=4", 2}, Case{"H:3:q2=4", 2},
                      Case{"H:4:q2=4", 2}, Case{"H:3:q2=9", 3}),
    [](const ::testing::TestParamInfo<Case>& info) {
      std::string s;
      for (char c : info.param.descriptor) {
        if (std::isalnum(static_cast<unsigned char>(c))) s += c;
        if (c == '+') s += "plus";
        if (c == '-') s += "minus";
      }
      return s;
    });

TEST(PolarTest, IsotropicPointsMatchDirectFormEvaluation) {
  // Independent evaluation of the Hermitian form x0^{q+1} + ... straight
  // from the Gram matrix of the canonical form.
  PolarPtr ps = PolarSpace::Make(Family::kH, 2, 9);
  const Field& f = ps->field();
  const Mat& g = ps->form().gram;
  int64_t count = 0;
  for (const Vec& v : EnumeratePoints(f, 2)) {
    Elt s = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(f.mul(v[i], g[i][j]), f.conj(v[j])));
    }
    count += s == 0;
  }
  EXPECT_EQ(count, 28);
  EXPECT_EQ(static_cast<int64_t>(ps->num_points()), count);
}

TEST(PolarTest, DescriptorRoundTripAndErrors) {
  EXPECT_EQ(ParseDescriptor("Q-:5:3").ToString(), "Q-:5:3");
  EXPECT_EQ(ParseDescriptor("H:3:q2=9").q, 9u);
  EXPECT_THROW(ParseDescriptor("W:3"), std::invalid_argument);
  EXPECT_THROW(ParseDescriptor("X:3:2"), std::invalid_argument);
  EXPECT_THROW(PolarSpace::Make(Family::kW, 4, 3), std::invalid_argument);
  EXPECT_THROW(PolarSpace::Make(Family::kH, 3, 8), std::exception);
}

TEST(PolarTest, SectionOfTangentHyperplaneIsACone) {
  PolarPtr ps = PolarSpace::Make(Family::kQ, 4, 3);
  const Subspace p = SpanPoints(ps->field(), 4, {ps->point(0)});
  const SectionInfo s = ps->Section(ps->Perp(p));
  EXPECT_EQ(s.vertex_dim, 1);
  EXPECT_EQ(s.points, 1 + 3 * 4);  // point cone over a conic
}

}  // namespace
}  // namespace pgeom
