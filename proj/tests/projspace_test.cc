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

#include "pgeom/projspace.h"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace pgeom {
namespace {

// Number of k-dimensional vector subspaces of GF(q)^n by counting ordered
// bases: prod (q^n - q^i) / prod (q^k - q^i).
int64_t CountByBases(int n, int k, int64_t q) {
  auto pw = [](int64_t b, int e) {
    int64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pw(q, n) - pw(q, i);
    den *= pw(q, k) - pw(q, i);
  }
  return num / den;
}

TEST(ProjectiveSpaceTest, EnumeratedSubspacesMatchGaussianBinomial) {
  for (uint64_t q : {2, 3, 4}) {
    FieldPtr f = Field::OfOrder(q);
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto subs = EnumerateSubspaces(*f, n, k);
        const int64_t expected = CountByBases(n + 1, k + 1, q);
        EXPECT_EQ(static_cast<int64_t>(subs.size()), expected) << q << " " << n << " " << k;
        EXPECT_EQ(GaussianBinomial(n + 1, k + 1, mpz_class(q)), mpz_class(expected));
        std::set<Subspace> distinct(subs.begin(), subs.end());
        EXPECT_EQ(distinct.size(), subs.size());
      }
    }
  }
}

TEST(ProjectiveSpaceTest, PointIndexRoundTrip) {
  ProjectiveSpace pg(3, Field::OfOrder(5));
  EXPECT_EQ(pg.num_points(), 156u);
  EXPECT_EQ(Theta(3, 5), 156);
  for (size_t i = 0; i < pg.num_points(); ++i) {
    Vec v = pg.point(i);
    ASSERT_EQ(pg.index_of(v), static_cast<int64_t>(i));
    Vec scaled = VecScale(pg.field(), 3, v);
    EXPECT_EQ(pg.index_of(scaled), static_cast<int64_t>(i));
  }
  EXPECT_LT(pg.index_of({0, 0, 0, 0}), 0);
}

TEST(ProjectiveSpaceTest, DimensionFormulaForSpanAndMeet) {
  FieldPtr f = Field::OfOrder(3);
  const auto lines = EnumerateSubspaces(*f, 3, 1);
  const auto planes = EnumerateSubspaces(*f, 3, 2);
  for (size_t i = 0; i < lines.size(); i += 7) {
    for (size_t j = 0; j < planes.size(); j += 5) {
      const Subspace s = Span(*f, lines[i], planes[j]);
      const Subspace m = Meet(*f, lines[i], planes[j]);
      EXPECT_EQ(s.dim() + m.dim(), lines[i].dim() + planes[j].dim());
      for (const Vec& v : SubspacePoints(*f, m)) {
        EXPECT_TRUE(Contains(*f, lines[i], v));
        EXPECT_TRUE(Contains(*f, planes[j], v));
      }
      EXPECT_EQ(ContainsSubspace(*f, planes[j], lines[i]), m.dim() == 2);
    }
  }
}

TEST(ProjectiveSpaceTest, NullSpaceIsOrthogonalComplement) {
  FieldPtr f = Field::OfOrder(4);
  const auto planes = EnumerateSubspaces(*f, 3, 1);
  for (size_t i = 0; i < planes.size(); i += 11) {
    const Subspace ns = NullSpace(*f, 3, planes[i].rows);
    EXPECT_EQ(ns.dim(), 2);
    for (const Vec& a : planes[i].rows) {
      for (const Vec& b : ns.rows) EXPECT_EQ(Dot(*f, a, b), 0u);
    }
  }
}

TEST(ProjectiveSpaceTest, KleinCorrespondence) {
  FieldPtr f = Field::OfOrder(3);
  const auto lines = EnumerateSubspaces(*f, 3, 1);
  std::set<Vec> images;
  std::vector<Vec> img;
  for (const Subspace& l : lines) {
    Vec p = KleinMap(*f, l);
    EXPECT_EQ(KleinQuadric(*f, p), 0u);
    EXPECT_EQ(KleinInverse(*f, p), l);
    images.insert(p);
    img.push_back(p);
  }
  EXPECT_EQ(images.size(), lines.size());
  // Two lines meet iff their images are orthogonal.
  for (size_t i = 0; i < lines.size(); i += 3) {
    for (size_t j = 0; j < lines.size(); j += 5) {
      const bool meet = Meet(*f, lines[i], lines[j]).dim() > 0;
      EXPECT_EQ(meet, KleinPolar(*f, img[i], img[j]) == 0);
    }
  }
}

TEST(ProjectiveSpaceTest, FieldReductionPreservesIncidence) {
  FieldReduction fr(2, Field::OfOrder(4), Field::OfOrder(2));
  EXPECT_EQ(fr.degree(), 2);
  for (Elt x = 0; x < 4; ++x) EXPECT_EQ(fr.FromCoordinates(fr.Coordinates(x)), x);
  // A point of PG(1, 4) becomes a line of PG(3, 2); distinct points give
  // disjoint lines, which together form a spread.
  const auto pts = EnumeratePoints(fr.big(), 1);
  std::set<Vec> covered;
  for (const Vec& p : pts) {
    const Subspace s = fr.MapPoint(p);
    EXPECT_EQ(s.projdim(), 1);
    for (const Vec& v : SubspacePoints(fr.small(), s)) EXPECT_TRUE(covered.insert(v).second);
  }
  EXPECT_EQ(covered.size(), 15u);
}

TEST(ProjectiveSpaceTest, GroupOrdersByCountingMatrices) {
  for (uint64_t q : {2, 3}) {
    FieldPtr f = Field::OfOrder(q);
    int64_t gl = 0, sl = 0;
    for (Elt a = 0; a < q; ++a) {
      for (Elt b = 0; b < q; ++b) {
        for (Elt c = 0; c < q; ++c) {
          for (Elt d = 0; d < q; ++d) {
            const Elt det = f->sub(f->mul(a, d), f->mul(b, c));
            gl += det != 0;
            sl += det == 1;
          }
        }
      }
    }
    EXPECT_EQ(ComputeGroupOrder(GroupFamily::kGL, 2, q).order, gl);
    EXPECT_EQ(ComputeGroupOrder(GroupFamily::kSL, 2, q).order, sl);
    EXPECT_EQ(ComputeGroupOrder(GroupFamily::kPGL, 2, q).order, gl / static_cast<int64_t>(q - 1));
  }
  EXPECT_EQ(ParseGroupFamily("PSp"), GroupFamily::kPSp);
}

TEST(ProjectiveSpaceTest, PointTextRoundTrip) {
  const Vec v = {0, 3, 1, 8};
  EXPECT_EQ(ParsePoint(FormatPoint(v)), v);
}

}  // namespace
}  // namespace pgeom
