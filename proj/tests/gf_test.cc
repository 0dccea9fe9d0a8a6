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

#include "pgeom/gf.h"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace pgeom {
namespace {

class FieldOrderTest : public ::testing::TestWithParam<uint64_t> {};

TEST_P(FieldOrderTest, TableProductMatchesPolynomialProduct) {
  FieldPtr f = Field::OfOrder(GetParam());
  for (Elt a = 0; a < f->q(); ++a) {
    for (Elt b = 0; b < f->q(); ++b) {
      ASSERT_EQ(f->mul(a, b), f->slow_mul(a, b)) << a << " " << b;
    }
  }
}

TEST_P(FieldOrderTest, AdditionIsCoefficientwise) {
  FieldPtr f = Field::OfOrder(GetParam());
  for (Elt a = 0; a < f->q(); ++a) {
    for (Elt b = 0; b < f->q(); ++b) {
      std::vector<int> ca = f->coeffs(a), cb = f->coeffs(b);
      for (size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % f->p();
      ASSERT_EQ(f->add(a, b), f->from_coeffs(ca));
    }
  }
}

TEST_P(FieldOrderTest, InverseByExhaustiveSearch) {
  FieldPtr f = Field::OfOrder(GetParam());
  for (Elt a = 1; a < f->q(); ++a) {
    Elt found = 0;
    for (Elt b = 1; b < f->q(); ++b) {
      if (f->slow_mul(a, b) == 1) found = b;
    }
    EXPECT_EQ(f->inv(a), found);
  }
  EXPECT_THROW(f->inv(0), FieldError);
}

TEST_P(FieldOrderTest, PrimitiveElementGeneratesGroup) {
  FieldPtr f = Field::OfOrder(GetParam());
  std::set<Elt> seen;
  Elt x = 1;
  for (uint32_t i = 0; i + 1 < f->q(); ++i) {
    seen.insert(x);
    x = f->slow_mul(x, f->primitive());
  }
  EXPECT_EQ(seen.size(), f->q() - 1);
  EXPECT_EQ(x, 1u);
}

TEST_P(FieldOrderTest, FrobeniusIsAdditiveAndMultiplicative) {
  FieldPtr f = Field::OfOrder(GetParam());
  for (Elt a = 0; a < f->q(); ++a) {
    EXPECT_EQ(f->frobenius(a), f->pow(a, f->p()));
    for (Elt b = 0; b < f->q(); b += 3) {
      EXPECT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
      EXPECT_EQ(f->frobenius(f->mul(a, b)), f->mul(f->frobenius(a), f->frobenius(b)));
    }
  }
}

TEST_P(FieldOrderTest, SquaresAndRootsAgreeWithEnumeration) {
  FieldPtr f = Field::OfOrder(GetParam());
  std::set<Elt> squares;
  for (Elt a = 0; a < f->q(); ++a) squares.insert(f->mul(a, a));
  for (Elt a = 0; a < f->q(); ++a) {
    if (f->p() != 2) {
      EXPECT_EQ(f->is_square(a), squares.count(a) == 1) << a;
    }
    Elt r = 0;
    if (f->sqrt(a, &r)) {
      EXPECT_EQ(f->mul(r, r), a);
    } else {
      EXPECT_EQ(squares.count(a), 0u);
    }
  }
  if (f->p() == 2) {
    EXPECT_EQ(squares.size(), f->q());
    EXPECT_THROW(f->is_square(1), FieldError);
  } else {
    EXPECT_FALSE(f->is_square(f->least_nonsquare()));
    EXPECT_EQ(squares.size(), (f->q() + 1) / 2);
  }
}

TEST_P(FieldOrderTest, FromIntReducesModP) {
  FieldPtr f = Field::OfOrder(GetParam());
  Elt acc = 0;
  for (int64_t v = 0; v < 2 * f->p() + 3; ++v) {
    EXPECT_EQ(f->from_int(v), acc);
    EXPECT_EQ(f->from_int(-v), f->neg(acc));
    acc = f->add(acc, 1);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldOrderTest,
                         ::testing::Values(2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81));

TEST(FieldTest, SubfieldNormTraceLandInSubfield) {
  FieldPtr f = Field::OfOrder(64);  // GF(4) and GF(8) inside
  for (int m : {2, 3}) {
    const std::vector<Elt> sub = f->subfield(m);
    EXPECT_EQ(sub.size(), size_t{1} << m);
    for (Elt s : sub) EXPECT_TRUE(f->in_subfield(s, m));
    const uint64_t qm = uint64_t{1} << m;
    for (Elt x = 0; x < f->q(); ++x) {
      Elt n = 1, t = 0, y = x;
      for (int i = 0; i < 6 / m; ++i) {
        n = f->mul(n, y);
        t = f->add(t, y);
        y = f->pow(y, qm);
      }
      EXPECT_EQ(f->norm(x, m), n);
      EXPECT_EQ(f->trace(x, m), t);
      EXPECT_TRUE(f->in_subfield(n, m));
      EXPECT_TRUE(f->in_subfield(t, m));
    }
  }
}

TEST(FieldTest, ConjugationIsInvolutionFixingBaseField) {
  FieldPtr f = Field::OfOrder(49);
  EXPECT_EQ(f->sqrt_q(), 7u);
  int fixed = 0;
  for (Elt x = 0; x < f->q(); ++x) {
    EXPECT_EQ(f->conj(f->conj(x)), x);
    EXPECT_EQ(f->conj(x), f->pow(x, 7));
    fixed += f->conj(x) == x;
  }
  EXPECT_EQ(fixed, 7);
}

TEST(FieldTest, EmbeddingIsRingHomomorphism) {
  FieldPtr small = Field::OfOrder(9);
  FieldPtr big = Field::OfOrder(729);
  for (Elt a = 0; a < 9; ++a) {
    EXPECT_TRUE(big->in_subfield(big->embed(*small, a), 2));
    for (Elt b = 0; b < 9; ++b) {
      EXPECT_EQ(big->embed(*small, small->mul(a, b)),
                big->mul(big->embed(*small, a), big->embed(*small, b)));
      EXPECT_EQ(big->embed(*small, small->add(a, b)),
                big->add(big->embed(*small, a), big->embed(*small, b)));
    }
  }
}

TEST(FieldTest, RejectsNonPrimePowers) {
  for (uint64_t q : {0, 1, 6, 10, 12, 100}) {
    EXPECT_THROW(Field::OfOrder(q), FieldError) << q;
  }
  int p = 0, e = 0;
  EXPECT_TRUE(PrimePower(343, &p, &e));
  EXPECT_EQ(p, 7);
  EXPECT_EQ(e, 3);
  EXPECT_FALSE(PrimePower(36, &p, &e));
}

TEST(FieldTest, LeastIrreducibleHasNoRootsAndNoQuadraticFactor) {
  for (int p : {2, 3, 5}) {
    for (int e = 2; e <= 4; ++e) {
      const std::vector<int> poly = LeastIrreducible(p, e);
      ASSERT_EQ(poly.size(), static_cast<size_t>(e + 1));
      EXPECT_TRUE(IsIrreducible(p, poly));
      for (int x = 0; x < p; ++x) {
        int v = 0;
        for (int i = e; i >= 0; --i) v = (v * x + poly[i]) % p;
        EXPECT_NE(v, 0) << "root " << x << " mod " << p;
      }
    }
  }
  EXPECT_FALSE(IsIrreducible(2, {1, 0, 1}));  // (x + 1)^2
}

TEST(FieldTest, EllipticCountsByEnumeration) {
  for (int64_t p : {5, 7, 11, 13}) {
    int64_t affine = 0;
    for (int64_t x = 0; x < p; ++x) {
      for (int64_t y = 0; y < p; ++y) {
        if ((y * y - x * x * x + x) % p == 0) ++affine;
      }
    }
    const EllipticCount c = EllipticPointCount(p);
    EXPECT_EQ(c.affine, affine) << p;
    EXPECT_EQ(c.projective, affine + 1) << p;
  }
}

TEST(FieldTest, QuarticSquareCountByEnumeration) {
  for (uint64_t q : {5, 7, 9, 11, 25}) {
    FieldPtr f = Field::OfOrder(q);
    std::set<Elt> squares;
    for (Elt a = 1; a < f->q(); ++a) squares.insert(f->mul(a, a));
    int64_t nonzero = 0, zero = 0;
    for (Elt x = 0; x < f->q(); ++x) {
      const Elt x2 = f->mul(x, x);
      const Elt v = f->add(f->sub(f->mul(x2, x2), f->mul(f->from_int(48), x2)), f->from_int(64));
      zero += v == 0;
      nonzero += squares.count(v);
    }
    const QuarticSquareCount c = QuarticSquares(*f);
    EXPECT_EQ(c.nonzero_squares, nonzero) << q;
    EXPECT_EQ(c.with_zero, nonzero + zero) << q;
  }
}

}  // namespace
}  // namespace pgeom
