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

// Points and subspaces of PG(n, q).
//
// A point is a coordinate vector whose first nonzero entry is 1. Points of
// PG(n, q) are numbered in lexicographic order of their coordinate
// indices, which is also the order of the base-q integer they spell. A
// subspace is held by its reduced row echelon basis, so equality of
// subspaces is equality of row lists; zero rows mean the empty subspace.

#ifndef PGEOM_PROJSPACE_H_
#define PGEOM_PROJSPACE_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "pgeom/gf.h"

namespace pgeom {

using Vec = std::vector<Elt>;
using Mat = std::vector<Vec>;

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// First nonzero coordinate scaled to 1. Returns false for the zero vector.
bool Normalize(const Field& f, Vec* v);

// Vector helpers.
Vec VecAdd(const Field& f, const Vec& a, const Vec& b);
Vec VecScale(const Field& f, Elt c, const Vec& a);
Elt Dot(const Field& f, const Vec& a, const Vec& b);

struct Subspace {
  int n = 0;  // ambient projective dimension; vectors have n + 1 entries
  Mat rows;   // reduced row echelon form, leading ones

  int dim() const { return static_cast<int>(rows.size()); }
  int projdim() const { return dim() - 1; }
  bool operator==(const Subspace& o) const {
    return n == o.n && rows == o.rows;
  }
  bool operator<(const Subspace& o) const { return rows < o.rows; }
};

// Row reduction. The input rows need not be independent.
Subspace Rref(const Field& f, int n, Mat rows);
int Rank(const Field& f, Mat rows);
// {x : r . x = 0 for every row r}, as a subspace.
Subspace NullSpace(const Field& f, int n, const Mat& rows);

Subspace Span(const Field& f, const Subspace& a, const Subspace& b);
Subspace SpanPoints(const Field& f, int n, const std::vector<Vec>& pts);
Subspace Meet(const Field& f, const Subspace& a, const Subspace& b);
bool Contains(const Field& f, const Subspace& s, const Vec& v);
bool ContainsSubspace(const Field& f, const Subspace& big,
                      const Subspace& small);

// All points of a subspace, each normalized, in no particular order.
std::vector<Vec> SubspacePoints(const Field& f, const Subspace& s);

// Gaussian binomial [r h]_q; zero when h > r or h < 0.
mpz_class GaussianBinomial(int r, int h, const mpz_class& q);
// theta_n = (q^{n+1} - 1)/(q - 1), the number of points of PG(n, q).
mpz_class Theta(int n, const mpz_class& q);

enum class GroupFamily {
  kGL, kSL, kPGL, kPSL, kPGammaL,
  kSp, kPSp,
  kGU, kSU, kPGU, kPSU,
  kGOPlus, kGOMinus, kGOOdd,
};
struct GroupOrder {
  GroupFamily family;
  int r = 0;
  uint64_t q = 0;
  mpz_class order;
};
// r is the vector dimension (2d for Sp and GO^{+-}, 2d+1 for GO odd).
// For the unitary families q is the order of the fixed subfield, as in
// GU(r, q) acting on GF(q^2)^r.
GroupOrder ComputeGroupOrder(GroupFamily family, int r, uint64_t q);
GroupFamily ParseGroupFamily(const std::string& name);

// PG(n, q) with lexicographically numbered points.
class ProjectiveSpace {
 public:
  ProjectiveSpace(int n, FieldPtr field);

  int n() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  size_t num_points() const { return num_points_; }

  // Coordinates of the i-th point.
  Vec point(size_t i) const;
  // Index of the point spanned by v (normalizing a copy); -1 for zero.
  int64_t index_of(const Vec& v) const;
  // Index of an already-normalized vector.
  int64_t index_of_normalized(const Vec& v) const;

  // Indices of the points of a subspace, ascending.
  std::vector<int32_t> PointsOf(const Subspace& s) const;

 private:
  uint64_t Code(const Vec& v) const;

  int n_;
  FieldPtr field_;
  size_t num_points_;
  std::vector<uint64_t> codes_;      // sorted; codes_[i] spells point i
  std::vector<int32_t> dense_;       // code -> index when small enough
  std::unordered_map<uint64_t, int32_t> sparse_;
};

// All subspaces of projective dimension projdim in PG(n, q), ordered by
// their row-major flattened echelon matrices. Throws BudgetError above
// max_count.
std::vector<Subspace> EnumerateSubspaces(const Field& f, int n, int projdim,
                                         uint64_t max_count = 5'000'000);
// All points of PG(n, q) in index order.
std::vector<Vec> EnumeratePoints(const Field& f, int n);

// Klein correspondence between lines of PG(3, q) and points of the quadric
// X0 X5 - X1 X4 + X2 X3 = 0 in PG(5, q), Pluecker order
// (01, 02, 03, 12, 13, 23).
Vec KleinMap(const Field& f, const Subspace& line);
Subspace KleinInverse(const Field& f, const Vec& point);
// Value of X0 X5 - X1 X4 + X2 X3 at v, and its polar form.
Elt KleinQuadric(const Field& f, const Vec& v);
Elt KleinPolar(const Field& f, const Vec& a, const Vec& b);

// Field reduction PG(r-1, q^n) -> PG(rn-1, q). Vectors over GF(q^n) are
// written over GF(q) using the basis 1, w, ..., w^{n-1} with w the
// primitive element of GF(q^n).
class FieldReduction {
 public:
  FieldReduction(int r, FieldPtr big, FieldPtr small);

  int r() const { return r_; }
  int degree() const { return deg_; }
  const Field& big() const { return *big_; }
  const Field& small() const { return *small_; }

  // Coordinates over GF(q) of an element of GF(q^n).
  const Vec& Coordinates(Elt x) const { return coords_[x]; }
  // Element of GF(q^n) with the given GF(q) coordinates.
  Elt FromCoordinates(const Vec& c) const;
  // Vector of length r over GF(q^n) -> length rn over GF(q).
  Vec Flatten(const Vec& v) const;
  // Image of a subspace of PG(r-1, q^n): a subspace of PG(rn-1, q) of
  // vector dimension n * dim.
  Subspace Map(const Subspace& s) const;
  Subspace MapPoint(const Vec& v) const;

 private:
  int r_;
  int deg_;
  FieldPtr big_;
  FieldPtr small_;
  std::vector<Vec> coords_;
  std::unordered_map<uint64_t, Elt> inverse_;
};

// Text formats: points as field-element indices joined by ':'; a subspace
// as a "k x (n+1)" header followed by k point rows.
std::string FormatPoint(const Vec& v);
Vec ParsePoint(const std::string& line);
std::string FormatSubspace(const Subspace& s);

}  // namespace pgeom

#endif  // PGEOM_PROJSPACE_H_
