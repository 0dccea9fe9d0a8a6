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

// Reflexive forms and the finite classical polar spaces they define.
//
// A PolarSpace owns its form, the ambient PG(n, q), and the sorted list of
// isotropic (singular) points. Polar point i is the i-th isotropic point in
// ambient index order. Everything derived lazily (collinearity bitsets,
// generators) is cached behind a mutex, so a PolarSpace can be shared.
//
// Counting formulas use the ambient field order as the base b and an
// exact half-integer e = e2/2, so b^{d+e-i} is always an integer:
// Hermitian spaces live over fields of square order.

#ifndef PGEOM_POLAR_H_
#define PGEOM_POLAR_H_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pgeom/bitset.h"
#include "pgeom/gf.h"
#include "pgeom/projspace.h"

namespace pgeom {

enum class FormKind { kAlternating, kHermitian, kQuadratic };

struct Form {
  FormKind kind = FormKind::kAlternating;
  int n = 0;  // ambient projective dimension
  FieldPtr field;
  // Alternating and Hermitian: the Gram matrix G, beta(x, y) =
  // sum x_i G_ij y_j^sigma. Quadratic: upper triangular coefficients c,
  // Q(x) = sum_{i <= j} c_ij x_i x_j.
  Mat gram;
};

// Evaluation of a form with the polar Gram matrix precomputed.
class FormOps {
 public:
  explicit FormOps(const Form& form);

  const Form& form() const { return form_; }
  const Field& field() const { return *form_.field; }
  // Sesquilinear form, or the polar form of a quadratic form.
  Elt Beta(const Vec& a, const Vec& b) const;
  // Q(x) for quadratic forms, beta(x, x) otherwise.
  Elt Value(const Vec& x) const;
  bool Isotropic(const Vec& x) const;
  // w with Beta(a, b) = Dot(a, w) for every a.
  Vec PerpVector(const Vec& b) const;
  // Polar Gram matrix (for quadratic forms B_ij = c_ij + c_ji).
  const Mat& polar_gram() const { return polar_; }
  Elt Sigma(Elt x) const { return hermitian_ ? field().conj(x) : x; }

 private:
  Form form_;
  Mat polar_;
  bool hermitian_ = false;
};

enum class Family { kW, kQPlus, kQ, kQMinus, kH };

std::string FamilyTag(Family f);  // "W", "Q+", "Q", "Q-", "H"
Family ParseFamilyTag(const std::string& tag);

// Descriptor strings such as "Q-:5:3", "H:4:q2=9", "W:3:5". The last
// field is the order of the ambient field.
struct Descriptor {
  Family family = Family::kW;
  int n = 0;
  uint64_t q = 0;
  std::string ToString() const;
};
Descriptor ParseDescriptor(const std::string& s);

// Rank d and 2e of the family in PG(n, q).
void FamilyRank(Family family, int n, int* d, int* e2);

// Canonical forms: W sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i}; Q+ sum
// X_{2i} X_{2i+1}; Q adds X_{2d}^2; Q- adds the least irreducible
// f(X, Y) = X^2 + b XY + c Y^2; H sum X_i^{sqrt(q)+1}.
Form CanonicalForm(Family family, int n, FieldPtr field);
// Coefficients (b, c) of the least monic irreducible binary quadratic.
std::pair<Elt, Elt> LeastIrreducibleQuadratic(const Field& f);

// b^{num/2} as an exact integer; throws if not integral.
mpz_class HalfPow(uint64_t b, int num);
// Number of totally isotropic (k-1)-spaces of a rank-d polar space with
// parameter e = e2/2 over base b.
mpz_class PolarSubspaceCount(int d, int e2, uint64_t b, int k);
// theta_{d-1}(b) (b^{d+e-1} + 1).
mpz_class PolarPointCount(int d, int e2, uint64_t b);
// b^{d+e-1} + 1.
mpz_class OvoidNumber(int d, int e2, uint64_t b);

struct SectionInfo {
  int vertex_dim = 0;  // vector dimension of the singular radical
  int base_n = -1;     // projective dimension of the non-degenerate base
  std::optional<Family> base_family;  // empty when the base has no form
  int base_d = 0;
  int64_t points = 0;  // points of the section
  std::string description;
};

class PolarSpace;
using PolarPtr = std::shared_ptr<const PolarSpace>;

class PolarSpace {
 public:
  static PolarPtr Make(Family family, int n, uint64_t q);
  static PolarPtr Make(const Descriptor& d) { return Make(d.family, d.n, d.q); }
  // Classifies an arbitrary non-degenerate form; throws on degenerate ones.
  static PolarPtr FromForm(const Form& form);

  const Form& form() const { return ops_.form(); }
  const FormOps& ops() const { return ops_; }
  const Field& field() const { return *form().field; }
  const ProjectiveSpace& pg() const { return pg_; }
  Family family() const { return family_; }
  int n() const { return form().n; }
  int d() const { return d_; }
  int e2() const { return e2_; }
  uint64_t base() const { return field().q(); }
  std::string Name() const;
  Descriptor descriptor() const { return {family_, n(), base()}; }

  size_t num_points() const { return points_.size(); }
  const Vec& point(size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }
  int32_t ambient_index(size_t i) const { return ambient_[i]; }
  // Polar index of the point spanned by v, or -1 if not isotropic.
  int32_t index_of(const Vec& v) const;
  int32_t index_of_ambient(int64_t ambient) const;

  Elt Beta(const Vec& a, const Vec& b) const { return ops_.Beta(a, b); }
  bool Isotropic(const Vec& v) const { return ops_.Isotropic(v); }
  bool Collinear(size_t i, size_t j) const;

  // For each point, the set of points collinear with it (itself included).
  const std::vector<Bitset>& PerpSets() const;

  Subspace Perp(const Subspace& s) const;
  bool TotallyIsotropic(const Subspace& s) const;
  // Polar indices of the isotropic points of s, ascending.
  std::vector<int32_t> IsotropicPointsIn(const Subspace& s) const;
  bool IsTangentLine(const Subspace& line) const;
  // Points X of the space such that the line PX is tangent at X or lies
  // in the space; for P on the space this is P^perp restricted.
  std::vector<int32_t> TangentCone(const Vec& p) const;

  // Totally isotropic subspaces of vector dimension k, each generated once,
  // sorted by echelon matrix. Throws BudgetError above max_count.
  std::vector<Subspace> EnumerateIso(int k,
                                     uint64_t max_count = 2'000'000) const;
  const std::vector<Subspace>& Generators() const;
  // Polar point sets of the generators, parallel to Generators().
  const std::vector<std::vector<int32_t>>& GeneratorPoints() const;

  // Witt index computed by greedy extension of a totally isotropic space.
  int ComputedWittIndex() const;

  SectionInfo Section(const Subspace& s) const;

  mpz_class ExpectedSubspaceCount(int k) const {
    return PolarSubspaceCount(d_, e2_, base(), k);
  }

 private:
  PolarSpace(const Form& form, Family family, int d, int e2);

  FormOps ops_;
  ProjectiveSpace pg_;
  Family family_;
  int d_;
  int e2_;
  std::vector<Vec> points_;
  std::vector<int32_t> ambient_;
  std::vector<int32_t> polar_of_ambient_;

  mutable std::mutex mu_;
  mutable std::vector<Bitset> perp_sets_;
  mutable std::vector<Subspace> generators_;
  mutable std::vector<std::vector<int32_t>> generator_points_;
  mutable bool generators_ready_ = false;
};

// Buekenhout-Shult axioms, and for rank 2 the generalized quadrangle
// axioms with Higman's inequality.
struct AxiomReport {
  bool lines_have_three_points = false;
  bool no_point_collinear_with_all = false;
  bool finite_rank = false;  // all maximal singular subspaces of one rank
  bool one_or_all = false;
  int64_t pairs_checked = 0;
  // Violating (point, line index) for the one-or-all axiom, if any.
  int32_t witness_point = -1;
  int32_t witness_line = -1;
  bool is_gq = false;
  int64_t gq_s = 0;
  int64_t gq_t = 0;
  bool higman = false;
  bool ok() const {
    return lines_have_three_points && no_point_collinear_with_all &&
           finite_rank && one_or_all;
  }
};
AxiomReport VerifyPolarAxioms(const PolarSpace& ps);

}  // namespace pgeom

#endif  // PGEOM_POLAR_H_
