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

// Partial ovoids of symplectic and Hermitian spaces, tangent-sets of
// Hermitian spaces and Sherk surfaces.

#ifndef PGEOM_OVOIDS_H_
#define PGEOM_OVOIDS_H_

#include <cstdint>
#include <vector>

#include "pgeom/polar.h"

namespace pgeom {

struct PartialOvoidReport {
  bool points_ok = false;      // every point isotropic, no repeats
  bool partial_ovoid = false;  // no two points collinear
  int bad_a = -1, bad_b = -1;
  int64_t pairs_checked = 0;
  // Independent check through the generators, when requested.
  bool generators_checked = false;
  bool generator_check_ok = false;
  int bad_generator = -1;
  bool maximality_checked = false;
  bool maximal = false;
  Vec extension;               // least point that extends the set
  int64_t extension_count = 0;
};
PartialOvoidReport VerifyPartialOvoid(const PolarSpace& ps, const std::vector<Vec>& pts,
                                      bool check_maximal = false,
                                      bool check_generators = false);

// W(3, q), q an odd square prime to 3, with the form of Gram matrix
// J = antidiag(1, 1, -1, -1). The twisted cubic C together with an orbit
// of a subgroup G_eps = PGL(2, sqrt(q)) of its stabiliser.
struct TwistedCubicOvoid {
  PolarPtr space;
  int eps = 0;
  Elt x = 0;                   // base point U1 + x U4
  std::vector<Vec> cubic;      // q + 1 points
  std::vector<Vec> orbit;
  int64_t group_order = 0;     // |G_eps| as projectivities
  int64_t stabilizer_order = 0;
  std::vector<Vec> points;     // cubic then orbit
};
TwistedCubicOvoid BuildTwistedCubicOvoid(uint64_t q);

// W(5, q) realised on the F_q-subspace {(a, a^q, a^{q^2}, b^{q^2}, b^q, b)}
// of GF(q^3)^6. The orbit of P_{1,c} under the norm-one diagonal group.
struct CyclicOvoidW5 {
  PolarPtr space;              // W(5, q) in the reduced coordinates (a, b)
  uint64_t q = 0;
  Elt c = 0;                   // element of GF(q)
  std::vector<Vec> big_points; // over GF(q^3), six coordinates
  std::vector<Vec> points;     // over GF(q)
  bool big_pairs_ok = false;   // literal form over GF(q^3) nonzero on pairs
  bool form_in_subfield = false;
};
CyclicOvoidW5 BuildCyclicOvoidW5(uint64_t q, uint64_t c_index = 1);

// Sherk surface S(alpha, beta, gamma, delta) on PG(1, q^3): alpha, delta
// in GF(q), beta, gamma in GF(q^3), all given as elements of `big`.
struct SherkSet {
  std::vector<Elt> finite;
  bool infinity = false;
  int64_t size() const { return static_cast<int64_t>(finite.size()) + infinity; }
};
SherkSet SherkSurface(const Field& big, int m, Elt alpha, Elt beta, Elt gamma, Elt delta);

// W(5, q), q even: the set A u (E1 \ sigma) of size 2q^2 - q + 1.
struct EvenOvoidW5 {
  PolarPtr space;
  Elt delta1 = 0, delta2 = 0;
  std::vector<Vec> a, e1, points;
};
EvenOvoidW5 BuildEvenOvoidW5(uint64_t q);

// Least delta with X^2 + X + delta irreducible over GF(q).
Elt LeastArtinSchreierIrreducible(const Field& f);

// A tangent-set of H_1 in PG(3, q^2) assembled from copies of one ovoid
// (or partial ovoid) of W(3, q) placed in the Baer subgeometries Sigma_i.
struct TangentSet {
  PolarPtr herm;               // H_1
  Elt iota = 0;
  std::vector<Elt> xi;         // xi_1 = 0, ...
  std::vector<Vec> base;       // the W(3, q) set, GF(q) coordinates
  std::vector<Vec> points;
  int64_t on_variety = 0;
};
// base empty: the elliptic quadric X1 X3 + X0^2 + X0 X2 + d X2^2 (q even) or
// a greedy maximal partial ovoid through U2 (q odd).
TangentSet BuildTangentSet(uint64_t q, std::vector<Vec> base = {});

struct TangentSetReport {
  bool tangent_set = false;
  int bad_a = -1, bad_b = -1;
  bool maximality_checked = false;
  bool maximal = false;
  Vec extension;
};
// Every line tangent to or contained in the variety meets pts at most once.
TangentSetReport VerifyTangentSet(const PolarSpace& herm, const std::vector<Vec>& pts,
                                  bool check_maximal = false);

// H(4, q^2) = H_1 + X_4^{q+1}, P = U5 and the points of H(4, q^2) on the
// lines PR, R in the tangent-set.
struct HermitianLift {
  PolarPtr space;
  std::vector<Vec> points;
  int64_t expected_size = 0;   // (q+1)|T \ H| + |T n H|
};
HermitianLift LiftTangentSet(const TangentSet& t);

// Fan of H(3, q^2): P the least point off the variety, X the least point
// of P^perp on it and t the tangent line at X inside P^perp. O_X is the
// section P^perp; for Y on t \ {X}, O_Y = (Y^perp \ P^perp) u (PY).
struct Fan {
  Vec p, x;
  Subspace t;
  std::vector<std::vector<int32_t>> ovoids;  // polar indices, O_X first
  bool partition = false;    // every point in exactly one O_Z
  bool all_ovoids = false;   // every generator meets every O_Z once
};
Fan BuildFan(const PolarSpace& herm);

}  // namespace pgeom

#endif  // PGEOM_OVOIDS_H_
