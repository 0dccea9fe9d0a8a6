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

// Regular systems built by hand: the hemisystems of Q-(5, q) assembled
// from reguli of hyperbolic sections, the 1-system of Q(6, 3) on a
// self-polar simplex, lifting along Q-(2d+1, q) < Q(2d+2, q), and the
// Latin/Greek families of Q+(2d-1, q) with their switching.
//
// Every free choice is resolved by taking the least candidate in the
// echelon order of Subspace, so all outputs are reproducible.

#ifndef PGEOM_CONSTRUCTIONS_H_
#define PGEOM_CONSTRUCTIONS_H_

#include <cstdint>
#include <vector>

#include "pgeom/polar.h"

namespace pgeom {

// All lines of PG(n, q) inside s, sorted.
std::vector<Subspace> LinesIn(const Field& f, const Subspace& s);

// Totally isotropic lines of ps inside s, sorted.
std::vector<Subspace> IsotropicLinesIn(const PolarSpace& ps, const Subspace& s);

// The two reguli of a solid meeting ps in Q+(3, q). `first` holds the
// least line. Throws std::invalid_argument when the lines do not split
// into two classes of q + 1 pairwise disjoint lines.
struct ReguliPair {
  std::vector<Subspace> first, second;
};
ReguliPair SplitReguli(const PolarSpace& ps, const Subspace& solid);

// Index of each generator of ps by its echelon matrix; -1 when s is not a
// generator.
int GeneratorIndex(const PolarSpace& ps, const Subspace& s);

// Hemisystem of Q-(5, q), q odd, from the lines of a solid Pi meeting the
// quadric in Q+(3, q) together with two auxiliary solids. Each member line
// r contributes one regulus of the hyperbolic section r^perp.
struct EllipticHemisystem {
  PolarPtr space;
  uint64_t q = 0;
  Subspace pi, ell, ell1, ell2;
  std::vector<Subspace> x, x1, x2;  // the three line families
  std::vector<Subspace> members;    // their union, sorted
  bool count_ok = false;  // |members| = (q^2-q+1)(q^2+1)/2
  // Pairwise conditions: a plane <r, r'> does not meet the quadric in a
  // single point; a solid <r, r'> does not meet it in q + 1 points.
  bool conditions_ok = false;
  int bad_a = -1, bad_b = -1;
  int64_t pairs_checked = 0;
  // Sections r^perp partition the generators.
  bool partition_ok = false;
  // Generator indices of the chosen and the opposite regulus per member.
  std::vector<std::vector<int>> chosen, opposite;
  std::vector<int> system;  // union of chosen reguli, ascending
};
// `flip` lists member indices whose regulus choice is reversed.
EllipticHemisystem BuildEllipticHemisystem(uint64_t q,
                                           const std::vector<int>& flip = {});

// (q^n+1)(q^{n+1}+1) / (2(q+1)) when integral; false otherwise.
bool HyperbolicSectionCount(uint64_t q, int n, mpz_class* count);

// For each hyperplane p^perp (p off the quadric) of Q-(5, q), the number
// of members of `system` inside it. Returns the distinct values seen.
std::vector<int64_t> ParabolicSectionCounts(const PolarSpace& ps,
                                            const std::vector<int>& system);

// The 1-system of Q(6, 3) on the simplex of the form sum X_i^2. The seven
// simplex points are labelled P1..P7 and sit at the unit vectors e0..e6.
struct OneSystemQ63 {
  PolarPtr space;
  std::vector<Subspace> solids;     // <r_i, l_i>, <r_i, l'_i>, pi^perp
  std::vector<Subspace> lines;      // S, 28 lines
  std::vector<Subspace> opposite;   // S^o
  int64_t covered_points = 0;
  bool one_system = false;
  Subspace bad_plane;               // plane through a member meeting another
  std::vector<int> derived;         // planes on a line of S u S^o
  std::vector<bool> simplex_internal;  // P^perp meets Q(6,3) in Q-(5,3)
};
OneSystemQ63 BuildOneSystemQ63();

// Generators of `big` containing a member of `members`, where the small
// space sits in big as the section x_n = 0 (vectors padded with a zero).
std::vector<int> ChainLift(const PolarSpace& small, const PolarSpace& big,
                           const std::vector<int>& members);
// Q(2d+2, q) from the form Q-(2d+1, q) + X_{2d+2}^2.
PolarPtr ParabolicOverElliptic(int n_small, uint64_t q);

// Generators of a hyperbolic quadric split into the class of generator 0
// and the other class.
struct GeneratorClasses {
  std::vector<int> latin, greek;
};
GeneratorClasses HyperbolicClasses(const PolarSpace& ps);

// (M1 \ Z1) u Z2 where Zi are the class-i generators through sigma.
std::vector<int> HyperbolicSwitch(const PolarSpace& ps,
                                  const GeneratorClasses& cls,
                                  const Subspace& sigma);

// Generators through a totally isotropic subspace.
std::vector<int> GeneratorsThrough(const PolarSpace& ps, const Subspace& s);

// Lines of H(3, q^2) with the diagonal form, sent to Q-(5, q). Plucker
// vectors of totally isotropic lines are fixed, up to a scalar, by
// p -> *conj(p); the fixed GF(q)-space has coordinates the components of
// p01, p02, p03 over the basis 1, w of GF(q^2) (w primitive), and the
// Klein quadric restricts to N(c0 + c1 w) + N(c2 + c3 w) + N(c4 + c5 w).
PolarPtr HermitianKleinQuadric(uint64_t q);
// Throws when the line is not totally isotropic.
Vec HermitianKleinPoint(const PolarSpace& herm, const Subspace& line);

}  // namespace pgeom

#endif  // PGEOM_CONSTRUCTIONS_H_
