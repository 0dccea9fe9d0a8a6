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

// Symmetric association schemes, in particular the scheme of the
// generators of a polar space under the relations "meet in vector
// dimension d - i". Idempotents are held in coordinates with respect to
// the basis A_0..A_d of the Bose-Mesner algebra, which keeps every
// identity exact and cheap; small schemes are also checked densely.

#ifndef PGEOM_SCHEMES_H_
#define PGEOM_SCHEMES_H_

#include <vector>

#include <gmpxx.h>

#include "pgeom/graph.h"
#include "pgeom/polar.h"

namespace pgeom {

class Scheme {
 public:
  // rel[x * n + y] in 0..d with rel = 0 exactly on the diagonal. Verifies
  // all axioms exhaustively and throws std::invalid_argument on failure.
  Scheme(size_t n, int d, std::vector<uint8_t> rel);

  size_t n() const { return n_; }
  int classes() const { return d_; }
  int relation(size_t x, size_t y) const { return rel_[x * n_ + y]; }
  const Bitset& neighbours(int i, size_t x) const { return rows_[i][x]; }
  Graph RelationGraph(int i) const;
  int64_t valency(int i) const { return valency_[i]; }
  // p^k_{ij}.
  int64_t p(int i, int j, int k) const { return p_[(k * (d_ + 1) + i) * (d_ + 1) + j]; }
  // Number of (pair, i, j) triples compared against the p-numbers.
  int64_t checks() const { return checks_; }

  // Product of two elements of the algebra given in A-coordinates.
  std::vector<mpq_class> Multiply(const std::vector<mpq_class>& x,
                                  const std::vector<mpq_class>& y) const;

 private:
  size_t n_;
  int d_;
  std::vector<uint8_t> rel_;
  std::vector<std::vector<Bitset>> rows_;
  std::vector<int64_t> valency_;
  std::vector<int64_t> p_;
  int64_t checks_ = 0;
};

// Generators of ps with relation i when they meet in vector dimension
// d - i.
Scheme SchemeFromPolar(const PolarSpace& ps, size_t max_generators = 1500);

struct Idempotents {
  // E_i = sum_l coords[i][l] A_l; strata ordered by decreasing eigenvalue
  // of A_1, so E_0 = J / n.
  std::vector<std::vector<mpq_class>> coords;
  std::vector<mpq_class> theta;                    // eigenvalue of A_1 on E_i
  std::vector<std::vector<mpq_class>> eigenvalues;  // P[i][l]: A_l on E_i
  std::vector<mpq_class> multiplicities;           // rank of E_i
  std::vector<std::vector<std::vector<mpq_class>>> krein;  // q^k_{ij}, [i][j][k]
  bool identities_ok = false;  // E_i E_j = delta E_i, sum E_i = I, E_0 = J/n
  bool krein_nonnegative = false;
  bool dense_checked = false;  // identities also checked as n x n matrices
};
// Requires A_1 to have d + 1 distinct integral eigenvalues (true for the
// dual polar schemes).
Idempotents MinimalIdempotents(const Scheme& s, size_t dense_limit = 64);

// chi_S^T E_i chi_S for i = 0..d; zero exactly when E_i chi_S = 0.
std::vector<mpq_class> DesignNorms(const Scheme& s, const Idempotents& e,
                                   const std::vector<int>& subset);
// { 1 <= i <= d : E_i chi_S != 0 }.
std::vector<int> DualDegreeSet(const Scheme& s, const Idempotents& e,
                               const std::vector<int>& subset);
bool IsKDesign(const std::vector<int>& dual_degree, int k);
bool IsKAntidesign(const std::vector<int>& dual_degree, int k);

}  // namespace pgeom

#endif  // PGEOM_SCHEMES_H_
