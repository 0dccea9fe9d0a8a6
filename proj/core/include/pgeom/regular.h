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

// Regular systems: sets of generators such that every totally isotropic
// subspace of a fixed dimension lies on the same number m of them. A
// verifier that counts incidences exhaustively, and an exact-cover style
// search over the generators of a rank-2 space.

#ifndef PGEOM_REGULAR_H_
#define PGEOM_REGULAR_H_

#include <cstdint>
#include <vector>

#include "pgeom/polar.h"

namespace pgeom {

struct RegularSystemReport {
  bool members_ok = false;     // every member is a generator
  int bad_member = -1;
  bool regular = false;
  int64_t m = 0;
  // A k-space whose count differs from the first one seen.
  Subspace witness;
  int64_t witness_count = 0;
  int64_t subspaces_checked = 0;
  // |R| = m prod_{i=1}^{k} (b^{d+e-i} + 1).
  bool size_formula_ok = false;
};

// k is the vector dimension of the subspaces counted (k = 1: points).
RegularSystemReport VerifyRegularSystem(const PolarSpace& ps,
                                        const std::vector<Subspace>& members,
                                        int k);
// Members given as indices into ps.Generators().
RegularSystemReport VerifyRegularSystemIndices(const PolarSpace& ps,
                                               const std::vector<int>& members,
                                               int k);

// m prod_{i=1}^{k} (b^{d+e-i} + 1).
mpz_class RegularSystemSize(const PolarSpace& ps, int64_t m, int k);

struct SystemSearchResult {
  bool found = false;
  bool exhausted = false;   // no solution exists (search space covered)
  std::vector<int> members;  // generator indices, ascending
  int64_t nodes = 0;
};
// Finds a set of generators with every point on exactly m of them. The
// search runs over generators in index order, always trying "in" first,
// and propagates forced choices from the per-point counters. The first
// generator is fixed in: the isometry group is transitive on generators,
// so this loses no solutions up to equivalence.
SystemSearchResult SearchPointRegularSystem(const PolarSpace& ps, int64_t m,
                                            int64_t node_budget = -1);

}  // namespace pgeom

#endif  // PGEOM_REGULAR_H_
