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

// Unitals of PG(2, q^2): the Hermitian curve and the Buekenhout-Metz and
// Buekenhout-Tits families, with a verifier for embedded unitals and one
// for abstract 2-(v, k, 1) designs.

#ifndef PGEOM_UNITAL_H_
#define PGEOM_UNITAL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgeom/graph_families.h"
#include "pgeom/projspace.h"

namespace pgeom {

enum class UnitalKind { kClassical, kBuekenhoutMetz, kBuekenhoutTits };
std::string UnitalKindName(UnitalKind k);
UnitalKind ParseUnitalKind(const std::string& s);

struct Unital {
  UnitalKind kind = UnitalKind::kClassical;
  uint64_t q = 0;
  FieldPtr field;            // GF(q^2)
  Elt alpha = 0, beta = 0;   // parameters, where they apply
  std::vector<Vec> points;   // normalized, in construction order
};

// X0^{q+1} + X1^{q+1} + X2^{q+1} = 0.
Unital ClassicalUnital(uint64_t q);

// Whether (alpha, beta) yields a Buekenhout-Metz unital: alpha != 0 and
// (beta - beta^q)^2 + 4 alpha^{q+1} a nonsquare of GF(q) for q odd;
// beta outside GF(q) and Tr(alpha^{q+1} / (beta + beta^q)^2) = 0 for q even.
bool ValidBuekenhoutMetzParams(const Field& f, Elt alpha, Elt beta);
// Least valid pair in the order (alpha, beta).
std::pair<Elt, Elt> LeastBuekenhoutMetzParams(const Field& f);
// {(x, alpha x^2 + beta x^{q+1} + z, 1)} u {(0, 1, 0)}. Throws on invalid
// parameters; the default picks the least valid pair.
Unital BuekenhoutMetzUnital(uint64_t q, std::optional<std::pair<Elt, Elt>> params = {});

// q = 2^m, m odd and > 1.
Unital BuekenhoutTitsUnital(uint64_t q);

struct DesignReport {
  bool ok = false;
  int64_t v = 0, k = 0;
  int64_t blocks = 0;
  bool uniform = false;        // all blocks of size k
  bool unital_order = false;   // v = a^3 + 1 with k = a + 1
  int bad_a = -1, bad_b = -1;  // a pair not covered exactly once
  int64_t bad_count = 0;
};
// Every pair of the v points lies in exactly one block.
DesignReport VerifyDesign(int64_t v, const std::vector<std::vector<int>>& blocks);

struct UnitalReport {
  bool size_ok = false;        // q^3 + 1 distinct points
  bool lines_ok = false;       // every line meets the set in 1 or q+1 points
  Vec bad_line;                // line coordinates of a violation
  int64_t bad_line_count = -1;
  int64_t tangents = 0, secants = 0;
  std::vector<std::vector<int>> blocks;  // secant intersections
  DesignReport design;
  bool ok() const { return size_ok && lines_ok && design.ok; }
};
// Embedded unital of PG(2, q^2); q is derived from the field.
UnitalReport VerifyUnital(const Field& f, const std::vector<Vec>& pts);

// Four vertices of the tangent graph of a unital, pairwise on tangent
// lines, no three collinear.
struct ONanSearch {
  bool found = false;
  std::vector<int> witness;
  int64_t count = 0;           // when exhaustive
  int64_t cliques_checked = 0;
};
ONanSearch FindDualONan(const PointGraph& g, bool exhaustive = false);

// Maximal cliques of a point graph keyed by "size:pattern", where the
// pattern lists, ascending, how many clique points lie on each line
// joining two of them. Throws BudgetError if the enumeration is cut short.
std::map<std::string, int64_t> GeometricCliqueCensus(const PointGraph& g,
                                                     int64_t node_budget = -1);

}  // namespace pgeom

#endif  // PGEOM_UNITAL_H_
