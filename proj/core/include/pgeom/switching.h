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

// Wang-Qiu-Hu switching, its application to NU(n+1, q^2) along two lines
// tangent to the Hermitian variety at a common point, and the certificates
// that the switched graph is a cospectral but non-isomorphic mate.

#ifndef PGEOM_SWITCHING_H_
#define PGEOM_SWITCHING_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgeom/graph.h"
#include "pgeom/graph_families.h"

namespace pgeom {

class SwitchingError : public std::invalid_argument {
 public:
  SwitchingError(const std::string& what, int witness)
      : std::invalid_argument(what), witness_(witness) {}
  int witness() const { return witness_; }

 private:
  int witness_;
};

struct WqhReport {
  bool parts_ok = false;     // l1, l2 disjoint, non-empty, of equal size
  bool regular_ok = false;   // induced on l1, l2, l1 u l2 regular, equal degrees
  bool outside_ok = false;   // every other vertex is balanced or sees l1 or l2 exactly
  int witness = -1;          // vertex breaking the first failed condition
  std::string reason;
  std::vector<int> to_l1, to_l2;  // outside vertices seeing exactly l1 / l2
  bool ok() const { return parts_ok && regular_ok && outside_ok; }
};
WqhReport CheckWqh(const Graph& g, const std::vector<int>& l1, const std::vector<int>& l2);

// Switches adjacency between l1 u l2 and every outside vertex whose
// neighbourhood there is exactly l1 or exactly l2. Throws SwitchingError
// when the hypotheses fail.
Graph WqhSwitch(const Graph& g, const std::vector<int>& l1, const std::vector<int>& l2,
                WqhReport* report = nullptr);

// Type of the plane <l1, l2> on the Hermitian variety.
enum class PlaneType { kPencil, kLine };
std::string PlaneTypeName(PlaneType t);
PlaneType ParsePlaneType(const std::string& s);

struct SwitchSizes {
  int64_t a = 0, a1 = 0;     // |A| and |A1| = |A2|
};
// Sizes for n = 4.
SwitchSizes ExpectedSwitchSizes(uint64_t q, PlaneType type);

struct SwitchingConfig {
  int n = 0;
  uint64_t q = 0;
  PlaneType type = PlaneType::kLine;
  Vec p;                     // point of the variety
  Subspace line1, line2;     // tangent lines at p
  std::vector<int> l1, l2;   // their vertices
  std::vector<int> a, a1, a2;
  bool sizes_checked = false;   // only for n = 4
  bool sizes_ok = false;
  bool in_p_perp = false;       // A, A1, A2 inside p^perp
  bool matches_rules = false;   // equals the explicit neighbourhood rules
  WqhReport wqh;
};

struct SwitchedNu {
  PointGraph base;           // NU(n+1, q^2)
  Graph switched;
  SwitchingConfig config;
};
// Least point of the variety and least pair of tangent lines at it whose
// plane has the requested type. Throws when no such pair exists.
SwitchedNu BuildSwitchedNu(int n, uint64_t q, PlaneType type);

// Thm-level check on NU(5, q^2): every triangle is classified by the span
// of its vertices and its common-neighbour count compared with the closed
// value for that configuration.
enum class TriangleKind { kTangentOnSubline, kTangentOffSubline, kPlaneLine, kPlaneCurve };
std::string TriangleKindName(TriangleKind k);
int64_t TriangleFormula(uint64_t q, TriangleKind k);
struct TriangleCheck {
  std::map<TriangleKind, int64_t> count;  // triangles seen per kind
  std::map<TriangleKind, std::map<int64_t, int64_t>> values;
  int64_t mismatches = 0;
  int64_t triangles = 0;
  bool complete = false;     // every triangle visited
};
// Visits every `stride`-th triangle; stride 1 is exhaustive.
TriangleCheck CheckTriangleFormulas(const PointGraph& nu, uint64_t q, int64_t stride = 1);

// Triangles u in l1, u1, u2 in A on a line through u tangent to the variety
// inside p^perp other than line1 (for the pencil type, with the tangency
// point off the Baer subline through u, u1, u2). Their common-neighbour
// counts in the switched graph.
struct SwitchedTriangles {
  int64_t triangles = 0;
  std::map<int64_t, int64_t> values;
  int64_t expected = 0;      // 2q^5 + q^3 - 3
};
SwitchedTriangles SwitchedTriangleValues(const SwitchedNu& s, int64_t max_triangles = -1);

enum class Verdict { kVerified, kRefuted, kInconclusive, kBudgetExhausted };
std::string VerdictName(Verdict v);

struct CospectralCertificate {
  SrgReport first, second;
  bool same_parameters = false;
  bool census_done = false;
  std::map<int64_t, int64_t> census_first, census_second;
  bool census_differs = false;
  Verdict verdict = Verdict::kInconclusive;
};
// Cospectral through equal strongly regular parameters; non-isomorphic
// through differing triple censuses.
CospectralCertificate CertifyCospectralNonIsomorphic(const Graph& g, const Graph& h,
                                                     int64_t max_triangles = 50'000'000);

}  // namespace pgeom

#endif  // PGEOM_SWITCHING_H_
