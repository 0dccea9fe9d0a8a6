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

// Graphs attached to polar spaces, Hermitian varieties and unitals, with
// the closed-form strongly regular parameters they are expected to have.

#ifndef PGEOM_GRAPH_FAMILIES_H_
#define PGEOM_GRAPH_FAMILIES_H_

#include <optional>
#include <vector>

#include "pgeom/graph.h"
#include "pgeom/polar.h"

namespace pgeom {

// Points of the polar space, adjacent when distinct and collinear.
Graph CollinearityGraph(const PolarSpace& ps);
// Expected parameters of the collinearity graph of a rank-d space.
SrgParams CollinearityParams(int d, int e2, uint64_t b);
// Second eigenvalue -b^{d+e-2} - 1 of the collinearity graph.
mpz_class CollinearityMinEigenvalue(int d, int e2, uint64_t b);

// Vertices are generators; x ~ y when x and y meet in vector dimension
// d - i. Relation 0 is the identity, whose "graph" is edgeless.
Graph DualPolarGraph(const PolarSpace& ps, int i);
// All d + 1 eigenvalues of D^i from the closed formula, j = 0..d.
std::vector<mpz_class> DistanceGraphEigenvalues(int d, int e2, uint64_t b, int i);

// NU(n+1, q^2): points of PG(n, q^2) off the Hermitian variety H(n, q^2),
// adjacent when the joining line is tangent to it.
struct PointGraph {
  Graph graph;
  FieldPtr field;
  int n = 0;                 // ambient projective dimension
  std::vector<Vec> points;   // vertex coordinates
  int32_t IndexOf(const Vec& v) const;
  std::vector<int64_t> ambient;   // ambient index of each vertex, sorted
};
PointGraph NuGraph(int n, uint64_t q2);
// Parameters for NU(n+1, q^2) with eps = (-1)^{n+1}.
SrgParams NuParams(int n, uint64_t q);

// Generators outside a hemisystem, adjacent when concurrent.
Graph HemisystemLineGraph(const PolarSpace& ps, const std::vector<int>& system);
// ((q^3+1)(q+1-m), (q^2+1)(q-m), q-1-m, q^2+1-m(q+1)).
SrgParams ThasLineGraphParams(int64_t q, int64_t m);

// Vertices F_q^{n+1}; x ~ y when <x - y> is in the given point set of the
// hyperplane at infinity PG(n, q).
Graph LinearRepresentationGraph(const Field& f, int n, const std::vector<Vec>& set);
// (q^6, (q^3+1)(q^2-1)/2, (q^4-4q^3+4q^2-5)/4, (q^4-1)/4) for (q+1)/2-ovoids
// of Q-(5,q).
SrgParams LinearRepresentationParams(int64_t q);

// Points of PG(2, q^2) off a unital, adjacent when the joining line is
// tangent to the unital.
PointGraph UnitalTangentGraph(uint64_t q2, const std::vector<Vec>& unital);
// (q^2(q^2-q+1), (q+1)(q^2-1), 2(q^2-1), (q+1)^2).
SrgParams UnitalGraphParams(int64_t q);
// Blocks of an abstract design, adjacent when they share a point.
Graph BlockGraph(const std::vector<std::vector<int>>& blocks);

}  // namespace pgeom

#endif  // PGEOM_GRAPH_FAMILIES_H_
