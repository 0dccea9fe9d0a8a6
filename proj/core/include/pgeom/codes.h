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

// Linear codes spanned by projective point sets, exhaustive weight
// enumeration and the equivalence between projective two-intersection
// sets, two-weight codes and strongly regular coset graphs.

#ifndef PGEOM_CODES_H_
#define PGEOM_CODES_H_

#include <map>
#include <vector>

#include "pgeom/graph.h"
#include "pgeom/projspace.h"

namespace pgeom {

struct LinearCode {
  FieldPtr field;
  int k = 0;        // dimension
  int n = 0;        // length
  Mat generator;    // k rows of length n; column j is the j-th point
};

// Columns are the given points, normalized. Throws when they do not span
// PG(k-1, q).
LinearCode CodeFromSet(FieldPtr field, const std::vector<Vec>& points);

struct WeightDistribution {
  std::vector<uint64_t> counts;   // counts[w], w = 0..n
  std::vector<int> support;       // nonzero weights, ascending
  int min_distance = 0;
  uint64_t total = 0;
};
// Exhaustive over all q^k messages.
WeightDistribution WeightEnumerator(const LinearCode& code,
                                    uint64_t max_codewords = 10'000'000);

// Message x has weight n - |x^perp & S|; returns, for every projective
// hyperplane, the number of points of S on it, as a histogram.
std::map<int, int64_t> HyperplaneIntersections(const Field& f,
                                               const std::vector<Vec>& points);

struct TwoWeightBridge {
  bool two_weight = false;
  std::vector<int> weights;
  bool two_intersection = false;
  std::vector<int> intersection_sizes;
  bool graph_srg = false;
  SrgParams graph_params;
  // weight(x) + |x^perp & S| = n for every nonzero x.
  bool identity_holds = false;
  // The three conditions agree.
  bool consistent() const {
    return two_weight == two_intersection && two_intersection == graph_srg;
  }
};
// Builds the code, the hyperplane intersection numbers and the coset graph
// on GF(q)^k with connection set the multiples of the points.
TwoWeightBridge CheckTwoWeightBridge(FieldPtr field,
                                     const std::vector<Vec>& points);

}  // namespace pgeom

#endif  // PGEOM_CODES_H_
