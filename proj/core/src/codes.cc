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

#include "pgeom/codes.h"

#include <stdexcept>

#include "pgeom/graph_families.h"

namespace pgeom {

LinearCode CodeFromSet(FieldPtr field, const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const Field& f = *field;
  LinearCode c;
  c.field = field;
  c.k = static_cast<int>(points[0].size());
  c.n = static_cast<int>(points.size());
  std::vector<Vec> cols;
  for (Vec p : points) {
    if (static_cast<int>(p.size()) != c.k) throw std::invalid_argument("mixed lengths");
    if (!Normalize(f, &p)) throw std::invalid_argument("zero column");
    cols.push_back(std::move(p));
  }
  if (Rank(f, cols) != c.k) throw std::invalid_argument("points do not span");
  c.generator.assign(c.k, Vec(c.n, 0));
  for (int j = 0; j < c.n; ++j) {
    for (int i = 0; i < c.k; ++i) c.generator[i][j] = cols[j][i];
  }
  return c;
}

namespace {

// Calls fn(x) for every vector of GF(q)^k, in base-q order.
template <typename F>
void ForEachVector(const Field& f, int k, F&& fn) {
  Vec x(k, 0);
  while (true) {
    fn(x);
    int i = k - 1;
    while (i >= 0 && x[i] == f.q() - 1) x[i--] = 0;
    if (i < 0) return;
    ++x[i];
  }
}

}  // namespace

WeightDistribution WeightEnumerator(const LinearCode& code, uint64_t max_codewords) {
  const Field& f = *code.field;
  uint64_t total = 1;
  for (int i = 0; i < code.k; ++i) {
    total *= f.q();
    if (total > max_codewords) throw BudgetError("too many codewords");
  }
  WeightDistribution w;
  w.counts.assign(code.n + 1, 0);
  ForEachVector(f, code.k, [&](const Vec& x) {
    int weight = 0;
    for (int j = 0; j < code.n; ++j) {
      Elt s = 0;
      for (int i = 0; i < code.k; ++i) {
        if (x[i] != 0) s = f.add(s, f.mul(x[i], code.generator[i][j]));
      }
      if (s != 0) ++weight;
    }
    ++w.counts[weight];
  });
  w.total = total;
  for (int i = 1; i <= code.n; ++i) {
    if (w.counts[i] > 0) w.support.push_back(i);
  }
  w.min_distance = w.support.empty() ? 0 : w.support.front();
  return w;
}

std::map<int, int64_t> HyperplaneIntersections(const Field& f,
                                               const std::vector<Vec>& points) {
  std::map<int, int64_t> hist;
  const int k = static_cast<int>(points.at(0).size());
  for (const Vec& h : EnumeratePoints(f, k - 1)) {
    int c = 0;
    for (const Vec& p : points) c += Dot(f, h, p) == 0;
    ++hist[c];
  }
  return hist;
}

TwoWeightBridge CheckTwoWeightBridge(FieldPtr field, const std::vector<Vec>& points) {
  const Field& f = *field;
  TwoWeightBridge b;
  LinearCode code = CodeFromSet(field, points);
  WeightDistribution wd = WeightEnumerator(code);
  b.weights = wd.support;
  b.two_weight = wd.support.size() == 2;
  const std::map<int, int64_t> hist = HyperplaneIntersections(f, points);
  for (const auto& [size, count] : hist) b.intersection_sizes.push_back(size);
  b.two_intersection = hist.size() == 2;
  // weight(x) + |x^perp & S| = n, checked on every projective message.
  b.identity_holds = true;
  for (const Vec& x : EnumeratePoints(f, code.k - 1)) {
    int weight = 0, on = 0;
    for (int j = 0; j < code.n; ++j) {
      Elt s = 0;
      for (int i = 0; i < code.k; ++i) s = f.add(s, f.mul(x[i], code.generator[i][j]));
      weight += s != 0;
      on += Dot(f, x, points[j]) == 0;
    }
    if (weight + on != code.n) b.identity_holds = false;
  }
  Graph g = LinearRepresentationGraph(f, code.k - 1, points);
  SrgReport r = SrgCheck(g);
  b.graph_srg = r.srg;
  b.graph_params = r.params;
  return b;
}

}  // namespace pgeom
