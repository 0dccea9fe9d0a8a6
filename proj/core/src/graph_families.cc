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

#include "pgeom/graph_families.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgeom {

namespace {

int64_t ToInt(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("parameter too large");
  return z.get_si();
}

int64_t IPow(int64_t b, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Bitset> PointSets(const PolarSpace& ps) {
  const auto& gp = ps.GeneratorPoints();
  std::vector<Bitset> sets;
  sets.reserve(gp.size());
  for (const auto& pts : gp) {
    Bitset b(ps.num_points());
    for (int32_t x : pts) b.set(x);
    sets.push_back(std::move(b));
  }
  return sets;
}

}  // namespace

Graph CollinearityGraph(const PolarSpace& ps) {
  const auto& perp = ps.PerpSets();
  Graph g(ps.num_points());
  for (size_t i = 0; i < ps.num_points(); ++i) {
    for (size_t j = perp[i].next(i + 1); j < ps.num_points(); j = perp[i].next(j + 1)) {
      g.AddEdge(i, j);
    }
  }
  return g;
}

SrgParams CollinearityParams(int d, int e2, uint64_t b) {
  if (d < 2) throw std::invalid_argument("collinearity graph needs rank >= 2");
  const mpz_class bb = static_cast<unsigned long>(b);
  const mpz_class v = PolarPointCount(d, e2, b);
  const mpz_class sub1 = PolarPointCount(d - 1, e2, b);
  const mpz_class sub2 = d >= 3 ? PolarPointCount(d - 2, e2, b) : mpz_class(0);
  SrgParams p;
  p.v = ToInt(v);
  p.k = ToInt(bb * sub1);
  p.lambda = ToInt(bb - 1 + bb * bb * sub2);
  p.mu = ToInt(sub1);
  return p;
}

mpz_class CollinearityMinEigenvalue(int d, int e2, uint64_t b) {
  return -HalfPow(b, 2 * d + e2 - 4) - 1;
}

Graph DualPolarGraph(const PolarSpace& ps, int i) {
  const int d = ps.d();
  if (i < 0 || i > d) throw std::invalid_argument("distance index out of range");
  const std::vector<Bitset> sets = PointSets(ps);
  const size_t n = sets.size();
  // Generators meeting in vector dimension d - i share theta_{d-i-1} points.
  const int64_t want = ToInt(Theta(d - i - 1, static_cast<unsigned long>(ps.base())));
  Graph g(n);
  if (i == 0) return g;
  for (size_t a = 0; a < n; ++a) {
    for (size_t c = a + 1; c < n; ++c) {
      if (static_cast<int64_t>(sets[a].and_count(sets[c])) == want) g.AddEdge(a, c);
    }
  }
  return g;
}

std::vector<mpz_class> DistanceGraphEigenvalues(int d, int e2, uint64_t b, int i) {
  const mpz_class bb = static_cast<unsigned long>(b);
  std::vector<mpz_class> out;
  for (int j = 0; j <= d; ++j) {
    mpz_class s = 0;
    for (int u = std::max(0, j - i); u <= std::min(d - i, j); ++u) {
      const int x = u + i - j;
      mpz_class term = GaussianBinomial(d - j, d - i - u, bb) * GaussianBinomial(j, u, bb);
      term *= HalfPow(b, x * (x + e2 - 1));
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), bb.get_mpz_t(), (j - u) * (j - u - 1) / 2);
      term *= p;
      if ((j + u) % 2 != 0) term = -term;
      s += term;
    }
    out.push_back(s);
  }
  return out;
}

int32_t PointGraph::IndexOf(const Vec& v) const {
  ProjectiveSpace pg(n, field);
  const int64_t a = pg.index_of(v);
  auto it = std::lower_bound(ambient.begin(), ambient.end(), a);
  if (it == ambient.end() || *it != a) return -1;
  return static_cast<int32_t>(it - ambient.begin());
}

PointGraph NuGraph(int n, uint64_t q2) {
  PointGraph out;
  out.field = Field::OfOrder(q2);
  out.n = n;
  const Field& f = *out.field;
  ProjectiveSpace pg(n, out.field);
  auto herm = [&](const Vec& x, const Vec& y) {
    Elt s = 0;
    for (int i = 0; i <= n; ++i) s = f.add(s, f.mul(x[i], f.conj(y[i])));
    return s;
  };
  std::vector<Elt> self;
  for (size_t i = 0; i < pg.num_points(); ++i) {
    Vec v = pg.point(i);
    const Elt h = herm(v, v);
    if (h != 0) {
      out.points.push_back(std::move(v));
      out.ambient.push_back(static_cast<int64_t>(i));
      self.push_back(h);
    }
  }
  const size_t m = out.points.size();
  out.graph = Graph(m);
  const int r = static_cast<int>(f.sqrt_q());
  for (size_t a = 0; a < m; ++a) {
    for (size_t c = a + 1; c < m; ++c) {
      // The line is tangent iff the restricted Gram matrix is singular.
      const Elt h = herm(out.points[a], out.points[c]);
      if (f.mul(self[a], self[c]) == f.pow(h, r + 1)) out.graph.AddEdge(a, c);
    }
  }
  return out;
}

SrgParams NuParams(int n, uint64_t q) {
  const int64_t eps = (n + 1) % 2 == 0 ? 1 : -1;
  const int64_t qq = static_cast<int64_t>(q);
  SrgParams p;
  p.v = IPow(qq, n) * (IPow(qq, n + 1) - eps) / (qq + 1);
  p.k = (IPow(qq, n) + eps) * (IPow(qq, n - 1) - eps);
  p.lambda = IPow(qq, 2 * n - 3) * (qq + 1) - eps * IPow(qq, n - 1) * (qq - 1) - 2;
  p.mu = IPow(qq, n - 2) * (qq + 1) * (IPow(qq, n - 1) - eps);
  return p;
}

Graph HemisystemLineGraph(const PolarSpace& ps, const std::vector<int>& system) {
  const std::vector<Bitset> sets = PointSets(ps);
  std::vector<char> in(sets.size(), 0);
  for (int s : system) in.at(s) = 1;
  std::vector<int> rest;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (!in[i]) rest.push_back(static_cast<int>(i));
  }
  Graph g(rest.size());
  for (size_t a = 0; a < rest.size(); ++a) {
    for (size_t c = a + 1; c < rest.size(); ++c) {
      if (sets[rest[a]].and_count(sets[rest[c]]) > 0) g.AddEdge(a, c);
    }
  }
  return g;
}

SrgParams ThasLineGraphParams(int64_t q, int64_t m) {
  return {(q * q * q + 1) * (q + 1 - m), (q * q + 1) * (q - m), q - 1 - m,
          q * q + 1 - m * (q + 1)};
}

Graph LinearRepresentationGraph(const Field& f, int n, const std::vector<Vec>& set) {
  const int len = n + 1;
  const uint64_t q = f.q();
  uint64_t v = 1;
  for (int i = 0; i < len; ++i) v *= q;
  if (v > 4'000'000) throw BudgetError("linear representation graph too large");
  auto decode = [&](uint64_t code) {
    Vec x(len);
    for (int i = len - 1; i >= 0; --i) {
      x[i] = static_cast<Elt>(code % q);
      code /= q;
    }
    return x;
  };
  auto encode = [&](const Vec& x) {
    uint64_t c = 0;
    for (int i = 0; i < len; ++i) c = c * q + x[i];
    return c;
  };
  // All nonzero multiples of the directions.
  std::set<Vec> dirs;
  for (const Vec& a : set) {
    for (Elt l = 1; l < q; ++l) dirs.insert(VecScale(f, l, a));
  }
  Graph g(v);
  for (uint64_t c = 0; c < v; ++c) {
    const Vec x = decode(c);
    for (const Vec& dvec : dirs) {
      const uint64_t y = encode(VecAdd(f, x, dvec));
      if (y > c) g.AddEdge(c, y);
    }
  }
  return g;
}

SrgParams LinearRepresentationParams(int64_t q) {
  // Eigenvalues r = (q^2-1)/2 and s = r - q^3; lambda = mu + r + s.
  return {IPow(q, 6), (IPow(q, 3) + 1) * (q * q - 1) / 2,
          (IPow(q, 4) - 4 * IPow(q, 3) + 4 * q * q - 5) / 4, (IPow(q, 4) - 1) / 4};
}

PointGraph UnitalTangentGraph(uint64_t q2, const std::vector<Vec>& unital) {
  PointGraph out;
  out.field = Field::OfOrder(q2);
  out.n = 2;
  const Field& f = *out.field;
  ProjectiveSpace pg(2, out.field);
  std::vector<char> on(pg.num_points(), 0);
  for (const Vec& u : unital) {
    const int64_t a = pg.index_of(u);
    if (a < 0) throw std::invalid_argument("zero vector in unital");
    on[a] = 1;
  }
  std::vector<int32_t> vertex_of(pg.num_points(), -1);
  for (size_t i = 0; i < pg.num_points(); ++i) {
    if (!on[i]) {
      vertex_of[i] = static_cast<int32_t>(out.points.size());
      out.points.push_back(pg.point(i));
      out.ambient.push_back(static_cast<int64_t>(i));
    }
  }
  out.graph = Graph(out.points.size());
  // Lines are the kernels of the points of the dual plane.
  for (size_t li = 0; li < pg.num_points(); ++li) {
    const Subspace line = NullSpace(f, 2, {pg.point(li)});
    const std::vector<int32_t> pts = pg.PointsOf(line);
    int hits = 0;
    for (int32_t p : pts) hits += on[p];
    if (hits != 1) continue;
    for (size_t a = 0; a < pts.size(); ++a) {
      if (on[pts[a]]) continue;
      for (size_t c = a + 1; c < pts.size(); ++c) {
        if (!on[pts[c]]) out.graph.AddEdge(vertex_of[pts[a]], vertex_of[pts[c]]);
      }
    }
  }
  return out;
}

SrgParams UnitalGraphParams(int64_t q) {
  return {q * q * (q * q - q + 1), (q + 1) * (q * q - 1), 2 * (q * q - 1),
          (q + 1) * (q + 1)};
}

Graph BlockGraph(const std::vector<std::vector<int>>& blocks) {
  int max_pt = -1;
  for (const auto& b : blocks) {
    for (int x : b) max_pt = std::max(max_pt, x);
  }
  std::vector<Bitset> sets;
  for (const auto& b : blocks) {
    Bitset s(max_pt + 1);
    for (int x : b) s.set(x);
    sets.push_back(std::move(s));
  }
  Graph g(blocks.size());
  for (size_t a = 0; a < sets.size(); ++a) {
    for (size_t c = a + 1; c < sets.size(); ++c) {
      if (sets[a].and_count(sets[c]) > 0) g.AddEdge(a, c);
    }
  }
  return g;
}

}  // namespace pgeom
