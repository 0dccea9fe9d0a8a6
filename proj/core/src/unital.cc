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

#include "pgeom/unital.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgeom {

namespace {

FieldPtr SquareField(uint64_t q) {
  FieldPtr small = Field::OfOrder(q);
  return Field::Get(small->p(), 2 * small->e());
}

Vec Normalized(const Field& f, Vec v) {
  if (!Normalize(f, &v)) throw std::logic_error("zero vector");
  return v;
}

// Absolute trace of an element of the subfield GF(q), q = 2^m.
Elt AbsoluteTrace(const Field& f, Elt x, int m) {
  Elt t = 0;
  for (int i = 0; i < m; ++i) {
    t = f.add(t, x);
    x = f.mul(x, x);
  }
  return t;
}

Unital FromAffine(UnitalKind kind, uint64_t q, FieldPtr f, std::set<Vec> finite) {
  Unital u;
  u.kind = kind;
  u.q = q;
  u.field = std::move(f);
  u.points.assign(finite.begin(), finite.end());
  u.points.push_back({0, 1, 0});
  return u;
}

}  // namespace

std::string UnitalKindName(UnitalKind k) {
  switch (k) {
    case UnitalKind::kClassical: return "classical";
    case UnitalKind::kBuekenhoutMetz: return "buekenhout-metz";
    case UnitalKind::kBuekenhoutTits: return "buekenhout-tits";
  }
  return "?";
}

UnitalKind ParseUnitalKind(const std::string& s) {
  if (s == "classical" || s == "hermitian") return UnitalKind::kClassical;
  if (s == "buekenhout-metz" || s == "bm") return UnitalKind::kBuekenhoutMetz;
  if (s == "buekenhout-tits" || s == "bt") return UnitalKind::kBuekenhoutTits;
  throw std::invalid_argument("unknown unital kind: " + s);
}

Unital ClassicalUnital(uint64_t q) {
  Unital u;
  u.kind = UnitalKind::kClassical;
  u.q = q;
  u.field = SquareField(q);
  const Field& f = *u.field;
  for (const Vec& v : EnumeratePoints(f, 2)) {
    Elt s = 0;
    for (Elt x : v) s = f.add(s, f.pow(x, q + 1));
    if (s == 0) u.points.push_back(v);
  }
  return u;
}

bool ValidBuekenhoutMetzParams(const Field& f, Elt alpha, Elt beta) {
  const uint64_t q = f.sqrt_q();
  const int m = f.e() / 2;
  if (alpha == 0) return false;
  const Elt bq = f.pow(beta, q);
  if (f.p() != 2) {
    const Elt d = f.sub(beta, bq);
    const Elt disc = f.add(f.mul(d, d), f.mul(f.from_int(4), f.pow(alpha, q + 1)));
    if (disc == 0) return false;
    // Nonsquare in GF(q): disc^{(q-1)/2} = -1.
    return f.pow(disc, (q - 1) / 2) != 1;
  }
  if (f.in_subfield(beta, m)) return false;
  const Elt s = f.add(beta, bq);
  const Elt x = f.div(f.pow(alpha, q + 1), f.mul(s, s));
  return AbsoluteTrace(f, x, m) == 0;
}

std::pair<Elt, Elt> LeastBuekenhoutMetzParams(const Field& f) {
  for (Elt a = 1; a < f.q(); ++a) {
    for (Elt b = 0; b < f.q(); ++b) {
      if (ValidBuekenhoutMetzParams(f, a, b)) return {a, b};
    }
  }
  throw std::logic_error("no valid Buekenhout-Metz parameters");
}

Unital BuekenhoutMetzUnital(uint64_t q, std::optional<std::pair<Elt, Elt>> params) {
  FieldPtr fp = SquareField(q);
  const Field& f = *fp;
  auto [alpha, beta] = params ? *params : LeastBuekenhoutMetzParams(f);
  if (!ValidBuekenhoutMetzParams(f, alpha, beta)) {
    throw std::invalid_argument("invalid Buekenhout-Metz parameters");
  }
  const std::vector<Elt> sub = f.subfield(f.e() / 2);
  std::set<Vec> finite;
  for (Elt x = 0; x < f.q(); ++x) {
    const Elt y = f.add(f.mul(alpha, f.mul(x, x)), f.mul(beta, f.pow(x, q + 1)));
    for (Elt z : sub) finite.insert(Normalized(f, {x, f.add(y, z), 1}));
  }
  Unital u = FromAffine(UnitalKind::kBuekenhoutMetz, q, fp, std::move(finite));
  u.alpha = alpha;
  u.beta = beta;
  return u;
}

Unital BuekenhoutTitsUnital(uint64_t q) {
  FieldPtr fp = SquareField(q);
  const Field& f = *fp;
  const int m = f.e() / 2;
  if (f.p() != 2 || m % 2 == 0 || m < 3) {
    throw std::invalid_argument("q must be 2^m with m odd and > 1");
  }
  const uint64_t delta = uint64_t{1} << ((m + 1) / 2);
  Elt beta = 0;
  for (Elt b = 0; b < f.q(); ++b) {
    if (!f.in_subfield(b, m)) {
      beta = b;
      break;
    }
  }
  const std::vector<Elt> sub = f.subfield(m);
  std::set<Vec> finite;
  for (Elt x0 : sub) {
    for (Elt x1 : sub) {
      const Elt t = f.add(f.add(f.pow(x0, delta + 2), f.mul(x0, x1)), f.pow(x1, delta));
      const Elt x = f.add(x0, f.mul(x1, beta));
      for (Elt z : sub) finite.insert(Normalized(f, {x, f.add(f.mul(t, beta), z), 1}));
    }
  }
  Unital u = FromAffine(UnitalKind::kBuekenhoutTits, q, fp, std::move(finite));
  u.beta = beta;
  return u;
}

DesignReport VerifyDesign(int64_t v, const std::vector<std::vector<int>>& blocks) {
  DesignReport rep;
  rep.v = v;
  rep.blocks = static_cast<int64_t>(blocks.size());
  rep.k = blocks.empty() ? 0 : static_cast<int64_t>(blocks.front().size());
  rep.uniform = true;
  for (const auto& b : blocks) rep.uniform = rep.uniform && static_cast<int64_t>(b.size()) == rep.k;
  const int64_t a = rep.k - 1;
  rep.unital_order = a >= 2 && v == a * a * a + 1;
  std::vector<uint8_t> cover(static_cast<size_t>(v * v), 0);
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.size(); ++i) {
      for (size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        if (b[i] < 0 || b[i] >= v) throw std::invalid_argument("point out of range");
        uint8_t& c = cover[b[i] * v + b[j]];
        if (c < 255) ++c;
      }
    }
  }
  for (int64_t x = 0; x < v; ++x) {
    for (int64_t y = x + 1; y < v; ++y) {
      if (cover[x * v + y] != 1) {
        if (rep.bad_count == 0) {
          rep.bad_a = static_cast<int>(x);
          rep.bad_b = static_cast<int>(y);
        }
        ++rep.bad_count;
      }
    }
  }
  rep.ok = rep.uniform && rep.bad_count == 0 && v >= 2;
  return rep;
}

UnitalReport VerifyUnital(const Field& f, const std::vector<Vec>& pts) {
  UnitalReport rep;
  const uint64_t q = f.sqrt_q();
  std::set<Vec> distinct;
  std::vector<Vec> norm;
  for (const Vec& v : pts) {
    Vec n = Normalized(f, v);
    distinct.insert(n);
    norm.push_back(std::move(n));
  }
  rep.size_ok = distinct.size() == pts.size() && pts.size() == q * q * q + 1;
  rep.lines_ok = true;
  for (const Vec& line : EnumeratePoints(f, 2)) {
    std::vector<int> meet;
    for (size_t i = 0; i < norm.size(); ++i) {
      if (Dot(f, line, norm[i]) == 0) meet.push_back(static_cast<int>(i));
    }
    if (meet.size() == 1) {
      ++rep.tangents;
    } else if (meet.size() == q + 1) {
      ++rep.secants;
      rep.blocks.push_back(std::move(meet));
    } else if (rep.lines_ok) {
      rep.lines_ok = false;
      rep.bad_line = line;
      rep.bad_line_count = static_cast<int64_t>(meet.size());
    }
  }
  rep.design = VerifyDesign(static_cast<int64_t>(norm.size()), rep.blocks);
  return rep;
}

ONanSearch FindDualONan(const PointGraph& g, bool exhaustive) {
  const Field& f = *g.field;
  const Graph& gr = g.graph;
  const size_t n = gr.n();
  auto collinear = [&](int a, int b, int c) {
    return Rank(f, {g.points[a], g.points[b], g.points[c]}) < 3;
  };
  ONanSearch out;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (!gr.adjacent(a, b)) continue;
      for (size_t c = b + 1; c < n; ++c) {
        if (!gr.adjacent(a, c) || !gr.adjacent(b, c)) continue;
        if (collinear(a, b, c)) continue;
        for (size_t d = c + 1; d < n; ++d) {
          if (!gr.adjacent(a, d) || !gr.adjacent(b, d) || !gr.adjacent(c, d)) continue;
          ++out.cliques_checked;
          if (collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d)) continue;
          if (!out.found) {
            out.found = true;
            out.witness = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
                           static_cast<int>(d)};
          }
          ++out.count;
          if (!exhaustive) return out;
        }
      }
    }
  }
  return out;
}

std::map<std::string, int64_t> GeometricCliqueCensus(const PointGraph& g,
                                                     int64_t node_budget) {
  const Field& f = *g.field;
  CliqueCensus c = MaximalCliqueCensus(g.graph, 1 << 30, node_budget);
  if (!c.complete) throw BudgetError("clique census exceeded its node budget");
  std::map<std::string, int64_t> out;
  for (const auto& [size, reps] : c.representatives) {
    for (const auto& cl : reps) {
      std::map<Subspace, int> occupancy;
      for (size_t i = 0; i < cl.size(); ++i) {
        for (size_t j = i + 1; j < cl.size(); ++j) {
          occupancy.emplace(SpanPoints(f, g.n, {g.points[cl[i]], g.points[cl[j]]}), 0);
        }
      }
      std::vector<int> pattern;
      for (auto& [line, count] : occupancy) {
        for (int v : cl) count += Contains(f, line, g.points[v]);
        pattern.push_back(count);
      }
      std::sort(pattern.begin(), pattern.end());
      std::string key = std::to_string(size) + ":";
      for (size_t i = 0; i < pattern.size(); ++i) {
        key += (i ? "," : "") + std::to_string(pattern[i]);
      }
      ++out[key];
    }
  }
  return out;
}

}  // namespace pgeom
