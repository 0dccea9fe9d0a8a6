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

#include "pgeom/switching.h"

#include <algorithm>
#include <set>

namespace pgeom {

namespace {

// Standard Hermitian form sum x_i y_i^q of NU(n+1, q^2).
Elt Herm(const Field& f, const Vec& x, const Vec& y) {
  Elt s = 0;
  for (size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], f.conj(y[i])));
  return s;
}

// Rank of the restriction of the Hermitian form to <rows>.
int FormRank(const Field& f, const std::vector<Vec>& rows) {
  Mat m(rows.size(), Vec(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows.size(); ++j) m[i][j] = Herm(f, rows[i], rows[j]);
  }
  return Rank(f, m);
}

Bitset MemberSet(size_t n, const std::vector<int>& v) {
  Bitset b(n);
  for (int x : v) b.set(x);
  return b;
}

std::vector<int> Members(const Bitset& b) {
  std::vector<int> out;
  for (size_t i = b.next(0); i < b.size(); i = b.next(i + 1)) out.push_back(static_cast<int>(i));
  return out;
}

int64_t IPow(int64_t b, int k) {
  int64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

}  // namespace

WqhReport CheckWqh(const Graph& g, const std::vector<int>& l1, const std::vector<int>& l2) {
  WqhReport rep;
  const size_t n = g.n();
  const Bitset b1 = MemberSet(n, l1), b2 = MemberSet(n, l2);
  Bitset both = b1;
  both |= b2;
  if (l1.empty() || l1.size() != l2.size() || b1.and_count(b2) != 0 ||
      b1.count() != l1.size() || b2.count() != l2.size()) {
    rep.reason = "parts must be disjoint, non-empty and of equal size";
    return rep;
  }
  rep.parts_ok = true;

  auto regular = [&](const std::vector<int>& part, const Bitset& within, int64_t* degree) {
    *degree = -1;
    for (int v : part) {
      const int64_t d = static_cast<int64_t>(g.row(v).and_count(within));
      if (*degree < 0) *degree = d;
      if (d != *degree) {
        rep.witness = v;
        return false;
      }
    }
    return true;
  };
  std::vector<int> all = l1;
  all.insert(all.end(), l2.begin(), l2.end());
  int64_t d1, d2, d12;
  if (!regular(l1, b1, &d1) || !regular(l2, b2, &d2) || !regular(all, both, &d12)) {
    rep.reason = "an induced subgraph is not regular";
    return rep;
  }
  if (d1 != d2) {
    rep.reason = "the two parts induce different degrees";
    rep.witness = l2.front();
    return rep;
  }
  rep.regular_ok = true;

  const size_t m = l1.size();
  for (size_t x = 0; x < n; ++x) {
    if (both.test(x)) continue;
    const size_t c1 = g.row(x).and_count(b1), c2 = g.row(x).and_count(b2);
    if (c1 == c2) continue;
    if (c1 == m && c2 == 0) {
      rep.to_l1.push_back(static_cast<int>(x));
    } else if (c2 == m && c1 == 0) {
      rep.to_l2.push_back(static_cast<int>(x));
    } else {
      rep.reason = "an outside vertex is neither balanced nor aligned with one part";
      rep.witness = static_cast<int>(x);
      rep.to_l1.clear();
      rep.to_l2.clear();
      return rep;
    }
  }
  rep.outside_ok = true;
  return rep;
}

Graph WqhSwitch(const Graph& g, const std::vector<int>& l1, const std::vector<int>& l2,
                WqhReport* report) {
  WqhReport rep = CheckWqh(g, l1, l2);
  if (report) *report = rep;
  if (!rep.ok()) throw SwitchingError("switching hypotheses fail: " + rep.reason, rep.witness);
  Graph out = g;
  for (const auto* side : {&rep.to_l1, &rep.to_l2}) {
    for (int x : *side) {
      for (int v : l1) out.SetEdge(x, v, !g.adjacent(x, v));
      for (int v : l2) out.SetEdge(x, v, !g.adjacent(x, v));
    }
  }
  return out;
}

std::string PlaneTypeName(PlaneType t) { return t == PlaneType::kPencil ? "pencil" : "line"; }

PlaneType ParsePlaneType(const std::string& s) {
  if (s == "pencil") return PlaneType::kPencil;
  if (s == "line") return PlaneType::kLine;
  throw std::invalid_argument("plane type must be pencil or line: " + s);
}

SwitchSizes ExpectedSwitchSizes(uint64_t q, PlaneType type) {
  const int64_t Q = static_cast<int64_t>(q);
  if (type == PlaneType::kPencil) {
    return {Q * Q * (Q + 1) * (Q + 1), Q * Q * (Q + 1) * (Q * Q - Q - 2)};
  }
  return {2 * Q * Q * (Q * Q - 1), Q * Q * Q * (Q * Q - Q - 1)};
}

SwitchedNu BuildSwitchedNu(int n, uint64_t q, PlaneType type) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  SwitchedNu out;
  out.base = NuGraph(n, q * q);
  const Field& f = *out.base.field;
  const Graph& g = out.base.graph;
  SwitchingConfig& c = out.config;
  c.n = n;
  c.q = q;
  c.type = type;

  for (const Vec& v : EnumeratePoints(f, n)) {
    if (Herm(f, v, v) == 0) {
      c.p = v;
      break;
    }
  }
  Vec pc(c.p.size());
  for (size_t i = 0; i < pc.size(); ++i) pc[i] = f.conj(c.p[i]);
  const Subspace pperp = NullSpace(f, n, {pc});

  // Tangent lines at P are the lines PQ with Q in P^perp off the variety.
  std::set<Subspace> tangents;
  for (const Vec& x : SubspacePoints(f, pperp)) {
    if (Herm(f, x, x) != 0) tangents.insert(SpanPoints(f, n, {c.p, x}));
  }
  const std::vector<Subspace> lines(tangents.begin(), tangents.end());
  const int want = type == PlaneType::kPencil ? 2 : 1;
  bool found = false;
  for (size_t i = 0; i < lines.size() && !found; ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const Subspace plane = Span(f, lines[i], lines[j]);
      if (FormRank(f, plane.rows) == want) {
        c.line1 = lines[i];
        c.line2 = lines[j];
        found = true;
        break;
      }
    }
  }
  if (!found) throw std::invalid_argument("no tangent pair of the requested type");

  auto vertices = [&](const Subspace& line) {
    std::vector<int> v;
    for (const Vec& x : SubspacePoints(f, line)) {
      if (Herm(f, x, x) != 0) v.push_back(out.base.IndexOf(x));
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  c.l1 = vertices(c.line1);
  c.l2 = vertices(c.line2);

  const size_t nv = g.n();
  Bitset n1(nv), n2(nv);
  for (size_t i = 0; i < nv; ++i) {
    n1.set(i);
    n2.set(i);
  }
  for (int u : c.l1) n1 &= g.row(u);
  for (int u : c.l2) n2 &= g.row(u);
  const Bitset b1 = MemberSet(nv, c.l1), b2 = MemberSet(nv, c.l2);
  Bitset a = n1;
  a &= n2;
  Bitset a1 = n1, a2 = n2;
  a1.subtract(a);
  a1.subtract(b2);
  a2.subtract(a);
  a2.subtract(b1);
  c.a = Members(a);
  c.a1 = Members(a1);
  c.a2 = Members(a2);

  if (n == 4) {
    const SwitchSizes s = ExpectedSwitchSizes(q, type);
    c.sizes_checked = true;
    c.sizes_ok = static_cast<int64_t>(c.a.size()) == s.a &&
                 static_cast<int64_t>(c.a1.size()) == s.a1 &&
                 static_cast<int64_t>(c.a2.size()) == s.a1;
  }
  c.in_p_perp = true;
  for (const auto* set : {&c.a, &c.a1, &c.a2}) {
    for (int v : *set) c.in_p_perp = c.in_p_perp && Herm(f, out.base.points[v], c.p) == 0;
  }

  out.switched = WqhSwitch(g, c.l1, c.l2, &c.wqh);

  // The same graph from the explicit neighbourhood rules.
  Graph rules = g;
  for (int u : c.l1) {
    for (int x : c.a1) rules.RemoveEdge(u, x);
    for (int x : c.a2) rules.AddEdge(u, x);
  }
  for (int u : c.l2) {
    for (int x : c.a2) rules.RemoveEdge(u, x);
    for (int x : c.a1) rules.AddEdge(u, x);
  }
  c.matches_rules = rules == out.switched;
  return out;
}

std::string TriangleKindName(TriangleKind k) {
  switch (k) {
    case TriangleKind::kTangentOnSubline: return "tangent-line-T-on-subline";
    case TriangleKind::kTangentOffSubline: return "tangent-line-T-off-subline";
    case TriangleKind::kPlaneLine: return "plane-meeting-in-line";
    case TriangleKind::kPlaneCurve: return "plane-meeting-in-curve";
  }
  return "?";
}

int64_t TriangleFormula(uint64_t q, TriangleKind k) {
  const int64_t Q = static_cast<int64_t>(q);
  switch (k) {
    case TriangleKind::kTangentOnSubline: return IPow(Q, 5) + IPow(Q, 4) - IPow(Q, 3) - 3;
    case TriangleKind::kTangentOffSubline: return 2 * IPow(Q, 5) + IPow(Q, 4) - IPow(Q, 3) - 3;
    case TriangleKind::kPlaneLine: return IPow(Q, 5) + 3 * IPow(Q, 4) - 3;
    case TriangleKind::kPlaneCurve:
      return IPow(Q, 5) + 2 * IPow(Q, 4) + 3 * IPow(Q, 3) - 2 * Q * Q - Q - 3;
  }
  return 0;
}

namespace {

// Coordinates (c, d) of x = c a + d b for independent a, b.
std::pair<Elt, Elt> Solve2(const Field& f, const Vec& a, const Vec& b, const Vec& x) {
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) {
      const Elt det = f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
      if (det == 0) continue;
      const Elt c = f.div(f.sub(f.mul(x[i], b[j]), f.mul(x[j], b[i])), det);
      const Elt d = f.div(f.sub(f.mul(a[i], x[j]), f.mul(a[j], x[i])), det);
      return {c, d};
    }
  }
  throw std::logic_error("dependent vectors");
}

// Whether the point of the variety on the tangent line <p1, p2> lies on
// the Baer subline through p1, p2, p3.
bool TangentPointOnSubline(const Field& f, const Vec& p1, const Vec& p2, const Vec& p3) {
  const Elt h11 = Herm(f, p1, p1), h21 = Herm(f, p2, p1);
  const Elt h12 = Herm(f, p1, p2), h22 = Herm(f, p2, p2);
  Elt lambda = h21, mu = f.neg(h11);
  if (lambda == 0 && mu == 0) {
    lambda = h22;
    mu = f.neg(h12);
  }
  auto [a, b] = Solve2(f, p1, p2, p3);
  // With p1' = a p1 and p2' = b p2 the subline is {x p1' + y p2'}, x/y in GF(q).
  const Elt ratio = f.div(f.mul(lambda, b), f.mul(mu, a));
  return f.conj(ratio) == ratio;
}

TriangleKind Classify(const Field& f, const Vec& p1, const Vec& p2, const Vec& p3) {
  if (Rank(f, {p1, p2, p3}) == 2) {
    return TangentPointOnSubline(f, p1, p2, p3) ? TriangleKind::kTangentOnSubline
                                                : TriangleKind::kTangentOffSubline;
  }
  return FormRank(f, {p1, p2, p3}) == 1 ? TriangleKind::kPlaneLine : TriangleKind::kPlaneCurve;
}

}  // namespace

TriangleCheck CheckTriangleFormulas(const PointGraph& nu, uint64_t q, int64_t stride) {
  if (nu.n != 4) throw std::invalid_argument("the closed values are for NU(5, q^2)");
  if (stride < 1) throw std::invalid_argument("stride must be positive");
  const Field& f = *nu.field;
  const Graph& g = nu.graph;
  TriangleCheck out;
  int64_t index = 0;
  const size_t n = g.n();
  for (size_t u = 0; u < n; ++u) {
    const Bitset& ru = g.row(u);
    for (size_t v = ru.next(u + 1); v < n; v = ru.next(v + 1)) {
      Bitset both = ru;
      both &= g.row(v);
      for (size_t w = both.next(v + 1); w < n; w = both.next(w + 1)) {
        if (index++ % stride != 0) continue;
        const TriangleKind k = Classify(f, nu.points[u], nu.points[v], nu.points[w]);
        const int64_t value = static_cast<int64_t>(both.and_count(g.row(w)));
        ++out.count[k];
        ++out.values[k][value];
        if (value != TriangleFormula(q, k)) ++out.mismatches;
        ++out.triangles;
      }
    }
  }
  out.complete = stride == 1;
  return out;
}

SwitchedTriangles SwitchedTriangleValues(const SwitchedNu& s, int64_t max_triangles) {
  const Field& f = *s.base.field;
  const SwitchingConfig& c = s.config;
  const Graph& g = s.base.graph;
  const Graph& h = s.switched;
  SwitchedTriangles out;
  const int64_t q = static_cast<int64_t>(c.q);
  out.expected = 2 * IPow(q, 5) + IPow(q, 3) - 3;
  for (int u : c.l1) {
    std::map<Subspace, std::vector<int>> by_line;
    for (int w : c.a) {
      if (!g.adjacent(u, w)) continue;
      by_line[SpanPoints(f, c.n, {s.base.points[u], s.base.points[w]})].push_back(w);
    }
    for (const auto& [line, pts] : by_line) {
      for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
          const Vec& pu = s.base.points[u];
          if (c.type == PlaneType::kPencil &&
              TangentPointOnSubline(f, pu, s.base.points[pts[i]], s.base.points[pts[j]])) {
            continue;
          }
          Bitset common = h.row(u);
          common &= h.row(pts[i]);
          ++out.values[static_cast<int64_t>(common.and_count(h.row(pts[j])))];
          if (++out.triangles == max_triangles) return out;
        }
      }
    }
  }
  return out;
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "verified";
    case Verdict::kRefuted: return "refuted";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kBudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

CospectralCertificate CertifyCospectralNonIsomorphic(const Graph& g, const Graph& h,
                                                     int64_t max_triangles) {
  CospectralCertificate cert;
  cert.first = SrgCheck(g);
  cert.second = SrgCheck(h);
  cert.same_parameters = cert.first.srg && cert.second.srg &&
                         cert.first.params == cert.second.params;
  if (!cert.same_parameters) {
    cert.verdict = Verdict::kRefuted;
    return cert;
  }
  try {
    cert.census_first = TripleCensus(g, max_triangles);
    cert.census_second = TripleCensus(h, max_triangles);
    cert.census_done = true;
  } catch (const BudgetError&) {
    cert.verdict = Verdict::kBudgetExhausted;
    return cert;
  }
  cert.census_differs = cert.census_first != cert.census_second;
  cert.verdict = cert.census_differs ? Verdict::kVerified : Verdict::kInconclusive;
  return cert;
}

}  // namespace pgeom
