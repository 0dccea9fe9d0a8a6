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

#include "pgeom/ovoids.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pgeom {

namespace {

Vec Normalized(const Field& f, Vec v) {
  if (!Normalize(f, &v)) throw std::logic_error("zero vector");
  return v;
}

// Elements of the subfield of degree m, keyed by their index in `big`,
// mapped to their index in `small`.
std::map<Elt, Elt> SubfieldTable(const Field& big, const Field& small) {
  std::map<Elt, Elt> t;
  for (Elt s = 0; s < small.q(); ++s) t[big.embed(small, s)] = s;
  return t;
}

Form AlternatingForm(FieldPtr f, int n, const std::vector<std::pair<int, int>>& pairs) {
  Form form;
  form.kind = FormKind::kAlternating;
  form.n = n;
  form.field = f;
  form.gram.assign(n + 1, Vec(n + 1, 0));
  for (auto [i, j] : pairs) {
    form.gram[i][j] = 1;
    form.gram[j][i] = f->neg(1);
  }
  return form;
}

}  // namespace

PartialOvoidReport VerifyPartialOvoid(const PolarSpace& ps, const std::vector<Vec>& pts,
                                      bool check_maximal, bool check_generators) {
  PartialOvoidReport rep;
  std::vector<int32_t> idx;
  std::vector<char> in(ps.num_points(), 0);
  rep.points_ok = true;
  for (const Vec& v : pts) {
    const int32_t i = ps.index_of(v);
    if (i < 0 || in[i]) {
      rep.points_ok = false;
      return rep;
    }
    in[i] = 1;
    idx.push_back(i);
  }
  rep.partial_ovoid = true;
  for (size_t a = 0; a < pts.size() && rep.partial_ovoid; ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      ++rep.pairs_checked;
      if (ps.Beta(pts[a], pts[b]) == 0) {
        rep.partial_ovoid = false;
        rep.bad_a = static_cast<int>(a);
        rep.bad_b = static_cast<int>(b);
        break;
      }
    }
  }
  if (check_generators) {
    rep.generators_checked = true;
    rep.generator_check_ok = true;
    const auto& gp = ps.GeneratorPoints();
    for (size_t g = 0; g < gp.size(); ++g) {
      int hits = 0;
      for (int32_t p : gp[g]) hits += in[p];
      if (hits > 1) {
        rep.generator_check_ok = false;
        rep.bad_generator = static_cast<int>(g);
        break;
      }
    }
  }
  if (check_maximal) {
    rep.maximality_checked = true;
    for (size_t i = 0; i < ps.num_points(); ++i) {
      if (in[i]) continue;
      bool blocked = false;
      for (const Vec& m : pts) {
        if (ps.Beta(ps.point(i), m) == 0) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        if (rep.extension_count == 0) rep.extension = ps.point(i);
        ++rep.extension_count;
      }
    }
    rep.maximal = rep.extension_count == 0;
  }
  return rep;
}

TwistedCubicOvoid BuildTwistedCubicOvoid(uint64_t q) {
  FieldPtr fp = Field::OfOrder(q);
  const Field& f = *fp;
  if (f.e() % 2 != 0 || f.p() == 2 || f.p() == 3) {
    throw std::invalid_argument("q must be an odd square prime to 3");
  }
  const uint64_t s = f.sqrt_q();
  const int m = f.e() / 2;
  TwistedCubicOvoid out;
  out.eps = (s % 3 == 1) ? 1 : -1;
  out.space = PolarSpace::FromForm(AlternatingForm(fp, 3, {{0, 3}, {1, 2}}));

  const Elt three = f.from_int(3);
  for (Elt t = 0; t < q; ++t) {
    out.cubic.push_back({1, f.neg(f.mul(three, t)), f.mul(t, t), f.pow(t, 3)});
  }
  out.cubic.push_back({0, 0, 0, 1});

  out.x = 0;
  for (Elt x = 1; x < q; ++x) {
    if (f.in_subfield(x, m) || f.is_cube(x)) continue;
    if (f.pow(x, s + 1) == 1) continue;
    out.x = x;
    break;
  }
  if (out.x == 0) throw std::logic_error("no admissible base point");
  const Elt x = out.x;

  // Parameters: GF(sqrt q) for eps = 1; for eps = -1 all of GF(q) subject
  // to the two conjugate relations.
  std::vector<Elt> dom;
  if (out.eps == 1) {
    dom = f.subfield(m);
  } else {
    for (Elt a = 0; a < q; ++a) dom.push_back(a);
  }
  auto image = [&](Elt a, Elt b, Elt c, Elt d) {
    const Elt a2 = f.mul(a, a), b2 = f.mul(b, b), c2 = f.mul(c, c), d2 = f.mul(d, d);
    Vec v(4);
    v[0] = f.add(f.mul(a2, a), f.mul(x, f.mul(b2, b)));
    v[1] = f.neg(f.mul(three, f.add(f.mul(a2, c), f.mul(x, f.mul(b2, d)))));
    v[2] = f.add(f.mul(a, c2), f.mul(x, f.mul(b, d2)));
    v[3] = f.add(f.mul(c2, c), f.mul(x, f.mul(d2, d)));
    return Normalized(f, v);
  };
  const Vec base = Normalized(f, {1, 0, 0, x});
  std::set<Vec> orbit;
  int64_t count = 0, fixing = 0;
  for (Elt a : dom) {
    for (Elt b : dom) {
      for (Elt c : dom) {
        for (Elt d : dom) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
          if (out.eps == -1) {
            if (f.mul(a, f.conj(b)) != f.mul(c, f.conj(d))) continue;
            const Elt lhs = f.add(f.pow(a, s + 1), f.pow(b, s + 1));
            if (lhs != f.add(f.pow(c, s + 1), f.pow(d, s + 1))) continue;
          }
          ++count;
          Vec v = image(a, b, c, d);
          if (v == base) ++fixing;
          orbit.insert(std::move(v));
        }
      }
    }
  }
  const int64_t scalars = static_cast<int64_t>(dom.size()) - 1;
  out.group_order = count / scalars;
  out.stabilizer_order = fixing / scalars;
  out.orbit.assign(orbit.begin(), orbit.end());
  out.points = out.cubic;
  out.points.insert(out.points.end(), out.orbit.begin(), out.orbit.end());
  return out;
}

CyclicOvoidW5 BuildCyclicOvoidW5(uint64_t q, uint64_t c_index) {
  FieldPtr small = Field::OfOrder(q);
  FieldPtr big = Field::Get(small->p(), 3 * small->e());
  const Field& F = *big;
  const int m = small->e();
  if (c_index == 0 || c_index >= q) throw std::invalid_argument("c must be a nonzero element");
  CyclicOvoidW5 out;
  out.q = q;
  out.c = static_cast<Elt>(c_index);
  const Elt c = F.embed(*small, out.c);

  auto lift = [&](Elt a, Elt b) {
    return Vec{a, F.pow(a, q), F.pow(a, q * q), F.pow(b, q * q), F.pow(b, q), b};
  };
  auto beta = [&](const Vec& u, const Vec& v) {
    Elt s = 0;
    for (int i = 0; i < 3; ++i) {
      s = F.add(s, F.mul(u[i], v[5 - i]));
      s = F.sub(s, F.mul(u[5 - i], v[i]));
    }
    return s;
  };

  // Gram matrix of the induced GF(q)-form on the basis (w^i, 0), (0, w^i).
  const auto table = SubfieldTable(F, *small);
  std::vector<Vec> basis;
  for (int j = 0; j < 6; ++j) {
    const Elt w = F.pow(F.primitive(), j % 3);
    basis.push_back(j < 3 ? lift(w, 0) : lift(0, w));
  }
  Form form;
  form.kind = FormKind::kAlternating;
  form.n = 5;
  form.field = small;
  form.gram.assign(6, Vec(6, 0));
  out.form_in_subfield = true;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const Elt g = beta(basis[i], basis[j]);
      auto it = table.find(g);
      if (it == table.end()) {
        out.form_in_subfield = false;
        continue;
      }
      form.gram[i][j] = it->second;
    }
  }
  if (!out.form_in_subfield) throw std::logic_error("form leaves the subfield");
  out.space = PolarSpace::FromForm(form);

  FieldReduction red(2, big, small);
  for (Elt xv = 1; xv < F.q(); ++xv) {
    if (F.norm(xv, m) != 1) continue;
    const Elt b = F.div(c, xv);
    out.big_points.push_back(lift(xv, b));
    out.points.push_back(Normalized(*small, red.Flatten({xv, b})));
  }
  out.big_pairs_ok = true;
  for (size_t i = 0; i < out.big_points.size() && out.big_pairs_ok; ++i) {
    for (size_t j = i + 1; j < out.big_points.size(); ++j) {
      if (beta(out.big_points[i], out.big_points[j]) == 0) {
        out.big_pairs_ok = false;
        break;
      }
    }
  }
  return out;
}

SherkSet SherkSurface(const Field& big, int m, Elt alpha, Elt beta, Elt gamma, Elt delta) {
  if (big.e() != 3 * m) throw std::invalid_argument("field must be a cubic extension");
  uint64_t q = 1;
  for (int i = 0; i < m; ++i) q *= big.p();
  const Elt bq2 = big.pow(beta, q * q);
  SherkSet out;
  for (Elt x = 0; x < big.q(); ++x) {
    Elt v = big.mul(alpha, big.norm(x, m));
    v = big.add(v, big.trace(big.mul(bq2, big.pow(x, q + 1)), m));
    v = big.add(v, big.trace(big.mul(gamma, x), m));
    v = big.add(v, delta);
    if (v == 0) out.finite.push_back(x);
  }
  out.infinity = alpha == 0;
  return out;
}

Elt LeastArtinSchreierIrreducible(const Field& f) {
  for (Elt d = 0; d < f.q(); ++d) {
    bool root = false;
    for (Elt x = 0; x < f.q() && !root; ++x) {
      root = f.add(f.add(f.mul(x, x), x), d) == 0;
    }
    if (!root) return d;
  }
  throw std::logic_error("no irreducible quadratic");
}

EvenOvoidW5 BuildEvenOvoidW5(uint64_t q) {
  FieldPtr fp = Field::OfOrder(q);
  const Field& f = *fp;
  if (f.p() != 2) throw std::invalid_argument("q must be even");
  EvenOvoidW5 out;
  out.space = PolarSpace::FromForm(AlternatingForm(fp, 5, {{0, 1}, {2, 3}, {4, 5}}));
  out.delta1 = out.delta2 = LeastArtinSchreierIrreducible(f);

  for (Elt c = 0; c < q; ++c) {
    for (Elt d = 0; d < q; ++d) {
      const Elt s = f.add(f.add(f.mul(c, c), f.mul(c, d)), f.mul(out.delta2, f.mul(d, d)));
      Elt r = 0;
      f.sqrt(s, &r);
      out.a.push_back({1, s, r, 0, c, d});
    }
  }
  out.a.push_back({0, 1, 0, 0, 0, 0});

  for (const Vec& p : EnumeratePoints(f, 3)) {
    Elt v = f.mul(p[0], p[1]);
    v = f.add(v, f.mul(p[2], p[2]));
    v = f.add(v, f.mul(p[2], p[3]));
    v = f.add(v, f.mul(out.delta1, f.mul(p[3], p[3])));
    if (v != 0) continue;
    out.e1.push_back({p[0], p[1], p[2], p[3], 0, 0});
  }
  std::set<Vec> seen;
  for (const Vec& v : out.a) {
    if (seen.insert(v).second) out.points.push_back(v);
  }
  for (const Vec& v : out.e1) {
    if (v[3] == 0) continue;  // sigma
    if (seen.insert(v).second) out.points.push_back(v);
  }
  return out;
}

TangentSet BuildTangentSet(uint64_t q, std::vector<Vec> base) {
  FieldPtr small = Field::OfOrder(q);
  FieldPtr bigp = Field::Get(small->p(), 2 * small->e());
  const Field& F = *bigp;
  const Field& f = *small;
  const int m = small->e();
  TangentSet out;

  for (Elt i = 1; i < F.q(); ++i) {
    if (F.add(i, F.conj(i)) == 0) {
      out.iota = i;
      break;
    }
  }
  if (f.p() != 2) {
    for (Elt x = 0; x < F.q(); ++x) {
      if (F.add(x, F.conj(x)) == 0) out.xi.push_back(x);
    }
  } else {
    // Trace-zero elements all lie in GF(q) here; use coset representatives.
    for (Elt x = 0; x < F.q() && out.xi.size() < q; ++x) {
      bool fresh = true;
      for (Elt y : out.xi) fresh = fresh && !F.in_subfield(F.sub(x, y), m);
      if (fresh) out.xi.push_back(x);
    }
  }

  Form h;
  h.kind = FormKind::kHermitian;
  h.n = 3;
  h.field = bigp;
  h.gram.assign(4, Vec(4, 0));
  const Elt ni = F.neg(out.iota);
  h.gram[0][2] = out.iota;
  h.gram[2][0] = ni;
  h.gram[1][3] = out.iota;
  h.gram[3][1] = ni;
  h.gram[3][3] = F.mul(out.iota, F.sub(F.conj(out.xi[0]), out.xi[0]));
  out.herm = PolarSpace::FromForm(h);

  if (base.empty()) {
    PolarPtr w = PolarSpace::FromForm(AlternatingForm(small, 3, {{0, 2}, {1, 3}}));
    if (f.p() == 2) {
      const Elt d = LeastArtinSchreierIrreducible(f);
      for (const Vec& a : EnumeratePoints(f, 3)) {
        Elt v = f.mul(a[1], a[3]);
        v = f.add(v, f.mul(a[0], a[0]));
        v = f.add(v, f.mul(a[0], a[2]));
        v = f.add(v, f.mul(d, f.mul(a[2], a[2])));
        if (v == 0) base.push_back(a);
      }
    } else {
      base.push_back({0, 1, 0, 0});
      for (const Vec& a : w->points()) {
        bool ok = true;
        for (const Vec& b : base) ok = ok && w->Beta(a, b) != 0;
        if (ok) base.push_back(a);
      }
    }
  }
  out.base = base;

  std::set<Vec> seen;
  for (Elt xi : out.xi) {
    for (const Vec& a : base) {
      Vec v(4);
      for (int j = 0; j < 4; ++j) v[j] = F.embed(f, a[j]);
      v[1] = F.add(v[1], F.mul(xi, v[3]));
      v = Normalized(F, v);
      if (seen.insert(v).second) out.points.push_back(v);
    }
  }
  for (const Vec& v : out.points) out.on_variety += out.herm->Isotropic(v);
  return out;
}

TangentSetReport VerifyTangentSet(const PolarSpace& herm, const std::vector<Vec>& pts,
                                  bool check_maximal) {
  const Field& F = herm.field();
  auto bad = [&](const Vec& a, const Vec& b) {
    Subspace line = SpanPoints(F, herm.n(), {a, b});
    return herm.IsTangentLine(line) || herm.TotallyIsotropic(line);
  };
  TangentSetReport rep;
  rep.tangent_set = true;
  for (size_t a = 0; a < pts.size() && rep.tangent_set; ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (bad(pts[a], pts[b])) {
        rep.tangent_set = false;
        rep.bad_a = static_cast<int>(a);
        rep.bad_b = static_cast<int>(b);
        break;
      }
    }
  }
  if (check_maximal) {
    rep.maximality_checked = true;
    rep.maximal = true;
    std::set<Vec> in;
    for (const Vec& v : pts) in.insert(Normalized(F, v));
    for (const Vec& x : EnumeratePoints(F, herm.n())) {
      if (in.count(x)) continue;
      bool blocked = false;
      for (const Vec& r : pts) {
        if (bad(x, r)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        rep.maximal = false;
        rep.extension = x;
        break;
      }
    }
  }
  return rep;
}

HermitianLift LiftTangentSet(const TangentSet& t) {
  const PolarSpace& h1 = *t.herm;
  Form h = h1.form();
  h.n = 4;
  for (Vec& row : h.gram) row.push_back(0);
  h.gram.push_back(Vec(5, 0));
  h.gram[4][4] = 1;
  HermitianLift out;
  out.space = PolarSpace::FromForm(h);
  const PolarSpace& ps = *out.space;
  const Field& F = ps.field();
  const uint64_t q = F.sqrt_q();
  const Vec p = {0, 0, 0, 0, 1};
  std::set<int32_t> seen;
  for (const Vec& r : t.points) {
    Vec v = r;
    v.push_back(0);
    const bool on = h1.Isotropic(r);
    out.expected_size += on ? 1 : static_cast<int64_t>(q + 1);
    for (int32_t i : ps.IsotropicPointsIn(SpanPoints(F, 4, {p, v}))) {
      if (seen.insert(i).second) out.points.push_back(ps.point(i));
    }
  }
  return out;
}

Fan BuildFan(const PolarSpace& herm) {
  if (herm.family() != Family::kH || herm.n() != 3) {
    throw std::invalid_argument("fan needs H(3, q^2)");
  }
  const Field& F = herm.field();
  Fan out;
  for (const Vec& v : EnumeratePoints(F, 3)) {
    if (!herm.Isotropic(v)) {
      out.p = v;
      break;
    }
  }
  const Subspace pp = herm.Perp(Subspace{3, {out.p}});
  const std::vector<int32_t> section = herm.IsotropicPointsIn(pp);
  out.x = herm.point(section.front());
  out.t = Meet(F, pp, herm.Perp(Subspace{3, {out.x}}));
  out.ovoids.push_back(section);
  for (const Vec& y : SubspacePoints(F, out.t)) {
    if (Normalized(F, y) == out.x) continue;
    std::set<int32_t> o;
    for (int32_t i : herm.IsotropicPointsIn(herm.Perp(Subspace{3, {y}}))) {
      if (!Contains(F, pp, herm.point(i))) o.insert(i);
    }
    for (int32_t i : herm.IsotropicPointsIn(SpanPoints(F, 3, {out.p, y}))) o.insert(i);
    out.ovoids.emplace_back(o.begin(), o.end());
  }
  std::vector<int> hits(herm.num_points(), 0);
  for (const auto& o : out.ovoids) {
    for (int32_t i : o) ++hits[i];
  }
  out.partition = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  out.all_ovoids = true;
  for (const auto& o : out.ovoids) {
    std::vector<char> in(herm.num_points(), 0);
    for (int32_t i : o) in[i] = 1;
    for (const auto& g : herm.GeneratorPoints()) {
      int c = 0;
      for (int32_t i : g) c += in[i];
      if (c != 1) out.all_ovoids = false;
    }
  }
  return out;
}

}  // namespace pgeom
