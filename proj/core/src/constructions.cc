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

#include "pgeom/constructions.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgeom/bitset.h"

namespace pgeom {

namespace {

// Image of a subspace given in coordinates relative to `basis`.
Subspace FromLocal(const Field& f, const Subspace& basis, const Subspace& local) {
  Mat rows;
  for (const Vec& r : local.rows) {
    Vec v(basis.n + 1, 0);
    for (size_t a = 0; a < r.size(); ++a) {
      if (r[a] == 0) continue;
      for (int j = 0; j <= basis.n; ++j) v[j] = f.add(v[j], f.mul(r[a], basis.rows[a][j]));
    }
    rows.push_back(std::move(v));
  }
  return Rref(f, basis.n, std::move(rows));
}

Subspace Join(const Field& f, const Subspace& a, const Subspace& b) { return Span(f, a, b); }

Subspace PointsSpan(const Field& f, int n, std::initializer_list<int> units) {
  std::vector<Vec> pts;
  for (int i : units) {
    Vec v(n + 1, 0);
    v[i] = 1;
    pts.push_back(std::move(v));
  }
  return SpanPoints(f, n, pts);
}

size_t IsotropicCount(const PolarSpace& ps, const Subspace& s) {
  return ps.IsotropicPointsIn(s).size();
}

}  // namespace

std::vector<Subspace> LinesIn(const Field& f, const Subspace& s) {
  std::vector<Subspace> out;
  if (s.dim() < 2) return out;
  for (const Subspace& l : EnumerateSubspaces(f, s.dim() - 1, 1)) {
    out.push_back(FromLocal(f, s, l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> IsotropicLinesIn(const PolarSpace& ps, const Subspace& s) {
  const Field& f = ps.field();
  const std::vector<int32_t> pts = ps.IsotropicPointsIn(s);
  std::set<Subspace> lines;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (!ps.Collinear(pts[i], pts[j])) continue;
      lines.insert(SpanPoints(f, ps.n(), {ps.point(pts[i]), ps.point(pts[j])}));
    }
  }
  return {lines.begin(), lines.end()};
}

ReguliPair SplitReguli(const PolarSpace& ps, const Subspace& solid) {
  const Field& f = ps.field();
  const std::vector<Subspace> lines = IsotropicLinesIn(ps, solid);
  const size_t q1 = f.q() + 1;
  if (lines.size() != 2 * q1) throw std::invalid_argument("solid is not a hyperbolic section");
  ReguliPair rp;
  rp.first.push_back(lines[0]);
  for (size_t i = 1; i < lines.size(); ++i) {
    (Meet(f, lines[0], lines[i]).dim() == 0 ? rp.first : rp.second).push_back(lines[i]);
  }
  auto disjoint_family = [&](const std::vector<Subspace>& fam) {
    for (size_t i = 0; i < fam.size(); ++i) {
      for (size_t j = i + 1; j < fam.size(); ++j) {
        if (Meet(f, fam[i], fam[j]).dim() != 0) return false;
      }
    }
    return true;
  };
  if (rp.first.size() != q1 || rp.second.size() != q1 || !disjoint_family(rp.first) ||
      !disjoint_family(rp.second)) {
    throw std::invalid_argument("lines of the solid do not form two reguli");
  }
  return rp;
}

int GeneratorIndex(const PolarSpace& ps, const Subspace& s) {
  const auto& gens = ps.Generators();
  auto it = std::lower_bound(gens.begin(), gens.end(), s);
  if (it == gens.end() || !(*it == s)) return -1;
  return static_cast<int>(it - gens.begin());
}

bool HyperbolicSectionCount(uint64_t q, int n, mpz_class* count) {
  mpz_class qq = static_cast<unsigned long>(q);
  mpz_class num = 1, a, b;
  mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), n);
  mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), n + 1);
  num = (a + 1) * (b + 1);
  const mpz_class den = 2 * (qq + 1);
  if (num % den != 0) return false;
  *count = num / den;
  return true;
}

EllipticHemisystem BuildEllipticHemisystem(uint64_t q, const std::vector<int>& flip) {
  if (q % 2 == 0) throw std::invalid_argument("q must be odd");
  EllipticHemisystem h;
  h.q = q;
  h.space = PolarSpace::Make(Family::kQMinus, 5, q);
  const PolarSpace& ps = *h.space;
  const Field& f = ps.field();
  const int n = 5;
  auto external = [&](const Subspace& l) { return IsotropicCount(ps, l) == 0; };
  auto meet_dim = [&](const Subspace& a, const Subspace& b) { return Meet(f, a, b).dim(); };

  // X0 X1 + X2 X3 vanishes on Pi: a hyperbolic section.
  h.pi = PointsSpan(f, n, {0, 1, 2, 3});
  h.ell = ps.Perp(h.pi);
  for (const Subspace& l : LinesIn(f, h.pi)) {
    if (external(l)) h.x.push_back(l);
  }
  if (h.x.empty()) throw std::logic_error("no external line in Pi");
  h.ell1 = h.x.front();
  h.ell2 = Meet(f, ps.Perp(h.ell1), h.pi);
  const Subspace pi1 = ps.Perp(h.ell1);
  const Subspace pi2 = ps.Perp(h.ell2);
  for (const Subspace& l : LinesIn(f, pi1)) {
    if (external(l) && meet_dim(l, h.ell) >= 1) h.x1.push_back(l);
  }
  for (const Subspace& l : LinesIn(f, pi2)) {
    if (external(l) && meet_dim(l, h.ell) == 1 && meet_dim(l, h.ell1) == 1) {
      h.x2.push_back(l);
    }
  }
  std::set<Subspace> all(h.x.begin(), h.x.end());
  all.insert(h.x1.begin(), h.x1.end());
  all.insert(h.x2.begin(), h.x2.end());
  h.members.assign(all.begin(), all.end());
  const uint64_t q2 = q * q;
  h.count_ok = h.members.size() == (q2 - q + 1) * (q2 + 1) / 2 &&
               h.x.size() == q2 * (q - 1) * (q - 1) / 2 &&
               h.x1.size() == (q - 2) * (q + 1) * (q + 1) / 2 + 1 &&
               h.x2.size() == (q + 1) * (q + 1) / 2;

  h.conditions_ok = true;
  for (size_t a = 0; a < h.members.size() && h.conditions_ok; ++a) {
    for (size_t b = a + 1; b < h.members.size(); ++b) {
      ++h.pairs_checked;
      const Subspace& r = h.members[a];
      const Subspace& s = h.members[b];
      const size_t c = IsotropicCount(ps, Join(f, r, s));
      const bool meet = meet_dim(r, s) > 0;
      if ((meet && c == 1) || (!meet && c == q + 1)) {
        h.conditions_ok = false;
        h.bad_a = static_cast<int>(a);
        h.bad_b = static_cast<int>(b);
        break;
      }
    }
  }

  std::vector<int> cover(ps.Generators().size(), 0);
  const std::set<int> flips(flip.begin(), flip.end());
  for (size_t i = 0; i < h.members.size(); ++i) {
    ReguliPair rp = SplitReguli(ps, ps.Perp(h.members[i]));
    std::vector<int> a, b;
    for (const Subspace& l : rp.first) a.push_back(GeneratorIndex(ps, l));
    for (const Subspace& l : rp.second) b.push_back(GeneratorIndex(ps, l));
    for (int g : a) ++cover.at(g);
    for (int g : b) ++cover.at(g);
    if (flips.count(static_cast<int>(i))) std::swap(a, b);
    h.system.insert(h.system.end(), a.begin(), a.end());
    h.chosen.push_back(std::move(a));
    h.opposite.push_back(std::move(b));
  }
  h.partition_ok = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
  std::sort(h.system.begin(), h.system.end());
  return h;
}

std::vector<int64_t> ParabolicSectionCounts(const PolarSpace& ps,
                                            const std::vector<int>& system) {
  const Field& f = ps.field();
  const auto& gens = ps.Generators();
  std::set<int64_t> seen;
  for (const Vec& p : EnumeratePoints(f, ps.n())) {
    if (ps.Isotropic(p)) continue;
    const Vec w = ps.ops().PerpVector(p);
    int64_t c = 0;
    for (int g : system) {
      bool inside = true;
      for (const Vec& r : gens[g].rows) {
        if (Dot(f, r, w) != 0) {
          inside = false;
          break;
        }
      }
      c += inside;
    }
    seen.insert(c);
  }
  return {seen.begin(), seen.end()};
}

OneSystemQ63 BuildOneSystemQ63() {
  OneSystemQ63 out;
  FieldPtr f3 = Field::Get(3, 1);
  const Field& f = *f3;
  const int n = 6;
  Form form;
  form.kind = FormKind::kQuadratic;
  form.n = n;
  form.field = f3;
  form.gram.assign(n + 1, Vec(n + 1, 0));
  for (int i = 0; i <= n; ++i) form.gram[i][i] = 1;
  out.space = PolarSpace::FromForm(form);
  const PolarSpace& ps = *out.space;

  // P_k is e_{k-1}. r_i = P1P2, P2P3, P3P1 paired (phi = identity) with
  // l_i = P4P5, P4P7, P4P6 and l'_i = P6P7, P5P6, P5P7.
  const int r[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  const int l[3][2] = {{3, 4}, {3, 6}, {3, 5}};
  const int lp[3][2] = {{5, 6}, {4, 5}, {4, 6}};
  for (int i = 0; i < 3; ++i) {
    out.solids.push_back(PointsSpan(f, n, {r[i][0], r[i][1], l[i][0], l[i][1]}));
    out.solids.push_back(PointsSpan(f, n, {r[i][0], r[i][1], lp[i][0], lp[i][1]}));
  }
  out.solids.push_back(PointsSpan(f, n, {3, 4, 5, 6}));
  for (const Subspace& solid : out.solids) {
    ReguliPair rp = SplitReguli(ps, solid);
    out.lines.insert(out.lines.end(), rp.first.begin(), rp.first.end());
    out.opposite.insert(out.opposite.end(), rp.second.begin(), rp.second.end());
  }

  // Point sets of the members.
  std::vector<Bitset> pts;
  Bitset covered(ps.num_points());
  for (const Subspace& m : out.lines) {
    Bitset b(ps.num_points());
    for (int32_t x : ps.IsotropicPointsIn(m)) b.set(x);
    covered |= b;
    pts.push_back(std::move(b));
  }
  out.covered_points = static_cast<int64_t>(covered.count());

  out.one_system = true;
  const auto& gens = ps.Generators();
  const auto& gpts = ps.GeneratorPoints();
  for (size_t g = 0; g < gens.size() && out.one_system; ++g) {
    Bitset plane(ps.num_points());
    for (int32_t x : gpts[g]) plane.set(x);
    for (size_t i = 0; i < out.lines.size(); ++i) {
      if (plane.and_count(pts[i]) != pts[i].count()) continue;  // not through member i
      for (size_t j = 0; j < out.lines.size(); ++j) {
        if (j != i && plane.and_count(pts[j]) != 0) {
          out.one_system = false;
          out.bad_plane = gens[g];
          break;
        }
      }
      if (!out.one_system) break;
    }
  }

  std::set<int> derived;
  std::vector<Subspace> both = out.lines;
  both.insert(both.end(), out.opposite.begin(), out.opposite.end());
  for (const Subspace& line : both) {
    for (int g : GeneratorsThrough(ps, line)) derived.insert(g);
  }
  out.derived.assign(derived.begin(), derived.end());

  for (int i = 0; i <= n; ++i) {
    const SectionInfo s = ps.Section(ps.Perp(PointsSpan(f, n, {i})));
    out.simplex_internal.push_back(s.vertex_dim == 0 && s.base_family == Family::kQMinus &&
                                   s.points == 112);
  }
  return out;
}

PolarPtr ParabolicOverElliptic(int n_small, uint64_t q) {
  FieldPtr f = Field::OfOrder(q);
  Form small = CanonicalForm(Family::kQMinus, n_small, f);
  Form big;
  big.kind = FormKind::kQuadratic;
  big.n = n_small + 1;
  big.field = f;
  big.gram.assign(big.n + 1, Vec(big.n + 1, 0));
  for (int i = 0; i <= n_small; ++i) {
    for (int j = 0; j <= n_small; ++j) big.gram[i][j] = small.gram[i][j];
  }
  big.gram[big.n][big.n] = 1;
  return PolarSpace::FromForm(big);
}

std::vector<int> ChainLift(const PolarSpace& small, const PolarSpace& big,
                           const std::vector<int>& members) {
  if (big.n() != small.n() + 1) throw std::invalid_argument("big must be one dimension up");
  std::set<int> out;
  for (int m : members) {
    Subspace s = small.Generators().at(m);
    s.n = big.n();
    for (Vec& r : s.rows) r.push_back(0);
    if (!big.TotallyIsotropic(s)) throw std::invalid_argument("member is not isotropic in big");
    for (int g : GeneratorsThrough(big, s)) out.insert(g);
  }
  return {out.begin(), out.end()};
}

std::vector<int> GeneratorsThrough(const PolarSpace& ps, const Subspace& s) {
  const Field& f = ps.field();
  const auto& gens = ps.Generators();
  std::vector<int> out;
  for (size_t g = 0; g < gens.size(); ++g) {
    if (ContainsSubspace(f, gens[g], s)) out.push_back(static_cast<int>(g));
  }
  return out;
}

GeneratorClasses HyperbolicClasses(const PolarSpace& ps) {
  if (ps.family() != Family::kQPlus) throw std::invalid_argument("needs a hyperbolic quadric");
  const Field& f = ps.field();
  const auto& gens = ps.Generators();
  GeneratorClasses c;
  // Same class exactly when the meet has dimension congruent to d mod 2.
  for (size_t g = 0; g < gens.size(); ++g) {
    const int dim = Meet(f, gens[0], gens[g]).dim();
    ((ps.d() - dim) % 2 == 0 ? c.latin : c.greek).push_back(static_cast<int>(g));
  }
  return c;
}

std::vector<int> HyperbolicSwitch(const PolarSpace& ps, const GeneratorClasses& cls,
                                  const Subspace& sigma) {
  const std::vector<int> through = GeneratorsThrough(ps, sigma);
  const std::set<int> z(through.begin(), through.end());
  std::vector<int> out;
  for (int g : cls.latin) {
    if (!z.count(g)) out.push_back(g);
  }
  for (int g : cls.greek) {
    if (z.count(g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolarPtr HermitianKleinQuadric(uint64_t q) {
  FieldPtr small = Field::OfOrder(q);
  FieldPtr big = Field::Get(small->p(), 2 * small->e());
  FieldReduction red(1, big, small);
  const Elt w = big->primitive();
  const Elt t = red.Coordinates(big->add(w, big->conj(w)))[0];
  const Elt nw = red.Coordinates(big->mul(w, big->conj(w)))[0];
  Form form;
  form.kind = FormKind::kQuadratic;
  form.n = 5;
  form.field = small;
  form.gram.assign(6, Vec(6, 0));
  for (int i = 0; i < 3; ++i) {
    form.gram[2 * i][2 * i] = 1;
    form.gram[2 * i][2 * i + 1] = t;
    form.gram[2 * i + 1][2 * i + 1] = nw;
  }
  return PolarSpace::FromForm(form);
}

Vec HermitianKleinPoint(const PolarSpace& herm, const Subspace& line) {
  const Field& F = herm.field();
  if (herm.family() != Family::kH || herm.n() != 3 || !herm.TotallyIsotropic(line)) {
    throw std::invalid_argument("need a totally isotropic line of H(3, q^2)");
  }
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      if (herm.form().gram[i][j] != (i == j ? 1u : 0u)) {
        throw std::invalid_argument("need the diagonal Hermitian form");
      }
    }
  }
  const Vec p = KleinMap(F, line);
  auto star_conj = [&](const Vec& v) {
    return Vec{F.conj(v[5]), F.neg(F.conj(v[4])), F.conj(v[3]),
               F.conj(v[2]), F.neg(F.conj(v[1])), F.conj(v[0])};
  };
  FieldPtr small = Field::Get(F.p(), F.e() / 2);
  FieldPtr big = Field::Get(F.p(), F.e());
  FieldReduction red(3, big, small);
  for (Elt mu = 1; mu < F.q(); ++mu) {
    const Vec v = VecScale(F, mu, p);
    if (star_conj(v) != v) continue;
    Vec c = red.Flatten({v[0], v[1], v[2]});
    Normalize(*small, &c);
    return c;
  }
  throw std::logic_error("Plucker vector not fixed by the polarity");
}

}  // namespace pgeom
