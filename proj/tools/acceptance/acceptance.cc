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

#include "acceptance/acceptance.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <sstream>

#include "pgeom/codes.h"
#include "pgeom/constructions.h"
#include "pgeom/gf.h"
#include "pgeom/graph.h"
#include "pgeom/graph_families.h"
#include "pgeom/ovoids.h"
#include "pgeom/polar.h"
#include "pgeom/regular.h"
#include "pgeom/switching.h"
#include "pgeom/unital.h"

namespace pgeom::acceptance {

namespace {

template <typename T>
std::string Str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

template <typename C>
std::string Join(const C& c, const char* sep = ",") {
  std::string s;
  for (const auto& x : c) s += (s.empty() ? "" : sep) + Str(x);
  return "{" + s + "}";
}

std::string Census(const std::map<int64_t, int64_t>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + Str(k) + ":" + Str(v);
  return s;
}

CriterionResult Start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

void Add(CriterionResult* r, std::string name, bool ok, std::string detail = "") {
  r->checks.push_back({std::move(name), ok, std::move(detail)});
}

// Certifies g as strongly regular with the given parameters and records
// the complement law, which criterion 11 reads back.
std::vector<std::pair<std::string, Graph>>& SrgRegistry() {
  static auto* registry = new std::vector<std::pair<std::string, Graph>>();
  return *registry;
}

bool CertifySrg(CriterionResult* r, const std::string& name, const Graph& g,
                const SrgParams& expected) {
  const SrgReport rep = SrgCheck(g);
  const bool ok = rep.srg && rep.params == expected;
  Add(r, name, ok, "got " + rep.params.ToString() + (rep.srg ? "" : " (not srg)") +
                       ", want " + expected.ToString());
  if (rep.srg) SrgRegistry().emplace_back(name, g);
  return ok;
}

SystemSearchResult SegreHemisystem(const PolarSpace& h) {
  return SearchPointRegularSystem(h, 2, 1'000'000);
}

// 1. Point and subspace counts against the closed formula.
CriterionResult Counting() {
  CriterionResult r = Start(1, "counting suite");
  const char* spaces[] = {"W:3:2",   "W:3:3",    "W:3:4",    "W:3:5",    "Q+:3:2",
                          "Q+:3:3",  "Q+:3:4",   "Q-:5:2",   "Q-:5:3",   "Q-:5:4",
                          "Q:4:2",   "Q:4:3",    "Q:4:4",    "Q:6:3",    "W:5:2",
                          "W:5:3",   "W:5:4",    "H:2:q2=4", "H:2:q2=9", "H:3:q2=4",
                          "H:3:q2=9", "H:4:q2=4"};
  for (const char* s : spaces) {
    PolarPtr ps = PolarSpace::Make(ParseDescriptor(s));
    bool ok = mpz_class(ps->num_points()) == PolarPointCount(ps->d(), ps->e2(), ps->base());
    std::string detail = "points " + Str(ps->num_points());
    for (int k = 2; k <= ps->d(); ++k) {
      const size_t got = ps->EnumerateIso(k).size();
      ok = ok && mpz_class(got) == ps->ExpectedSubspaceCount(k);
      detail += ", " + Str(k - 1) + "-spaces " + Str(got);
    }
    Add(&r, ps->Name(), ok, detail);
  }
  return r;
}

// 2. A 2-regular system of H(3, 9) found by search, and its line graph.
CriterionResult Segre() {
  CriterionResult r = Start(2, "Segre hemisystem of H(3,9)");
  PolarPtr h = PolarSpace::Make(Family::kH, 3, 9);
  const SystemSearchResult s = SegreHemisystem(*h);
  Add(&r, "search", s.found && s.members.size() == 56,
      Str(s.members.size()) + " lines, " + Str(s.nodes) + " nodes");
  const RegularSystemReport v = VerifyRegularSystemIndices(*h, s.members, 1);
  Add(&r, "2-regular", v.regular && v.m == 2 && v.size_formula_ok, "m=" + Str(v.m));
  CertifySrg(&r, "line graph", HemisystemLineGraph(*h, s.members), ThasLineGraphParams(3, 2));
  CertifySrg(&r, "line graph literal", HemisystemLineGraph(*h, s.members), {56, 10, 0, 2});
  return r;
}

// 3. NU(3, 4).
CriterionResult Nu34() {
  CriterionResult r = Start(3, "NU(3,4)");
  const PointGraph nu = NuGraph(2, 4);
  CertifySrg(&r, "srg", nu.graph, {12, 9, 6, 9});
  const Graph comp = nu.graph.Complement();
  const auto parts = comp.Components();
  bool triangles = parts.size() == 4;
  for (const auto& c : parts) {
    triangles = triangles && c.size() == 3 && comp.degree(c[0]) == 2 &&
                comp.degree(c[1]) == 2 && comp.degree(c[2]) == 2;
  }
  Add(&r, "complement 4K3", triangles, Str(parts.size()) + " components");
  const mpz_class aut = AutomorphismCount(nu.graph);
  Add(&r, "automorphisms", aut == 31104, Str(aut));
  return r;
}

// 4. NU(5, 4) and its switched mate.
CriterionResult Nu54() {
  CriterionResult r = Start(4, "NU(5,4) switching");
  const SwitchedNu s = BuildSwitchedNu(4, 2, PlaneType::kLine);
  const SrgParams want{176, 135, 102, 108};
  CertifySrg(&r, "NU(5,4) srg", s.base.graph, want);
  CertifySrg(&r, "switched srg", s.switched, want);
  Add(&r, "switch hypotheses", s.config.wqh.ok() && s.config.sizes_ok && s.config.in_p_perp &&
                                   s.config.matches_rules,
      "|A|=" + Str(s.config.a.size()) + " |A1|=" + Str(s.config.a1.size()));
  const TriangleCheck tri = CheckTriangleFormulas(s.base, 2);
  std::string per_kind;
  for (const auto& [kind, values] : tri.values) {
    std::vector<int64_t> keys;
    for (const auto& [v, n] : values) keys.push_back(v);
    per_kind += " " + TriangleKindName(kind) + "=" + Join(keys);
  }
  Add(&r, "triangle formulas", tri.complete && tri.mismatches == 0,
      Str(tri.triangles) + " triangles," + per_kind);
  const CospectralCertificate cert = CertifyCospectralNonIsomorphic(s.base.graph, s.switched);
  std::set<int64_t> values;
  for (const auto& [v, n] : cert.census_first) values.insert(v);
  const std::set<int64_t> literal{37, 69, 75, 77};
  Add(&r, "census value set", values == literal,
      "got " + Join(values) + ", want " + Join(literal) +
          "; 37 needs a triangle whose tangency point lies on its Baer subline, "
          "which NU(5,4) does not contain");
  r.known_gaps.push_back("census value set");
  Add(&r, "census differs", cert.census_done && cert.census_differs,
      "switched " + Census(cert.census_second));
  Add(&r, "certificate", cert.verdict == Verdict::kVerified, VerdictName(cert.verdict));
  return r;
}

// 5. Partial ovoids of symplectic spaces.
CriterionResult Ovoids() {
  CriterionResult r = Start(5, "partial ovoids");
  for (uint64_t q : {2, 3}) {
    const CyclicOvoidW5 c = BuildCyclicOvoidW5(q);
    const PartialOvoidReport v = VerifyPartialOvoid(*c.space, c.points, true);
    const size_t want = q == 2 ? 7 : 13;
    Add(&r, "W(5," + Str(q) + ") cyclic",
        c.points.size() == want && v.points_ok && v.partial_ovoid && v.maximal,
        Str(c.points.size()) + " points, maximal=" + Str(v.maximal));
  }
  const EvenOvoidW5 e = BuildEvenOvoidW5(4);
  const PartialOvoidReport ve = VerifyPartialOvoid(*e.space, e.points, true);
  Add(&r, "W(5,4) even", e.points.size() == 29 && ve.points_ok && ve.partial_ovoid && ve.maximal,
      Str(e.points.size()) + " points, maximal=" + Str(ve.maximal));
  const TwistedCubicOvoid t = BuildTwistedCubicOvoid(25);
  const PartialOvoidReport vt = VerifyPartialOvoid(*t.space, t.points, true, true);
  Add(&r, "W(3,25) twisted cubic",
      t.points.size() == 66 && vt.points_ok && vt.partial_ovoid && vt.generator_check_ok,
      Str(t.points.size()) + " points, " + Str(vt.pairs_checked) + " pairs");
  bool extends = false;
  if (!vt.maximal && !vt.extension.empty()) {
    std::vector<Vec> more = t.points;
    more.push_back(vt.extension);
    const PartialOvoidReport vx = VerifyPartialOvoid(*t.space, more);
    extends = vx.points_ok && vx.partial_ovoid;
  }
  Add(&r, "W(3,25) non-maximal", extends,
      "extension " + (vt.extension.empty() ? std::string("none") : FormatPoint(vt.extension)) +
          " of " + Str(vt.extension_count));
  return r;
}

// 6. Tangent-set of H(3, 4) lifted to H(4, 4).
CriterionResult Lift() {
  CriterionResult r = Start(6, "Hermitian lift");
  const TangentSet t = BuildTangentSet(2);
  const TangentSetReport vt = VerifyTangentSet(*t.herm, t.points, true);
  Add(&r, "tangent-set", t.base.size() == 5 && t.points.size() == 9 && vt.tangent_set,
      Str(t.points.size()) + " points from an elliptic quadric of " + Str(t.base.size()));
  const HermitianLift l = LiftTangentSet(t);
  const PartialOvoidReport vl = VerifyPartialOvoid(*l.space, l.points, true);
  Add(&r, "lift", l.points.size() == 17 && l.expected_size == 17 && vl.points_ok &&
                      vl.partial_ovoid && vl.maximal,
      Str(l.points.size()) + " points in " + l.space->Name() + ", maximal=" + Str(vl.maximal));
  return r;
}

// 7. Hemisystem of Q-(5, 3), its chain lift and the 1-system of Q(6, 3).
CriterionResult Elliptic() {
  CriterionResult r = Start(7, "elliptic hemisystem");
  const EllipticHemisystem h = BuildEllipticHemisystem(3);
  Add(&r, "hyperbolic sections", h.members.size() == 35 && h.count_ok && h.conditions_ok &&
                                     h.partition_ok,
      Str(h.members.size()) + " sections");
  const RegularSystemReport v = VerifyRegularSystemIndices(*h.space, h.system, 1);
  Add(&r, "hemisystem", h.system.size() == 140 && v.regular && v.m == 5,
      Str(h.system.size()) + " generators, m=" + Str(v.m));
  PolarPtr big = ParabolicOverElliptic(5, 3);
  const std::vector<int> lift = ChainLift(*h.space, *big, h.system);
  const RegularSystemReport vl = VerifyRegularSystemIndices(*big, lift, 1);
  Add(&r, "chain lift", vl.regular && vl.m == 20,
      Str(lift.size()) + " planes of " + big->Name() + ", m=" + Str(vl.m));
  const OneSystemQ63 o = BuildOneSystemQ63();
  Add(&r, "1-system", o.one_system, Str(o.lines.size()) + " lines");
  const RegularSystemReport vd = VerifyRegularSystemIndices(*o.space, o.derived, 1);
  Add(&r, "derived system", o.derived.size() == 224 && vd.regular && vd.m == 8,
      Str(o.derived.size()) + " planes, m=" + Str(vd.m));
  return r;
}

// 8. Distance graphs of dual polar spaces and the Hoffman bound.
CriterionResult Spectral() {
  CriterionResult r = Start(8, "spectral suite");
  for (const char* s : {"W:3:2", "W:3:3", "Q:4:3", "Q:6:3"}) {
    PolarPtr ps = PolarSpace::Make(ParseDescriptor(s));
    for (int i = 1; i <= ps->d(); ++i) {
      std::vector<int64_t> claim;
      for (const mpz_class& z : DistanceGraphEigenvalues(ps->d(), ps->e2(), ps->base(), i)) {
        claim.push_back(z.get_si());
      }
      const SpectrumCertificate c = CertifySpectrum(DualPolarGraph(*ps, i), claim);
      std::string detail;
      for (size_t j = 0; j < c.eigenvalues.size(); ++j) {
        detail += (j ? " " : "") + Str(c.eigenvalues[j]) + "^" + Str(c.multiplicities[j]);
      }
      Add(&r, ps->Name() + " D" + Str(i), c.ok(), detail);
    }
  }
  for (uint64_t q : {2, 3}) {
    PolarPtr ps = PolarSpace::Make(Family::kW, 3, q);
    const Graph g = CollinearityGraph(*ps);
    const SrgParams p = CollinearityParams(ps->d(), ps->e2(), q);
    const mpz_class theta = CollinearityMinEigenvalue(ps->d(), ps->e2(), q);
    const mpq_class bound = HoffmanBound(p.v, p.k, theta.get_si());
    const int64_t want = q == 2 ? 5 : 10;
    const SearchResult c = MaxCoclique(g, static_cast<int>(want));
    const bool ok = bound == want && (q == 2 ? c.found : !c.found && c.exhausted);
    Add(&r, ps->Name() + " Hoffman", ok,
        "bound " + Str(bound) + (c.found ? ", coclique found" : ", no coclique of that size") +
            " (" + Str(c.nodes) + " nodes)");
  }
  return r;
}

// 9. The hemisystem of H(3, 9) as a two-weight code.
CriterionResult Codes() {
  CriterionResult r = Start(9, "hemisystem code");
  PolarPtr h = PolarSpace::Make(Family::kH, 3, 9);
  const SystemSearchResult s = SegreHemisystem(*h);
  PolarPtr e = HermitianKleinQuadric(3);
  std::vector<Vec> set;
  for (int i : s.members) set.push_back(HermitianKleinPoint(*h, h->Generators()[i]));
  const PartialOvoidReport on = VerifyPartialOvoid(*e, set);
  Add(&r, "Klein image", set.size() == 56 && on.points_ok, "56 points of " + e->Name());
  FieldPtr f = Field::OfOrder(3);
  const LinearCode code = CodeFromSet(f, set);
  const WeightDistribution w = WeightEnumerator(code);
  Add(&r, "weights", code.n == 56 && code.k == 6 && w.support == std::vector<int>{36, 45} &&
                         w.min_distance == 36,
      "[" + Str(code.n) + "," + Str(code.k) + "] support " + Join(w.support) + ", d=" +
          Str(w.min_distance));
  const TwoWeightBridge b = CheckTwoWeightBridge(f, set);
  Add(&r, "three-way equivalence", b.two_weight && b.two_intersection && b.graph_srg &&
                                       b.identity_holds,
      "intersections " + Join(b.intersection_sizes));
  const Graph g = LinearRepresentationGraph(*f, 5, set);
  CertifySrg(&r, "linear representation graph", g, LinearRepresentationParams(3));
  Add(&r, "coset graph equals it", b.graph_params == SrgCheck(g).params, "");
  const SrgParams literal{729, 112, 19, 20};
  Add(&r, "literal parameters", b.graph_params == literal,
      "got " + b.graph_params.ToString() + ", want " + literal.ToString() +
          "; eigenvalues 4 and -23 from the intersection numbers force lambda = 1");
  r.known_gaps.push_back("literal parameters");
  return r;
}

// 10. Buekenhout-Metz unital of order 3 against NU(3, 9).
CriterionResult Unitals() {
  CriterionResult r = Start(10, "Buekenhout-Metz unital");
  const Unital bm = BuekenhoutMetzUnital(3);
  const UnitalReport v = VerifyUnital(*bm.field, bm.points);
  Add(&r, "2-(28,4,1) design", v.ok() && v.design.v == 28 && v.design.k == 4,
      Str(v.secants) + " blocks");
  const PointGraph g = UnitalTangentGraph(9, bm.points);
  CertifySrg(&r, "tangent graph", g.graph, {63, 32, 16, 16});
  const PointGraph nu = NuGraph(2, 9);
  const CliqueCensus sizes = MaximalCliqueCensus(nu.graph, 1);
  std::set<int> nu_sizes;
  for (const auto& [k, n] : sizes.histogram) nu_sizes.insert(k);
  Add(&r, "NU(3,9) clique sizes", sizes.complete && nu_sizes == std::set<int>{5, 9},
      Join(nu_sizes));
  const auto bm_census = GeometricCliqueCensus(g);
  const auto nu_census = GeometricCliqueCensus(nu);
  std::string extra;
  for (const auto& [cls, n] : bm_census) {
    if (!nu_census.count(cls)) extra += (extra.empty() ? "" : " ") + cls + "=" + Str(n);
  }
  Add(&r, "extra clique class", !extra.empty(), extra);
  return r;
}

// 11. Property suites.
CriterionResult Properties() {
  CriterionResult r = Start(11, "property suites");
  {
    // Pairwise laws prove the triple laws: addition is coefficientwise
    // mod p, multiplication is exp(log a + log b), and multiplication by
    // the primitive element is additive, hence so is every nonzero a.
    // Fields up to 64 also get the triple laws directly.
    int fields = 0;
    bool ok = true;
    for (uint64_t q = 2; q <= 512 && ok; ++q) {
      int p, e;
      if (!PrimePower(q, &p, &e)) continue;
      ++fields;
      FieldPtr fp = Field::OfOrder(q);
      const Field& f = *fp;
      const Elt g = f.primitive();
      std::vector<std::vector<int>> co(q);
      for (Elt a = 0; a < q; ++a) co[a] = f.coeffs(a);
      for (Elt a = 0; a < q && ok; ++a) {
        ok = f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0 &&
             (a == 0 || f.mul(a, f.inv(a)) == 1) && f.pow(a, q) == a &&
             (a == 0 || f.exp(f.log(a)) == a);
        for (Elt b = 0; b < q && ok; ++b) {
          const Elt ab = f.mul(a, b);
          const Elt sum = f.add(a, b);
          for (int i = 0; i < e && ok; ++i) ok = co[sum][i] == (co[a][i] + co[b][i]) % p;
          ok = ok && ab == f.mul(b, a) &&
               (a == 0 || b == 0 ? ab == 0 : ab == f.exp(f.log(a) + f.log(b))) &&
               f.mul(g, sum) == f.add(f.mul(g, a), f.mul(g, b)) &&
               f.frobenius(sum) == f.add(f.frobenius(a), f.frobenius(b)) &&
               f.frobenius(ab) == f.mul(f.frobenius(a), f.frobenius(b));
          for (Elt c = 0; q <= 64 && c < q && ok; ++c) {
            ok = f.mul(a, f.add(b, c)) == f.add(ab, f.mul(a, c)) &&
                 f.mul(ab, c) == f.mul(a, f.mul(b, c)) &&
                 f.add(sum, c) == f.add(a, f.add(b, c));
          }
        }
      }
    }
    Add(&r, "field laws", ok, Str(fields) + " fields up to 512");
  }
  {
    bool ok = true;
    int64_t checked = 0;
    for (const char* s : {"W:3:3", "Q:4:3", "Q-:5:2", "H:3:q2=4", "H:4:q2=4", "Q+:5:2"}) {
      PolarPtr ps = PolarSpace::Make(ParseDescriptor(s));
      const Field& f = ps->field();
      for (int k = 1; k <= ps->n(); ++k) {
        for (const Subspace& sub : EnumerateSubspaces(f, ps->n(), k - 1)) {
          const Subspace perp = ps->Perp(sub);
          ok = ok && perp.dim() == ps->n() + 1 - k && ps->Perp(perp).rows == sub.rows;
          ++checked;
        }
      }
    }
    Add(&r, "polarity involution", ok, Str(checked) + " subspaces");
  }
  {
    bool ok = true;
    std::string detail;
    for (auto [r0, q, deg] : {std::tuple{2, 2, 2}, {2, 3, 2}, {2, 4, 2}, {2, 2, 3}, {3, 2, 2}}) {
      FieldPtr small = Field::OfOrder(q);
      FieldPtr big = Field::Get(small->p(), small->e() * deg);
      FieldReduction red(r0, big, small);
      const int n = r0 * deg - 1;
      std::vector<Subspace> spread;
      for (const Vec& v : EnumeratePoints(*big, r0 - 1)) spread.push_back(red.MapPoint(v));
      std::vector<int> cover(ProjectiveSpace(n, small).num_points(), 0);
      ProjectiveSpace pg(n, small);
      for (const Subspace& s : spread) {
        ok = ok && s.dim() == deg;
        for (int32_t i : pg.PointsOf(s)) ++cover[i];
      }
      ok = ok && std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
      detail += (detail.empty() ? "" : ", ") + Str(spread.size()) + " in PG(" + Str(n) + "," +
                Str(q) + ")";
    }
    Add(&r, "Desarguesian spreads", ok, detail);
  }
  {
    bool ok = true;
    int spaces = 0;
    for (const char* s : {"W:3:2", "W:3:3", "W:3:4", "W:3:5", "Q+:3:2", "Q+:3:3", "Q+:3:4",
                          "Q-:5:2", "Q-:5:3", "Q-:5:4", "Q:4:2", "Q:4:3", "Q:4:4", "H:3:q2=4",
                          "H:3:q2=9", "H:4:q2=4"}) {
      PolarPtr ps = PolarSpace::Make(ParseDescriptor(s));
      const AxiomReport a = VerifyPolarAxioms(*ps);
      // Order (s, t) of the quadrangle, q the order of the base field of
      // the form (the square root for Hermitian spaces).
      const int64_t b = static_cast<int64_t>(ps->base());
      int64_t s_want = b, t_want = b;
      switch (ps->family()) {
        case Family::kQPlus: t_want = 1; break;
        case Family::kQMinus: t_want = b * b; break;
        case Family::kH: {
          const int64_t q = ps->field().sqrt_q();
          s_want = b;
          t_want = ps->n() == 3 ? q : q * b;
          break;
        }
        default: break;
      }
      ok = ok && a.ok() && a.is_gq && a.higman && a.gq_s == s_want && a.gq_t == t_want;
      ++spaces;
    }
    Add(&r, "polar space axioms", ok, Str(spaces) + " rank-2 spaces");
  }
  {
    // Collinearity graphs of the rank-2 spaces join the graphs certified
    // by the other criteria, so this check stands alone.
    bool ok = true;
    for (const char* s : {"W:3:2", "W:3:3", "Q-:5:2", "Q:4:3", "H:3:q2=4", "H:4:q2=4"}) {
      PolarPtr ps = PolarSpace::Make(ParseDescriptor(s));
      const Graph g = CollinearityGraph(*ps);
      const SrgReport a = SrgCheck(g);
      ok = ok && a.srg && a.params == CollinearityParams(ps->d(), ps->e2(), ps->base());
      SrgRegistry().emplace_back(ps->Name() + " collinearity", g);
    }
    for (const auto& [name, g] : SrgRegistry()) {
      const SrgReport a = SrgCheck(g);
      const SrgReport b = SrgCheck(g.Complement());
      ok = ok && b.srg && b.params == ComplementParams(a.params);
    }
    Add(&r, "complement law", ok && !SrgRegistry().empty(),
        Str(SrgRegistry().size()) + " certified graphs");
  }
  {
    PolarPtr h = PolarSpace::Make(Family::kH, 3, 9);
    const SystemSearchResult s = SegreHemisystem(*h);
    std::vector<char> in(h->Generators().size(), 0);
    for (int i : s.members) in[i] = 1;
    std::set<int64_t> values;
    for (size_t p = 0; p < h->num_points(); ++p) {
      int64_t n = 0;
      for (int g : GeneratorsThrough(*h, SpanPoints(h->field(), 3, {h->point(p)}))) n += in[g];
      values.insert(n);
    }
    Add(&r, "hemisystem meets pencils", values == std::set<int64_t>{2}, Join(values));
  }
  return r;
}

}  // namespace

bool CriterionResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

bool CriterionResult::only_known_gaps() const {
  for (const Check& c : checks) {
    if (!c.ok && std::find(known_gaps.begin(), known_gaps.end(), c.name) == known_gaps.end()) {
      return false;
    }
  }
  return !checks.empty();
}

const std::vector<std::pair<int, Criterion>>& Criteria() {
  static const auto* all = new std::vector<std::pair<int, Criterion>>{
      {1, Counting}, {2, Segre},    {3, Nu34},   {4, Nu54},   {5, Ovoids},     {6, Lift},
      {7, Elliptic}, {8, Spectral}, {9, Codes},  {10, Unitals}, {11, Properties}};
  return *all;
}

std::string FormatLine(const CriterionResult& r) {
  std::string line = std::string(r.passed() ? "PASS" : "FAIL") + "  " +
                     (r.id < 10 ? " " : "") + Str(r.id) + "  " + r.title;
  for (const Check& c : r.checks) {
    if (!c.ok) line += " | " + c.name + ": " + c.detail;
  }
  char t[32];
  std::snprintf(t, sizeof(t), " (%.1fs)", r.seconds);
  return line + t;
}

std::vector<CriterionResult> Run(const std::vector<int>& ids, std::ostream& out,
                                 bool verbose) {
  std::vector<CriterionResult> results;
  for (const auto& [id, fn] : Criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "criterion " + Str(id);
      Add(&r, "exception", false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << FormatLine(r) << "\n";
    if (verbose) {
      for (const Check& c : r.checks) {
        out << "        " << (c.ok ? "ok  " : "FAIL") << " " << c.name << ": " << c.detail
            << "\n";
      }
    }
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace pgeom::acceptance
