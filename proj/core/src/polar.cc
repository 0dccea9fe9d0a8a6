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

#include "pgeom/polar.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pgeom {

FormOps::FormOps(const Form& form) : form_(form) {
  const Field& f = *form_.field;
  const int m = form_.n + 1;
  if (static_cast<int>(form_.gram.size()) != m) {
    throw std::invalid_argument("Gram matrix has the wrong size");
  }
  hermitian_ = form_.kind == FormKind::kHermitian;
  if (hermitian_ && f.e() % 2 != 0) {
    throw FieldError("Hermitian forms need a field of square order");
  }
  polar_.assign(m, Vec(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (form_.kind == FormKind::kQuadratic) {
        if (i == j) {
          polar_[i][j] = f.add(form_.gram[i][i], form_.gram[i][i]);
        } else if (i < j) {
          polar_[i][j] = form_.gram[i][j];
        } else {
          polar_[i][j] = form_.gram[j][i];
        }
      } else {
        polar_[i][j] = form_.gram[i][j];
      }
    }
  }
}

Vec FormOps::PerpVector(const Vec& b) const {
  const Field& f = field();
  const int m = form_.n + 1;
  Vec w(m, 0);
  for (int i = 0; i < m; ++i) {
    Elt s = 0;
    for (int j = 0; j < m; ++j) {
      if (polar_[i][j] != 0 && b[j] != 0) {
        s = f.add(s, f.mul(polar_[i][j], Sigma(b[j])));
      }
    }
    w[i] = s;
  }
  return w;
}

Elt FormOps::Beta(const Vec& a, const Vec& b) const {
  return Dot(field(), a, PerpVector(b));
}

Elt FormOps::Value(const Vec& x) const {
  const Field& f = field();
  if (form_.kind == FormKind::kAlternating) return 0;
  if (form_.kind == FormKind::kHermitian) return Beta(x, x);
  const int m = form_.n + 1;
  Elt s = 0;
  for (int i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (int j = i; j < m; ++j) {
      if (form_.gram[i][j] != 0 && x[j] != 0) {
        s = f.add(s, f.mul(form_.gram[i][j], f.mul(x[i], x[j])));
      }
    }
  }
  return s;
}

bool FormOps::Isotropic(const Vec& x) const {
  return form_.kind == FormKind::kAlternating || Value(x) == 0;
}

std::string FamilyTag(Family f) {
  switch (f) {
    case Family::kW: return "W";
    case Family::kQPlus: return "Q+";
    case Family::kQ: return "Q";
    case Family::kQMinus: return "Q-";
    case Family::kH: return "H";
  }
  return "?";
}

Family ParseFamilyTag(const std::string& tag) {
  if (tag == "W") return Family::kW;
  if (tag == "Q+") return Family::kQPlus;
  if (tag == "Q") return Family::kQ;
  if (tag == "Q-") return Family::kQMinus;
  if (tag == "H") return Family::kH;
  throw std::invalid_argument("unknown polar family: " + tag);
}

std::string Descriptor::ToString() const {
  std::string s = FamilyTag(family) + ":" + std::to_string(n) + ":";
  if (family == Family::kH) s += "q2=";
  return s + std::to_string(q);
}

Descriptor ParseDescriptor(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() != 3) throw std::invalid_argument("bad descriptor: " + s);
  Descriptor d;
  d.family = ParseFamilyTag(parts[0]);
  try {
    d.n = std::stoi(parts[1]);
    std::string qs = parts[2];
    if (qs.rfind("q2=", 0) == 0) qs = qs.substr(3);
    d.q = std::stoull(qs);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad descriptor: " + s);
  }
  return d;
}

void FamilyRank(Family family, int n, int* d, int* e2) {
  switch (family) {
    case Family::kW:
      if (n % 2 == 0) throw std::invalid_argument("W needs odd n");
      *d = (n + 1) / 2; *e2 = 2;
      return;
    case Family::kQPlus:
      if (n % 2 == 0) throw std::invalid_argument("Q+ needs odd n");
      *d = (n + 1) / 2; *e2 = 0;
      return;
    case Family::kQ:
      if (n % 2 != 0) throw std::invalid_argument("Q needs even n");
      *d = n / 2; *e2 = 2;
      return;
    case Family::kQMinus:
      if (n % 2 == 0) throw std::invalid_argument("Q- needs odd n");
      *d = (n - 1) / 2; *e2 = 4;
      return;
    case Family::kH:
      if (n % 2 == 1) {
        *d = (n + 1) / 2; *e2 = 1;
      } else {
        *d = n / 2; *e2 = 3;
      }
      return;
  }
}

std::pair<Elt, Elt> LeastIrreducibleQuadratic(const Field& f) {
  for (Elt b = 0; b < f.q(); ++b) {
    for (Elt c = 0; c < f.q(); ++c) {
      bool root = false;
      for (Elt t = 0; t < f.q() && !root; ++t) {
        root = f.add(f.add(f.mul(t, t), f.mul(b, t)), c) == 0;
      }
      if (!root) return {b, c};
    }
  }
  throw FieldError("no irreducible quadratic");
}

Form CanonicalForm(Family family, int n, FieldPtr field) {
  int d = 0, e2 = 0;
  FamilyRank(family, n, &d, &e2);
  const Field& f = *field;
  Form form;
  form.n = n;
  form.field = field;
  form.gram.assign(n + 1, Vec(n + 1, 0));
  switch (family) {
    case Family::kW:
      form.kind = FormKind::kAlternating;
      for (int i = 0; i + 1 <= n; i += 2) {
        form.gram[i][i + 1] = 1;
        form.gram[i + 1][i] = f.neg(1);
      }
      break;
    case Family::kQPlus:
    case Family::kQ:
    case Family::kQMinus: {
      form.kind = FormKind::kQuadratic;
      const int pairs = family == Family::kQMinus ? d : (family == Family::kQ ? d : d);
      for (int i = 0; i < pairs; ++i) form.gram[2 * i][2 * i + 1] = 1;
      if (family == Family::kQ) form.gram[n][n] = 1;
      if (family == Family::kQMinus) {
        const auto [b, c] = LeastIrreducibleQuadratic(f);
        form.gram[n - 1][n - 1] = 1;
        form.gram[n - 1][n] = b;
        form.gram[n][n] = c;
      }
      break;
    }
    case Family::kH:
      if (f.e() % 2 != 0) throw FieldError("H needs a field of square order");
      form.kind = FormKind::kHermitian;
      for (int i = 0; i <= n; ++i) form.gram[i][i] = 1;
      break;
  }
  return form;
}

mpz_class HalfPow(uint64_t b, int num) {
  if (num < 0) throw std::invalid_argument("negative exponent");
  mpz_class r;
  if (num % 2 == 0) {
    mpz_ui_pow_ui(r.get_mpz_t(), b, num / 2);
    return r;
  }
  mpz_class root, rem, bb = static_cast<unsigned long>(b);
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), bb.get_mpz_t());
  if (rem != 0) throw std::invalid_argument("half-integer power of a non-square");
  mpz_pow_ui(r.get_mpz_t(), root.get_mpz_t(), num);
  return r;
}

mpz_class PolarSubspaceCount(int d, int e2, uint64_t b, int k) {
  if (k < 0 || k > d) return 0;
  mpz_class r = GaussianBinomial(d, k, static_cast<unsigned long>(b));
  for (int i = 1; i <= k; ++i) r *= HalfPow(b, 2 * (d - i) + e2) + 1;
  return r;
}

mpz_class PolarPointCount(int d, int e2, uint64_t b) {
  return Theta(d - 1, static_cast<unsigned long>(b)) * OvoidNumber(d, e2, b);
}

mpz_class OvoidNumber(int d, int e2, uint64_t b) {
  return HalfPow(b, 2 * (d - 1) + e2) + 1;
}

PolarPtr PolarSpace::Make(Family family, int n, uint64_t q) {
  FieldPtr f = Field::OfOrder(q);
  int d = 0, e2 = 0;
  FamilyRank(family, n, &d, &e2);
  return PolarPtr(new PolarSpace(CanonicalForm(family, n, f), family, d, e2));
}

namespace {

// Radical {x : x^T M = 0} of a square matrix.
Subspace LeftKernel(const Field& f, const Mat& m) {
  const int k = static_cast<int>(m.size());
  Mat cols(k, Vec(k, 0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) cols[b][a] = m[a][b];
  }
  return NullSpace(f, k - 1, cols);
}

}  // namespace

PolarPtr PolarSpace::FromForm(const Form& form) {
  const Field& f = *form.field;
  const int n = form.n;
  FormOps ops(form);
  // Non-degeneracy.
  Subspace rad = LeftKernel(f, ops.polar_gram());
  if (form.kind == FormKind::kQuadratic) {
    if (f.p() == 2 && n % 2 == 0) {
      if (rad.dim() != 1 || ops.Value(rad.rows[0]) == 0) {
        throw std::invalid_argument("degenerate quadratic form");
      }
    } else if (rad.dim() != 0) {
      throw std::invalid_argument("degenerate quadratic form");
    }
  } else {
    if (rad.dim() != 0) throw std::invalid_argument("degenerate form");
    const Mat& g = form.gram;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        if (form.kind == FormKind::kAlternating) {
          if (i == j && g[i][i] != 0) throw std::invalid_argument("not alternating");
          if (g[i][j] != f.neg(g[j][i])) throw std::invalid_argument("not alternating");
        } else if (g[j][i] != f.conj(g[i][j])) {
          throw std::invalid_argument("not Hermitian");
        }
      }
    }
  }
  Family family = Family::kW;
  switch (form.kind) {
    case FormKind::kAlternating:
      family = Family::kW;
      break;
    case FormKind::kHermitian:
      family = Family::kH;
      break;
    case FormKind::kQuadratic: {
      if (n % 2 == 0) {
        family = Family::kQ;
      } else {
        ProjectiveSpace pg(n, form.field);
        int64_t count = 0;
        for (size_t i = 0; i < pg.num_points(); ++i) {
          if (ops.Isotropic(pg.point(i))) ++count;
        }
        int d = 0, e2 = 0;
        FamilyRank(Family::kQPlus, n, &d, &e2);
        family = PolarPointCount(d, e2, f.q()) == count ? Family::kQPlus
                                                        : Family::kQMinus;
      }
      break;
    }
  }
  int d = 0, e2 = 0;
  FamilyRank(family, n, &d, &e2);
  PolarPtr ps(new PolarSpace(form, family, d, e2));
  if (PolarPointCount(d, e2, f.q()) != static_cast<unsigned long>(ps->num_points())) {
    throw std::logic_error("form classification failed");
  }
  return ps;
}

PolarSpace::PolarSpace(const Form& form, Family family, int d, int e2)
    : ops_(form), pg_(form.n, form.field), family_(family), d_(d), e2_(e2) {
  polar_of_ambient_.assign(pg_.num_points(), -1);
  for (size_t i = 0; i < pg_.num_points(); ++i) {
    Vec v = pg_.point(i);
    if (ops_.Isotropic(v)) {
      polar_of_ambient_[i] = static_cast<int32_t>(points_.size());
      ambient_.push_back(static_cast<int32_t>(i));
      points_.push_back(std::move(v));
    }
  }
}

std::string PolarSpace::Name() const {
  return FamilyTag(family_) + "(" + std::to_string(n()) + "," +
         std::to_string(base()) + ")";
}

int32_t PolarSpace::index_of(const Vec& v) const {
  const int64_t a = pg_.index_of(v);
  return a < 0 ? -1 : polar_of_ambient_[a];
}

int32_t PolarSpace::index_of_ambient(int64_t ambient) const {
  return polar_of_ambient_[ambient];
}

bool PolarSpace::Collinear(size_t i, size_t j) const {
  return ops_.Beta(points_[i], points_[j]) == 0;
}

const std::vector<Bitset>& PolarSpace::PerpSets() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!perp_sets_.empty() || points_.empty()) return perp_sets_;
  const size_t np = points_.size();
  std::vector<Bitset> sets(np, Bitset(np));
  const Field& f = field();
  for (size_t i = 0; i < np; ++i) {
    const Vec w = ops_.PerpVector(points_[i]);
    for (size_t j = i; j < np; ++j) {
      if (Dot(f, points_[j], w) == 0) {
        sets[i].set(j);
        sets[j].set(i);
      }
    }
  }
  perp_sets_ = std::move(sets);
  return perp_sets_;
}

Subspace PolarSpace::Perp(const Subspace& s) const {
  Mat rows;
  for (const Vec& r : s.rows) {
    // beta(x, r) = 0 for all x: x . PerpVector(r) = 0.
    rows.push_back(ops_.PerpVector(r));
  }
  if (rows.empty()) {
    Mat all;
    for (int i = 0; i <= n(); ++i) {
      Vec e(n() + 1, 0);
      e[i] = 1;
      all.push_back(e);
    }
    return Rref(field(), n(), all);
  }
  return NullSpace(field(), n(), rows);
}

bool PolarSpace::TotallyIsotropic(const Subspace& s) const {
  for (size_t a = 0; a < s.rows.size(); ++a) {
    if (!ops_.Isotropic(s.rows[a])) return false;
    for (size_t b = a + 1; b < s.rows.size(); ++b) {
      if (ops_.Beta(s.rows[a], s.rows[b]) != 0) return false;
    }
  }
  return true;
}

std::vector<int32_t> PolarSpace::IsotropicPointsIn(const Subspace& s) const {
  std::vector<int32_t> out;
  for (const Vec& v : SubspacePoints(field(), s)) {
    if (ops_.Isotropic(v)) out.push_back(index_of(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PolarSpace::IsTangentLine(const Subspace& line) const {
  if (line.dim() != 2) throw std::invalid_argument("not a line");
  return IsotropicPointsIn(line).size() == 1;
}

std::vector<int32_t> PolarSpace::TangentCone(const Vec& p) const {
  std::vector<int32_t> out;
  const int32_t self = index_of(p);
  for (size_t i = 0; i < points_.size(); ++i) {
    if (static_cast<int32_t>(i) == self) continue;
    Subspace line = SpanPoints(field(), n(), {p, points_[i]});
    const size_t c = IsotropicPointsIn(line).size();
    const size_t all = field().q() + 1;
    if (self >= 0 ? c == all : c == 1) out.push_back(static_cast<int32_t>(i));
  }
  if (self >= 0) {
    out.push_back(self);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<Subspace> PolarSpace::EnumerateIso(int k, uint64_t max_count) const {
  std::vector<Subspace> out;
  if (k <= 0) {
    if (k == 0) out.push_back(Subspace{n(), {}});
    return out;
  }
  if (k > d_) return out;
  const std::vector<Bitset>& perp = PerpSets();
  const Field& f = field();
  const size_t np = points_.size();
  const int len = n() + 1;

  // Each subspace is generated from its greedy basis: p_1 < p_2 < ... where
  // p_{i+1} is the least point of <p_1..p_{i+1}> outside <p_1..p_i>.
  std::vector<int32_t> chosen;
  std::function<void(const std::vector<Vec>&, const Bitset&, const Bitset&)> dfs;
  dfs = [&](const std::vector<Vec>& span_vecs, const Bitset& span_pts,
            const Bitset& cand) {
    if (static_cast<int>(chosen.size()) == k) {
      Mat rows;
      for (int32_t c : chosen) rows.push_back(points_[c]);
      out.push_back(Rref(f, n(), std::move(rows)));
      if (out.size() > max_count) throw BudgetError("isotropic subspace budget");
      return;
    }
    const size_t start = chosen.empty() ? 0 : chosen.back() + 1;
    for (size_t p = cand.next(start); p < np; p = cand.next(p + 1)) {
      if (span_pts.test(p)) continue;
      const Vec& pv = points_[p];
      bool minimal = true;
      std::vector<int32_t> new_pts;
      new_pts.reserve(span_vecs.size());
      for (const Vec& u : span_vecs) {
        Vec w(len);
        for (int j = 0; j < len; ++j) w[j] = f.add(pv[j], u[j]);
        Normalize(f, &w);
        const int32_t idx = index_of(w);
        if (idx < static_cast<int32_t>(p)) {
          minimal = false;
          break;
        }
        new_pts.push_back(idx);
      }
      if (!minimal) continue;
      std::vector<Vec> next_vecs;
      next_vecs.reserve(span_vecs.size() * f.q());
      for (Elt lam = 0; lam < f.q(); ++lam) {
        for (const Vec& u : span_vecs) {
          Vec w(len);
          for (int j = 0; j < len; ++j) w[j] = f.add(f.mul(lam, pv[j]), u[j]);
          next_vecs.push_back(std::move(w));
        }
      }
      Bitset next_pts = span_pts;
      for (int32_t x : new_pts) next_pts.set(x);
      Bitset next_cand = cand;
      next_cand &= perp[p];
      chosen.push_back(static_cast<int32_t>(p));
      dfs(next_vecs, next_pts, next_cand);
      chosen.pop_back();
    }
  };
  Bitset all(np);
  for (size_t i = 0; i < np; ++i) all.set(i);
  dfs({Vec(len, 0)}, Bitset(np), all);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Subspace>& PolarSpace::Generators() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (generators_ready_) return generators_;
  }
  std::vector<Subspace> gens = EnumerateIso(d_, 20'000'000);
  std::vector<std::vector<int32_t>> pts;
  pts.reserve(gens.size());
  for (const Subspace& g : gens) {
    std::vector<int32_t> a = pg_.PointsOf(g);
    for (int32_t& x : a) x = polar_of_ambient_[x];
    std::sort(a.begin(), a.end());
    pts.push_back(std::move(a));
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!generators_ready_) {
    generators_ = std::move(gens);
    generator_points_ = std::move(pts);
    generators_ready_ = true;
  }
  return generators_;
}

const std::vector<std::vector<int32_t>>& PolarSpace::GeneratorPoints() const {
  Generators();
  return generator_points_;
}

int PolarSpace::ComputedWittIndex() const {
  if (points_.empty()) return 0;
  const std::vector<Bitset>& perp = PerpSets();
  const Field& f = field();
  Mat basis;
  Bitset cand(points_.size());
  for (size_t i = 0; i < points_.size(); ++i) cand.set(i);
  while (true) {
    bool grew = false;
    for (size_t p = cand.first(); p < points_.size(); p = cand.next(p + 1)) {
      Mat trial = basis;
      trial.push_back(points_[p]);
      if (Rank(f, trial) > static_cast<int>(basis.size())) {
        basis = std::move(trial);
        cand &= perp[p];
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  return static_cast<int>(basis.size());
}

SectionInfo PolarSpace::Section(const Subspace& s) const {
  const Field& f = field();
  SectionInfo info;
  const int k = s.dim();
  std::vector<int32_t> pts = IsotropicPointsIn(s);
  info.points = static_cast<int64_t>(pts.size());
  if (k == 0) {
    info.description = "empty";
    return info;
  }
  Mat m(k, Vec(k, 0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) m[a][b] = ops_.Beta(s.rows[a], s.rows[b]);
  }
  Subspace rad = LeftKernel(f, m);
  auto to_ambient = [&](const Vec& x) {
    Vec v(n() + 1, 0);
    for (int a = 0; a < k; ++a) {
      if (x[a] == 0) continue;
      for (int j = 0; j <= n(); ++j) v[j] = f.add(v[j], f.mul(x[a], s.rows[a][j]));
    }
    return v;
  };
  Subspace vertex = rad;
  if (form().kind == FormKind::kQuadratic && f.p() == 2 && rad.dim() > 0) {
    Mat zeros;
    for (const Vec& x : SubspacePoints(f, rad)) {
      if (ops_.Value(to_ambient(x)) == 0) zeros.push_back(x);
    }
    vertex = Rref(f, k - 1, zeros);
  }
  const int t = vertex.dim();
  const int mdim = k - t;
  info.vertex_dim = t;
  info.base_n = mdim - 1;
  std::ostringstream desc;
  if (t > 0) desc << "cone with vertex PG(" << t - 1 << "," << f.q() << ") over ";
  if (mdim == 0) {
    desc << "nothing (totally singular)";
    info.description = desc.str();
    return info;
  }
  // Points of the base: |section| = theta_{t-1} + q^t |base|.
  mpz_class qt;
  mpz_ui_pow_ui(qt.get_mpz_t(), f.q(), t);
  const mpz_class base_pts = (mpz_class(info.points) - Theta(t - 1, f.q())) / qt;
  Family fam;
  switch (form().kind) {
    case FormKind::kAlternating: fam = Family::kW; break;
    case FormKind::kHermitian: fam = Family::kH; break;
    default:
      if ((mdim - 1) % 2 == 0) {
        fam = Family::kQ;
      } else {
        int d = 0, e2 = 0;
        FamilyRank(Family::kQPlus, mdim - 1, &d, &e2);
        fam = PolarPointCount(d, e2, f.q()) == base_pts ? Family::kQPlus
                                                         : Family::kQMinus;
      }
  }
  int d = 0, e2 = 0;
  FamilyRank(fam, mdim - 1, &d, &e2);
  info.base_family = fam;
  info.base_d = d;
  desc << FamilyTag(fam) << "(" << mdim - 1 << "," << f.q() << ")";
  info.description = desc.str();
  return info;
}

AxiomReport VerifyPolarAxioms(const PolarSpace& ps) {
  AxiomReport r;
  const size_t np = ps.num_points();
  const std::vector<Bitset>& perp = ps.PerpSets();
  std::vector<Subspace> lines = ps.d() == 2 ? ps.Generators() : ps.EnumerateIso(2);
  std::vector<Bitset> line_pts;
  line_pts.reserve(lines.size());
  r.lines_have_three_points = true;
  for (const Subspace& l : lines) {
    Bitset b(np);
    for (int32_t x : ps.IsotropicPointsIn(l)) b.set(x);
    if (b.count() < 3) r.lines_have_three_points = false;
    line_pts.push_back(std::move(b));
  }
  r.no_point_collinear_with_all = true;
  for (size_t i = 0; i < np; ++i) {
    if (perp[i].count() == np) r.no_point_collinear_with_all = false;
  }
  // Greedy maximal extension from every point reaches the same rank.
  r.finite_rank = true;
  for (size_t i = 0; i < np && r.finite_rank; ++i) {
    Bitset cand = perp[i];
    Mat basis = {ps.point(i)};
    while (true) {
      bool grew = false;
      for (size_t p = cand.first(); p < np; p = cand.next(p + 1)) {
        Mat trial = basis;
        trial.push_back(ps.point(p));
        if (Rank(ps.field(), trial) > static_cast<int>(basis.size())) {
          basis = std::move(trial);
          cand &= perp[p];
          grew = true;
          break;
        }
      }
      if (!grew) break;
    }
    if (static_cast<int>(basis.size()) != ps.d()) r.finite_rank = false;
  }
  r.one_or_all = true;
  bool exactly_one = true;
  for (size_t li = 0; li < lines.size() && r.one_or_all; ++li) {
    const size_t on_line = line_pts[li].count();
    for (size_t x = 0; x < np; ++x) {
      if (line_pts[li].test(x)) continue;
      ++r.pairs_checked;
      const size_t c = perp[x].and_count(line_pts[li]);
      if (c != 1) exactly_one = false;
      if (c != 1 && c != on_line) {
        r.one_or_all = false;
        r.witness_point = static_cast<int32_t>(x);
        r.witness_line = static_cast<int32_t>(li);
        break;
      }
    }
  }
  if (ps.d() == 2 && r.one_or_all && exactly_one && !lines.empty()) {
    const size_t s1 = line_pts[0].count();
    bool uniform = true;
    for (const Bitset& b : line_pts) uniform = uniform && b.count() == s1;
    std::vector<int64_t> per_point(np, 0);
    for (const Bitset& b : line_pts) b.for_each([&](size_t x) { ++per_point[x]; });
    for (int64_t c : per_point) uniform = uniform && c == per_point[0];
    if (uniform) {
      r.is_gq = true;
      r.gq_s = static_cast<int64_t>(s1) - 1;
      r.gq_t = per_point[0] - 1;
      const int64_t s = r.gq_s, t = r.gq_t;
      r.higman = s == 1 || t == 1 || (s <= t * t && t <= s * s);
    }
  }
  return r;
}

}  // namespace pgeom
