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

#include "pgeom/projspace.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pgeom {

bool Normalize(const Field& f, Vec* v) {
  for (size_t i = 0; i < v->size(); ++i) {
    if ((*v)[i] != 0) {
      if ((*v)[i] == 1) return true;
      const Elt c = f.inv((*v)[i]);
      for (size_t j = i; j < v->size(); ++j) (*v)[j] = f.mul((*v)[j], c);
      return true;
    }
  }
  return false;
}

Vec VecAdd(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec VecScale(const Field& f, Elt c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

Elt Dot(const Field& f, const Vec& a, const Vec& b) {
  Elt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Subspace Rref(const Field& f, int n, Mat rows) {
  const int cols = n + 1;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const Elt inv = f.inv(rows[r][c]);
    for (int j = c; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elt m = f.neg(rows[i][c]);
      for (int j = c; j < cols; ++j) {
        rows[i][j] = f.add(rows[i][j], f.mul(m, rows[r][j]));
      }
    }
    ++r;
  }
  rows.resize(r);
  return Subspace{n, std::move(rows)};
}

int Rank(const Field& f, Mat rows) {
  if (rows.empty()) return 0;
  const int n = static_cast<int>(rows[0].size()) - 1;
  return Rref(f, n, std::move(rows)).dim();
}

Subspace NullSpace(const Field& f, int n, const Mat& rows) {
  Subspace s = Rref(f, n, rows);
  const int cols = n + 1;
  std::vector<int> pivot_of_col(cols, -1);
  for (int i = 0; i < s.dim(); ++i) {
    for (int c = 0; c < cols; ++c) {
      if (s.rows[i][c] != 0) {
        pivot_of_col[c] = i;
        break;
      }
    }
  }
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (int pc = 0; pc < cols; ++pc) {
      const int i = pivot_of_col[pc];
      if (i >= 0) v[pc] = f.neg(s.rows[i][c]);
    }
    basis.push_back(std::move(v));
  }
  return Rref(f, n, std::move(basis));
}

Subspace Span(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.n != b.n) throw std::invalid_argument("ambient mismatch");
  Mat rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return Rref(f, a.n, std::move(rows));
}

Subspace SpanPoints(const Field& f, int n, const std::vector<Vec>& pts) {
  return Rref(f, n, pts);
}

Subspace Meet(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.n != b.n) throw std::invalid_argument("ambient mismatch");
  // (a meet b) = annihilator of (ann a + ann b).
  Subspace na = NullSpace(f, a.n, a.rows);
  Subspace nb = NullSpace(f, b.n, b.rows);
  Mat rows = na.rows;
  rows.insert(rows.end(), nb.rows.begin(), nb.rows.end());
  if (rows.empty()) {
    Mat all;
    for (int i = 0; i <= a.n; ++i) {
      Vec e(a.n + 1, 0);
      e[i] = 1;
      all.push_back(e);
    }
    return Rref(f, a.n, all);
  }
  return NullSpace(f, a.n, rows);
}

bool Contains(const Field& f, const Subspace& s, const Vec& v) {
  Mat rows = s.rows;
  rows.push_back(v);
  return Rank(f, std::move(rows)) == s.dim();
}

bool ContainsSubspace(const Field& f, const Subspace& big,
                      const Subspace& small) {
  return Span(f, big, small).dim() == big.dim();
}

std::vector<Vec> SubspacePoints(const Field& f, const Subspace& s) {
  std::vector<Vec> out;
  const int k = s.dim();
  const uint32_t q = f.q();
  const int len = s.n + 1;
  for (int lead = 0; lead < k; ++lead) {
    // Coefficient 1 on row `lead`, anything on later rows.
    const int free = k - lead - 1;
    uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    std::vector<Elt> c(free, 0);
    for (uint64_t t = 0; t < total; ++t) {
      uint64_t r = t;
      for (int i = free - 1; i >= 0; --i) {
        c[i] = static_cast<Elt>(r % q);
        r /= q;
      }
      Vec v = s.rows[lead];
      for (int i = 0; i < free; ++i) {
        if (c[i] == 0) continue;
        const Vec& row = s.rows[lead + 1 + i];
        for (int j = 0; j < len; ++j) v[j] = f.add(v[j], f.mul(c[i], row[j]));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

mpz_class GaussianBinomial(int r, int h, const mpz_class& q) {
  if (h < 0 || h > r) return 0;
  mpz_class num = 1, den = 1;
  for (int i = 0; i < h; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), r - i);
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

mpz_class Theta(int n, const mpz_class& q) {
  if (n < 0) return 0;
  mpz_class a;
  mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n + 1);
  return (a - 1) / (q - 1);
}

namespace {

mpz_class Pow(uint64_t q, uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, k);
  return r;
}

uint64_t Gcd(uint64_t a, uint64_t b) { return std::gcd(a, b); }

}  // namespace

GroupOrder ComputeGroupOrder(GroupFamily family, int r, uint64_t q) {
  int p = 0, h = 0;
  if (!PrimePower(q, &p, &h)) throw std::invalid_argument("q not a prime power");
  if (r < 1) throw std::invalid_argument("dimension must be positive");
  auto gl = [&](int rr) {
    mpz_class o = Pow(q, static_cast<uint64_t>(rr) * (rr - 1) / 2);
    for (int j = 1; j <= rr; ++j) o *= Pow(q, j) - 1;
    return o;
  };
  auto sp = [&](int m) {
    mpz_class o = Pow(q, static_cast<uint64_t>(m) * m);
    for (int i = 1; i <= m; ++i) o *= Pow(q, 2 * i) - 1;
    return o;
  };
  auto gu = [&](int rr) {
    mpz_class o = Pow(q, static_cast<uint64_t>(rr) * (rr - 1) / 2);
    for (int i = 1; i <= rr; ++i) {
      o *= (i % 2 == 0) ? mpz_class(Pow(q, i) - 1) : mpz_class(Pow(q, i) + 1);
    }
    return o;
  };
  GroupOrder out{family, r, q, 0};
  switch (family) {
    case GroupFamily::kGL: out.order = gl(r); break;
    case GroupFamily::kSL: out.order = gl(r) / (q - 1); break;
    case GroupFamily::kPGL: out.order = gl(r) / (q - 1); break;
    case GroupFamily::kPSL:
      out.order = gl(r) / (q - 1) / Gcd(r, q - 1);
      break;
    case GroupFamily::kPGammaL: out.order = gl(r) / (q - 1) * h; break;
    case GroupFamily::kSp:
    case GroupFamily::kPSp: {
      if (r % 2 != 0) throw std::invalid_argument("symplectic needs even r");
      out.order = sp(r / 2);
      if (family == GroupFamily::kPSp) out.order /= Gcd(2, q - 1);
      break;
    }
    case GroupFamily::kGU: out.order = gu(r); break;
    case GroupFamily::kSU: out.order = gu(r) / (q + 1); break;
    case GroupFamily::kPGU: out.order = gu(r) / (q + 1); break;
    case GroupFamily::kPSU:
      out.order = gu(r) / (q + 1) / Gcd(r, q + 1);
      break;
    case GroupFamily::kGOPlus:
    case GroupFamily::kGOMinus: {
      if (r % 2 != 0) throw std::invalid_argument("GO+- needs even r");
      const int m = r / 2;
      mpz_class o = 2 * Pow(q, static_cast<uint64_t>(m) * (m - 1));
      o *= family == GroupFamily::kGOPlus ? mpz_class(Pow(q, m) - 1) : mpz_class(Pow(q, m) + 1);
      for (int i = 1; i < m; ++i) o *= Pow(q, 2 * i) - 1;
      out.order = o;
      break;
    }
    case GroupFamily::kGOOdd: {
      if (r % 2 != 1) throw std::invalid_argument("GO odd needs odd r");
      if (q % 2 == 0) {
        out.order = sp((r - 1) / 2);
      } else {
        out.order = 2 * sp((r - 1) / 2);
      }
      break;
    }
  }
  return out;
}

GroupFamily ParseGroupFamily(const std::string& name) {
  static const std::pair<const char*, GroupFamily> kNames[] = {
      {"GL", GroupFamily::kGL},        {"SL", GroupFamily::kSL},
      {"PGL", GroupFamily::kPGL},      {"PSL", GroupFamily::kPSL},
      {"PGammaL", GroupFamily::kPGammaL}, {"Sp", GroupFamily::kSp},
      {"PSp", GroupFamily::kPSp},      {"GU", GroupFamily::kGU},
      {"SU", GroupFamily::kSU},        {"PGU", GroupFamily::kPGU},
      {"PSU", GroupFamily::kPSU},      {"GO+", GroupFamily::kGOPlus},
      {"GO-", GroupFamily::kGOMinus},  {"GO", GroupFamily::kGOOdd},
  };
  for (const auto& [n, fam] : kNames) {
    if (name == n) return fam;
  }
  throw std::invalid_argument("unsupported group family: " + name);
}

ProjectiveSpace::ProjectiveSpace(int n, FieldPtr field)
    : n_(n), field_(std::move(field)) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  const uint64_t q = field_->q();
  uint64_t total = 1;
  for (int i = 0; i <= n; ++i) {
    if (total > (uint64_t{1} << 40) / q) throw BudgetError("PG(n,q) too large");
    total *= q;
  }
  num_points_ = (total - 1) / (q - 1);
  if (num_points_ > 50'000'000) throw BudgetError("PG(n,q) too large");
  codes_.reserve(num_points_);
  // Vectors (0,..,0,1,*,..,*): leading 1 at position i.
  for (int lead = n; lead >= 0; --lead) {
    uint64_t tail = 1;
    for (int j = lead + 1; j <= n; ++j) tail *= q;
    uint64_t base = 1;
    for (int j = lead + 1; j <= n; ++j) base *= q;
    // code = 1 * q^{n-lead} + tail value.
    for (uint64_t t = 0; t < tail; ++t) codes_.push_back(base + t);
  }
  std::sort(codes_.begin(), codes_.end());
  if (total <= (uint64_t{1} << 26)) {
    dense_.assign(total, -1);
    for (size_t i = 0; i < codes_.size(); ++i) {
      dense_[codes_[i]] = static_cast<int32_t>(i);
    }
  } else {
    sparse_.reserve(codes_.size());
    for (size_t i = 0; i < codes_.size(); ++i) {
      sparse_[codes_[i]] = static_cast<int32_t>(i);
    }
  }
}

uint64_t ProjectiveSpace::Code(const Vec& v) const {
  uint64_t c = 0;
  for (Elt x : v) c = c * field_->q() + x;
  return c;
}

Vec ProjectiveSpace::point(size_t i) const {
  Vec v(n_ + 1);
  uint64_t c = codes_[i];
  for (int j = n_; j >= 0; --j) {
    v[j] = static_cast<Elt>(c % field_->q());
    c /= field_->q();
  }
  return v;
}

int64_t ProjectiveSpace::index_of_normalized(const Vec& v) const {
  const uint64_t c = Code(v);
  if (!dense_.empty()) return dense_[c];
  auto it = sparse_.find(c);
  return it == sparse_.end() ? -1 : it->second;
}

int64_t ProjectiveSpace::index_of(const Vec& v) const {
  Vec w = v;
  if (!Normalize(*field_, &w)) return -1;
  return index_of_normalized(w);
}

std::vector<int32_t> ProjectiveSpace::PointsOf(const Subspace& s) const {
  std::vector<int32_t> out;
  for (const Vec& v : SubspacePoints(*field_, s)) {
    out.push_back(static_cast<int32_t>(index_of_normalized(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> EnumerateSubspaces(const Field& f, int n, int projdim,
                                         uint64_t max_count) {
  const int k = projdim + 1;
  const int cols = n + 1;
  std::vector<Subspace> out;
  if (k < 0 || k > cols) return out;
  if (k == 0) {
    out.push_back(Subspace{n, {}});
    return out;
  }
  const mpz_class expected = GaussianBinomial(cols, k, f.q());
  if (expected > max_count) throw BudgetError("subspace enumeration over budget");
  out.reserve(expected.get_ui());
  std::vector<int> piv(k);
  std::iota(piv.begin(), piv.end(), 0);
  const uint32_t q = f.q();
  while (true) {
    // Free positions: (row i, col c) with c > piv[i] and c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i) {
      for (int c = piv[i] + 1; c < cols; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
          free.emplace_back(i, c);
        }
      }
    }
    uint64_t total = 1;
    for (size_t i = 0; i < free.size(); ++i) total *= q;
    for (uint64_t t = 0; t < total; ++t) {
      Mat rows(k, Vec(cols, 0));
      for (int i = 0; i < k; ++i) rows[i][piv[i]] = 1;
      uint64_t r = t;
      for (int j = static_cast<int>(free.size()) - 1; j >= 0; --j) {
        rows[free[j].first][free[j].second] = static_cast<Elt>(r % q);
        r /= q;
      }
      out.push_back(Subspace{n, std::move(rows)});
    }
    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && piv[i] == cols - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> EnumeratePoints(const Field& f, int n) {
  ProjectiveSpace ps(n, Field::Get(f.p(), f.e()));
  std::vector<Vec> out;
  out.reserve(ps.num_points());
  for (size_t i = 0; i < ps.num_points(); ++i) out.push_back(ps.point(i));
  return out;
}

Vec KleinMap(const Field& f, const Subspace& line) {
  if (line.n != 3 || line.dim() != 2) {
    throw std::invalid_argument("Klein map needs a line of PG(3,q)");
  }
  const Vec& a = line.rows[0];
  const Vec& b = line.rows[1];
  auto p = [&](int i, int j) {
    return f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
  };
  Vec v = {p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)};
  Normalize(f, &v);
  return v;
}

Subspace KleinInverse(const Field& f, const Vec& point) {
  if (point.size() != 6 || KleinQuadric(f, point) != 0) {
    throw std::invalid_argument("not a point of the Klein quadric");
  }
  // Skew matrix P with P[i][j] = p_ij; its rows span the line.
  static const int kIdx[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  Mat rows(4, Vec(4, 0));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const Elt v = point[kIdx[i][j]];
      rows[i][j] = i < j ? v : f.neg(v);
    }
  }
  Subspace s = Rref(f, 3, rows);
  if (s.dim() != 2) throw std::invalid_argument("degenerate Pluecker vector");
  return s;
}

Elt KleinQuadric(const Field& f, const Vec& v) {
  return f.add(f.sub(f.mul(v[0], v[5]), f.mul(v[1], v[4])), f.mul(v[2], v[3]));
}

Elt KleinPolar(const Field& f, const Vec& a, const Vec& b) {
  Elt s = f.add(f.mul(a[0], b[5]), f.mul(a[5], b[0]));
  s = f.sub(s, f.add(f.mul(a[1], b[4]), f.mul(a[4], b[1])));
  s = f.add(s, f.add(f.mul(a[2], b[3]), f.mul(a[3], b[2])));
  return s;
}

FieldReduction::FieldReduction(int r, FieldPtr big, FieldPtr small)
    : r_(r), big_(std::move(big)), small_(std::move(small)) {
  if (big_->p() != small_->p() || big_->e() % small_->e() != 0) {
    throw std::invalid_argument("not a field extension");
  }
  deg_ = big_->e() / small_->e();
  const uint32_t q = small_->q();
  const Elt w = big_->primitive();
  coords_.assign(big_->q(), Vec());
  uint64_t total = 1;
  for (int i = 0; i < deg_; ++i) total *= q;
  std::vector<Elt> wpow(deg_);
  for (int i = 0; i < deg_; ++i) wpow[i] = big_->pow(w, i);
  for (uint64_t t = 0; t < total; ++t) {
    Vec c(deg_);
    uint64_t rr = t;
    for (int i = deg_ - 1; i >= 0; --i) {
      c[i] = static_cast<Elt>(rr % q);
      rr /= q;
    }
    Elt x = 0;
    for (int i = 0; i < deg_; ++i) {
      x = big_->add(x, big_->mul(big_->embed(*small_, c[i]), wpow[i]));
    }
    if (!coords_[x].empty()) throw std::logic_error("basis is dependent");
    coords_[x] = c;
    inverse_[t] = x;
  }
}

Elt FieldReduction::FromCoordinates(const Vec& c) const {
  uint64_t t = 0;
  for (Elt x : c) t = t * small_->q() + x;
  return inverse_.at(t);
}

Vec FieldReduction::Flatten(const Vec& v) const {
  Vec out;
  out.reserve(v.size() * deg_);
  for (Elt x : v) {
    const Vec& c = coords_[x];
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Subspace FieldReduction::MapPoint(const Vec& v) const {
  Mat rows;
  Elt lambda = 1;
  for (int j = 0; j < deg_; ++j) {
    rows.push_back(Flatten(VecScale(*big_, lambda, v)));
    lambda = big_->mul(lambda, big_->primitive());
  }
  return Rref(*small_, r_ * deg_ - 1, std::move(rows));
}

Subspace FieldReduction::Map(const Subspace& s) const {
  Mat rows;
  for (const Vec& v : s.rows) {
    Subspace img = MapPoint(v);
    rows.insert(rows.end(), img.rows.begin(), img.rows.end());
  }
  return Rref(*small_, r_ * deg_ - 1, std::move(rows));
}

std::string FormatPoint(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ':';
    s += std::to_string(v[i]);
  }
  return s;
}

Vec ParsePoint(const std::string& line) {
  Vec v;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    size_t pos = 0;
    const unsigned long x = std::stoul(tok, &pos);
    if (pos != tok.size() && tok.find_first_not_of(" \t\r", pos) != std::string::npos) {
      throw std::invalid_argument("bad point token: " + tok);
    }
    v.push_back(static_cast<Elt>(x));
  }
  if (v.empty()) throw std::invalid_argument("empty point line");
  return v;
}

std::string FormatSubspace(const Subspace& s) {
  std::string out = std::to_string(s.dim()) + "x" + std::to_string(s.n + 1) + "\n";
  for (const Vec& r : s.rows) out += FormatPoint(r) + "\n";
  return out;
}

}  // namespace pgeom
