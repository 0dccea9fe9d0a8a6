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

#include "pgeom/gf.h"

#include <map>
#include <mutex>
#include <utility>

namespace pgeom {

namespace {

// Polynomials over Z_p as coefficient vectors, low degree first, trimmed.
using Poly = std::vector<int>;

void Trim(Poly* a) {
  while (!a->empty() && a->back() == 0) a->pop_back();
}

int ModInverse(int a, int p) {
  int64_t r = 1, b = a % p, k = p - 2;
  while (k > 0) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<int>(r);
}

// Remainder of a modulo b over Z_p; b nonzero.
Poly PolyMod(Poly a, const Poly& b, int p) {
  Trim(&a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = ModInverse(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = static_cast<int>(int64_t{a.back()} * lead_inv % p);
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = static_cast<int>(
          ((a[i + shift] - int64_t{c} * b[i]) % p + p) % p);
    }
    Trim(&a);
  }
  return a;
}

uint64_t IntPow(uint64_t b, int k) {
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool IsPrime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool PrimePower(uint64_t q, int* p, int* e) {
  if (q < 2) return false;
  uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  int k = 0;
  uint64_t r = q;
  while (r % d == 0) {
    r /= d;
    ++k;
  }
  if (r != 1) return false;
  *p = static_cast<int>(d);
  *e = k;
  return true;
}

bool IsIrreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  Trim(&f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    const uint64_t count = IntPow(p, d);
    for (uint64_t t = 0; t < count; ++t) {
      Poly g(d + 1);
      uint64_t r = t;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(r % p);
        r /= p;
      }
      g[d] = 1;
      if (PolyMod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> LeastIrreducible(int p, int e) {
  // Tuples (c_0, ..., c_{e-1}) in lexicographic order: c_0 varies slowest.
  const uint64_t count = IntPow(p, e);
  for (uint64_t t = 0; t < count; ++t) {
    Poly f(e + 1);
    uint64_t r = t;
    for (int i = e - 1; i >= 0; --i) {
      f[i] = static_cast<int>(r % p);
      r /= p;
    }
    f[e] = 1;
    if (IsIrreducible(p, f)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

FieldPtr Field::Create(int p, int e, uint64_t max_order) {
  if (!IsPrime(p)) throw FieldError("characteristic is not prime");
  if (e < 1) throw FieldError("extension degree must be at least 1");
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > max_order) throw FieldError("field order exceeds the size bound");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = static_cast<uint32_t>(q);
  f->Build();
  return f;
}

FieldPtr Field::Get(int p, int e) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, e});
  if (it != cache.end()) return it->second;
  FieldPtr f = Create(p, e);
  cache.emplace(std::make_pair(p, e), f);
  return f;
}

FieldPtr Field::OfOrder(uint64_t q) {
  int p = 0, e = 0;
  if (!PrimePower(q, &p, &e)) throw FieldError("order is not a prime power");
  return Get(p, e);
}

std::string Field::Name() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

Elt Field::slow_mul(Elt a, Elt b) const {
  Poly pa = coeffs(a), pb = coeffs(b);
  Poly prod(2 * e_, 0);
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<int>((prod[i + j] + int64_t{pa[i]} * pb[j]) % p_);
    }
  }
  Poly r = PolyMod(prod, modulus_, p_);
  r.resize(e_, 0);
  return from_coeffs(r);
}

void Field::Build() {
  modulus_ = LeastIrreducible(p_, e_);

  neg_.resize(q_);
  for (Elt a = 0; a < q_; ++a) {
    std::vector<int> c = coeffs(a);
    for (int& x : c) x = (p_ - x) % p_;
    neg_[a] = from_coeffs(c);
  }
  if (q_ <= kAddTableMax) {
    add_table_.resize(static_cast<size_t>(q_) * q_);
    for (Elt a = 0; a < q_; ++a) {
      std::vector<int> ca = coeffs(a);
      for (Elt b = 0; b < q_; ++b) {
        std::vector<int> cb = coeffs(b);
        for (int i = 0; i < e_; ++i) cb[i] = (cb[i] + ca[i]) % p_;
        add_table_[static_cast<size_t>(a) * q_ + b] =
            static_cast<uint16_t>(from_coeffs(cb));
      }
    }
  }

  if (q_ == 2) {
    primitive_ = 1;
  } else {
    // Least element whose powers by (q-1)/r differ from 1 for every prime r.
    const std::vector<uint64_t> factors = PrimeFactors(q_ - 1);
    auto slow_pow = [&](Elt x, uint64_t k) {
      Elt r = 1, b = x;
      while (k > 0) {
        if (k & 1) r = slow_mul(r, b);
        b = slow_mul(b, b);
        k >>= 1;
      }
      return r;
    };
    for (Elt g = 2; g < q_; ++g) {
      bool ok = true;
      for (uint64_t r : factors) {
        if (slow_pow(g, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }

  exp_.resize(2 * static_cast<size_t>(q_ - 1) + 1);
  log_.assign(q_, 0);
  Elt x = 1;
  for (uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, primitive_);
  }
  for (size_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];

  inv_.assign(q_, 0);
  for (Elt a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt Field::add(Elt a, Elt b) const {
  if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
  if (p_ == 2) return a ^ b;
  Elt r = 0, mult = 1;
  while (a > 0 || b > 0) {
    const uint32_t s = (a % p_ + b % p_) % p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return inv_[a];
}

Elt Field::pow(Elt a, uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

uint32_t Field::log(Elt a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

Elt Field::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

std::vector<int> Field::coeffs(Elt a) const {
  std::vector<int> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Elt Field::from_coeffs(const std::vector<int>& c) const {
  Elt r = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    r = r * p_ + static_cast<Elt>(((c[i] % p_) + p_) % p_);
  }
  return r;
}

Elt Field::frobenius(Elt x, int k) const {
  k %= e_;
  if (k < 0) k += e_;
  return pow(x, IntPow(p_, k));
}

Elt Field::norm(Elt x, int m) const {
  if (m < 1 || e_ % m != 0) throw FieldError("subfield degree must divide e");
  const uint64_t small = IntPow(p_, m);
  return pow(x, (q_ - 1) / (small - 1));
}

Elt Field::trace(Elt x, int m) const {
  if (m < 1 || e_ % m != 0) throw FieldError("subfield degree must divide e");
  Elt t = 0, y = x;
  for (int i = 0; i < e_ / m; ++i) {
    t = add(t, y);
    y = frobenius(y, m);
  }
  return t;
}

uint32_t Field::sqrt_q() const {
  if (e_ % 2 != 0) throw FieldError("field order is not a square");
  return static_cast<uint32_t>(IntPow(p_, e_ / 2));
}

Elt Field::conj(Elt x) const { return pow(x, sqrt_q()); }

bool Field::in_subfield(Elt x, int m) const {
  if (m < 1 || e_ % m != 0) throw FieldError("subfield degree must divide e");
  return frobenius(x, m) == x;
}

std::vector<Elt> Field::subfield(int m) const {
  std::vector<Elt> out;
  for (Elt x = 0; x < q_; ++x) {
    if (in_subfield(x, m)) out.push_back(x);
  }
  return out;
}

Elt Field::embed(const Field& small, Elt x) const {
  if (small.p() != p_ || e_ % small.e() != 0) {
    throw FieldError("not a subfield");
  }
  std::lock_guard<std::mutex> lock(embed_mu_);
  std::vector<Elt>& table = embed_tables_[small.modulus()];
  if (table.empty()) {
    // c(X) -> c(y) for a root y of the modulus of `small`.
    auto image = [&](Elt y) {
      std::vector<Elt> t(small.q());
      for (Elt c = 0; c < small.q(); ++c) {
        const std::vector<int> co = small.coeffs(c);
        Elt v = 0;
        for (size_t i = co.size(); i-- > 0;) v = add(mul(v, y), from_int(co[i]));
        t[c] = v;
      }
      return t;
    };
    const std::vector<int>& mod = small.modulus();
    const Elt preferred = exp((q_ - 1) / (small.q() - 1));
    for (Elt y = 0; y < q_; ++y) {
      Elt v = 0;
      for (size_t i = mod.size(); i-- > 0;) v = add(mul(v, y), from_int(mod[i]));
      if (v != 0) continue;
      std::vector<Elt> t = image(y);
      if (table.empty() || t[small.primitive()] == preferred) table = std::move(t);
      if (table[small.primitive()] == preferred) break;
    }
    if (table.empty()) throw FieldError("modulus has no root");
  }
  return table.at(x);
}

bool Field::is_square(Elt x) const {
  if (p_ == 2) throw FieldError("every element is a square in characteristic 2");
  if (x == 0) return true;
  return log_[x] % 2 == 0;
}

bool Field::is_cube(Elt x) const {
  if ((q_ - 1) % 3 != 0) return true;
  if (x == 0) return true;
  return log_[x] % 3 == 0;
}

Elt Field::least_nonsquare() const {
  if (p_ == 2) throw FieldError("every element is a square in characteristic 2");
  for (Elt x = 1; x < q_; ++x) {
    if (!is_square(x)) return x;
  }
  throw FieldError("no nonsquare");
}

bool Field::sqrt(Elt x, Elt* root) const {
  if (x == 0) {
    *root = 0;
    return true;
  }
  const uint32_t l = log_[x];
  if (p_ == 2) {
    // Squaring is a bijection; invert it on the exponent.
    *root = exp((static_cast<uint64_t>(l) * (q_ / 2)) % (q_ - 1));
    return true;
  }
  if (l % 2 != 0) return false;
  *root = exp_[l / 2];
  return true;
}

uint64_t Field::order(Elt x) const {
  if (x == 0) throw FieldError("order of zero");
  const uint64_t n = q_ - 1;
  uint64_t l = log_[x];
  uint64_t a = n, b = l;
  while (b != 0) {
    const uint64_t t = a % b;
    a = b;
    b = t;
  }
  return n / a;
}

EllipticCount EllipticPointCount(int64_t p) {
  if (p % 2 == 0 || !IsPrime(p)) throw FieldError("p must be an odd prime");
  EllipticCount out;
  out.p = p;
  auto legendre = [p](int64_t a) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    int64_t r = 1, b = a, k = (p - 1) / 2;
    while (k > 0) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    return r == 1 ? 1 : -1;
  };
  for (int64_t x = 0; x < p; ++x) {
    const int64_t rhs = ((x * x % p) * x - x) % p;
    out.affine += 1 + legendre(rhs);
  }
  out.projective = out.affine + 1;
  out.affine_in_set = out.affine == p - 1 || out.affine == p + 3;
  out.projective_in_set = out.projective == p - 1 || out.projective == p + 3;
  return out;
}

QuarticSquareCount QuarticSquares(const Field& f) {
  if (f.p() == 2) throw FieldError("odd characteristic required");
  QuarticSquareCount out;
  out.q = f.q();
  const Elt c48 = f.from_int(48), c64 = f.from_int(64);
  for (Elt x = 0; x < f.q(); ++x) {
    const Elt x2 = f.mul(x, x);
    const Elt v = f.add(f.sub(f.mul(x2, x2), f.mul(c48, x2)), c64);
    if (v == 0) {
      ++out.with_zero;
    } else if (f.is_square(v)) {
      ++out.nonzero_squares;
      ++out.with_zero;
    }
  }
  const int64_t a = (static_cast<int64_t>(f.q()) + 1) / 2;
  const int64_t b = (static_cast<int64_t>(f.q()) - 3) / 2;
  out.nonzero_in_set = out.nonzero_squares == a || out.nonzero_squares == b;
  out.with_zero_in_set = out.with_zero == a || out.with_zero == b;
  return out;
}

}  // namespace pgeom
