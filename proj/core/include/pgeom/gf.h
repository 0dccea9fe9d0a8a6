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

// Exact arithmetic in GF(p^e).
//
// Elements are plain integers: the index sum_i c_i p^i of the coefficient
// vector (c_0, ..., c_{e-1}) in the polynomial basis 1, x, ..., x^{e-1}
// modulo the field's defining polynomial. The defining polynomial is the
// least monic irreducible of degree e when coefficient tuples are compared
// low-degree first. Multiplication goes through discrete log tables built
// from a cached primitive element, so a Field is immutable after Create()
// and can be shared freely.

#ifndef PGEOM_GF_H_
#define PGEOM_GF_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgeom {

using Elt = uint32_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Largest order accepted by Create().
  static constexpr uint64_t kMaxOrder = uint64_t{1} << 20;

  // Builds GF(p^e). Throws FieldError on a non-prime p, e < 1 or an order
  // above max_order.
  static FieldPtr Create(int p, int e, uint64_t max_order = kMaxOrder);

  // Process-wide cache keyed by (p, e).
  static FieldPtr Get(int p, int e);
  // Convenience: the field of order q (a prime power).
  static FieldPtr OfOrder(uint64_t q);

  int p() const { return p_; }
  int e() const { return e_; }
  uint32_t q() const { return q_; }
  std::string Name() const;

  // Defining polynomial, low degree first, length e + 1, leading 1.
  const std::vector<int>& modulus() const { return modulus_; }
  Elt primitive() const { return primitive_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg_[b]); }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, uint64_t k) const;

  // Discrete log base primitive(); a must be nonzero.
  uint32_t log(Elt a) const;
  // primitive()^k for any k >= 0.
  Elt exp(uint64_t k) const { return exp_[k % (q_ - 1)]; }

  // Image of an integer under Z -> GF(p).
  Elt from_int(int64_t v) const;

  std::vector<int> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<int>& c) const;

  // x -> x^(p^k).
  Elt frobenius(Elt x, int k = 1) const;

  // Norm and trace onto GF(p^m); m must divide e.
  Elt norm(Elt x, int m) const;
  Elt trace(Elt x, int m) const;

  // Order of the subfield fixed by the involution x -> x^sqrt(q); only
  // meaningful when e is even.
  uint32_t sqrt_q() const;
  // Hermitian conjugation x -> x^sqrt(q). Throws when e is odd.
  Elt conj(Elt x) const;

  bool in_subfield(Elt x, int m) const;
  // Elements of GF(p^m) inside this field, ascending by index.
  std::vector<Elt> subfield(int m) const;
  // Embeds an element of `small` (a field of order p^m, m | e) through the
  // field homomorphism sending the generator of `small` to a root of its
  // modulus here. Among the m choices the one sending small.primitive() to
  // primitive()^((p^e - 1)/(p^m - 1)) is preferred, else the least root.
  Elt embed(const Field& small, Elt x) const;

  // Quadratic and cubic residues. is_square throws in characteristic 2,
  // where every element is a square. is_cube is true for every element
  // when 3 does not divide q - 1.
  bool is_square(Elt x) const;
  bool is_cube(Elt x) const;
  // Least-index nonsquare; throws in characteristic 2.
  Elt least_nonsquare() const;
  // Square root of a square; returns false when none exists.
  bool sqrt(Elt x, Elt* root) const;

  // Multiplicative order of a nonzero element.
  uint64_t order(Elt x) const;

  // Exposed for tests: multiplication of index-encoded polynomials
  // reduced by the modulus, without tables.
  Elt slow_mul(Elt a, Elt b) const;

 private:
  Field() = default;
  void Build();

  int p_ = 0;
  int e_ = 0;
  uint32_t q_ = 0;
  std::vector<int> modulus_;
  Elt primitive_ = 0;
  std::vector<Elt> exp_;       // length 2(q-1)
  std::vector<uint32_t> log_;  // length q, log_[0] unused
  std::vector<Elt> neg_;
  std::vector<Elt> inv_;
  std::vector<uint16_t> add_table_;  // q*q when q <= kAddTableMax
  static constexpr uint32_t kAddTableMax = 256;
  mutable std::mutex embed_mu_;
  mutable std::map<std::vector<int>, std::vector<Elt>> embed_tables_;  // by modulus
};

// Primality by trial division.
bool IsPrime(int64_t n);

// q = p^e decomposition; returns false when q is not a prime power.
bool PrimePower(uint64_t q, int* p, int* e);

// Lexicographically least monic irreducible polynomial of degree e over
// Z_p, coefficients low degree first.
std::vector<int> LeastIrreducible(int p, int e);

// Irreducibility of a monic polynomial over Z_p (low degree first), by
// trial division with every monic polynomial of degree <= deg/2.
bool IsIrreducible(int p, const std::vector<int>& poly);

// Point count of Y^2 = X^3 - X over GF(p), p an odd prime, in both the
// affine and projective conventions.
struct EllipticCount {
  int64_t p = 0;
  int64_t affine = 0;
  int64_t projective = 0;
  bool affine_in_set = false;      // affine in {p - 1, p + 3}
  bool projective_in_set = false;  // projective in {p - 1, p + 3}
};
EllipticCount EllipticPointCount(int64_t p);

// Number of xi in GF(q) with xi^4 - 48 xi^2 + 64 a square. The two
// counts differ in whether a zero value is treated as a square.
struct QuarticSquareCount {
  uint32_t q = 0;
  int64_t nonzero_squares = 0;
  int64_t with_zero = 0;
  bool nonzero_in_set = false;  // in {(q+1)/2, (q-3)/2}
  bool with_zero_in_set = false;
};
QuarticSquareCount QuarticSquares(const Field& f);

}  // namespace pgeom

#endif  // PGEOM_GF_H_
