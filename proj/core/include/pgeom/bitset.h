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

#ifndef PGEOM_BITSET_H_
#define PGEOM_BITSET_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace pgeom {

// Fixed-size dynamic bitset. Bits past size() are always zero, so word-wise
// popcounts never need masking.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  size_t num_words() const { return w_.size(); }
  const uint64_t* words() const { return w_.data(); }
  uint64_t* words() { return w_.data(); }

  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
  void assign(size_t i, bool v) {
    if (v) set(i); else reset(i);
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_) if (x) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  // Clears the bits set in o.
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // |this & o|
  size_t and_count(const Bitset& o) const {
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  // |this & a & b|
  size_t and_count(const Bitset& a, const Bitset& b) const {
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) {
      c += std::popcount(w_[i] & a.w_[i] & b.w_[i]);
    }
    return c;
  }

  // Index of the first set bit at or after `from`, or size().
  size_t next(size_t from) const {
    if (from >= n_) return n_;
    size_t wi = from >> 6;
    uint64_t x = w_[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (x) return (wi << 6) + std::countr_zero(x);
      if (++wi >= w_.size()) return n_;
      x = w_[wi];
    }
  }
  size_t first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t x = w_[wi];
      while (x) {
        f((wi << 6) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace pgeom

#endif  // PGEOM_BITSET_H_
