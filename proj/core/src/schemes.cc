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

#include "pgeom/schemes.h"

#include <algorithm>
#include <stdexcept>

namespace pgeom {

Scheme::Scheme(size_t n, int d, std::vector<uint8_t> rel)
    : n_(n), d_(d), rel_(std::move(rel)) {
  if (rel_.size() != n * n) throw std::invalid_argument("relation table size");
  const int m = d + 1;
  rows_.assign(m, std::vector<Bitset>(n, Bitset(n)));
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y) {
      const int r = rel_[x * n + y];
      if (r > d) throw std::invalid_argument("relation out of range");
      if ((r == 0) != (x == y)) throw std::invalid_argument("relation 0 must be the diagonal");
      if (rel_[y * n + x] != r) throw std::invalid_argument("relations must be symmetric");
      rows_[r][x].set(y);
    }
  }
  valency_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    valency_[i] = static_cast<int64_t>(rows_[i][0].count());
    for (size_t x = 1; x < n; ++x) {
      if (static_cast<int64_t>(rows_[i][x].count()) != valency_[i]) {
        throw std::invalid_argument("relation " + std::to_string(i) + " is not regular");
      }
    }
    if (valency_[i] == 0) throw std::invalid_argument("empty relation");
  }
  p_.assign(static_cast<size_t>(m) * m * m, -1);
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = x; y < n; ++y) {
      const int k = rel_[x * n + y];
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const int64_t c = static_cast<int64_t>(rows_[i][x].and_count(rows_[j][y]));
          int64_t& slot = p_[(k * m + i) * m + j];
          ++checks_;
          if (slot < 0) {
            slot = c;
          } else if (slot != c) {
            throw std::invalid_argument("intersection numbers are not constant");
          }
        }
      }
    }
  }
}

Graph Scheme::RelationGraph(int i) const {
  Graph g(n_);
  if (i == 0) return g;
  for (size_t x = 0; x < n_; ++x) {
    for (size_t y = rows_[i][x].next(x + 1); y < n_; y = rows_[i][x].next(y + 1)) {
      g.AddEdge(x, y);
    }
  }
  return g;
}

std::vector<mpq_class> Scheme::Multiply(const std::vector<mpq_class>& x,
                                        const std::vector<mpq_class>& y) const {
  const int m = d_ + 1;
  std::vector<mpq_class> out(m, 0);
  for (int i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      const mpq_class xy = x[i] * y[j];
      for (int k = 0; k < m; ++k) {
        const int64_t c = p(i, j, k);
        if (c != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

Scheme SchemeFromPolar(const PolarSpace& ps, size_t max_generators) {
  const auto& gp = ps.GeneratorPoints();
  const size_t n = gp.size();
  if (n > max_generators) throw BudgetError("too many generators for a scheme");
  const int d = ps.d();
  std::vector<Bitset> sets;
  for (const auto& pts : gp) {
    Bitset b(ps.num_points());
    for (int32_t x : pts) b.set(x);
    sets.push_back(std::move(b));
  }
  // Meet of vector dimension t <-> theta_{t-1} common points.
  std::vector<int64_t> size_to_rel;
  for (int i = d; i >= 0; --i) {
    const int64_t s = Theta(d - i - 1, static_cast<unsigned long>(ps.base())).get_si();
    if (static_cast<int64_t>(size_to_rel.size()) <= s) size_to_rel.resize(s + 1, -1);
    size_to_rel[s] = i;
  }
  std::vector<uint8_t> rel(n * n, 0);
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = x + 1; y < n; ++y) {
      const size_t c = sets[x].and_count(sets[y]);
      if (c >= size_to_rel.size() || size_to_rel[c] < 0) {
        throw std::logic_error("generator meet of unexpected size");
      }
      rel[x * n + y] = rel[y * n + x] = static_cast<uint8_t>(size_to_rel[c]);
    }
  }
  return Scheme(n, d, std::move(rel));
}

namespace {

mpq_class Det(std::vector<std::vector<mpq_class>> a) {
  const size_t n = a.size();
  mpq_class det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace

Idempotents MinimalIdempotents(const Scheme& s, size_t dense_limit) {
  const int d = s.classes();
  const int m = d + 1;
  const size_t n = s.n();
  Idempotents out;
  // Eigenvalues of A_1 are those of B[k][j] = p^k_{1j}; search integers.
  const int64_t k1 = s.valency(1);
  for (int64_t t = k1; t >= -k1 && static_cast<int>(out.theta.size()) < m; --t) {
    std::vector<std::vector<mpq_class>> b(m, std::vector<mpq_class>(m));
    for (int k = 0; k < m; ++k) {
      for (int j = 0; j < m; ++j) b[k][j] = s.p(1, j, k) - (k == j ? t : 0);
    }
    if (Det(b) == 0) out.theta.push_back(t);
  }
  if (static_cast<int>(out.theta.size()) != m) {
    throw std::invalid_argument("A_1 lacks d + 1 distinct integral eigenvalues");
  }
  std::vector<mpq_class> a1(m, 0);
  a1[1] = 1;
  std::vector<mpq_class> unit(m, 0);
  unit[0] = 1;
  for (int i = 0; i < m; ++i) {
    std::vector<mpq_class> e = unit;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> factor = a1;
      factor[0] -= out.theta[j];
      for (mpq_class& x : factor) x /= out.theta[i] - out.theta[j];
      e = s.Multiply(e, factor);
    }
    out.coords.push_back(e);
  }
  // Identities in algebra coordinates.
  bool ok = true;
  std::vector<mpq_class> sum(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int l = 0; l < m; ++l) sum[l] += out.coords[i][l];
    for (int j = 0; j < m; ++j) {
      const std::vector<mpq_class> prod = s.Multiply(out.coords[i], out.coords[j]);
      for (int l = 0; l < m; ++l) {
        const mpq_class want = i == j ? out.coords[i][l] : mpq_class(0);
        if (prod[l] != want) ok = false;
      }
    }
  }
  ok = ok && sum == unit;
  for (int l = 0; l < m; ++l) {
    if (out.coords[0][l] != mpq_class(1, static_cast<unsigned long>(n))) ok = false;
  }
  out.identities_ok = ok;
  // P[i][l] = k_l c_il / c_i0 and ranks n c_i0.
  out.eigenvalues.assign(m, std::vector<mpq_class>(m));
  for (int i = 0; i < m; ++i) {
    out.multiplicities.push_back(out.coords[i][0] * static_cast<long>(n));
    for (int l = 0; l < m; ++l) {
      out.eigenvalues[i][l] = out.coords[i][l] * s.valency(l) / out.coords[i][0];
    }
  }
  // E_i o E_j = (1/n) sum_k q^k_ij E_k.
  out.krein.assign(m, std::vector<std::vector<mpq_class>>(m, std::vector<mpq_class>(m)));
  out.krein_nonnegative = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        mpq_class q = 0;
        for (int l = 0; l < m; ++l) {
          q += out.coords[i][l] * out.coords[j][l] * out.eigenvalues[k][l];
        }
        q *= static_cast<long>(n);
        out.krein[i][j][k] = q;
        if (q < 0) out.krein_nonnegative = false;
      }
    }
  }
  if (n <= dense_limit) {
    // Dense check: (E_i E_j)[x][y] = sum_z E_i[x][z] E_j[z][y].
    bool dense_ok = true;
    for (int i = 0; i < m && dense_ok; ++i) {
      for (int j = 0; j < m && dense_ok; ++j) {
        for (size_t x = 0; x < n && dense_ok; ++x) {
          for (size_t y = 0; y < n && dense_ok; ++y) {
            mpq_class acc = 0;
            for (size_t z = 0; z < n; ++z) {
              acc += out.coords[i][s.relation(x, z)] * out.coords[j][s.relation(z, y)];
            }
            const mpq_class want = i == j ? out.coords[i][s.relation(x, y)] : mpq_class(0);
            if (acc != want) dense_ok = false;
          }
        }
      }
    }
    out.dense_checked = dense_ok;
    out.identities_ok = out.identities_ok && dense_ok;
  }
  return out;
}

std::vector<mpq_class> DesignNorms(const Scheme& s, const Idempotents& e,
                                   const std::vector<int>& subset) {
  const int m = s.classes() + 1;
  Bitset chi(s.n());
  for (int x : subset) chi.set(x);
  std::vector<int64_t> pairs(m, 0);
  chi.for_each([&](size_t x) {
    for (int l = 0; l < m; ++l) {
      pairs[l] += static_cast<int64_t>(s.neighbours(l, x).and_count(chi));
    }
  });
  std::vector<mpq_class> out(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int l = 0; l < m; ++l) out[i] += e.coords[i][l] * pairs[l];
  }
  return out;
}

std::vector<int> DualDegreeSet(const Scheme& s, const Idempotents& e,
                               const std::vector<int>& subset) {
  const std::vector<mpq_class> norms = DesignNorms(s, e, subset);
  std::vector<int> out;
  for (int i = 1; i <= s.classes(); ++i) {
    if (norms[i] != 0) out.push_back(i);
  }
  return out;
}

bool IsKDesign(const std::vector<int>& dual_degree, int k) {
  return std::none_of(dual_degree.begin(), dual_degree.end(),
                      [k](int i) { return i >= 1 && i <= k; });
}

bool IsKAntidesign(const std::vector<int>& dual_degree, int k) {
  return std::all_of(dual_degree.begin(), dual_degree.end(),
                     [k](int i) { return i >= 1 && i <= k; });
}

}  // namespace pgeom
