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

#include "pgeom/graph.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pgeom/projspace.h"

namespace pgeom {

void Graph::AddEdge(size_t u, size_t v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::RemoveEdge(size_t u, size_t v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

size_t Graph::NumEdges() const {
  size_t s = 0;
  for (const Bitset& r : rows_) s += r.count();
  return s / 2;
}

Graph Graph::Complement() const {
  Graph c(n());
  for (size_t u = 0; u < n(); ++u) {
    for (size_t v = u + 1; v < n(); ++v) {
      if (!adjacent(u, v)) c.AddEdge(u, v);
    }
  }
  c.labels = labels;
  return c;
}

Graph Graph::Induced(const std::vector<int>& vertices) const {
  Graph h(vertices.size());
  for (size_t a = 0; a < vertices.size(); ++a) {
    for (size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) h.AddEdge(a, b);
    }
  }
  return h;
}

std::vector<std::vector<int>> Graph::Components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n(), 0);
  for (size_t s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = {static_cast<int>(s)};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i) {
      rows_[comp[i]].for_each([&](size_t w) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(static_cast<int>(w));
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::IsSimple() const {
  for (size_t u = 0; u < n(); ++u) {
    if (adjacent(u, u)) return false;
    for (size_t v = u + 1; v < n(); ++v) {
      if (adjacent(u, v) != adjacent(v, u)) return false;
    }
  }
  return true;
}

std::string SrgParams::ToString() const {
  std::ostringstream s;
  s << "(" << v << "," << k << "," << lambda << "," << mu << ")";
  return s.str();
}

SrgParams ComplementParams(const SrgParams& p) {
  return {p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2,
          p.v - 2 * p.k + p.lambda};
}

SrgSpectrum SrgEigen(const SrgParams& p) {
  SrgSpectrum s;
  if (p.k * (p.k - p.lambda - 1) != p.mu * (p.v - p.k - 1)) {
    s.reason = "k(k-lambda-1) != mu(v-k-1)";
    return s;
  }
  const mpz_class disc = mpz_class(p.lambda - p.mu) * (p.lambda - p.mu) +
                         4 * mpz_class(p.k - p.mu);
  const mpz_class num = 2 * mpz_class(p.k) + mpz_class(p.v - 1) * (p.lambda - p.mu);
  mpz_class root;
  const bool square = mpz_perfect_square_p(disc.get_mpz_t()) != 0;
  if (square) {
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    s.integral = mpz_class((p.lambda - p.mu) + root) % 2 == 0;
    s.r = mpq_class(mpz_class(p.lambda - p.mu) + root, 2);
    s.s = mpq_class(mpz_class(p.lambda - p.mu) - root, 2);
    s.r.canonicalize();
    s.s.canonicalize();
    if (root == 0) {
      s.reason = "repeated eigenvalue";
      return s;
    }
    s.f = (mpq_class(p.v - 1) - mpq_class(num, root)) / 2;
    s.g = (mpq_class(p.v - 1) + mpq_class(num, root)) / 2;
    s.f.canonicalize();
    s.g.canonicalize();
  } else {
    if (num != 0) {
      s.reason = "irrational eigenvalues with unequal multiplicities";
      return s;
    }
    s.f = s.g = mpq_class(p.v - 1, 2);
    s.f.canonicalize();
    s.g.canonicalize();
  }
  if (s.f.get_den() != 1 || s.g.get_den() != 1 || s.f < 0 || s.g < 0) {
    s.reason = "multiplicities not non-negative integers";
    return s;
  }
  s.feasible = true;
  return s;
}

SrgReport SrgCheck(const Graph& g) {
  SrgReport r;
  const size_t n = g.n();
  r.params.v = static_cast<int64_t>(n);
  if (n < 2) {
    r.trivial = true;
    return r;
  }
  const int64_t k = static_cast<int64_t>(g.degree(0));
  r.regular = true;
  for (size_t u = 1; u < n; ++u) {
    if (static_cast<int64_t>(g.degree(u)) != k) {
      r.regular = false;
      r.witness_u = 0;
      r.witness_v = static_cast<int64_t>(u);
      return r;
    }
  }
  r.params.k = k;
  int64_t lam = -1, mu = -1;
  for (size_t u = 0; u < n; ++u) {
    for (size_t v = u + 1; v < n; ++v) {
      ++r.pairs_checked;
      const int64_t c = static_cast<int64_t>(g.row(u).and_count(g.row(v)));
      int64_t& slot = g.adjacent(u, v) ? lam : mu;
      if (slot < 0) {
        slot = c;
      } else if (slot != c) {
        r.witness_u = static_cast<int64_t>(u);
        r.witness_v = static_cast<int64_t>(v);
        return r;
      }
    }
  }
  if (lam < 0 || mu < 0) {
    // Complete or edgeless: one of the parameters is undefined.
    r.trivial = true;
    r.params.lambda = std::max<int64_t>(lam, 0);
    r.params.mu = std::max<int64_t>(mu, 0);
    return r;
  }
  r.params.lambda = lam;
  r.params.mu = mu;
  r.srg = true;
  r.spectrum = SrgEigen(r.params);
  return r;
}

namespace {

// Solves the square system a x = b over the rationals; false if singular.
bool SolveRational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                   std::vector<mpq_class>* x) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  x->resize(n);
  for (size_t i = 0; i < n; ++i) (*x)[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

SpectrumCertificate CertifySpectrum(const Graph& g, std::vector<int64_t> claimed) {
  SpectrumCertificate cert;
  const size_t n = g.n();
  if (n == 0) return cert;
  const int64_t k = static_cast<int64_t>(g.degree(0));
  cert.degree = k;
  cert.regular = true;
  for (size_t u = 0; u < n; ++u) {
    if (static_cast<int64_t>(g.degree(u)) != k) cert.regular = false;
  }
  if (!cert.regular) return cert;
  claimed.push_back(k);
  std::sort(claimed.begin(), claimed.end());
  claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
  std::reverse(claimed.begin(), claimed.end());
  std::rotate(claimed.begin(), std::find(claimed.begin(), claimed.end(), k),
              std::find(claimed.begin(), claimed.end(), k) + 1);
  cert.eigenvalues = claimed;

  // Entry bound: each factor has absolute row sums at most k + |theta|.
  long double bound = 1;
  for (size_t i = 1; i < claimed.size(); ++i) {
    bound *= static_cast<long double>(k + std::llabs(claimed[i]));
  }
  if (bound > 4.0e18L) throw std::overflow_error("spectrum product too large");

  std::vector<std::vector<int>> nbr(n);
  for (size_t u = 0; u < n; ++u) g.row(u).for_each([&](size_t v) {
    nbr[u].push_back(static_cast<int>(v));
  });
  // M starts as the identity; multiply by (A - theta I) for theta != k.
  std::vector<int64_t> m(n * n, 0);
  for (size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  std::vector<int64_t> next(n * n);
  for (size_t t = 1; t < claimed.size(); ++t) {
    const int64_t theta = claimed[t];
    for (size_t i = 0; i < n; ++i) {
      const int64_t* mi = &m[i * n];
      int64_t* out = &next[i * n];
      for (size_t l = 0; l < n; ++l) {
        int64_t s = -theta * mi[l];
        for (int j : nbr[l]) s += mi[j];
        out[l] = s;
      }
    }
    m.swap(next);
  }
  cert.annihilated = true;
  const int64_t c = m[0];
  for (size_t i = 0; i < n && cert.annihilated; ++i) {
    for (size_t l = 0; l < n; ++l) {
      if (m[i * n + l] != c) {
        cert.annihilated = false;
        // x = e_l - e_j for a column j with a different entry in row i.
        size_t j = 0;
        while (j < n && m[i * n + j] == m[i * n + l]) ++j;
        cert.witness.assign(n, 0);
        cert.witness[l] = 1;
        if (j < n) cert.witness[j] = -1;
        break;
      }
    }
  }

  // Traces of A^0..A^4.
  std::vector<mpz_class> tr(5);
  tr[0] = static_cast<unsigned long>(n);
  tr[1] = 0;
  tr[2] = mpz_class(static_cast<long>(n)) * k;
  mpz_class t3 = 0, t4 = 0;
  for (size_t u = 0; u < n; ++u) {
    for (size_t v = 0; v < n; ++v) {
      const int64_t cuv = static_cast<int64_t>(g.row(u).and_count(g.row(v)));
      if (g.adjacent(u, v)) t3 += cuv;
      t4 += mpz_class(cuv) * cuv;
    }
  }
  tr[3] = t3;
  tr[4] = t4;
  const size_t t = claimed.size();
  if (t > 5) throw std::invalid_argument("at most five distinct eigenvalues");
  std::vector<std::vector<mpq_class>> a(t, std::vector<mpq_class>(t));
  std::vector<mpq_class> b(t);
  for (size_t j = 0; j < t; ++j) {
    for (size_t i = 0; i < t; ++i) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(claimed[i])).get_mpz_t(), j);
      a[j][i] = p;
    }
    b[j] = tr[j];
  }
  std::vector<mpq_class> mult;
  if (!SolveRational(a, b, &mult)) return cert;
  cert.multiplicities = mult;
  cert.multiplicities_ok = true;
  mpq_class total = 0;
  for (const mpq_class& x : mult) {
    if (x.get_den() != 1 || x <= 0) cert.multiplicities_ok = false;
    total += x;
  }
  cert.multiplicities_ok = cert.multiplicities_ok && total == static_cast<long>(n);
  cert.traces_ok = true;
  for (size_t j = 0; j < 5; ++j) {
    mpq_class s = 0;
    for (size_t i = 0; i < t; ++i) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(claimed[i])).get_mpz_t(), j);
      s += mult[i] * p;
    }
    if (s != tr[j]) cert.traces_ok = false;
  }
  return cert;
}

mpq_class HoffmanBound(int64_t v, int64_t k, int64_t theta_min) {
  if (k == theta_min) throw std::invalid_argument("degenerate ratio bound");
  mpq_class b(mpz_class(-v) * theta_min, mpz_class(k - theta_min));
  b.canonicalize();
  return b;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target, int64_t budget)
      : g_(g), target_(target), budget_(budget) {}

  SearchResult Run() {
    Bitset p(g_.n());
    for (size_t i = 0; i < g_.n(); ++i) p.set(i);
    std::vector<int> r;
    try {
      Expand(&r, p);
      res_.exhausted = !stop_;
    } catch (const BudgetError&) {
      res_.exhausted = false;
    }
    res_.witness = best_;
    res_.found = target_ > 0 ? static_cast<int>(best_.size()) >= target_ : true;
    return res_;
  }

 private:
  void Expand(std::vector<int>* r, Bitset p) {
    if (stop_) return;
    ++res_.nodes;
    if (budget_ >= 0 && res_.nodes > budget_) throw BudgetError("clique budget");
    // Greedy sequential colouring in index order.
    std::vector<int> order;
    std::vector<int> colour;
    Bitset uncoloured = p;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      for (size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
        uncoloured.reset(v);
        order.push_back(static_cast<int>(v));
        colour.push_back(c);
        q.subtract(g_.row(v));
        q.reset(v);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(r->size()) + colour[i] <= static_cast<int>(best_.size())) {
        return;
      }
      const int v = order[i];
      r->push_back(v);
      Bitset np = p;
      np &= g_.row(v);
      if (!np.any()) {
        if (r->size() > best_.size()) {
          best_ = *r;
          if (target_ > 0 && static_cast<int>(best_.size()) >= target_) {
            stop_ = true;
            r->pop_back();
            return;
          }
        }
      } else {
        Expand(r, std::move(np));
        if (stop_) {
          r->pop_back();
          return;
        }
      }
      r->pop_back();
      p.reset(v);
    }
  }

  const Graph& g_;
  int target_;
  int64_t budget_;
  bool stop_ = false;
  std::vector<int> best_;
  SearchResult res_;
};

}  // namespace

SearchResult MaxClique(const Graph& g, int target, int64_t node_budget) {
  SearchResult r = CliqueSearch(g, target, node_budget).Run();
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

SearchResult MaxCoclique(const Graph& g, int target, int64_t node_budget) {
  return MaxClique(g.Complement(), target, node_budget);
}

CliqueCensus MaximalCliqueCensus(const Graph& g, int keep, int64_t node_budget) {
  CliqueCensus census;
  const size_t n = g.n();
  std::vector<int> r;
  std::function<void(Bitset, Bitset)> bk = [&](Bitset p, Bitset x) {
    ++census.nodes;
    if (node_budget >= 0 && census.nodes > node_budget) {
      throw BudgetError("clique census budget");
    }
    if (!p.any()) {
      if (!x.any()) {
        const int s = static_cast<int>(r.size());
        ++census.histogram[s];
        auto& reps = census.representatives[s];
        if (static_cast<int>(reps.size()) < keep) {
          std::vector<int> c = r;
          std::sort(c.begin(), c.end());
          reps.push_back(std::move(c));
        }
      }
      return;
    }
    size_t pivot = n;
    size_t best = 0;
    Bitset px = p;
    px |= x;
    for (size_t u = px.first(); u < n; u = px.next(u + 1)) {
      const size_t c = p.and_count(g.row(u));
      if (pivot == n || c > best) {
        pivot = u;
        best = c;
      }
    }
    Bitset cand = p;
    cand.subtract(g.row(pivot));
    for (size_t v = cand.first(); v < n; v = cand.next(v + 1)) {
      Bitset np = p;
      np &= g.row(v);
      Bitset nx = x;
      nx &= g.row(v);
      r.push_back(static_cast<int>(v));
      bk(std::move(np), std::move(nx));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  Bitset p(n), x(n);
  for (size_t i = 0; i < n; ++i) p.set(i);
  bk(p, x);
  census.complete = true;
  return census;
}

namespace {

// Joint colour refinement of two individualised copies of a graph. Returns
// false when the colourings stop being compatible.
bool JointRefine(const Graph& g, std::vector<int>* c1, std::vector<int>* c2) {
  const size_t n = g.n();
  size_t classes = 0;
  while (true) {
    using Sig = std::pair<int, std::vector<int>>;
    std::vector<Sig> s1(n), s2(n);
    auto sig = [&](const std::vector<int>& c, size_t v) {
      Sig s{c[v], {}};
      g.row(v).for_each([&](size_t w) { s.second.push_back(c[w]); });
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    for (size_t v = 0; v < n; ++v) {
      s1[v] = sig(*c1, v);
      s2[v] = sig(*c2, v);
    }
    std::vector<Sig> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::map<int, int> h1, h2;
    for (size_t v = 0; v < n; ++v) {
      (*c1)[v] = static_cast<int>(std::lower_bound(all.begin(), all.end(), s1[v]) - all.begin());
      (*c2)[v] = static_cast<int>(std::lower_bound(all.begin(), all.end(), s2[v]) - all.begin());
      ++h1[(*c1)[v]];
      ++h2[(*c2)[v]];
    }
    if (h1 != h2) return false;
    if (h1.size() == classes) return true;
    classes = h1.size();
  }
}

std::vector<int> Individualise(size_t n, const std::vector<int>& seq) {
  std::vector<int> c(n, 0);
  for (size_t i = 0; i < seq.size(); ++i) c[seq[i]] = static_cast<int>(i) + 1;
  return c;
}

// Is there an automorphism mapping src[i] to dst[i] for all i?
bool Extends(const Graph& g, std::vector<int> src, std::vector<int> dst) {
  const size_t n = g.n();
  std::vector<int> c1 = Individualise(n, src), c2 = Individualise(n, dst);
  if (!JointRefine(g, &c1, &c2)) return false;
  // Smallest non-singleton cell of the source colouring.
  std::map<int, std::vector<int>> cells1, cells2;
  for (size_t v = 0; v < n; ++v) {
    cells1[c1[v]].push_back(static_cast<int>(v));
    cells2[c2[v]].push_back(static_cast<int>(v));
  }
  int pick = -1;
  size_t size = n + 1;
  for (const auto& [col, vs] : cells1) {
    if (vs.size() > 1 && vs.size() < size) {
      size = vs.size();
      pick = col;
    }
  }
  if (pick < 0) {
    std::vector<int> perm(n);
    for (const auto& [col, vs] : cells1) perm[vs[0]] = cells2[col][0];
    for (size_t u = 0; u < n; ++u) {
      for (size_t v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
      }
    }
    return true;
  }
  const int v = cells1[pick][0];
  src.push_back(v);
  dst.push_back(0);
  for (int w : cells2[pick]) {
    dst.back() = w;
    if (Extends(g, src, dst)) return true;
  }
  return false;
}

}  // namespace

mpz_class AutomorphismCount(const Graph& g, size_t max_vertices) {
  const size_t n = g.n();
  if (n > max_vertices) throw BudgetError("automorphism count limited to small graphs");
  mpz_class order = 1;
  std::vector<int> base;
  while (true) {
    std::vector<int> c1 = Individualise(n, base), c2 = c1;
    JointRefine(g, &c1, &c2);
    std::map<int, std::vector<int>> cells;
    for (size_t v = 0; v < n; ++v) cells[c1[v]].push_back(static_cast<int>(v));
    int pick = -1;
    size_t size = n + 1;
    for (const auto& [col, vs] : cells) {
      if (vs.size() > 1 && vs.size() < size) {
        size = vs.size();
        pick = col;
      }
    }
    if (pick < 0) break;
    const int b = cells[pick][0];
    int64_t orbit = 0;
    for (int w : cells[pick]) {
      std::vector<int> src = base, dst = base;
      src.push_back(b);
      dst.push_back(w);
      if (w == b || Extends(g, src, dst)) ++orbit;
    }
    order *= static_cast<unsigned long>(orbit);
    base.push_back(b);
  }
  return order;
}

std::map<int64_t, int64_t> TripleCensus(const Graph& g, int64_t max_triangles) {
  std::map<int64_t, int64_t> out;
  const size_t n = g.n();
  int64_t seen = 0;
  for (size_t u = 0; u < n; ++u) {
    const Bitset& ru = g.row(u);
    for (size_t v = ru.next(u + 1); v < n; v = ru.next(v + 1)) {
      Bitset both = ru;
      both &= g.row(v);
      for (size_t w = both.next(v + 1); w < n; w = both.next(w + 1)) {
        if (++seen > max_triangles) throw BudgetError("triple census budget");
        ++out[static_cast<int64_t>(both.and_count(g.row(w)))];
      }
    }
  }
  return out;
}

std::string WriteAdjacency(const Graph& g) {
  static const char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(g.n()) + "\n";
  for (size_t i = 0; i < g.n(); ++i) {
    for (size_t j = 0; j < i; j += 4) {
      int d = 0;
      for (size_t b = 0; b < 4 && j + b < i; ++b) {
        if (g.adjacent(i, j + b)) d |= 1 << b;
      }
      out += kHex[d];
    }
    out += '\n';
  }
  return out;
}

Graph ReadAdjacency(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty graph file");
  const size_t n = std::stoul(line);
  Graph g(n);
  for (size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw std::invalid_argument("truncated graph file");
    if (line.size() != (i + 3) / 4) throw std::invalid_argument("bad row length");
    for (size_t j = 0; j < i; ++j) {
      const char ch = line[j / 4];
      const int d = std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0' : ch - 'a' + 10;
      if (d < 0 || d > 15) throw std::invalid_argument("bad hex digit");
      if ((d >> (j % 4)) & 1) g.AddEdge(i, j);
    }
  }
  return g;
}

std::string WriteEdgeList(const Graph& g) {
  std::string out;
  for (size_t u = 0; u < g.n(); ++u) {
    const Bitset& r = g.row(u);
    for (size_t v = r.next(u + 1); v < g.n(); v = r.next(v + 1)) {
      out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  }
  return out;
}

}  // namespace pgeom
