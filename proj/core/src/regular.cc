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

#include "pgeom/regular.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pgeom {

mpz_class RegularSystemSize(const PolarSpace& ps, int64_t m, int k) {
  mpz_class r = static_cast<long>(m);
  for (int i = 1; i <= k; ++i) r *= HalfPow(ps.base(), 2 * (ps.d() - i) + ps.e2()) + 1;
  return r;
}

RegularSystemReport VerifyRegularSystem(const PolarSpace& ps,
                                        const std::vector<Subspace>& members, int k) {
  RegularSystemReport rep;
  const Field& f = ps.field();
  const int d = ps.d();
  if (k < 1 || k > d) throw std::invalid_argument("k out of range");
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i].dim() != d || members[i].n != ps.n() || !ps.TotallyIsotropic(members[i])) {
      rep.bad_member = static_cast<int>(i);
      return rep;
    }
  }
  rep.members_ok = true;
  // k-subspaces of PG(d-1, q) in member-local coordinates.
  const std::vector<Subspace> local = EnumerateSubspaces(f, d - 1, k - 1);
  std::map<Mat, int64_t> count;
  for (const Subspace& mem : members) {
    for (const Subspace& l : local) {
      Mat rows;
      for (const Vec& r : l.rows) {
        Vec v(ps.n() + 1, 0);
        for (int a = 0; a < d; ++a) {
          if (r[a] == 0) continue;
          for (int j = 0; j <= ps.n(); ++j) {
            v[j] = f.add(v[j], f.mul(r[a], mem.rows[a][j]));
          }
        }
        rows.push_back(std::move(v));
      }
      ++count[Rref(f, ps.n(), std::move(rows)).rows];
    }
  }
  rep.regular = true;
  bool first = true;
  for (const Subspace& s : ps.EnumerateIso(k, 50'000'000)) {
    ++rep.subspaces_checked;
    auto it = count.find(s.rows);
    const int64_t c = it == count.end() ? 0 : it->second;
    if (first) {
      rep.m = c;
      first = false;
    } else if (c != rep.m) {
      rep.regular = false;
      rep.witness = s;
      rep.witness_count = c;
      break;
    }
  }
  if (rep.regular) {
    rep.size_formula_ok =
        RegularSystemSize(ps, rep.m, k) == static_cast<unsigned long>(members.size());
  }
  return rep;
}

RegularSystemReport VerifyRegularSystemIndices(const PolarSpace& ps,
                                               const std::vector<int>& members, int k) {
  const auto& gens = ps.Generators();
  std::vector<Subspace> subs;
  subs.reserve(members.size());
  for (int i : members) subs.push_back(gens.at(i));
  return VerifyRegularSystem(ps, subs, k);
}

namespace {

class RegularSearch {
 public:
  RegularSearch(const PolarSpace& ps, int64_t m, int64_t budget)
      : m_(m), budget_(budget), pts_(ps.GeneratorPoints()) {
    const size_t np = ps.num_points();
    through_.assign(np, {});
    for (size_t g = 0; g < pts_.size(); ++g) {
      for (int32_t p : pts_[g]) through_[p].push_back(static_cast<int>(g));
    }
    in_.assign(np, 0);
    open_.assign(np, 0);
    for (size_t p = 0; p < np; ++p) open_[p] = static_cast<int64_t>(through_[p].size());
    state_.assign(pts_.size(), kOpen);
  }

  SystemSearchResult Run() {
    SystemSearchResult res;
    try {
      bool ok = !pts_.empty();
      if (ok) {
        const size_t mark = trail_.size();
        ok = Assign(0, kIn) && Propagate();
        if (ok) ok = Dfs();
        if (!ok) Undo(mark);
      }
      res.found = ok;
      res.exhausted = !ok;
      if (ok) {
        for (size_t g = 0; g < state_.size(); ++g) {
          if (state_[g] == kIn) res.members.push_back(static_cast<int>(g));
        }
      }
    } catch (const BudgetError&) {
      res.found = false;
      res.exhausted = false;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  enum : uint8_t { kOpen, kIn, kOut };

  bool Assign(int g, uint8_t v) {
    state_[g] = v;
    trail_.push_back(g);
    bool ok = true;
    for (int32_t p : pts_[g]) {
      --open_[p];
      if (v == kIn) ++in_[p];
      if (in_[p] > m_ || in_[p] + open_[p] < m_) ok = false;
      queue_.push_back(p);
    }
    return ok;
  }

  void Undo(size_t mark) {
    while (trail_.size() > mark) {
      const int g = trail_.back();
      trail_.pop_back();
      for (int32_t p : pts_[g]) {
        ++open_[p];
        if (state_[g] == kIn) --in_[p];
      }
      state_[g] = kOpen;
    }
    queue_.clear();
  }

  bool Propagate() {
    while (!queue_.empty()) {
      const int32_t p = queue_.back();
      queue_.pop_back();
      if (open_[p] == 0) continue;
      uint8_t forced;
      if (in_[p] == m_) {
        forced = kOut;
      } else if (in_[p] + open_[p] == m_) {
        forced = kIn;
      } else {
        continue;
      }
      for (int g : through_[p]) {
        if (state_[g] == kOpen && !Assign(g, forced)) {
          queue_.clear();
          return false;
        }
      }
    }
    return true;
  }

  bool Dfs() {
    ++nodes_;
    if (budget_ >= 0 && nodes_ > budget_) throw BudgetError("system search budget");
    while (next_ < state_.size() && state_[next_] != kOpen) ++next_;
    if (next_ == state_.size()) return true;  // all counters exact by propagation
    const int g = static_cast<int>(next_);
    const size_t saved_next = next_;
    for (uint8_t v : {kIn, kOut}) {
      const size_t mark = trail_.size();
      if (Assign(g, v) && Propagate() && Dfs()) return true;
      Undo(mark);
      next_ = saved_next;
    }
    return false;
  }

  int64_t m_;
  int64_t budget_;
  const std::vector<std::vector<int32_t>>& pts_;
  std::vector<std::vector<int>> through_;
  std::vector<int64_t> in_, open_;
  std::vector<uint8_t> state_;
  std::vector<int> trail_;
  std::vector<int32_t> queue_;
  size_t next_ = 0;
  int64_t nodes_ = 0;
};

}  // namespace

SystemSearchResult SearchPointRegularSystem(const PolarSpace& ps, int64_t m,
                                            int64_t node_budget) {
  return RegularSearch(ps, m, node_budget).Run();
}

}  // namespace pgeom
