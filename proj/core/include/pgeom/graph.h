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

// Simple undirected graphs with dense bit-matrix adjacency, and the exact
// invariants used to certify strongly regular graphs: parameters, integral
// spectra, the ratio bound, clique and coclique searches, automorphism
// counts of small graphs and triple common-neighbour statistics.

#ifndef PGEOM_GRAPH_H_
#define PGEOM_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pgeom/bitset.h"

namespace pgeom {

class Graph {
 public:
  Graph() = default;
  explicit Graph(size_t n) : rows_(n, Bitset(n)) {}

  size_t n() const { return rows_.size(); }
  bool adjacent(size_t u, size_t v) const { return rows_[u].test(v); }
  const Bitset& row(size_t u) const { return rows_[u]; }
  size_t degree(size_t u) const { return rows_[u].count(); }

  void AddEdge(size_t u, size_t v);
  void RemoveEdge(size_t u, size_t v);
  void SetEdge(size_t u, size_t v, bool on) {
    if (on) AddEdge(u, v); else RemoveEdge(u, v);
  }

  size_t NumEdges() const;
  Graph Complement() const;
  Graph Induced(const std::vector<int>& vertices) const;
  // Connected components, each sorted; components ordered by least vertex.
  std::vector<std::vector<int>> Components() const;
  // True when symmetric with an empty diagonal.
  bool IsSimple() const;

  bool operator==(const Graph& o) const { return rows_ == o.rows_; }

  // Optional human-readable vertex payloads.
  std::vector<std::string> labels;

 private:
  std::vector<Bitset> rows_;
};

struct SrgParams {
  int64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams& o) const {
    return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
  }
  std::string ToString() const;
};

// (v, v-k-1, v-2k+mu-2, v-2k+lambda).
SrgParams ComplementParams(const SrgParams& p);

// The restricted eigenvalues r > s and their multiplicities f, g, when the
// parameters are feasible.
struct SrgSpectrum {
  bool integral = false;     // r, s integers
  bool feasible = false;     // k(k-l-1) = mu(v-k-1) and f, g non-negative integers
  mpq_class r, s;            // exact only when integral
  mpq_class f, g;
  std::string reason;        // why infeasible, if it is
};
SrgSpectrum SrgEigen(const SrgParams& p);

struct SrgReport {
  bool regular = false;
  bool srg = false;
  bool trivial = false;      // complete or edgeless, mu or lambda undefined
  SrgParams params;
  // First pair violating constancy, when srg is false.
  int64_t witness_u = -1, witness_v = -1;
  int64_t pairs_checked = 0;
  SrgSpectrum spectrum;
};
SrgReport SrgCheck(const Graph& g);

struct SpectrumCertificate {
  bool annihilated = false;  // prod (A - theta I) over theta != k is c J
  bool regular = false;
  int64_t degree = 0;
  std::vector<int64_t> eigenvalues;  // distinct, descending, degree first
  std::vector<mpq_class> multiplicities;
  bool multiplicities_ok = false;    // non-negative integers summing to n
  bool traces_ok = false;            // sum m = n, sum m t = 0, sum m t^2 = nk
  // Vector x orthogonal to the all-ones vector with M x != 0, if any.
  std::vector<int64_t> witness;
  bool ok() const { return annihilated && regular && multiplicities_ok && traces_ok; }
};
// Certifies that the claimed integers are the eigenvalues of g. The claim
// may list the degree or omit it; duplicates are merged.
SpectrumCertificate CertifySpectrum(const Graph& g,
                                    std::vector<int64_t> claimed);

// -v theta_min / (k - theta_min).
mpq_class HoffmanBound(int64_t v, int64_t k, int64_t theta_min);

struct SearchResult {
  bool found = false;
  bool exhausted = false;     // search space fully explored
  std::vector<int> witness;   // best set found
  int64_t nodes = 0;
};
// Branch and bound for a clique (or coclique) of size >= target. With
// target <= 0 finds a maximum one. Deterministic colouring bound.
SearchResult MaxClique(const Graph& g, int target = 0,
                       int64_t node_budget = -1);
SearchResult MaxCoclique(const Graph& g, int target = 0,
                         int64_t node_budget = -1);

struct CliqueCensus {
  std::map<int, int64_t> histogram;                   // size -> count
  std::map<int, std::vector<std::vector<int>>> representatives;
  int64_t nodes = 0;
  bool complete = false;
};
// All maximal cliques (Bron-Kerbosch, pivot of highest degree in the
// candidate set, ties to the least index). Keeps up to `keep` examples of
// each size.
CliqueCensus MaximalCliqueCensus(const Graph& g, int keep = 3,
                                 int64_t node_budget = -1);

// Order of the automorphism group, by individualisation and refinement
// along a stabiliser chain. Intended for graphs of at most 40 vertices.
mpz_class AutomorphismCount(const Graph& g, size_t max_vertices = 40);

// Multiset of |N(u) & N(v) & N(w)| over all triangles {u, v, w}.
std::map<int64_t, int64_t> TripleCensus(const Graph& g,
                                        int64_t max_triangles = 50'000'000);

// Text formats: "n" then one hex row of the lower triangle per vertex, and
// an edge list "u v".
std::string WriteAdjacency(const Graph& g);
Graph ReadAdjacency(const std::string& text);
std::string WriteEdgeList(const Graph& g);

}  // namespace pgeom

#endif  // PGEOM_GRAPH_H_
