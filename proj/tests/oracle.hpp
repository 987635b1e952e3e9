// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used only by the tests. They share
// nothing with the library engines beyond the graph container.

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "splitrel/graph.hpp"
#include "splitrel/polynomial.hpp"

namespace oracle {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// N_i by plain subset enumeration with union-find.
inline std::vector<long> split_counts(const splitrel::Multigraph& g, int s, int t) {
  auto edges = g.edge_list();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  std::vector<long> counts(m + 1, 0);
  for (long mask = 0; mask < (1L << m); ++mask) {
    UnionFind uf(n);
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) uf.unite(edges[j].first, edges[j].second);
    }
    int roots = 0;
    for (int v = 0; v < n; ++v) roots += uf.find(v) == v;
    if (roots == 2 && uf.find(s) != uf.find(t)) ++counts[__builtin_popcountl(mask)];
  }
  return counts;
}

inline std::vector<long> all_terminal_counts(const splitrel::Multigraph& g) {
  auto edges = g.edge_list();
  const int m = static_cast<int>(edges.size());
  std::vector<long> counts(m + 1, 0);
  for (long mask = 0; mask < (1L << m); ++mask) {
    UnionFind uf(g.order());
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) uf.unite(edges[j].first, edges[j].second);
    }
    int roots = 0;
    for (int v = 0; v < g.order(); ++v) roots += uf.find(v) == v;
    if (roots == 1) ++counts[__builtin_popcountl(mask)];
  }
  return counts;
}

// Evaluates sum_i N_i p^i (1-p)^(m-i) at a rational point.
inline splitrel::Rational eval_counts(const std::vector<long>& counts, const splitrel::Rational& p) {
  const int m = static_cast<int>(counts.size()) - 1;
  splitrel::Rational total = 0;
  for (int i = 0; i <= m; ++i) {
    splitrel::Rational term = counts[i];
    for (int k = 0; k < i; ++k) term *= p;
    for (int k = i; k < m; ++k) term *= 1 - p;
    total += term;
  }
  return total;
}

// Isomorphism by trying every permutation; fine for n <= 7.
inline bool isomorphic(const splitrel::Multigraph& a, const splitrel::Multigraph& b,
                       int s1 = -1, int t1 = -1, int s2 = -1, int t2 = -1) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (s1 >= 0) {
      bool direct = perm[s1] == s2 && perm[t1] == t2;
      bool swapped = perm[s1] == t2 && perm[t1] == s2;
      if (!direct && !swapped) continue;
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        ok = a.multiplicity(u, v) == b.multiplicity(perm[u], perm[v]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
