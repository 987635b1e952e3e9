// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "splitrel/canonical.hpp"
#include "splitrel/enumeration.hpp"
#include "splitrel/error.hpp"

using namespace splitrel;

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  oracle::UnionFind uf(n);
  for (auto [u, v] : edges) uf.unite(u, v);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) != uf.find(0)) return false;
  }
  return true;
}

// Distinct classes among labeled graphs by pairwise permutation checks.
std::size_t count_classes(const std::vector<Multigraph>& labeled) {
  std::vector<Multigraph> reps;
  for (const Multigraph& g : labeled) {
    bool known = false;
    for (const Multigraph& r : reps) {
      if (oracle::isomorphic(g, r)) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(g);
  }
  return reps.size();
}

std::vector<Multigraph> labeled_simple(int n, int m) {
  auto pairs = all_pairs(n);
  std::vector<Multigraph> out;
  for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
    if (__builtin_popcountl(mask) != m) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (mask >> j & 1) edges.push_back(pairs[j]);
    }
    if (connected(n, edges)) out.push_back(Multigraph::build(n, edges));
  }
  return out;
}

std::vector<Multigraph> labeled_multi(int n, int m) {
  auto pairs = all_pairs(n);
  std::vector<Multigraph> out;
  std::vector<int> mult(pairs.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == pairs.size()) {
      if (left != 0) return;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        for (int k = 0; k < mult[j]; ++k) edges.push_back(pairs[j]);
      }
      if (connected(n, edges)) out.push_back(Multigraph::build(n, edges));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      mult[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, m);
  return out;
}

// Number of connected simple graphs per edge count up to isomorphism, by
// Burnside's lemma over all vertex permutations.
std::vector<long> burnside_connected_counts(int n) {
  auto pairs = all_pairs(n);
  const int total_pairs = static_cast<int>(pairs.size());
  std::vector<long> fixed(total_pairs + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long group_order = 0;
  do {
    ++group_order;
    std::map<std::pair<int, int>, int> index;
    for (int j = 0; j < total_pairs; ++j) index[pairs[j]] = j;
    std::vector<int> orbit_of(total_pairs, -1);
    std::vector<std::vector<int>> orbits;
    for (int j = 0; j < total_pairs; ++j) {
      if (orbit_of[j] >= 0) continue;
      std::vector<int> orbit;
      int cur = j;
      while (orbit_of[cur] < 0) {
        orbit_of[cur] = static_cast<int>(orbits.size());
        orbit.push_back(cur);
        auto [u, v] = pairs[cur];
        int a = perm[u];
        int b = perm[v];
        cur = index[{std::min(a, b), std::max(a, b)}];
      }
      orbits.push_back(orbit);
    }
    const int k = static_cast<int>(orbits.size());
    for (long mask = 0; mask < (1L << k); ++mask) {
      oracle::UnionFind uf(n);
      int edges = 0;
      for (int o = 0; o < k; ++o) {
        if (!(mask >> o & 1)) continue;
        for (int j : orbits[o]) {
          uf.unite(pairs[j].first, pairs[j].second);
          ++edges;
        }
      }
      bool ok = true;
      for (int v = 1; v < n && ok; ++v) ok = uf.find(v) == uf.find(0);
      if (ok) ++fixed[edges];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (long& f : fixed) f /= group_order;
  return fixed;
}

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(enumerate_graphs(3, 3, GraphMode::kMulti).size() == 2);
  CHECK(enumerate_graphs(4, 4, GraphMode::kSimple).size() == 2);
  CHECK(enumerate_graphs(4, 4, GraphMode::kMulti).size() == 5);
  CHECK(enumerate_graphs(4, 2, GraphMode::kMulti).empty());
  CHECK(enumerate_graphs(4, 7, GraphMode::kSimple).empty());
  CHECK_THROWS_AS(enumerate_graphs(9, 8, GraphMode::kSimple), Error);
  CHECK(parse_graph_mode("multi") == GraphMode::kMulti);
  CHECK_THROWS_AS(parse_graph_mode("both"), Error);
}

TEST_CASE("simple classes match labeled brute force for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = n - 1; m <= n * (n - 1) / 2; ++m) {
      INFO("n=" << n << " m=" << m);
      std::vector<Multigraph> classes = enumerate_graphs(n, m, GraphMode::kSimple);
      CHECK(classes.size() == count_classes(labeled_simple(n, m)));
      for (const Multigraph& g : classes) {
        CHECK(is_connected(g));
        CHECK(g.size() == m);
        CHECK(g.is_simple());
        CHECK(canonical_graph(g) == g);
      }
    }
  }
}

TEST_CASE("multi classes match labeled brute force for n <= 4, m <= 6") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = n - 1; m <= 6; ++m) {
      INFO("n=" << n << " m=" << m);
      std::vector<Multigraph> classes = enumerate_graphs(n, m, GraphMode::kMulti);
      CHECK(classes.size() == count_classes(labeled_multi(n, m)));
      std::set<CanonicalKey> keys;
      for (const Multigraph& g : classes) {
        CHECK(is_connected(g));
        CHECK(g.size() == m);
        CHECK(canonical_graph(g) == g);
        keys.insert(canonical_key(g));
      }
      CHECK(keys.size() == classes.size());
    }
  }
}

TEST_CASE("simple class counts on 6 and 7 vertices match Burnside") {
  for (int n = 6; n <= 7; ++n) {
    std::vector<long> expected = burnside_connected_counts(n);
    for (int m = n - 1; m <= n * (n - 1) / 2; ++m) {
      INFO("n=" << n << " m=" << m);
      CHECK(static_cast<long>(simple_graph_classes(n, m).size()) == expected[m]);
    }
  }
}

TEST_CASE("terminal classes are automorphism orbits") {
  Multigraph p4 = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(enumerate_terminal_classes(p4).size() == 4);
  Multigraph c4 = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(enumerate_terminal_classes(c4).size() == 2);
  Multigraph k2 = Multigraph::build(2, {{0, 1}, {0, 1}});
  CHECK(enumerate_terminal_classes(k2).size() == 1);
  CHECK(enumerate_terminal_classes(p4, false).size() == 6);

  for (int m = 4; m <= 6; ++m) {
    for (const Multigraph& g : enumerate_graphs(4, m, GraphMode::kMulti)) {
      std::vector<TerminalPair> reps = enumerate_terminal_classes(g);
      // Every pair is equivalent to exactly one representative.
      for (Vertex s = 0; s < 4; ++s) {
        for (Vertex t = s + 1; t < 4; ++t) {
          int hits = 0;
          for (TerminalPair r : reps) hits += oracle::isomorphic(g, g, s, t, r.s, r.t);
          CHECK(hits == 1);
        }
      }
    }
  }
}
