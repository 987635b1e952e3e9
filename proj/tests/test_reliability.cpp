// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "splitrel/error.hpp"
#include "splitrel/reliability.hpp"

using namespace splitrel;

namespace {

Multigraph g1() { return Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

Multigraph random_multigraph(std::mt19937& rng, int n, int m) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a != b) edges.emplace_back(a, b);
  }
  return Multigraph::build(n, edges);
}

}  // namespace

TEST_CASE("worked example polynomials") {
  Multigraph g = g1();
  const TerminalPair db{3, 1};
  SplitResult r = split_rel_oracle(g, db);
  CHECK(r.polynomial.to_string() == "-6*p^5 + 20*p^4 - 22*p^3 + 8*p^2");
  CHECK(r.nvector.at(2) == 8);
  CHECK(r.nvector.at(3) == 2);
  CHECK(r.cutset_size == 2);
  CHECK(r.polynomial.evaluate(Rational(1, 2)) == oracle::eval_counts({0, 0, 8, 2, 0, 0}, Rational(1, 2)));

  SplitResult ac = split_rel_oracle(g, {0, 2});
  CHECK(ac.polynomial.to_string() == "-4*p^5 + 12*p^4 - 12*p^3 + 4*p^2");
  CHECK(ac.nvector.at(2) == 4);
  CHECK(ac.cutset_size == 3);

  std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(k_terminal_rel(g, all).to_string() == "4*p^5 - 11*p^4 + 8*p^3");
  CHECK(all_terminal_rel(g).to_string() == "4*p^5 - 11*p^4 + 8*p^3");
  CHECK(two_terminal_rel(g, db).to_string() == "2*p^5 - 5*p^4 + 2*p^3 + 2*p^2");
  CHECK(split_rel_factoring(g, db) == r.polynomial);
}

TEST_CASE("engines agree with the union-find oracle") {
  std::mt19937 rng(11);
  FactoringEngine engine;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + trial % 6;
    int m = n - 1 + trial % 6;
    Multigraph g = random_multigraph(rng, n, m);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int s = pick(rng);
    int t = pick(rng);
    if (s == t) t = (s + 1) % n;
    std::vector<long> counts = oracle::split_counts(g, s, t);
    SplitResult r = split_rel_oracle(g, {s, t});
    for (int i = 0; i <= m; ++i) CHECK(r.nvector.at(i) == counts[i]);
    CHECK(engine.split(g, {s, t}) == r.polynomial);
    std::vector<long> at = oracle::all_terminal_counts(g);
    Rational x(2, 7);
    CHECK(engine.all_terminal(g).evaluate(x) == oracle::eval_counts(at, x));

    auto batch = split_counts_all_pairs(g);
    TerminalPair key{std::min(s, t), std::max(s, t)};
    REQUIRE(batch.count(key) == 1);
    CHECK(batch.at(key) == r.nvector);
  }
  CHECK(engine.memo_hits() + engine.memo_misses() > 0);
}

TEST_CASE("disconnected graph has split zero only with more than two components") {
  Multigraph two = Multigraph::build(4, {{0, 1}, {2, 3}});
  SplitResult r = split_rel_oracle(two, {0, 2});
  CHECK(r.cutset_size == 0);
  // Components must both stay connected.
  CHECK(r.polynomial == IntPolynomial::monomial(1, 2));
  CHECK(split_rel_oracle(two, {0, 1}).polynomial.is_zero());
  Multigraph three = Multigraph::build(3, {});
  CHECK(split_rel_factoring(three, {0, 1}).is_zero());
}

TEST_CASE("slot ceiling") {
  Multigraph big = Multigraph::from_bundles(2, {Bundle{VertexPair(0, 1), 30}});
  CHECK_THROWS_AS(split_rel_oracle(big, {0, 1}), Error);
  CHECK(split_rel_factoring(big, {0, 1}) == IntPolynomial::one_minus_p(30));
}

TEST_CASE("pendant terminal identity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 5;
    Multigraph g = random_multigraph(rng, n, n - 1 + trial % 4);
    CHECK(pendant_identity_check(g, 0, n - 1));
  }
}
