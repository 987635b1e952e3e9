// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "splitrel/canonical.hpp"
#include "splitrel/error.hpp"
#include "splitrel/graph.hpp"
#include "splitrel/graph_io.hpp"

using namespace splitrel;

namespace {

Multigraph g1() { return Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

Multigraph random_multigraph(std::mt19937& rng, int n, int m) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  // Spanning path keeps it connected.
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a != b) edges.emplace_back(a, b);
  }
  return Multigraph::build(n, edges);
}

}  // namespace

TEST_CASE("construction and queries") {
  Multigraph g = Multigraph::build(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.degree(1) == 3);
  CHECK_FALSE(g.is_simple());
  CHECK(g1().is_simple());
  CHECK_THROWS_AS(Multigraph::build(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Multigraph::build(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(validate_terminals(g, {1, 1}), Error);
}

TEST_CASE("connectivity, deletion and contraction") {
  Multigraph g = g1();
  CHECK(is_connected(g));
  Multigraph d = delete_edge(delete_edge(g, {0, 1}), {1, 2});
  CHECK_FALSE(is_connected(d));
  CHECK(components(d).size() == 2);

  Multigraph c = contract_edge(g, {0, 2});
  CHECK(c.order() == 3);
  // 0-1 and 2-1 become a double edge; same for 3.
  CHECK(c.size() == 4);
  CHECK(c.multiplicity(0, 1) == 2);
  CHECK(c.multiplicity(0, 2) == 2);
  CHECK(contracted_label(3, {0, 2}) == 2);
}

TEST_CASE("minimum cut and distance") {
  Multigraph g = g1();
  CHECK(min_st_cut(g, {3, 1}) == 2);
  CHECK(min_st_cut(g, {0, 2}) == 3);
  CHECK(shortest_path_length(g, {3, 1}) == 2);
  Multigraph b = Multigraph::build(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(min_st_cut(b, {0, 1}) == 3);
}

TEST_CASE("canonical keys match brute-force isomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 4;
    int m = n - 1 + trial % 5;
    Multigraph a = random_multigraph(rng, n, m);
    Multigraph b = random_multigraph(rng, n, m);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph a2 = a.relabeled(perm);
    CHECK(canonical_key(a) == canonical_key(a2));
    CHECK(canonical_graph(a) == canonical_graph(a2));
    CHECK((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(a, b));

    TerminalPair ta{0, n - 1};
    TerminalPair tb{1, 2};
    bool same = canonical_key(a, ta) == canonical_key(b, tb);
    CHECK(same == oracle::isomorphic(a, b, ta.s, ta.t, tb.s, tb.t));
    CHECK(canonical_key(a, ta) == canonical_key(a2, TerminalPair{perm[ta.t], perm[ta.s]}));
  }
}

TEST_CASE("terminal flags separate pairs") {
  Multigraph path = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_key(path, TerminalPair{0, 3}) != canonical_key(path, TerminalPair{0, 2}));
  CHECK(canonical_key(path, TerminalPair{0, 2}) == canonical_key(path, TerminalPair{1, 3}));
  CHECK(canonical_key(path) != canonical_key(path, TerminalPair{0, 3}));
}

TEST_CASE("json round trip") {
  std::string text = R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0],[0,2]],"s":3,"t":1})";
  GraphDocument doc = parse_graph_document(text);
  CHECK(doc.graph == g1());
  REQUIRE(doc.terminals);
  CHECK(doc.terminals->s == 3);
  CHECK(parse_graph_document(serialize_graph(doc.graph, doc.terminals)).graph == doc.graph);
  CHECK_THROWS_AS(parse_graph_document(R"({"n":2,"edges":[[0,0]]})"), Error);
  CHECK_THROWS_AS(parse_graph_document("{"), Error);
}
