// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracle.hpp"
#include "splitrel/canonical.hpp"
#include "splitrel/error.hpp"
#include "splitrel/families.hpp"
#include "splitrel/reliability.hpp"

using namespace splitrel;

namespace {

SplitResult engine_result(const FamilySpec& spec) {
  FamilyInstance inst = construct(spec);
  return make_split_result(inst.graph, inst.terminals, split_rel_factoring(inst.graph, inst.terminals));
}

void check_counts(const FamilySpec& spec) {
  FamilyInstance inst = construct(spec);
  std::vector<long> counts = oracle::split_counts(inst.graph, inst.terminals.s, inst.terminals.t);
  for (const auto& [index, value] : expected_ncounts(spec)) {
    INFO(to_string(spec) << " N_" << index);
    CHECK(Integer(counts.at(index)) == value);
  }
}

}  // namespace

TEST_CASE("parse family specs") {
  FamilySpec s = parse_family_spec("family:Gnm:4,4");
  CHECK(s.tag == FamilyTag::kGnm);
  CHECK(s.params == std::vector<int>{4, 4});
  CHECK(parse_family_spec("Rn:6").tag == FamilyTag::kRnSimple);
  CHECK(parse_family_spec("X55").params.empty());
  CHECK(to_string(s) == "family:Gnm:4,4");
  CHECK_THROWS_AS(parse_family_spec("family:Nope:1"), Error);
  CHECK_THROWS_AS(parse_family_spec("family:Gnm:4"), Error);
  CHECK_THROWS_AS(parse_family_spec("family:Gnm:4,x"), Error);
  CHECK_THROWS_AS(construct(parse_family_spec("Gnm:5,3")), Error);
  CHECK_THROWS_AS(construct(parse_family_spec("D3:4,2,2")), Error);
}

TEST_CASE("stated counts at the quoted points") {
  CHECK(expected_ncounts(parse_family_spec("Gnm:6,8")) == std::map<int, Integer>{{4, 17}, {7, 4}});
  CHECK(expected_ncounts(parse_family_spec("HTwoBundles:6,8")).at(4) == 23);
  CHECK(expected_ncounts(parse_family_spec("PathTriangle:7")).at(5) == 12);
  CHECK(expected_ncounts(parse_family_spec("Rn:6")).at(4) == 12);
  CHECK_THROWS_AS(expected_ncounts(parse_family_spec("Path:4")), Error);

  SplitResult g44 = engine_result(parse_family_spec("Gnm:4,4"));
  CHECK(g44.nvector.at(2) == 5);
  CHECK(g44.nvector.at(3) == 2);
  CHECK(engine_result(parse_family_spec("X55")).nvector.at(3) == 8);
  CHECK(engine_result(parse_family_spec("Y66")).nvector.at(4) == 12);
}

TEST_CASE("stated counts across sweeps") {
  for (int n = 3; n <= 7; ++n) {
    for (int m = n; m <= 10; ++m) {
      check_counts(FamilySpec{FamilyTag::kGnm, {n, m}});
      check_counts(FamilySpec{FamilyTag::kHTwoBundles, {n, m}});
    }
    for (int m = n - 1; m <= 10; ++m) check_counts(FamilySpec{FamilyTag::kHPendantBundle, {n, m}});
  }
  for (int n = 4; n <= 8; ++n) {
    check_counts(FamilySpec{FamilyTag::kPathTriangle, {n}});
    check_counts(FamilySpec{FamilyTag::kSnSimple, {n}});
  }
  for (int n = 5; n <= 8; ++n) check_counts(FamilySpec{FamilyTag::kRnSimple, {n}});
  check_counts(FamilySpec{FamilyTag::kX55, {}});
  check_counts(FamilySpec{FamilyTag::kY66, {}});
}

TEST_CASE("closed forms match the engines") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      FamilySpec path{FamilyTag::kPath, {n, k}};
      CHECK(closed_form_split(path) == engine_result(path).polynomial);
      if (n >= 3) {
        FamilySpec cycle{FamilyTag::kCycle, {n, k}};
        CHECK(closed_form_split(cycle) == engine_result(cycle).polynomial);
      }
    }
    for (int m = n - 1; m <= 9; ++m) {
      FamilySpec gnm{FamilyTag::kGnm, {n, m}};
      CHECK(closed_form_split(gnm) == engine_result(gnm).polynomial);
    }
  }
  for (int m = 2; m <= 8; ++m) {
    for (int a = 1; a < m; ++a) {
      FamilySpec b{FamilyTag::kB3, {m, a}};
      FamilySpec c{FamilyTag::kC3, {m, a}};
      CHECK(closed_form_split(b) == engine_result(b).polynomial);
      CHECK(closed_form_split(c) == engine_result(c).polynomial);
      for (int bb = 1; a + bb < m; ++bb) {
        FamilySpec d{FamilyTag::kD3, {m, a, bb}};
        CHECK(closed_form_split(d) == engine_result(d).polynomial);
      }
    }
  }
  CHECK_THROWS_AS(closed_form_split(parse_family_spec("X55")), Error);
}

TEST_CASE("bundle placement does not matter for Gnm") {
  for (int n = 3; n <= 6; ++n) {
    const int m = n + 2;
    IntPolynomial first;
    for (int edge = 0; edge + 1 < n; ++edge) {
      std::vector<Bundle> bundles;
      for (int i = 0; i + 1 < n; ++i) bundles.push_back(Bundle{VertexPair(i, i + 1), i == edge ? m - n + 2 : 1});
      Multigraph g = Multigraph::from_bundles(n, bundles);
      IntPolynomial f = split_rel_oracle(g, {0, n - 1}).polynomial;
      if (edge == 0) first = f;
      CHECK(f == first);
      // Mirrored placements are the same graph class.
      std::vector<Bundle> mirrored;
      for (const Bundle& b : bundles) mirrored.push_back(Bundle{VertexPair(n - 1 - b.pair.u, n - 1 - b.pair.v), b.multiplicity});
      CHECK(canonical_key(g, TerminalPair{0, n - 1}) ==
            canonical_key(Multigraph::from_bundles(n, mirrored), TerminalPair{0, n - 1}));
    }
  }
}

TEST_CASE("family inequalities") {
  for (int n = 4; n <= 7; ++n) {
    for (int m = n + 1; m <= 10; ++m) {
      Integer h = engine_result(FamilySpec{FamilyTag::kHTwoBundles, {n, m}}).nvector.at(n - 2);
      Integer g = engine_result(FamilySpec{FamilyTag::kGnm, {n, m}}).nvector.at(n - 2);
      CHECK(h - g == (m - n) * (n - 3));
    }
  }
  for (int n = 6; n <= 8; ++n) {
    Integer r = engine_result(FamilySpec{FamilyTag::kRnSimple, {n}}).nvector.at(n - 2);
    Integer s = engine_result(FamilySpec{FamilyTag::kSnSimple, {n}}).nvector.at(n - 2);
    CHECK(r > s);
  }
}
