// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracle.hpp"
#include "splitrel/error.hpp"
#include "splitrel/families.hpp"
#include "splitrel/optimality.hpp"
#include "splitrel/reliability.hpp"

using namespace splitrel;

namespace {

SplitResult family_result(const std::string& text) {
  FamilyInstance inst = construct(parse_family_spec(text));
  return split_rel_oracle(inst.graph, inst.terminals);
}

}  // namespace

TEST_CASE("dominance examples") {
  IntPolynomial b = family_result("Gnm:3,5").polynomial;
  IntPolynomial c = family_result("C3:5,1").polynomial;
  DominanceVerdict v = dominates(b, c);
  CHECK(v.relation == Relation::kDominates);
  CHECK(b - c == IntPolynomial::one_minus_p(4) - IntPolynomial::one_minus_p(5));
  CHECK(dominates(c, b).relation == Relation::kDominatedBy);
  CHECK(dominates(b, b).relation == Relation::kEqual);

  SplitResult g55 = family_result("Gnm:5,5");
  SplitResult x55 = family_result("X55");
  DominanceVerdict inc = dominates(g55.polynomial, x55.polynomial);
  CHECK(inc.relation == Relation::kIncomparable);
  REQUIRE(inc.first_larger);
  REQUIRE(inc.second_larger);
  CHECK(g55.polynomial.evaluate(*inc.first_larger) > x55.polynomial.evaluate(*inc.first_larger));
  CHECK(g55.polynomial.evaluate(*inc.second_larger) < x55.polynomial.evaluate(*inc.second_larger));
  // X55 wins near 0, the bundle graph near 1.
  CHECK(*inc.second_larger < *inc.first_larger);

  EndpointComparison e = compare_endpoints(g55.nvector, x55.nvector);
  CHECK(e.near_zero == EndpointWinner::kSecond);
  CHECK(e.near_one == EndpointWinner::kFirst);
  CHECK(g55.nvector.at(3) == 7);
  CHECK(x55.nvector.at(3) == 8);
  CHECK(g55.nvector.at(4) == 3);
  FamilyInstance x = construct(parse_family_spec("X55"));
  CHECK(x55.nvector.at(4) == oracle::split_counts(x.graph, x.terminals.s, x.terminals.t)[4]);
  CHECK(x55.nvector.at(4) < g55.nvector.at(4));

  EndpointComparison same = compare_endpoints(g55.nvector, g55.nvector);
  CHECK(same.near_zero == EndpointWinner::kTie);
  CHECK(same.near_one == EndpointWinner::kTie);
  CHECK_THROWS_AS(compare_endpoints(g55.nvector, family_result("Gnm:4,4").nvector), Error);
}

TEST_CASE("pendant bundle graph against Gnm") {
  for (int n = 4; n <= 6; ++n) {
    for (int m = n; m <= n + 3; ++m) {
      SplitResult g = family_result("Gnm:" + std::to_string(n) + "," + std::to_string(m));
      SplitResult h = family_result("HPendantBundle:" + std::to_string(n) + "," + std::to_string(m));
      CHECK(g.nvector.at(m - 1) == h.nvector.at(m - 1));
      EndpointComparison e = compare_endpoints(g.nvector, h.nvector);
      CHECK(e.near_zero == EndpointWinner::kFirst);
    }
  }
}

TEST_CASE("find_optimal examples") {
  OptimalityReport r44 = find_optimal(4, 4, GraphMode::kMulti);
  CHECK(r44.exists);
  REQUIRE(r44.witness);
  CHECK(r44.witness->polynomial == family_result("Gnm:4,4").polynomial);

  OptimalityReport r55 = find_optimal(5, 5, GraphMode::kMulti);
  CHECK_FALSE(r55.exists);
  CHECK(refutations_verify(r55));

  for (int n = 2; n <= 7; ++n) {
    OptimalityReport tree = find_optimal(n, n - 1, GraphMode::kMulti);
    CHECK(tree.exists);
    REQUIRE(tree.witness);
    CHECK(tree.witness->polynomial == closed_form_split(FamilySpec{FamilyTag::kPath, {n, n - 1}}));
  }

  OptimalityReport s66 = find_optimal(6, 6, GraphMode::kSimple);
  CHECK_FALSE(s66.exists);
  CHECK(refutations_verify(s66));
  SplitResult r6 = family_result("Rn:6");
  SplitResult sn6 = family_result("Sn:6");
  CHECK(compare_endpoints(sn6.nvector, r6.nvector).near_zero == EndpointWinner::kSecond);

  CHECK_THROWS_AS(find_optimal(4, 2, GraphMode::kMulti), Error);
  CHECK_THROWS_AS(find_optimal(4, 7, GraphMode::kSimple), Error);
}

TEST_CASE("verdicts do not depend on engine, orbit reduction or order") {
  for (int n = 3; n <= 5; ++n) {
    for (int m = n - 1; m <= n + 2; ++m) {
      for (GraphMode mode : {GraphMode::kMulti, GraphMode::kSimple}) {
        if (mode == GraphMode::kSimple && m > n * (n - 1) / 2) continue;
        INFO("n=" << n << " m=" << m << " mode=" << to_string(mode));
        OptimalityReport base = find_optimal(n, m, mode);
        for (SplitEngine engine : {SplitEngine::kOracle, SplitEngine::kFactoring}) {
          OptimalityOptions opt;
          opt.engine = engine;
          CHECK(report_json(find_optimal(n, m, mode, opt)) == report_json(base));
        }
        OptimalityOptions all_pairs;
        all_pairs.orbit_reduction = false;
        OptimalityReport full = find_optimal(n, m, mode, all_pairs);
        CHECK(full.exists == base.exists);
        CHECK(full.distinct_polynomials == base.distinct_polynomials);
        OptimalityOptions shuffled;
        shuffled.shuffle_seed = 1234 + n * 10 + m;
        shuffled.workers = 3;
        CHECK(report_json(find_optimal(n, m, mode, shuffled)) == report_json(base));
      }
    }
  }
}

TEST_CASE("Gnm is the witness whenever one exists in multi mode") {
  for (int n = 3; n <= 6; ++n) {
    for (int m = n; m <= n + 3; ++m) {
      OptimalityReport r = find_optimal(n, m, GraphMode::kMulti);
      if (!r.exists) continue;
      CHECK(r.witness->polynomial == closed_form_split(FamilySpec{FamilyTag::kGnm, {n, m}}));
    }
  }
}

TEST_CASE("truth table") {
  CHECK(*predicted_optimal_exists(4, 4, GraphMode::kMulti));
  CHECK_FALSE(*predicted_optimal_exists(4, 5, GraphMode::kMulti));
  CHECK(*predicted_optimal_exists(3, 9, GraphMode::kMulti));
  CHECK_FALSE(*predicted_optimal_exists(6, 8, GraphMode::kSimple));
  CHECK(*predicted_optimal_exists(6, 9, GraphMode::kSimple));
  CHECK(*predicted_optimal_exists(7, 14, GraphMode::kSimple));
  CHECK_FALSE(*predicted_optimal_exists(7, 13, GraphMode::kSimple));
  CHECK(*predicted_optimal_exists(8, 27, GraphMode::kSimple));
  CHECK_FALSE(predicted_optimal_exists(8, 12, GraphMode::kSimple).has_value());
  CHECK(theorem_grid(GraphMode::kMulti, 2, 3).size() == 10);
}

TEST_CASE("report json") {
  OptimalityReport r = find_optimal(4, 5, GraphMode::kMulti);
  auto j = report_json(r);
  CHECK(j["exists"] == false);
  REQUIRE(j["refutations"].size() == r.maximal);
  std::string p = j["refutations"][0]["p"];
  CHECK(p.find('/') != std::string::npos);
  CHECK(j["refutations"][0]["candidate"]["graph"]["n"] == 4);
}
