// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "splitrel/error.hpp"
#include "splitrel/polynomial.hpp"

using namespace splitrel;

TEST_CASE("polynomial arithmetic and rendering") {
  IntPolynomial f = IntPolynomial::parse("-6*p^5 + 20*p^4 - 22*p^3 + 8*p^2");
  CHECK(f.degree() == 5);
  CHECK(f.coefficient(2) == 8);
  CHECK(f.to_string() == "-6*p^5 + 20*p^4 - 22*p^3 + 8*p^2");
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial::one_minus_p(1).to_string() == "-p + 1");
  CHECK(IntPolynomial::parse("1 - p") == IntPolynomial::one_minus_p(1));

  IntPolynomial a{1, 2, 3};
  IntPolynomial b{0, -1};
  CHECK(a * b == IntPolynomial{0, -1, -2, -3});
  CHECK(a - a == IntPolynomial());
  CHECK((a + b).coefficient(1) == 1);
  CHECK(b.pow(3) == IntPolynomial{0, 0, 0, -1});
  CHECK(a.evaluate(Rational(1, 2)) == Rational(11, 4));
}

TEST_CASE("huge coefficients stay exact") {
  IntPolynomial f = IntPolynomial::one_minus_p(200);
  Integer c = f.coefficient(100);
  mpz_class expected;
  mpz_bin_uiui(expected.get_mpz_t(), 200, 100);
  CHECK(c == expected);
  CHECK(IntPolynomial::parse(f.to_string()) == f);
}

TEST_CASE("nvector round trip") {
  NVector nv = NVector::zeros(4, 5);
  nv.set(2, 8);
  nv.set(3, 2);
  IntPolynomial f = from_nvector(nv);
  CHECK(f == IntPolynomial::parse("-6*p^5 + 20*p^4 - 22*p^3 + 8*p^2"));
  CHECK(to_nvector(f, 4, 5) == nv);
  CHECK_THROWS_AS(to_nvector(IntPolynomial{1}, 4, 5), Error);
}

TEST_CASE("sign classification on (0,1)") {
  CHECK(sign_on_unit_interval(IntPolynomial()).tag == SignClass::kIdenticallyZero);
  CHECK(sign_on_unit_interval(IntPolynomial{0, 1, -1}).tag == SignClass::kPositiveOnOpen);
  CHECK(sign_on_unit_interval(IntPolynomial{0, -1, 1}).tag == SignClass::kNegativeOnOpen);

  // (2p-1)^2 touches zero at 1/2.
  IntPolynomial sq = IntPolynomial{-1, 2}.pow(2);
  IntervalSign s = sign_on_unit_interval(sq);
  CHECK(s.tag == SignClass::kNonNegativeWithZeros);
  REQUIRE(s.positive_witness);
  CHECK(sq.evaluate(*s.positive_witness) > 0);
  CHECK(sign_on_unit_interval(-sq).tag == SignClass::kNonPositiveWithZeros);

  // (3p-1)(3p-2) changes sign twice.
  IntPolynomial mixed = IntPolynomial{-1, 3} * IntPolynomial{-2, 3};
  IntervalSign ms = sign_on_unit_interval(mixed);
  CHECK(ms.tag == SignClass::kMixed);
  REQUIRE(ms.positive_witness);
  REQUIRE(ms.negative_witness);
  CHECK(mixed.evaluate(*ms.positive_witness) > 0);
  CHECK(mixed.evaluate(*ms.negative_witness) < 0);
  CHECK(distinct_roots_in_unit_interval(mixed) == 2);

  // Two roots packed closely together.
  IntPolynomial close = IntPolynomial{-1000, 1001} * IntPolynomial{-1001, 1002};
  IntervalSign cs = sign_on_unit_interval(close);
  CHECK(cs.tag == SignClass::kMixed);
  CHECK(close.evaluate(*cs.negative_witness) < 0);

  // Roots only at the endpoints do not count.
  IntPolynomial ends = IntPolynomial{0, 1} * IntPolynomial{1, -1}.pow(3);
  CHECK(sign_on_unit_interval(ends).tag == SignClass::kPositiveOnOpen);
  CHECK(distinct_roots_in_unit_interval(ends) == 0);

  // Odd multiplicity inside plus an even one.
  IntPolynomial odd = IntPolynomial{-1, 4}.pow(3) * IntPolynomial{-3, 4}.pow(2);
  CHECK(sign_on_unit_interval(odd).tag == SignClass::kMixed);
}

TEST_CASE("rational text") {
  CHECK(rational_to_string(Rational(1, 2)) == "1/2");
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}
