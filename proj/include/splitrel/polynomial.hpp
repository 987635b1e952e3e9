// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splitrel {

using Integer = mpz_class;
using Rational = mpq_class;

// Univariate polynomial in p with exact integer coefficients; coefficient i
// multiplies p^i. Always normalized: no trailing zeros, zero is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, int power);
  static IntPolynomial p();
  // (1-p)^k
  static IntPolynomial one_minus_p(int k = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(int power) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;

  IntPolynomial scaled(const Integer& factor) const;
  IntPolynomial pow(int exponent) const;

  Rational evaluate(const Rational& x) const;

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const IntPolynomial& other) const { return !(*this == other); }

  // Descending powers, e.g. "-6*p^5 + 20*p^4 - 22*p^3 + 8*p^2".
  std::string to_string() const;
  static IntPolynomial parse(std::string_view text);

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial scale(const IntPolynomial& f, const Integer& factor);
Rational eval_rational(const IntPolynomial& f, const Rational& x);

// Operational-state counts N_{n-2}, ..., N_m of a split reliability
// polynomial in the basis p^i (1-p)^(m-i).
struct NVector {
  int n = 2;
  int m = 0;
  std::vector<Integer> counts;  // counts[i] holds N_{n-2+i}

  static NVector zeros(int n, int m);

  int lowest_index() const noexcept { return n - 2; }
  int highest_index() const noexcept { return m; }
  // N_i, zero outside the stored range.
  Integer at(int i) const;
  void set(int i, const Integer& value);

  bool operator==(const NVector& other) const = default;
};

IntPolynomial from_nvector(const NVector& nv);
// Inverse basis change; throws kInvalidArgument when f has support outside
// [n-2, m] or a solved count is negative.
NVector to_nvector(const IntPolynomial& f, int n, int m);

enum class SignClass {
  kIdenticallyZero,
  kPositiveOnOpen,
  kNegativeOnOpen,
  kNonNegativeWithZeros,
  kNonPositiveWithZeros,
  kMixed,
};

const char* to_string(SignClass tag);

// Sign of a polynomial on the open interval (0,1). Witnesses are rationals
// in (0,1) where the polynomial is strictly positive / strictly negative.
struct IntervalSign {
  SignClass tag = SignClass::kIdenticallyZero;
  std::optional<Rational> positive_witness;
  std::optional<Rational> negative_witness;
};

IntervalSign sign_on_unit_interval(const IntPolynomial& f);

// Number of distinct real roots in the open interval (0,1).
int distinct_roots_in_unit_interval(const IntPolynomial& f);

// "num/den" (or "num" when den is 1).
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace splitrel
