// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "splitrel/error.hpp"

namespace splitrel {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int power) {
  std::vector<Integer> coeffs(power + 1, 0);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::p() { return monomial(1, 1); }

IntPolynomial IntPolynomial::one_minus_p(int k) {
  std::vector<Integer> coeffs(k + 1);
  Integer binom = 1;
  for (int i = 0; i <= k; ++i) {
    coeffs[i] = (i % 2 == 0) ? binom : Integer(-binom);
    binom = binom * (k - i) / (i + 1);
  }
  return IntPolynomial(std::move(coeffs));
}

Integer IntPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const { return scaled(-1); }

IntPolynomial IntPolynomial::scaled(const Integer& factor) const {
  std::vector<Integer> out = coeffs_;
  for (Integer& c : out) c *= factor;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const Integer& c = coeffs_[power];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    if (power == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "p";
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&](const std::string& why) -> IntPolynomial {
    throw Error(ErrorCode::kParse, "cannot parse polynomial \"" + std::string(text) + "\": " + why);
  };
  if (s.empty()) return fail("empty input");
  IntPolynomial result;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail("expected + or - at offset " + std::to_string(i));
    }
    first = false;
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coeff = 1;
    bool has_coeff = i > digits_start;
    if (has_coeff) coeff = Integer(s.substr(digits_start, i - digits_start), 10);
    int power = 0;
    if (has_coeff && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'p') return fail("expected p after *");
    }
    if (i < s.size() && s[i] == 'p') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t exp_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == exp_start) return fail("missing exponent");
        power = std::stoi(s.substr(exp_start, i - exp_start));
      }
    } else if (!has_coeff) {
      return fail("empty term at offset " + std::to_string(i));
    }
    result += monomial(coeff * sign, power);
  }
  return result;
}

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g) { return f + g; }
IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g) { return f - g; }
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g) { return f * g; }
IntPolynomial scale(const IntPolynomial& f, const Integer& factor) { return f.scaled(factor); }
Rational eval_rational(const IntPolynomial& f, const Rational& x) { return f.evaluate(x); }

NVector NVector::zeros(int n, int m) {
  if (n < 2 || m < n - 2) {
    throw Error(ErrorCode::kInvalidArgument, "state counts need n >= 2 and m >= n-2");
  }
  NVector nv;
  nv.n = n;
  nv.m = m;
  nv.counts.assign(m - (n - 2) + 1, 0);
  return nv;
}

Integer NVector::at(int i) const {
  if (i < lowest_index() || i > highest_index()) return 0;
  return counts[i - lowest_index()];
}

void NVector::set(int i, const Integer& value) {
  if (i < lowest_index() || i > highest_index()) {
    throw Error(ErrorCode::kInvalidArgument, "state count index out of range");
  }
  counts[i - lowest_index()] = value;
}

IntPolynomial from_nvector(const NVector& nv) {
  // Sum N_i p^i (1-p)^(m-i), expanded with binomials directly.
  std::vector<Integer> coeffs(nv.m + 1, 0);
  for (int i = nv.lowest_index(); i <= nv.m; ++i) {
    const Integer& count = nv.counts[i - nv.lowest_index()];
    if (count == 0) continue;
    const int k = nv.m - i;
    Integer binom = 1;
    for (int j = 0; j <= k; ++j) {
      if (j % 2 == 0) {
        coeffs[i + j] += count * binom;
      } else {
        coeffs[i + j] -= count * binom;
      }
      binom = binom * (k - j) / (j + 1);
    }
  }
  return IntPolynomial(std::move(coeffs));
}

NVector to_nvector(const IntPolynomial& f, int n, int m) {
  NVector nv = NVector::zeros(n, m);
  if (f.degree() > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial degree exceeds the edge count " + std::to_string(m));
  }
  for (int j = 0; j < nv.lowest_index(); ++j) {
    if (f.coefficient(j) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "polynomial has support below p^" +
                                                   std::to_string(nv.lowest_index()));
    }
  }
  // Coefficient of p^j is sum_{i<=j} N_i C(m-i, j-i) (-1)^(j-i); the system
  // is unit lower triangular.
  for (int j = nv.lowest_index(); j <= m; ++j) {
    Integer value = f.coefficient(j);
    for (int i = nv.lowest_index(); i < j; ++i) {
      const Integer& count = nv.counts[i - nv.lowest_index()];
      if (count == 0) continue;
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - i),
                   static_cast<unsigned long>(j - i));
      if ((j - i) % 2 == 0) {
        value -= count * binom;
      } else {
        value += count * binom;
      }
    }
    if (value < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative state count N_" + std::to_string(j) + " = " + value.get_str());
    }
    nv.counts[j - nv.lowest_index()] = value;
  }
  return nv;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
  };
  std::size_t dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    // Decimal notation, read exactly: "0.125" -> 125/1000.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string scale = "1" + std::string(s.size() - dot - 1, '0');
    if (digits.empty() || digits == "-" || digits == "+" || s.size() - dot - 1 == 0) {
      throw Error(ErrorCode::kParse, "cannot parse rational \"" + s + "\"");
    }
    return parse_rational(digits + "/" + scale);
  }
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::kParse, "cannot parse rational \"" + s + "\"");
  }
  Integer denominator(den, 10);
  if (denominator == 0) throw Error(ErrorCode::kParse, "zero denominator in \"" + s + "\"");
  Rational q(Integer(num, 10), denominator);
  q.canonicalize();
  return q;
}

}  // namespace splitrel
