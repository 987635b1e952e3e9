// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

// Exact sign classification on (0,1): squarefree decomposition, Sturm
// sequences and rational bisection. No floating point anywhere.

#include <algorithm>
#include <cassert>

#include "splitrel/polynomial.hpp"

namespace splitrel {

namespace {

// Dense rational polynomial, coefficient i multiplies x^i; no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly from_int(const IntPolynomial& f) {
  QPoly out;
  out.reserve(f.coefficients().size());
  for (const Integer& c : f.coefficients()) out.emplace_back(c);
  return out;
}

QPoly derivative(const QPoly& f) {
  QPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

QPoly subtract(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void make_monic(QPoly& f) {
  if (f.empty()) return;
  Rational lead = f.back();
  for (Rational& c : f) c /= lead;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  assert(!b.empty());
  if (deg(a) < deg(b)) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  const Rational& lead = b.back();
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    Rational factor = a[k + b.size() - 1] / lead;
    q[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= factor * b[j];
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

QPoly quotient(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

// Monic gcd.
QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

Rational eval(const QPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Yun's algorithm: returns factors a_1, a_2, ... with f = c * prod a_i^i,
// each a_i squarefree, monic and pairwise coprime.
std::vector<QPoly> squarefree_factors(const QPoly& f) {
  std::vector<QPoly> factors;
  QPoly fp = derivative(f);
  QPoly a0 = gcd(f, fp);
  QPoly b = quotient(f, a0);
  QPoly c = quotient(fp, a0);
  QPoly d = subtract(c, derivative(b));
  while (deg(b) > 0) {
    QPoly a = gcd(b, d);
    factors.push_back(a);
    b = quotient(b, a);
    c = quotient(d, a);
    d = subtract(c, derivative(b));
  }
  return factors;
}

QPoly product(const std::vector<QPoly>& parts) {
  QPoly acc{Rational(1)};
  for (const QPoly& part : parts) {
    QPoly out(acc.size() + part.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < part.size(); ++j) out[i + j] += acc[i] * part[j];
    }
    acc = std::move(out);
  }
  trim(acc);
  return acc;
}

// Divides out every root at 0 and at 1 (f squarefree, so at most once each).
QPoly strip_endpoint_roots(QPoly f) {
  if (!f.empty() && f[0] == 0) f.erase(f.begin());
  if (!f.empty() && eval(f, Rational(1)) == 0) f = quotient(f, QPoly{Rational(-1), Rational(1)});
  return f;
}

class SturmChain {
 public:
  explicit SturmChain(const QPoly& f) {
    if (deg(f) < 1) return;
    chain_.push_back(f);
    chain_.push_back(derivative(f));
    while (deg(chain_.back()) > 0) {
      QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.empty()) break;
      for (Rational& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
  }

  bool is_root(const Rational& x) const { return !chain_.empty() && eval(chain_[0], x) == 0; }

  // Distinct roots in (a, b); a and b must not be roots.
  int count(const Rational& a, const Rational& b) const {
    if (chain_.empty()) return 0;
    return variations(a) - variations(b);
  }

 private:
  int variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const QPoly& f : chain_) {
      int s = sgn(eval(f, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<QPoly> chain_;
};

struct Interval {
  Rational lo;
  Rational hi;
};

// A point strictly inside (lo, hi) that is not a root.
Rational split_point(const SturmChain& sturm, const Rational& lo, const Rational& hi) {
  for (long j = 2;; ++j) {
    Rational x = lo + (hi - lo) / j;
    x.canonicalize();
    if (!sturm.is_root(x)) return x;
  }
}

std::vector<Interval> isolate(const SturmChain& sturm, const Rational& lo, const Rational& hi) {
  std::vector<Interval> out;
  std::vector<Interval> stack{{lo, hi}};
  while (!stack.empty()) {
    Interval cur = stack.back();
    stack.pop_back();
    int c = sturm.count(cur.lo, cur.hi);
    if (c == 0) continue;
    if (c == 1) {
      out.push_back(cur);
      continue;
    }
    Rational mid = split_point(sturm, cur.lo, cur.hi);
    stack.push_back({mid, cur.hi});
    stack.push_back({cur.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

// Shrinks an isolating interval until its lower end is positive / upper end
// is below one, keeping exactly one root inside.
void pull_off_endpoints(const SturmChain& sturm, Interval& iv) {
  while (iv.lo == 0 || iv.hi == 1) {
    Rational mid = split_point(sturm, iv.lo, iv.hi);
    if (sturm.count(iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

// Sign of f at a fixed non-root sample point k/(d+2).
Rational constant_sign_sample(const IntPolynomial& f) {
  const long d = f.degree();
  for (long k = 1;; ++k) {
    Rational x(k, d + 2);
    x.canonicalize();
    if (f.evaluate(x) != 0) return x;
  }
}

}  // namespace

const char* to_string(SignClass tag) {
  switch (tag) {
    case SignClass::kIdenticallyZero: return "IdenticallyZero";
    case SignClass::kPositiveOnOpen: return "PositiveOnOpen";
    case SignClass::kNegativeOnOpen: return "NegativeOnOpen";
    case SignClass::kNonNegativeWithZeros: return "NonNegativeWithZeros";
    case SignClass::kNonPositiveWithZeros: return "NonPositiveWithZeros";
    case SignClass::kMixed: return "Mixed";
  }
  return "?";
}

int distinct_roots_in_unit_interval(const IntPolynomial& f) {
  if (f.degree() < 1) return 0;
  QPoly q = from_int(f);
  QPoly sqfree = quotient(q, gcd(q, derivative(q)));
  SturmChain sturm(strip_endpoint_roots(sqfree));
  return sturm.count(Rational(0), Rational(1));
}

IntervalSign sign_on_unit_interval(const IntPolynomial& f) {
  IntervalSign result;
  if (f.is_zero()) return result;

  if (f.degree() == 0) {
    bool positive = f.coefficient(0) > 0;
    result.tag = positive ? SignClass::kPositiveOnOpen : SignClass::kNegativeOnOpen;
    (positive ? result.positive_witness : result.negative_witness) = Rational(1, 2);
    return result;
  }

  QPoly q = from_int(f);
  std::vector<QPoly> factors = squarefree_factors(q);
  std::vector<QPoly> odd_parts;
  for (std::size_t i = 0; i < factors.size(); i += 2) odd_parts.push_back(factors[i]);
  SturmChain odd_sturm(strip_endpoint_roots(product(odd_parts)));
  SturmChain all_sturm(strip_endpoint_roots(product(factors)));
  const Rational zero(0);
  const Rational one(1);

  if (odd_sturm.count(zero, one) == 0) {
    Rational x = constant_sign_sample(f);
    bool positive = f.evaluate(x) > 0;
    bool touches_zero = all_sturm.count(zero, one) > 0;
    if (positive) {
      result.tag = touches_zero ? SignClass::kNonNegativeWithZeros : SignClass::kPositiveOnOpen;
      result.positive_witness = x;
    } else {
      result.tag = touches_zero ? SignClass::kNonPositiveWithZeros : SignClass::kNegativeOnOpen;
      result.negative_witness = x;
    }
    return result;
  }

  // Every gap between consecutive distinct roots contains an endpoint of an
  // isolating interval once the outer intervals are pulled away from 0 and 1.
  std::vector<Interval> roots = isolate(all_sturm, zero, one);
  assert(!roots.empty());
  pull_off_endpoints(all_sturm, roots.front());
  pull_off_endpoints(all_sturm, roots.back());
  std::vector<Rational> probes;
  for (const Interval& iv : roots) {
    if (iv.lo > 0 && iv.lo < 1) probes.push_back(iv.lo);
    if (iv.hi > 0 && iv.hi < 1) probes.push_back(iv.hi);
  }
  std::sort(probes.begin(), probes.end());
  for (const Rational& x : probes) {
    int s = sgn(f.evaluate(x));
    if (s > 0 && !result.positive_witness) result.positive_witness = x;
    if (s < 0 && !result.negative_witness) result.negative_witness = x;
  }
  assert(result.positive_witness && result.negative_witness);
  result.tag = SignClass::kMixed;
  return result;
}

}  // namespace splitrel
