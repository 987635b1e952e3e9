// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/families.hpp"

#include <array>
#include <charconv>
#include <utility>

#include "splitrel/error.hpp"

namespace splitrel {

namespace {

struct FamilyInfo {
  FamilyTag tag;
  const char* name;
  int min_params;
  int max_params;
};

constexpr std::array<FamilyInfo, 14> kFamilies{{
    {FamilyTag::kPath, "Path", 1, 2},
    {FamilyTag::kCycle, "Cycle", 1, 2},
    {FamilyTag::kBundle, "Bundle", 1, 1},
    {FamilyTag::kGnm, "Gnm", 2, 2},
    {FamilyTag::kHPendantBundle, "HPendantBundle", 2, 2},
    {FamilyTag::kHTwoBundles, "HTwoBundles", 2, 2},
    {FamilyTag::kX55, "X55", 0, 0},
    {FamilyTag::kY66, "Y66", 0, 0},
    {FamilyTag::kPathTriangle, "PathTriangle", 1, 1},
    {FamilyTag::kB3, "B3", 2, 2},
    {FamilyTag::kC3, "C3", 2, 2},
    {FamilyTag::kD3, "D3", 3, 3},
    {FamilyTag::kSnSimple, "SnSimple", 1, 1},
    {FamilyTag::kRnSimple, "RnSimple", 1, 1},
}};

const FamilyInfo& info(FamilyTag tag) {
  for (const FamilyInfo& f : kFamilies) {
    if (f.tag == tag) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family tag");
}

[[noreturn]] void range_error(const FamilySpec& spec, const std::string& rule) {
  throw Error(ErrorCode::kInvalidArgument, to_string(spec) + ": requires " + rule);
}

void require(bool ok, const FamilySpec& spec, const std::string& rule) {
  if (!ok) range_error(spec, rule);
}

int param(const FamilySpec& spec, std::size_t i, int fallback) {
  return i < spec.params.size() ? spec.params[i] : fallback;
}

// Path 0..n-1 with one bundle per consecutive pair.
Multigraph weighted_path(int n, const std::vector<int>& weights) {
  std::vector<Bundle> bundles;
  for (int i = 0; i + 1 < n; ++i) bundles.push_back(Bundle{VertexPair(i, i + 1), weights[i]});
  return Multigraph::from_bundles(n, std::move(bundles));
}

IntPolynomial q(int k) { return IntPolynomial::one_minus_p(k); }
IntPolynomial pk(int k) { return IntPolynomial::monomial(1, k); }

}  // namespace

std::string family_name(FamilyTag tag) { return info(tag).name; }

std::string to_string(const FamilySpec& spec) {
  std::string out = "family:" + family_name(spec.tag);
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
  }
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  std::string_view rest = text;
  if (rest.starts_with("family:")) rest.remove_prefix(7);
  std::size_t colon = rest.find(':');
  std::string name(rest.substr(0, colon));
  if (name == "Sn") name = "SnSimple";
  if (name == "Rn") name = "RnSimple";
  FamilySpec spec;
  bool found = false;
  for (const FamilyInfo& f : kFamilies) {
    if (name == f.name) {
      spec.tag = f.tag;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::kParse, "unknown graph family \"" + name + "\"");
  if (colon != std::string_view::npos) {
    std::string_view list = rest.substr(colon + 1);
    while (!list.empty()) {
      std::size_t comma = list.find(',');
      std::string_view item = list.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw Error(ErrorCode::kParse, "bad family parameter \"" + std::string(item) + "\"");
      }
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
  }
  const FamilyInfo& fi = info(spec.tag);
  int count = static_cast<int>(spec.params.size());
  if (count < fi.min_params || count > fi.max_params) {
    throw Error(ErrorCode::kParse, std::string(fi.name) + " takes " + std::to_string(fi.min_params) +
                                       (fi.max_params != fi.min_params
                                            ? " to " + std::to_string(fi.max_params)
                                            : std::string()) +
                                       " parameters");
  }
  return spec;
}

FamilyInstance construct(const FamilySpec& spec) {
  const FamilyInfo& fi = info(spec.tag);
  int count = static_cast<int>(spec.params.size());
  require(count >= fi.min_params && count <= fi.max_params, spec,
          std::to_string(fi.min_params) + ".." + std::to_string(fi.max_params) + " parameters");
  switch (spec.tag) {
    case FamilyTag::kPath: {
      int n = param(spec, 0, 0);
      require(n >= 2, spec, "n >= 2");
      int k = param(spec, 1, n - 1);
      require(k >= 1 && k <= n - 1, spec, "1 <= k <= n-1");
      return {weighted_path(n, std::vector<int>(n - 1, 1)), {0, k}};
    }
    case FamilyTag::kCycle: {
      int n = param(spec, 0, 0);
      require(n >= 3, spec, "n >= 3");
      int k = param(spec, 1, n / 2);
      require(k >= 1 && k <= n - 1, spec, "1 <= k <= n-1");
      std::vector<Bundle> bundles;
      for (int i = 0; i < n; ++i) bundles.push_back(Bundle{VertexPair(i, (i + 1) % n), 1});
      return {Multigraph::from_bundles(n, bundles), {0, k}};
    }
    case FamilyTag::kBundle: {
      int m = param(spec, 0, 0);
      require(m >= 1, spec, "m >= 1");
      return {weighted_path(2, {m}), {0, 1}};
    }
    case FamilyTag::kGnm: {
      int n = param(spec, 0, 0);
      int m = param(spec, 1, 0);
      require(n >= 2 && m >= n - 1, spec, "n >= 2 and m >= n-1");
      std::vector<int> w(n - 1, 1);
      w[0] = m - n + 2;
      return {weighted_path(n, w), {0, n - 1}};
    }
    case FamilyTag::kHPendantBundle: {
      int n = param(spec, 0, 0);
      int m = param(spec, 1, 0);
      require(n >= 3 && m >= n - 1, spec, "n >= 3 and m >= n-1");
      std::vector<Bundle> bundles;
      for (int i = 0; i + 1 < n - 1; ++i) bundles.push_back(Bundle{VertexPair(i, i + 1), 1});
      bundles.push_back(Bundle{VertexPair(1, n - 1), m - n + 2});
      return {Multigraph::from_bundles(n, bundles), {0, n - 2}};
    }
    case FamilyTag::kHTwoBundles: {
      int n = param(spec, 0, 0);
      int m = param(spec, 1, 0);
      require(n >= 3 && m >= n, spec, "n >= 3 and m >= n");
      std::vector<int> w(n - 1, 1);
      w[0] = 2;
      w[1] = m - n + 1;
      return {weighted_path(n, w), {0, n - 1}};
    }
    case FamilyTag::kX55: {
      // s=0 b=1 a=2 c=3 t=4: triangle a,b,c with s on b and t on c.
      return {Multigraph::build(5, {{2, 1}, {1, 0}, {1, 3}, {2, 3}, {3, 4}}), {0, 4}};
    }
    case FamilyTag::kY66: {
      // s=0 a=1 b=2 c=3 d=4 t=5: 4-cycle a,b,c,d with s on a and t on c.
      return {Multigraph::build(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 3}, {3, 5}}), {0, 5}};
    }
    case FamilyTag::kPathTriangle: {
      int n = param(spec, 0, 0);
      require(n >= 4, spec, "n >= 4");
      const int t = n - 3;
      std::vector<Bundle> bundles;
      for (int i = 0; i < t; ++i) bundles.push_back(Bundle{VertexPair(i, i + 1), 1});
      bundles.push_back(Bundle{VertexPair(t, n - 2), 1});
      bundles.push_back(Bundle{VertexPair(n - 2, n - 1), 1});
      bundles.push_back(Bundle{VertexPair(n - 1, t), 1});
      return {Multigraph::from_bundles(n, bundles), {0, t}};
    }
    case FamilyTag::kB3: {
      int m = param(spec, 0, 0);
      int a = param(spec, 1, 0);
      require(a >= 1 && m - a >= 1, spec, "1 <= a <= m-1");
      return {weighted_path(3, {a, m - a}), {0, 2}};
    }
    case FamilyTag::kC3: {
      int m = param(spec, 0, 0);
      int a = param(spec, 1, 0);
      require(a >= 1 && m - a >= 1, spec, "1 <= a <= m-1");
      return {weighted_path(3, {a, m - a}), {0, 1}};
    }
    case FamilyTag::kD3: {
      int m = param(spec, 0, 0);
      int a = param(spec, 1, 0);
      int b = param(spec, 2, 0);
      require(a >= 1 && b >= 1 && m - a - b >= 1, spec, "a, b >= 1 and m-a-b >= 1");
      return {Multigraph::from_bundles(3, {Bundle{VertexPair(0, 1), a}, Bundle{VertexPair(0, 2), b},
                                           Bundle{VertexPair(1, 2), m - a - b}}),
              {0, 1}};
    }
    case FamilyTag::kSnSimple: {
      int n = param(spec, 0, 0);
      require(n >= 4, spec, "n >= 4");
      std::vector<Bundle> bundles;
      for (int i = 0; i + 1 < n - 1; ++i) bundles.push_back(Bundle{VertexPair(i, i + 1), 1});
      bundles.push_back(Bundle{VertexPair(1, n - 1), 1});
      bundles.push_back(Bundle{VertexPair(2, n - 1), 1});
      return {Multigraph::from_bundles(n, bundles), {0, n - 2}};
    }
    case FamilyTag::kRnSimple: {
      int n = param(spec, 0, 0);
      require(n >= 5, spec, "n >= 5");
      const int cycle = n - 2;
      std::vector<Bundle> bundles;
      for (int i = 0; i < cycle; ++i) {
        bundles.push_back(Bundle{VertexPair(1 + i, 1 + (i + 1) % cycle), 1});
      }
      const int u = 1;
      const int v = 1 + cycle / 2;
      bundles.push_back(Bundle{VertexPair(0, u), 1});
      bundles.push_back(Bundle{VertexPair(v, n - 1), 1});
      return {Multigraph::from_bundles(n, bundles), {0, n - 1}};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

bool has_closed_form(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kPath:
    case FamilyTag::kCycle:
    case FamilyTag::kBundle:
    case FamilyTag::kGnm:
    case FamilyTag::kB3:
    case FamilyTag::kC3:
    case FamilyTag::kD3:
      return true;
    default:
      return false;
  }
}

IntPolynomial closed_form_split(const FamilySpec& spec) {
  if (!has_closed_form(spec.tag)) {
    throw Error(ErrorCode::kUnsupported, family_name(spec.tag) + " has no closed form");
  }
  // Validates parameters.
  FamilyInstance inst = construct(spec);
  const IntPolynomial one = IntPolynomial::constant(1);
  switch (spec.tag) {
    case FamilyTag::kPath: {
      int n = inst.graph.order();
      int k = inst.terminals.t;
      return pk(n - 2).scaled(k) * q(1);
    }
    case FamilyTag::kCycle: {
      int n = inst.graph.order();
      int k = inst.terminals.t;
      return pk(n - 2).scaled(k * (n - k)) * q(2);
    }
    case FamilyTag::kBundle:
      return q(spec.params[0]);
    case FamilyTag::kGnm: {
      int n = spec.params[0];
      int m = spec.params[1];
      int w = m - n + 2;
      IntPolynomial result = q(w) * pk(n - 2);
      if (n >= 3) result += (q(1) * pk(n - 3) * (one - q(w))).scaled(n - 2);
      return result;
    }
    case FamilyTag::kB3: {
      int m = spec.params[0];
      int a = spec.params[1];
      return q(a) + q(m - a) - q(m).scaled(2);
    }
    case FamilyTag::kC3: {
      int m = spec.params[0];
      int a = spec.params[1];
      return q(a) - q(m);
    }
    case FamilyTag::kD3: {
      int m = spec.params[0];
      int a = spec.params[1];
      int b = spec.params[2];
      return q(a) * (q(b) + q(m - a - b) - q(m - a).scaled(2));
    }
    default:
      break;
  }
  throw Error(ErrorCode::kUnsupported, family_name(spec.tag) + " has no closed form");
}

bool has_stated_counts(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kGnm:
    case FamilyTag::kHPendantBundle:
    case FamilyTag::kHTwoBundles:
    case FamilyTag::kX55:
    case FamilyTag::kY66:
    case FamilyTag::kPathTriangle:
    case FamilyTag::kSnSimple:
    case FamilyTag::kRnSimple:
      return true;
    default:
      return false;
  }
}

std::map<int, Integer> expected_ncounts(const FamilySpec& spec) {
  if (!has_stated_counts(spec.tag)) {
    throw Error(ErrorCode::kUnsupported, family_name(spec.tag) + " has no stated state counts");
  }
  FamilyInstance inst = construct(spec);
  const int n = inst.graph.order();
  const int m = inst.graph.size();
  std::map<int, Integer> out;
  switch (spec.tag) {
    case FamilyTag::kGnm:
      require(n >= 3 && m >= n, spec, "m >= n >= 3 for stated counts");
      out[n - 2] = 1 + (n - 2) * (m - (n - 2));
      out[m - 1] = n - 2;
      break;
    case FamilyTag::kHPendantBundle:
      out[n - 2] = (n - 2) * (m - (n - 2));
      out[m - 1] = n - 2;
      break;
    case FamilyTag::kHTwoBundles:
      out[n - 2] = 2 * (m - n + 1) * (n - 3) + 2 + (m - n + 1);
      break;
    case FamilyTag::kX55:
      out[3] = 8;
      break;
    case FamilyTag::kY66:
      out[4] = 12;
      break;
    case FamilyTag::kPathTriangle:
      out[n - 2] = 3 * (n - 3);
      break;
    case FamilyTag::kSnSimple:
      out[n - 2] = 3 * (n - 3) + 2;
      out[m - 1] = n - 3;
      break;
    case FamilyTag::kRnSimple: {
      int half_down = (n - 2) / 2;
      int half_up = (n - 1) / 2;
      out[n - 2] = 2 * (n - 2) + half_down * half_up;
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace splitrel
