// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "splitrel/graph.hpp"
#include "splitrel/polynomial.hpp"

namespace splitrel {

// Named graph families with designated terminals. Parameters, in order:
//   Path n[,k]        path 0..n-1, terminals 0 and k (default k = n-1)
//   Cycle n[,k]       cycle 0..n-1, terminals 0 and k (default k = n/2)
//   Bundle m          two vertices joined by m parallel edges
//   Gnm n,m           s-t path of length n-1, first edge carries m-n+2 edges
//   HPendantBundle n,m  s-t path of length n-2 plus a vertex hanging off the
//                     second path vertex by a bundle of m-n+2 edges
//   HTwoBundles n,m   s-t path of length n-1 with bundles 2 and m-n+1 on the
//                     first two edges
//   X55, Y66          the fixed (5,5) and (6,6) counterexamples
//   PathTriangle n    s-t path of length n-3 and a triangle through t
//   B3 m,a            s-v-t, bundles a (s-v) and m-a (v-t)
//   C3 m,a            s-t-v, bundles a (s-t) and m-a (t-v)
//   D3 m,a,b          triangle; a on s-t, b on s-v, m-a-b on v-t
//   Sn n              s-t path of length n-2 plus a vertex adjacent to the
//                     2nd and 3rd path vertices
//   Rn n              cycle of length n-2 with pendant terminals hung on two
//                     vertices floor((n-2)/2) apart
enum class FamilyTag {
  kPath,
  kCycle,
  kBundle,
  kGnm,
  kHPendantBundle,
  kHTwoBundles,
  kX55,
  kY66,
  kPathTriangle,
  kB3,
  kC3,
  kD3,
  kSnSimple,
  kRnSimple,
};

struct FamilySpec {
  FamilyTag tag = FamilyTag::kPath;
  std::vector<int> params;
};

struct FamilyInstance {
  Multigraph graph;
  TerminalPair terminals;
};

// Accepts "Gnm:4,4" or "family:Gnm:4,4"; Sn/Rn are aliases of SnSimple/RnSimple.
FamilySpec parse_family_spec(std::string_view text);
std::string family_name(FamilyTag tag);
std::string to_string(const FamilySpec& spec);

FamilyInstance construct(const FamilySpec& spec);

bool has_closed_form(FamilyTag tag);
// Throws kUnsupported for families without a closed form.
IntPolynomial closed_form_split(const FamilySpec& spec);

bool has_stated_counts(FamilyTag tag);
// Index -> N_index for the counts the family is known to attain.
std::map<int, Integer> expected_ncounts(const FamilySpec& spec);

}  // namespace splitrel
