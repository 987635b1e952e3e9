// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>

#include "splitrel/graph.hpp"
#include "splitrel/polynomial.hpp"

namespace splitrel {

inline constexpr int kDefaultOracleSlots = 22;

struct SplitResult {
  IntPolynomial polynomial;
  NVector nvector;
  int cutset_size = 0;  // minimum s-t edge cut
};

// Sum over edge subsets connecting every vertex of K, by enumerating all
// 2^m edge slots (parallel edges are independent slots).
IntPolynomial k_terminal_rel(const Multigraph& g, std::span<const Vertex> terminals,
                             int max_slots = kDefaultOracleSlots);
IntPolynomial two_terminal_rel(const Multigraph& g, TerminalPair tp,
                               int max_slots = kDefaultOracleSlots);

// Brute-force split reliability: a slot subset is operational iff it leaves
// exactly two components separating s from t. Requires g connected.
SplitResult split_rel_oracle(const Multigraph& g, TerminalPair tp,
                             int max_slots = kDefaultOracleSlots);

// Packs an engine polynomial with its state counts and cut size.
SplitResult make_split_result(const Multigraph& g, TerminalPair tp, IntPolynomial polynomial);

// Deletion-contraction engines sharing one memo cache. Safe to call from
// several threads at once.
class FactoringEngine {
 public:
  explicit FactoringEngine(std::size_t memo_capacity = 1u << 18);
  ~FactoringEngine();
  FactoringEngine(const FactoringEngine&) = delete;
  FactoringEngine& operator=(const FactoringEngine&) = delete;

  IntPolynomial split(const Multigraph& g, TerminalPair tp);
  IntPolynomial all_terminal(const Multigraph& g);

  std::size_t memo_hits() const;
  std::size_t memo_misses() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot wrappers with a private cache.
IntPolynomial split_rel_factoring(const Multigraph& g, TerminalPair tp);
IntPolynomial all_terminal_rel(const Multigraph& g);

// Split state counts for every unordered terminal pair of g from a single
// pass over the support subsets: each bundle of multiplicity w contributes
// (1+x)^w - 1 when up and 1 when down. Keys have s < t.
std::map<TerminalPair, NVector> split_counts_all_pairs(const Multigraph& g,
                                                       int max_support = kDefaultOracleSlots);

// Checks split(G+pendant t on u; s,t) == (1-p) Rel(G) + p split(G; s,u).
bool pendant_identity_check(const Multigraph& g, Vertex s, Vertex u);

}  // namespace splitrel
