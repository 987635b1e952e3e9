// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitrel/canonical.hpp"
#include "splitrel/enumeration.hpp"
#include "splitrel/graph.hpp"
#include "splitrel/polynomial.hpp"

namespace splitrel {

enum class Relation { kDominates, kDominatedBy, kEqual, kIncomparable };

const char* to_string(Relation relation);

struct DominanceVerdict {
  Relation relation = Relation::kEqual;
  // Points in (0,1) where f > g and where f < g, when they exist.
  std::optional<Rational> first_larger;
  std::optional<Rational> second_larger;
};

// Compares f and g pointwise on (0,1). Touching at isolated points still
// counts as dominance.
DominanceVerdict dominates(const IntPolynomial& f, const IntPolynomial& g);

enum class EndpointWinner { kFirst, kSecond, kTie };

const char* to_string(EndpointWinner winner);

struct EndpointComparison {
  EndpointWinner near_zero = EndpointWinner::kTie;
  EndpointWinner near_one = EndpointWinner::kTie;
};

// Near 0 the lowest differing N_i decides, near 1 the highest one does.
EndpointComparison compare_endpoints(const NVector& a, const NVector& b);

enum class SplitEngine { kBatch, kOracle, kFactoring };

const char* to_string(SplitEngine engine);
SplitEngine parse_split_engine(const std::string& text);

struct OptimalityOptions {
  int workers = 1;
  bool orbit_reduction = true;
  SplitEngine engine = SplitEngine::kBatch;
  // Nonzero: shuffle the candidate order with this seed before searching.
  std::uint64_t shuffle_seed = 0;
};

struct Candidate {
  Multigraph graph;
  TerminalPair terminals;
  CanonicalKey key;  // includes the terminal flags
  NVector nvector;
  IntPolynomial polynomial;
};

struct Refutation {
  Candidate candidate;
  Candidate beater;
  Rational point;  // beater is strictly larger here
};

struct OptimalityReport {
  int n = 0;
  int m = 0;
  GraphMode mode = GraphMode::kMulti;
  bool exists = false;
  std::optional<Candidate> witness;
  std::vector<Refutation> refutations;
  std::size_t graph_classes = 0;
  std::size_t candidates = 0;
  std::size_t distinct_polynomials = 0;
  std::size_t maximal = 0;
};

OptimalityReport find_optimal(int n, int m, GraphMode mode, const OptimalityOptions& options = {});

// Recomputes each refutation's polynomials from its graphs and checks that the
// beater is strictly larger at the recorded point.
bool refutations_verify(const OptimalityReport& report);

nlohmann::ordered_json report_json(const OptimalityReport& report);

// The truth table stated for small graphs; nullopt where nothing is claimed.
std::optional<bool> predicted_optimal_exists(int n, int m, GraphMode mode);

struct GridCell {
  int n = 0;
  int m = 0;
};

// Multi: m in [n-1, n+3]; Simple: m in [n-1, n(n-1)/2]. m_max caps both.
std::vector<GridCell> theorem_grid(GraphMode mode, int n_min, int n_max, std::optional<int> m_max = std::nullopt);

struct VerificationRow {
  GridCell cell;
  GraphMode mode = GraphMode::kMulti;
  std::optional<bool> predicted;
  OptimalityReport report;
  bool certificates_ok = false;
  double seconds = 0;

  bool matches() const { return certificates_ok && (!predicted || *predicted == report.exists); }
};

std::vector<VerificationRow> verify_theorems(GraphMode mode, int n_min, int n_max,
                                             std::optional<int> m_max = std::nullopt,
                                             const OptimalityOptions& options = {});

}  // namespace splitrel
