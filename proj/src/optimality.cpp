// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/optimality.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "splitrel/error.hpp"
#include "splitrel/graph_io.hpp"
#include "splitrel/reliability.hpp"

namespace splitrel {

namespace {

// Lexicographic comparison of N-vectors from the low end: positive when a
// wins near p = 0.
int compare_low(const NVector& a, const NVector& b) {
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    if (a.counts[i] != b.counts[i]) return a.counts[i] > b.counts[i] ? 1 : -1;
  }
  return 0;
}

int compare_high(const NVector& a, const NVector& b) {
  for (std::size_t i = a.counts.size(); i-- > 0;) {
    if (a.counts[i] != b.counts[i]) return a.counts[i] > b.counts[i] ? 1 : -1;
  }
  return 0;
}

EndpointWinner winner(int cmp) {
  return cmp > 0 ? EndpointWinner::kFirst : cmp < 0 ? EndpointWinner::kSecond : EndpointWinner::kTie;
}

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> points = [] {
    std::vector<Rational> out;
    for (int k = 1; k < 8; ++k) out.emplace_back(k, 8);
    for (Rational& x : out) x.canonicalize();
    return out;
  }();
  return points;
}

struct Distinct {
  Candidate candidate;
  std::vector<Rational> samples;  // values at sample_points()
};

// True when a >= b everywhere on (0,1); a and b are distinct.
bool dominates_distinct(const Distinct& a, const Distinct& b) {
  if (compare_high(a.candidate.nvector, b.candidate.nvector) < 0) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    if (a.samples[i] < b.samples[i]) return false;
  }
  Relation r = dominates(a.candidate.polynomial, b.candidate.polynomial).relation;
  return r == Relation::kDominates || r == Relation::kEqual;
}

std::vector<Candidate> collect_candidates(int n, int m, GraphMode mode, const OptimalityOptions& options,
                                          std::size_t& graph_count) {
  std::vector<Multigraph> graphs = enumerate_graphs(n, m, mode);
  graph_count = graphs.size();
  if (options.shuffle_seed != 0) {
    std::mt19937_64 rng(options.shuffle_seed);
    std::shuffle(graphs.begin(), graphs.end(), rng);
  }

  std::vector<std::vector<Candidate>> per_graph(graphs.size());
  FactoringEngine factoring;
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        const Multigraph& g = graphs[i];
        std::vector<TerminalPair> pairs = enumerate_terminal_classes(g, options.orbit_reduction);
        SplitEngine engine = options.engine;
        // Dense graphs are past the batch ceiling; factoring handles them.
        if (engine == SplitEngine::kBatch && static_cast<int>(g.bundles().size()) > kDefaultOracleSlots) {
          engine = SplitEngine::kFactoring;
        }
        std::map<TerminalPair, NVector> batch;
        if (engine == SplitEngine::kBatch) batch = split_counts_all_pairs(g);
        for (TerminalPair tp : pairs) {
          Candidate c;
          c.graph = g;
          c.terminals = tp;
          c.key = canonical_key(g, tp);
          switch (engine) {
            case SplitEngine::kBatch:
              c.nvector = batch.at(tp);
              c.polynomial = from_nvector(c.nvector);
              break;
            case SplitEngine::kOracle: {
              SplitResult r = split_rel_oracle(g, tp);
              c.nvector = std::move(r.nvector);
              c.polynomial = std::move(r.polynomial);
              break;
            }
            case SplitEngine::kFactoring:
              c.polynomial = factoring.split(g, tp);
              c.nvector = to_nvector(c.polynomial, n, m);
              break;
          }
          per_graph[i].push_back(std::move(c));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failure) failure = std::current_exception();
        next.store(graphs.size());
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Candidate> out;
  for (auto& list : per_graph) {
    for (Candidate& c : list) out.push_back(std::move(c));
  }
  return out;
}

nlohmann::ordered_json candidate_json(const Candidate& c) {
  nlohmann::ordered_json j;
  j["key"] = c.key.hex();
  j["graph"] = graph_document_json(c.graph, c.terminals);
  j["polynomial"] = c.polynomial.to_string();
  return j;
}

}  // namespace

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::kDominates: return "DOMINATES";
    case Relation::kDominatedBy: return "DOMINATED_BY";
    case Relation::kEqual: return "EQUAL";
    case Relation::kIncomparable: return "INCOMPARABLE";
  }
  return "?";
}

const char* to_string(EndpointWinner w) {
  switch (w) {
    case EndpointWinner::kFirst: return "first";
    case EndpointWinner::kSecond: return "second";
    case EndpointWinner::kTie: return "tie";
  }
  return "?";
}

const char* to_string(SplitEngine engine) {
  switch (engine) {
    case SplitEngine::kBatch: return "batch";
    case SplitEngine::kOracle: return "oracle";
    case SplitEngine::kFactoring: return "factoring";
  }
  return "?";
}

SplitEngine parse_split_engine(const std::string& text) {
  if (text == "batch") return SplitEngine::kBatch;
  if (text == "oracle") return SplitEngine::kOracle;
  if (text == "factoring") return SplitEngine::kFactoring;
  throw Error(ErrorCode::kParse, "unknown engine \"" + text + "\" (expected batch, oracle or factoring)");
}

DominanceVerdict dominates(const IntPolynomial& f, const IntPolynomial& g) {
  IntervalSign s = sign_on_unit_interval(f - g);
  DominanceVerdict v;
  v.first_larger = s.positive_witness;
  v.second_larger = s.negative_witness;
  switch (s.tag) {
    case SignClass::kIdenticallyZero:
      v.relation = Relation::kEqual;
      break;
    case SignClass::kPositiveOnOpen:
    case SignClass::kNonNegativeWithZeros:
      v.relation = Relation::kDominates;
      break;
    case SignClass::kNegativeOnOpen:
    case SignClass::kNonPositiveWithZeros:
      v.relation = Relation::kDominatedBy;
      break;
    case SignClass::kMixed:
      v.relation = Relation::kIncomparable;
      break;
  }
  return v;
}

EndpointComparison compare_endpoints(const NVector& a, const NVector& b) {
  if (a.n != b.n || a.m != b.m) {
    throw Error(ErrorCode::kInvalidArgument, "N-vectors belong to different (n, m)");
  }
  return {winner(compare_low(a, b)), winner(compare_high(a, b))};
}

OptimalityReport find_optimal(int n, int m, GraphMode mode, const OptimalityOptions& options) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two vertices");
  if (m < n - 1) throw Error(ErrorCode::kInvalidArgument, "a connected graph needs m >= n-1");
  if (mode == GraphMode::kSimple && m > n * (n - 1) / 2) {
    throw Error(ErrorCode::kInvalidArgument, "no simple graph has that many edges");
  }
  OptimalityReport report;
  report.n = n;
  report.m = m;
  report.mode = mode;

  std::vector<Candidate> all = collect_candidates(n, m, mode, options, report.graph_classes);
  report.candidates = all.size();

  // Equal polynomials are jointly optimal; keep the least key of each.
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  std::map<std::vector<Integer>, std::size_t> seen;
  std::vector<Distinct> distinct;
  for (Candidate& c : all) {
    if (!seen.emplace(c.nvector.counts, distinct.size()).second) continue;
    Distinct d;
    for (const Rational& x : sample_points()) d.samples.push_back(c.polynomial.evaluate(x));
    d.candidate = std::move(c);
    distinct.push_back(std::move(d));
  }
  report.distinct_polynomials = distinct.size();

  // Anything that dominates x wins near 0, so it sorts earlier; checking x
  // against the maximal elements found so far is enough by transitivity.
  std::stable_sort(distinct.begin(), distinct.end(), [](const Distinct& a, const Distinct& b) {
    return compare_low(a.candidate.nvector, b.candidate.nvector) > 0;
  });
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool beaten = false;
    for (std::size_t j : maximal) {
      if (dominates_distinct(distinct[j], distinct[i])) {
        beaten = true;
        break;
      }
    }
    if (!beaten) maximal.push_back(i);
  }
  std::sort(maximal.begin(), maximal.end(), [&](std::size_t a, std::size_t b) {
    return distinct[a].candidate.key < distinct[b].candidate.key;
  });
  report.maximal = maximal.size();

  if (maximal.size() == 1) {
    report.exists = true;
    report.witness = distinct[maximal.front()].candidate;
    return report;
  }
  for (std::size_t c : maximal) {
    // Another maximal element is never dominated by c, so it wins somewhere.
    for (std::size_t b : maximal) {
      if (b == c) continue;
      DominanceVerdict v = dominates(distinct[b].candidate.polynomial, distinct[c].candidate.polynomial);
      if (!v.first_larger) continue;
      report.refutations.push_back(Refutation{distinct[c].candidate, distinct[b].candidate, *v.first_larger});
      break;
    }
  }
  return report;
}

bool refutations_verify(const OptimalityReport& report) {
  if (report.exists) return report.witness.has_value() && report.refutations.empty();
  if (report.refutations.size() != report.maximal || report.maximal < 2) return false;
  for (const Refutation& r : report.refutations) {
    if (r.point <= 0 || r.point >= 1) return false;
    // Recompute both sides from the graphs, independent of the search.
    IntPolynomial beater = split_rel_factoring(r.beater.graph, r.beater.terminals);
    IntPolynomial candidate = split_rel_factoring(r.candidate.graph, r.candidate.terminals);
    if (beater != r.beater.polynomial || candidate != r.candidate.polynomial) return false;
    if (beater.evaluate(r.point) <= candidate.evaluate(r.point)) return false;
  }
  return true;
}

nlohmann::ordered_json report_json(const OptimalityReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["mode"] = to_string(report.mode);
  j["exists"] = report.exists;
  if (report.witness) {
    j["witness"] = candidate_json(*report.witness);
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::ordered_json refs = nlohmann::ordered_json::array();
  for (const Refutation& r : report.refutations) {
    nlohmann::ordered_json item;
    item["candidate"] = candidate_json(r.candidate);
    item["beater"] = candidate_json(r.beater);
    item["p"] = rational_to_string(r.point);
    refs.push_back(std::move(item));
  }
  j["refutations"] = std::move(refs);
  j["graph_classes"] = report.graph_classes;
  j["candidates"] = report.candidates;
  j["distinct_polynomials"] = report.distinct_polynomials;
  j["maximal"] = report.maximal;
  return j;
}

std::optional<bool> predicted_optimal_exists(int n, int m, GraphMode mode) {
  if (n < 2 || m < n - 1) return std::nullopt;
  if (mode == GraphMode::kMulti) return n <= 3 || m == n - 1 || (n == 4 && m == 4);
  const int full = n * (n - 1) / 2;
  if (m > full) return std::nullopt;
  if (m == n - 1 || m == full || m == full - 1) return true;
  if (n <= 5) return true;
  if (n == 6) return m != 6 && m != 8;
  if (n == 7) return m == 6 || (m >= 14 && m <= 21);
  return std::nullopt;
}

std::vector<GridCell> theorem_grid(GraphMode mode, int n_min, int n_max, std::optional<int> m_max) {
  std::vector<GridCell> cells;
  for (int n = std::max(2, n_min); n <= n_max; ++n) {
    int hi = mode == GraphMode::kMulti ? n + 3 : n * (n - 1) / 2;
    if (m_max) hi = std::min(hi, *m_max);
    for (int m = n - 1; m <= hi; ++m) cells.push_back(GridCell{n, m});
  }
  return cells;
}

std::vector<VerificationRow> verify_theorems(GraphMode mode, int n_min, int n_max, std::optional<int> m_max,
                                             const OptimalityOptions& options) {
  std::vector<VerificationRow> rows;
  for (GridCell cell : theorem_grid(mode, n_min, n_max, m_max)) {
    VerificationRow row;
    row.cell = cell;
    row.mode = mode;
    row.predicted = predicted_optimal_exists(cell.n, cell.m, mode);
    auto start = std::chrono::steady_clock::now();
    row.report = find_optimal(cell.n, cell.m, mode, options);
    row.certificates_ok = refutations_verify(row.report);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace splitrel
