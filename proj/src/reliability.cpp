// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/reliability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "splitrel/canonical.hpp"
#include "splitrel/error.hpp"
#include "splitrel/lru_cache.hpp"

namespace splitrel {

namespace {

using Mask = std::uint64_t;

// Vertices reachable from `start` using adjacency bitmasks.
Mask reach(const std::vector<Mask>& adj, int start, Mask allowed) {
  Mask comp = Mask{1} << start;
  Mask frontier = comp;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask next = adj[v] & allowed & ~comp;
    comp |= next;
    frontier |= next;
  }
  return comp;
}

void check_oracle_limits(const Multigraph& g, int max_slots) {
  if (g.size() > max_slots) {
    throw Error(ErrorCode::kLimitExceeded,
                "graph has " + std::to_string(g.size()) + " edge slots; the enumeration ceiling is " +
                    std::to_string(max_slots));
  }
  if (g.order() > 64 || g.size() > 62) {
    throw Error(ErrorCode::kLimitExceeded, "graph too large for state enumeration");
  }
}

// Sum_i counts[i] p^i (1-p)^(m-i).
IntPolynomial state_polynomial(const std::vector<std::uint64_t>& counts, int m) {
  NVector nv = NVector::zeros(2, m);
  for (int i = 0; i <= m; ++i) nv.counts[i] = Integer(static_cast<unsigned long>(counts[i]));
  return from_nvector(nv);
}

// Visits every subset of the expanded edge slots with its adjacency masks,
// toggling one slot per step (Gray code order).
template <typename Visit>
void for_each_slot_subset(const Multigraph& g, Visit&& visit) {
  std::vector<std::pair<Vertex, Vertex>> slots = g.edge_list();
  const int m = static_cast<int>(slots.size());
  // Parallel slots make XOR toggling ambiguous, so keep per-pair counts.
  std::vector<std::vector<int>> up(g.order(), std::vector<int>(g.order(), 0));
  std::vector<Mask> adj(g.order(), 0);
  std::uint64_t subset = 0;
  int size = 0;
  visit(adj, size);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step < total; ++step) {
    int j = std::countr_zero(step);
    auto [u, v] = slots[j];
    subset ^= std::uint64_t{1} << j;
    int delta = ((subset >> j) & 1) ? 1 : -1;
    size += delta;
    up[u][v] += delta;
    if (up[u][v] > 0) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    } else {
      adj[u] &= ~(Mask{1} << v);
      adj[v] &= ~(Mask{1} << u);
    }
    visit(adj, size);
  }
}

}  // namespace

IntPolynomial k_terminal_rel(const Multigraph& g, std::span<const Vertex> terminals,
                             int max_slots) {
  if (terminals.empty()) throw Error(ErrorCode::kInvalidArgument, "terminal set K is empty");
  for (Vertex v : terminals) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::kInvalidArgument, "terminal " + std::to_string(v) + " out of range");
    }
  }
  check_oracle_limits(g, max_slots);
  Mask wanted = 0;
  for (Vertex v : terminals) wanted |= Mask{1} << v;
  const Mask all = (g.order() == 64) ? ~Mask{0} : ((Mask{1} << g.order()) - 1);
  const int root = terminals.front();
  std::vector<std::uint64_t> counts(g.size() + 1, 0);
  for_each_slot_subset(g, [&](const std::vector<Mask>& adj, int size) {
    if ((reach(adj, root, all) & wanted) == wanted) ++counts[size];
  });
  return state_polynomial(counts, g.size());
}

IntPolynomial two_terminal_rel(const Multigraph& g, TerminalPair tp, int max_slots) {
  validate_terminals(g, tp);
  const Vertex k[] = {tp.s, tp.t};
  return k_terminal_rel(g, k, max_slots);
}

SplitResult make_split_result(const Multigraph& g, TerminalPair tp, IntPolynomial polynomial) {
  validate_terminals(g, tp);
  SplitResult result;
  std::vector<int> label = component_labels(g);
  result.cutset_size = label[tp.s] == label[tp.t] ? min_st_cut(g, tp) : 0;
  result.nvector = to_nvector(polynomial, g.order(), g.size());
  result.polynomial = std::move(polynomial);
  return result;
}

SplitResult split_rel_oracle(const Multigraph& g, TerminalPair tp, int max_slots) {
  validate_terminals(g, tp);
  check_oracle_limits(g, max_slots);
  const int n = g.order();
  const Mask all = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::uint64_t> counts(g.size() + 1, 0);
  for_each_slot_subset(g, [&](const std::vector<Mask>& adj, int size) {
    Mask side_s = reach(adj, tp.s, all);
    if (side_s & (Mask{1} << tp.t)) return;
    if ((side_s | reach(adj, tp.t, all)) == all) ++counts[size];
  });
  SplitResult result;
  result.nvector = NVector::zeros(n, g.size());
  for (int i = result.nvector.lowest_index(); i <= g.size(); ++i) {
    result.nvector.set(i, Integer(static_cast<unsigned long>(counts[i])));
  }
  result.polynomial = from_nvector(result.nvector);
  std::vector<int> label = component_labels(g);
  result.cutset_size = label[tp.s] == label[tp.t] ? min_st_cut(g, tp) : 0;
  return result;
}

struct FactoringEngine::Impl {
  explicit Impl(std::size_t capacity) : split_memo(capacity), allterm_memo(capacity) {}

  LruCache<std::string, IntPolynomial> split_memo;
  LruCache<std::string, IntPolynomial> allterm_memo;

  static IntPolynomial up(int w) { return IntPolynomial::constant(1) - IntPolynomial::one_minus_p(w); }
  static IntPolynomial down(int w) { return IntPolynomial::one_minus_p(w); }

  // The only bundle at v when v has a single neighbour.
  static const Bundle* pendant_bundle(const Multigraph& g, Vertex v) {
    const Bundle* found = nullptr;
    for (const Bundle& b : g.bundles()) {
      if (b.pair.u != v && b.pair.v != v) continue;
      if (found) return nullptr;
      found = &b;
    }
    return found;
  }

  static const Bundle& heaviest_bundle(const Multigraph& g) {
    return *std::max_element(g.bundles().begin(), g.bundles().end(),
                             [](const Bundle& a, const Bundle& b) { return a.multiplicity < b.multiplicity; });
  }

  IntPolynomial all_terminal(const Multigraph& g) {
    const int n = g.order();
    if (n == 1) return IntPolynomial::constant(1);
    if (!is_connected(g)) return {};
    for (Vertex v = 0; v < n; ++v) {
      if (const Bundle* b = pendant_bundle(g, v)) {
        return up(b->multiplicity) * all_terminal(delete_vertex(g, v));
      }
    }
    std::string key = canonical_key(g).bytes();
    if (auto hit = allterm_memo.get(key)) return *hit;
    const Bundle& e = heaviest_bundle(g);
    IntPolynomial result = IntPolynomial::p() * all_terminal(contract_edge(g, e.pair)) +
                           IntPolynomial::one_minus_p() * all_terminal(delete_edge(g, e.pair));
    allterm_memo.put(key, result);
    return result;
  }

  IntPolynomial split(const Multigraph& g, TerminalPair tp) {
    const int n = g.order();
    std::vector<int> label = component_labels(g);
    int count = *std::max_element(label.begin(), label.end()) + 1;
    if (count > 2) return {};
    if (count == 2) {
      if (label[tp.s] == label[tp.t]) return {};
      std::vector<std::vector<Vertex>> blocks = components(g);
      return all_terminal(induced_subgraph(g, blocks[0])) * all_terminal(induced_subgraph(g, blocks[1]));
    }
    for (Vertex v = 0; v < n; ++v) {
      const Bundle* b = pendant_bundle(g, v);
      if (!b) continue;
      const int w = b->multiplicity;
      const Vertex nb = b->pair.u == v ? b->pair.v : b->pair.u;
      auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
      Multigraph rest = delete_vertex(g, v);
      if (v != tp.s && v != tp.t) {
        return up(w) * split(rest, TerminalPair{shift(tp.s), shift(tp.t)});
      }
      const Vertex other = v == tp.s ? tp.t : tp.s;
      IntPolynomial result = down(w) * all_terminal(rest);
      if (nb != other) result += up(w) * split(rest, TerminalPair{shift(nb), shift(other)});
      return result;
    }
    std::string key = canonical_key(g, tp).bytes();
    if (auto hit = split_memo.get(key)) return *hit;
    const Bundle& e = heaviest_bundle(g);
    IntPolynomial result =
        IntPolynomial::one_minus_p() * split(delete_edge(g, e.pair), tp);
    if (e.pair != VertexPair(tp.s, tp.t)) {
      TerminalPair merged{contracted_label(tp.s, e.pair), contracted_label(tp.t, e.pair)};
      result += IntPolynomial::p() * split(contract_edge(g, e.pair), merged);
    }
    split_memo.put(key, result);
    return result;
  }
};

FactoringEngine::FactoringEngine(std::size_t memo_capacity)
    : impl_(std::make_unique<Impl>(memo_capacity)) {}

FactoringEngine::~FactoringEngine() = default;

IntPolynomial FactoringEngine::split(const Multigraph& g, TerminalPair tp) {
  validate_terminals(g, tp);
  return impl_->split(g, tp);
}

IntPolynomial FactoringEngine::all_terminal(const Multigraph& g) { return impl_->all_terminal(g); }

std::size_t FactoringEngine::memo_hits() const {
  return impl_->split_memo.hits() + impl_->allterm_memo.hits();
}

std::size_t FactoringEngine::memo_misses() const {
  return impl_->split_memo.misses() + impl_->allterm_memo.misses();
}

IntPolynomial split_rel_factoring(const Multigraph& g, TerminalPair tp) {
  FactoringEngine engine;
  return engine.split(g, tp);
}

IntPolynomial all_terminal_rel(const Multigraph& g) {
  FactoringEngine engine;
  return engine.all_terminal(g);
}

std::map<TerminalPair, NVector> split_counts_all_pairs(const Multigraph& g, int max_support) {
  const int n = g.order();
  const int e = static_cast<int>(g.bundles().size());
  if (e > max_support) {
    throw Error(ErrorCode::kLimitExceeded, "graph has " + std::to_string(e) +
                                               " vertex pairs with edges; the ceiling is " +
                                               std::to_string(max_support));
  }
  if (n > 64 || g.size() > 62 || n < 2) {
    throw Error(ErrorCode::kLimitExceeded, "graph outside the state enumeration range");
  }
  const int m = g.size();
  const bool simple = g.is_simple();
  // (1+x)^w - 1 per bundle.
  std::vector<std::vector<std::uint64_t>> up_poly;
  for (const Bundle& b : g.bundles()) {
    std::vector<std::uint64_t> c(b.multiplicity + 1, 0);
    std::uint64_t binom = 1;
    for (int j = 0; j <= b.multiplicity; ++j) {
      if (j > 0) c[j] = binom;
      binom = binom * (b.multiplicity - j) / (j + 1);
    }
    up_poly.push_back(std::move(c));
  }

  const Mask all = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::unordered_map<Mask, std::vector<std::uint64_t>> by_side;
  std::vector<Mask> adj(n, 0);
  std::uint64_t subset = 0;
  std::vector<std::uint64_t> weight;
  auto visit = [&]() {
    Mask side = reach(adj, 0, all);
    Mask rest = all & ~side;
    if (rest == 0) return;
    if (reach(adj, std::countr_zero(rest), rest) != rest) return;
    auto& bucket = by_side[side];
    if (bucket.empty()) bucket.assign(m + 1, 0);
    if (simple) {
      ++bucket[std::popcount(subset)];
      return;
    }
    weight.assign(1, 1);
    for (int j = 0; j < e; ++j) {
      if (!((subset >> j) & 1)) continue;
      std::vector<std::uint64_t> next(weight.size() + up_poly[j].size() - 1, 0);
      for (std::size_t a = 0; a < weight.size(); ++a) {
        if (!weight[a]) continue;
        for (std::size_t b = 0; b < up_poly[j].size(); ++b) next[a + b] += weight[a] * up_poly[j][b];
      }
      weight = std::move(next);
    }
    for (std::size_t i = 0; i < weight.size(); ++i) bucket[i] += weight[i];
  };
  visit();
  const std::uint64_t total = std::uint64_t{1} << e;
  for (std::uint64_t step = 1; step < total; ++step) {
    int j = std::countr_zero(step);
    subset ^= std::uint64_t{1} << j;
    const VertexPair& pr = g.bundles()[j].pair;
    adj[pr.u] ^= Mask{1} << pr.v;
    adj[pr.v] ^= Mask{1} << pr.u;
    visit();
  }

  std::map<TerminalPair, NVector> out;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      NVector nv = NVector::zeros(n, m);
      std::vector<std::uint64_t> acc(m + 1, 0);
      for (const auto& [side, bucket] : by_side) {
        if (((side >> s) & 1) == ((side >> t) & 1)) continue;
        for (int i = 0; i <= m; ++i) acc[i] += bucket[i];
      }
      for (int i = nv.lowest_index(); i <= m; ++i) {
        nv.set(i, Integer(static_cast<unsigned long>(acc[i])));
      }
      out.emplace(TerminalPair{s, t}, std::move(nv));
    }
  }
  return out;
}

bool pendant_identity_check(const Multigraph& g, Vertex s, Vertex u) {
  validate_terminals(g, TerminalPair{s, u});
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, "graph must be connected");
  const Vertex t = g.order();
  std::vector<Bundle> bundles(g.bundles().begin(), g.bundles().end());
  bundles.push_back(Bundle{VertexPair(u, t), 1});
  Multigraph extended = Multigraph::from_bundles(g.order() + 1, std::move(bundles));

  // Left side by state enumeration when feasible so the factoring engine's
  // own pendant rule is not checked against itself.
  FactoringEngine engine;
  IntPolynomial lhs = extended.size() <= kDefaultOracleSlots
                          ? split_rel_oracle(extended, TerminalPair{s, t}).polynomial
                          : engine.split(extended, TerminalPair{s, t});
  IntPolynomial rhs = IntPolynomial::one_minus_p() * engine.all_terminal(g) +
                      IntPolynomial::p() * engine.split(g, TerminalPair{s, u});
  return lhs == rhs;
}

}  // namespace splitrel
