// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>

#include "splitrel/canonical.hpp"
#include "splitrel/error.hpp"

namespace splitrel {

namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "graph order must be positive");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kLimitExceeded, "enumeration is limited to " + std::to_string(kMaxEnumerationOrder) +
                                               " vertices, got " + std::to_string(n));
  }
}

int max_simple_edges(int n) { return n * (n - 1) / 2; }

std::vector<Multigraph> sorted_classes(std::map<CanonicalKey, Multigraph>&& by_key) {
  std::vector<Multigraph> out;
  out.reserve(by_key.size());
  for (auto& [key, g] : by_key) out.push_back(std::move(g));
  return out;
}

class SimpleLevels {
 public:
  const std::vector<Multigraph>& get(int n, int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    return level(n, m);
  }

 private:
  const std::vector<Multigraph>& level(int n, int m) {
    auto found = cache_.find({n, m});
    if (found != cache_.end()) return found->second;
    std::map<CanonicalKey, Multigraph> by_key;
    if (m < n - 1 || m > max_simple_edges(n)) {
      // empty
    } else if (n == 1) {
      by_key.emplace(canonical_key(Multigraph::from_bundles(1, {})), Multigraph::from_bundles(1, {}));
    } else if (m == n - 1) {
      // Trees on n vertices: hang a leaf off every vertex of every smaller tree.
      for (const Multigraph& t : level(n - 1, n - 2)) {
        std::vector<Bundle> bundles(t.bundles().begin(), t.bundles().end());
        for (Vertex v = 0; v < n - 1; ++v) {
          std::vector<Bundle> grown = bundles;
          grown.push_back(Bundle{VertexPair(v, n - 1), 1});
          Multigraph g = canonical_graph(Multigraph::from_bundles(n, grown));
          by_key.emplace(canonical_key(g), g);
        }
      }
    } else {
      for (const Multigraph& h : level(n, m - 1)) {
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v) {
            if (h.multiplicity(u, v) != 0) continue;
            Multigraph g = canonical_graph(h.with_edge(VertexPair(u, v)));
            by_key.emplace(canonical_key(g), g);
          }
        }
      }
    }
    return cache_.emplace(std::make_pair(n, m), sorted_classes(std::move(by_key))).first->second;
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<Multigraph>> cache_;
};

SimpleLevels& simple_levels() {
  static SimpleLevels levels;
  return levels;
}

// Calls visit(extra) for every way to place `units` extra edges on `slots`
// pairs (weak compositions), in lexicographic order.
template <typename Visit>
void for_each_distribution(int slots, int units, Visit&& visit) {
  std::vector<int> extra(slots, 0);
  auto rec = [&](auto&& self, int index, int left) -> void {
    if (index == slots - 1) {
      extra[index] = left;
      visit(extra);
      return;
    }
    for (int k = left; k >= 0; --k) {
      extra[index] = k;
      self(self, index + 1, left - k);
    }
  };
  if (slots == 0) {
    if (units == 0) visit(extra);
    return;
  }
  rec(rec, 0, units);
}

}  // namespace

const char* to_string(GraphMode mode) { return mode == GraphMode::kSimple ? "simple" : "multi"; }

GraphMode parse_graph_mode(std::string_view text) {
  if (text == "simple" || text == "Simple") return GraphMode::kSimple;
  if (text == "multi" || text == "Multi") return GraphMode::kMulti;
  throw Error(ErrorCode::kParse, "unknown graph mode \"" + std::string(text) + "\" (expected simple or multi)");
}

const std::vector<Multigraph>& simple_graph_classes(int n, int m) {
  check_order(n);
  return simple_levels().get(n, m);
}

GraphClassIterator::GraphClassIterator(int n, int m, GraphMode mode)
    : n_(n), m_(m), mode_(mode), support_edges_(n - 1) {
  check_order(n);
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "edge count must be non-negative");
  if (mode_ == GraphMode::kSimple) support_edges_ = m;
}

void GraphClassIterator::load_support_batch() {
  batch_.clear();
  batch_index_ = 0;
  const int last_support = mode_ == GraphMode::kSimple ? m_ : std::min(m_, max_simple_edges(n_));
  while (batch_.empty() && support_edges_ <= last_support) {
    const std::vector<Multigraph>& supports = simple_levels().get(n_, support_edges_);
    if (support_index_ >= supports.size()) {
      ++support_edges_;
      support_index_ = 0;
      continue;
    }
    const Multigraph& support = supports[support_index_++];
    if (mode_ == GraphMode::kSimple) {
      batch_.push_back(support);
      continue;
    }
    // Multigraphs with different supports are never isomorphic, so dedup
    // only within one support.
    std::map<CanonicalKey, Multigraph> by_key;
    std::span<const Bundle> base = support.bundles();
    for_each_distribution(static_cast<int>(base.size()), m_ - support_edges_, [&](const std::vector<int>& extra) {
      std::vector<Bundle> bundles(base.begin(), base.end());
      for (std::size_t i = 0; i < bundles.size(); ++i) bundles[i].multiplicity += extra[i];
      Multigraph g = canonical_graph(Multigraph::from_bundles(n_, std::move(bundles)));
      by_key.emplace(canonical_key(g), std::move(g));
    });
    batch_ = sorted_classes(std::move(by_key));
  }
}

std::optional<Multigraph> GraphClassIterator::next() {
  if (m_ < n_ - 1) return std::nullopt;
  if (batch_index_ >= batch_.size()) load_support_batch();
  if (batch_index_ >= batch_.size()) return std::nullopt;
  return batch_[batch_index_++];
}

std::vector<Multigraph> enumerate_graphs(int n, int m, GraphMode mode) {
  std::vector<Multigraph> out;
  GraphClassIterator it(n, m, mode);
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<TerminalPair> enumerate_terminal_classes(const Multigraph& g, bool orbit_reduction) {
  std::vector<TerminalPair> out;
  std::set<CanonicalKey> seen;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex t = s + 1; t < g.order(); ++t) {
      if (orbit_reduction && !seen.insert(canonical_key(g, TerminalPair{s, t})).second) continue;
      out.push_back(TerminalPair{s, t});
    }
  }
  return out;
}

}  // namespace splitrel
