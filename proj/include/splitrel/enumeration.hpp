// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "splitrel/graph.hpp"

namespace splitrel {

enum class GraphMode { kSimple, kMulti };

const char* to_string(GraphMode mode);
GraphMode parse_graph_mode(std::string_view text);

inline constexpr int kMaxEnumerationOrder = 8;

// Connected simple graphs on n vertices with m edges, one canonical
// representative per isomorphism class, sorted by canonical key. Levels are
// built by adding one edge at a time starting from the trees, and cached.
const std::vector<Multigraph>& simple_graph_classes(int n, int m);

// Streams the connected (n, m) classes of the given mode. In Multi mode each
// simple support graph with e edges is combined with every distribution of
// the m - e extra parallel edges over its pairs. Yields nothing when
// m < n - 1. Throws kLimitExceeded above kMaxEnumerationOrder vertices.
class GraphClassIterator {
 public:
  GraphClassIterator(int n, int m, GraphMode mode);

  std::optional<Multigraph> next();

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  GraphMode mode() const noexcept { return mode_; }

 private:
  void load_support_batch();

  int n_;
  int m_;
  GraphMode mode_;
  int support_edges_;
  std::size_t support_index_ = 0;
  std::vector<Multigraph> batch_;
  std::size_t batch_index_ = 0;
};

std::vector<Multigraph> enumerate_graphs(int n, int m, GraphMode mode);

// One representative unordered pair (s < t) per orbit of the automorphism
// group on vertex pairs, in lexicographic order. With orbit_reduction off,
// every pair is returned.
std::vector<TerminalPair> enumerate_terminal_classes(const Multigraph& g, bool orbit_reduction = true);

}  // namespace splitrel
