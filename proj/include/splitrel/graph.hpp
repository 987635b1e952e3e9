// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace splitrel {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const VertexPair&) const = default;
};

// A group of parallel edges sharing the same endpoints.
struct Bundle {
  VertexPair pair;
  int multiplicity = 1;

  auto operator<=>(const Bundle&) const = default;
};

struct TerminalPair {
  Vertex s = 0;
  Vertex t = 1;

  auto operator<=>(const TerminalPair&) const = default;
};

// Loopless multigraph on vertices 0..n-1. Parallel edges are merged into
// bundles; the bundle list is sorted by pair and has no duplicates.
class Multigraph {
 public:
  Multigraph() = default;

  // Edge list may repeat pairs; repetition becomes multiplicity.
  static Multigraph build(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Multigraph build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Multigraph from_bundles(int n, std::vector<Bundle> bundles);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  std::span<const Bundle> bundles() const noexcept { return bundles_; }

  int multiplicity(Vertex a, Vertex b) const;
  // Degree counting multiplicities.
  int degree(Vertex v) const;
  bool is_simple() const noexcept;
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // Expanded edge list, sorted by (min, max), parallels adjacent.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  Multigraph with_edge(VertexPair pair, int count = 1) const;
  Multigraph relabeled(std::span<const Vertex> new_label) const;

  bool operator==(const Multigraph&) const = default;

 private:
  int n_ = 1;
  int m_ = 0;
  std::vector<Bundle> bundles_;
};

// Throws unless s != t and both are vertices of g.
void validate_terminals(const Multigraph& g, TerminalPair tp);

bool is_connected(const Multigraph& g);

// Blocks ordered by smallest member; each block sorted.
std::vector<std::vector<Vertex>> components(const Multigraph& g);

// Component id per vertex, ids numbered in order of smallest member.
std::vector<int> component_labels(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, VertexPair pair);

// Removes every (u,v) edge and merges v into u. The merged vertex takes
// min(u,v); labels above max(u,v) shift down by one.
Multigraph contract_edge(const Multigraph& g, VertexPair pair);

// Label of x after contract_edge(g, pair).
Vertex contracted_label(Vertex x, VertexPair pair);

// Removes a vertex and its incident edges; labels above it shift down.
Multigraph delete_vertex(const Multigraph& g, Vertex v);

// Subgraph induced on `vertices` (sorted), relabeled 0..k-1 in that order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices);

// Unit-capacity max-flow between the terminals; each parallel edge is one
// unit. Requires s and t in the same component.
int min_st_cut(const Multigraph& g, TerminalPair tp);

// Edge count of a shortest s-t path. Requires s and t connected.
int shortest_path_length(const Multigraph& g, TerminalPair tp);

}  // namespace splitrel
