// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <string>

#include "splitrel/error.hpp"

namespace splitrel {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  std::ostringstream out;
  out << "(" << a << "," << b << ")";
  return out.str();
}

// Dense capacity matrix; graphs handled here are small.
std::vector<std::vector<int>> capacity_matrix(const Multigraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const Bundle& b : g.bundles()) {
    cap[b.pair.u][b.pair.v] = b.multiplicity;
    cap[b.pair.v][b.pair.u] = b.multiplicity;
  }
  return cap;
}

std::vector<int> bfs_distances(const Multigraph& g, Vertex source) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Bundle& b : g.bundles()) {
    adj[b.pair.u].push_back(b.pair.v);
    adj[b.pair.v].push_back(b.pair.u);
  }
  std::vector<int> dist(n, -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Vertex y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

Multigraph Multigraph::build(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Bundle> bundles;
  bundles.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw Error(ErrorCode::kInvalidArgument, "loop edge " + pair_text(a, b) + " is not allowed");
    }
    bundles.push_back(Bundle{VertexPair(a, b), 1});
  }
  return from_bundles(n, std::move(bundles));
}

Multigraph Multigraph::build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Multigraph Multigraph::from_bundles(int n, std::vector<Bundle> bundles) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "vertex count must be at least 1");
  }
  for (const Bundle& b : bundles) {
    if (b.pair.u == b.pair.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "loop edge " + pair_text(b.pair.u, b.pair.v) + " is not allowed");
    }
    if (b.pair.u < 0 || b.pair.v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge " + pair_text(b.pair.u, b.pair.v) +
                                                   " has an endpoint outside 0.." +
                                                   std::to_string(n - 1));
    }
    if (b.multiplicity < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative multiplicity");
    }
  }
  std::sort(bundles.begin(), bundles.end(),
            [](const Bundle& x, const Bundle& y) { return x.pair < y.pair; });
  Multigraph g;
  g.n_ = n;
  for (const Bundle& b : bundles) {
    if (b.multiplicity == 0) continue;
    if (!g.bundles_.empty() && g.bundles_.back().pair == b.pair) {
      g.bundles_.back().multiplicity += b.multiplicity;
    } else {
      g.bundles_.push_back(b);
    }
    g.m_ += b.multiplicity;
  }
  return g;
}

int Multigraph::multiplicity(Vertex a, Vertex b) const {
  if (a == b) return 0;
  VertexPair key(a, b);
  auto it = std::lower_bound(bundles_.begin(), bundles_.end(), key,
                             [](const Bundle& x, const VertexPair& k) { return x.pair < k; });
  return (it != bundles_.end() && it->pair == key) ? it->multiplicity : 0;
}

int Multigraph::degree(Vertex v) const {
  int d = 0;
  for (const Bundle& b : bundles_) {
    if (b.pair.u == v || b.pair.v == v) d += b.multiplicity;
  }
  return d;
}

bool Multigraph::is_simple() const noexcept {
  return std::all_of(bundles_.begin(), bundles_.end(),
                     [](const Bundle& b) { return b.multiplicity == 1; });
}

std::vector<std::pair<Vertex, Vertex>> Multigraph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (const Bundle& b : bundles_) {
    for (int i = 0; i < b.multiplicity; ++i) out.emplace_back(b.pair.u, b.pair.v);
  }
  return out;
}

Multigraph Multigraph::with_edge(VertexPair pair, int count) const {
  std::vector<Bundle> bundles = bundles_;
  bundles.push_back(Bundle{pair, count});
  return from_bundles(n_, std::move(bundles));
}

Multigraph Multigraph::relabeled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling has wrong length");
  }
  std::vector<Bundle> bundles;
  bundles.reserve(bundles_.size());
  for (const Bundle& b : bundles_) {
    bundles.push_back(Bundle{VertexPair(new_label[b.pair.u], new_label[b.pair.v]), b.multiplicity});
  }
  return from_bundles(n_, std::move(bundles));
}

void validate_terminals(const Multigraph& g, TerminalPair tp) {
  if (!g.has_vertex(tp.s) || !g.has_vertex(tp.t)) {
    throw Error(ErrorCode::kInvalidArgument, "terminal " + pair_text(tp.s, tp.t) +
                                                 " outside 0.." + std::to_string(g.order() - 1));
  }
  if (tp.s == tp.t) {
    throw Error(ErrorCode::kInvalidArgument, "terminals must be distinct");
  }
}

std::vector<int> component_labels(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Bundle& b : g.bundles()) {
    int a = find(b.pair.u);
    int c = find(b.pair.v);
    if (a != c) parent[std::max(a, c)] = std::min(a, c);
  }
  std::vector<int> label(n, -1);
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

std::vector<std::vector<Vertex>> components(const Multigraph& g) {
  std::vector<int> label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> blocks(count);
  for (Vertex v = 0; v < g.order(); ++v) blocks[label[v]].push_back(v);
  return blocks;
}

bool is_connected(const Multigraph& g) {
  std::vector<int> label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

Multigraph delete_edge(const Multigraph& g, VertexPair pair) {
  if (g.multiplicity(pair.u, pair.v) == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge " + pair_text(pair.u, pair.v) + " is not present");
  }
  std::vector<Bundle> bundles(g.bundles().begin(), g.bundles().end());
  for (Bundle& b : bundles) {
    if (b.pair == pair) --b.multiplicity;
  }
  return Multigraph::from_bundles(g.order(), std::move(bundles));
}

Vertex contracted_label(Vertex x, VertexPair pair) {
  if (x == pair.v) return pair.u;
  return x > pair.v ? x - 1 : x;
}

Multigraph contract_edge(const Multigraph& g, VertexPair pair) {
  if (g.multiplicity(pair.u, pair.v) == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge " + pair_text(pair.u, pair.v) + " is not present");
  }
  std::vector<Bundle> bundles;
  bundles.reserve(g.bundles().size());
  for (const Bundle& b : g.bundles()) {
    if (b.pair == pair) continue;
    bundles.push_back(Bundle{
        VertexPair(contracted_label(b.pair.u, pair), contracted_label(b.pair.v, pair)),
        b.multiplicity});
  }
  return Multigraph::from_bundles(g.order() - 1, std::move(bundles));
}

Multigraph delete_vertex(const Multigraph& g, Vertex v) {
  if (!g.has_vertex(v) || g.order() == 1) {
    throw Error(ErrorCode::kInvalidArgument, "cannot delete vertex " + std::to_string(v));
  }
  std::vector<Bundle> bundles;
  for (const Bundle& b : g.bundles()) {
    if (b.pair.u == v || b.pair.v == v) continue;
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    bundles.push_back(Bundle{VertexPair(shift(b.pair.u), shift(b.pair.v)), b.multiplicity});
  }
  return Multigraph::from_bundles(g.order() - 1, std::move(bundles));
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Bundle> bundles;
  for (const Bundle& b : g.bundles()) {
    int a = index[b.pair.u];
    int c = index[b.pair.v];
    if (a >= 0 && c >= 0) bundles.push_back(Bundle{VertexPair(a, c), b.multiplicity});
  }
  return Multigraph::from_bundles(static_cast<int>(vertices.size()), std::move(bundles));
}

int min_st_cut(const Multigraph& g, TerminalPair tp) {
  validate_terminals(g, tp);
  std::vector<int> label = component_labels(g);
  if (label[tp.s] != label[tp.t]) {
    throw Error(ErrorCode::kPrecondition, "terminals lie in different components");
  }
  const int n = g.order();
  std::vector<std::vector<int>> residual = capacity_matrix(g);
  int flow = 0;
  for (;;) {
    std::vector<Vertex> prev(n, -1);
    prev[tp.s] = tp.s;
    std::queue<Vertex> queue;
    queue.push(tp.s);
    while (!queue.empty() && prev[tp.t] < 0) {
      Vertex x = queue.front();
      queue.pop();
      for (Vertex y = 0; y < n; ++y) {
        if (prev[y] < 0 && residual[x][y] > 0) {
          prev[y] = x;
          queue.push(y);
        }
      }
    }
    if (prev[tp.t] < 0) break;
    for (Vertex y = tp.t; y != tp.s; y = prev[y]) {
      --residual[prev[y]][y];
      ++residual[y][prev[y]];
    }
    ++flow;
  }
  return flow;
}

int shortest_path_length(const Multigraph& g, TerminalPair tp) {
  validate_terminals(g, tp);
  int d = bfs_distances(g, tp.s)[tp.t];
  if (d < 0) throw Error(ErrorCode::kPrecondition, "terminals are not connected");
  return d;
}

}  // namespace splitrel
