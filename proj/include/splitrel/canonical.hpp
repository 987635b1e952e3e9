// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "splitrel/graph.hpp"

namespace splitrel {

// Byte string identifying a multigraph up to isomorphism. When built with a
// terminal pair, isomorphisms must carry {s,t} onto {s',t'} as a set.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalKey key;
  // position[v] is the canonical label of original vertex v.
  std::vector<Vertex> position;
};

// Colour refinement followed by a branch-and-bound search over the orderings
// the refined colouring allows; the key is the lexicographically least
// multiplicity matrix. Exponential in the worst case, fine for n <= 8.
CanonicalForm canonical_form(const Multigraph& g, std::optional<TerminalPair> tp = std::nullopt);

CanonicalKey canonical_key(const Multigraph& g, std::optional<TerminalPair> tp = std::nullopt);

// g relabeled into canonical order; terminals mapped along if given.
Multigraph canonical_graph(const Multigraph& g);
std::pair<Multigraph, TerminalPair> canonical_graph(const Multigraph& g, TerminalPair tp);

}  // namespace splitrel
