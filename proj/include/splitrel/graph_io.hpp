// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "splitrel/graph.hpp"

namespace splitrel {

struct GraphDocument {
  Multigraph graph;
  std::optional<TerminalPair> terminals;
};

// {"n":4,"edges":[[0,1],[0,1],[1,2]],"s":0,"t":2}; s and t optional but
// must appear together.
GraphDocument parse_graph_document(std::string_view text);
GraphDocument graph_document_from_json(const nlohmann::ordered_json& value);

nlohmann::ordered_json graph_document_json(const Multigraph& g,
                                           std::optional<TerminalPair> tp = std::nullopt);

// Compact single-line form; edges sorted by (min,max) with repeats adjacent.
std::string serialize_graph(const Multigraph& g, std::optional<TerminalPair> tp = std::nullopt);

}  // namespace splitrel
