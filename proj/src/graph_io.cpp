// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/graph_io.hpp"

#include <vector>

#include "splitrel/error.hpp"

namespace splitrel {

namespace {

int read_int(const nlohmann::ordered_json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

GraphDocument graph_document_from_json(const nlohmann::ordered_json& value) {
  if (!value.is_object()) throw Error(ErrorCode::kParse, "graph must be a JSON object");
  if (!value.contains("n")) throw Error(ErrorCode::kParse, "graph is missing \"n\"");
  int n = read_int(value.at("n"), "n");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (value.contains("edges")) {
    const auto& list = value.at("edges");
    if (!list.is_array()) throw Error(ErrorCode::kParse, "\"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParse, "each edge must be a [u,v] pair");
      }
      edges.emplace_back(read_int(e[0], "edge endpoint"), read_int(e[1], "edge endpoint"));
    }
  }
  GraphDocument doc{Multigraph::build(n, edges), std::nullopt};
  bool has_s = value.contains("s");
  bool has_t = value.contains("t");
  if (has_s != has_t) throw Error(ErrorCode::kParse, "\"s\" and \"t\" must be given together");
  if (has_s) {
    TerminalPair tp{read_int(value.at("s"), "s"), read_int(value.at("t"), "t")};
    validate_terminals(doc.graph, tp);
    doc.terminals = tp;
  }
  return doc;
}

GraphDocument parse_graph_document(std::string_view text) {
  nlohmann::ordered_json value;
  try {
    value = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed graph JSON: ") + e.what());
  }
  return graph_document_from_json(value);
}

nlohmann::ordered_json graph_document_json(const Multigraph& g, std::optional<TerminalPair> tp) {
  nlohmann::ordered_json out;
  out["n"] = g.order();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  if (tp) {
    out["s"] = tp->s;
    out["t"] = tp->t;
  }
  return out;
}

std::string serialize_graph(const Multigraph& g, std::optional<TerminalPair> tp) {
  return graph_document_json(g, tp).dump();
}

}  // namespace splitrel
