// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/splitrel.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "splitrel/canonical.hpp"
#include "splitrel/enumeration.hpp"
#include "splitrel/error.hpp"
#include "splitrel/families.hpp"
#include "splitrel/graph_io.hpp"
#include "splitrel/optimality.hpp"
#include "splitrel/reliability.hpp"

struct srel_graph {
  splitrel::Multigraph graph;
};

struct srel_poly {
  splitrel::IntPolynomial poly;
};

struct srel_report {
  splitrel::OptimalityReport report;
  bool certified = false;
};

namespace {

using namespace splitrel;

thread_local std::string last_error;

srel_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return SREL_INVALID_ARGUMENT;
    case ErrorCode::kParse: return SREL_PARSE_ERROR;
    case ErrorCode::kPrecondition: return SREL_PRECONDITION;
    case ErrorCode::kLimitExceeded: return SREL_LIMIT_EXCEEDED;
    case ErrorCode::kUnsupported: return SREL_UNSUPPORTED;
  }
  return SREL_INTERNAL;
}

template <typename Body>
srel_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return SREL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SREL_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SREL_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TerminalPair terminals(const srel_graph* g, int s, int t) {
  TerminalPair tp{s, t};
  validate_terminals(g->graph, tp);
  return tp;
}

GraphMode mode_of(srel_mode mode) {
  require(mode == SREL_MODE_SIMPLE || mode == SREL_MODE_MULTI, "unknown graph mode");
  return mode == SREL_MODE_SIMPLE ? GraphMode::kSimple : GraphMode::kMulti;
}

int slot_ceiling(int max_slots) { return max_slots > 0 ? max_slots : kDefaultOracleSlots; }

OptimalityOptions options_of(const srel_options* options) {
  OptimalityOptions out;
  if (options == nullptr) return out;
  out.workers = options->workers;
  out.orbit_reduction = options->orbit_reduction != 0;
  switch (options->engine) {
    case SREL_ENGINE_ORACLE: out.engine = SplitEngine::kOracle; break;
    case SREL_ENGINE_FACTORING: out.engine = SplitEngine::kFactoring; break;
    case SREL_ENGINE_BATCH: out.engine = SplitEngine::kBatch; break;
    default: throw Error(ErrorCode::kInvalidArgument, "unknown engine");
  }
  out.shuffle_seed = options->shuffle_seed;
  return out;
}

nlohmann::ordered_json counts_json(const NVector& nv) {
  nlohmann::ordered_json j;
  j["n"] = nv.n;
  j["m"] = nv.m;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (int i = nv.lowest_index(); i <= nv.highest_index(); ++i) counts[std::to_string(i)] = nv.at(i).get_str();
  j["counts"] = std::move(counts);
  return j;
}

void export_document(const FamilyInstance& inst, srel_graph** out, int* s, int* t) {
  *out = new srel_graph{inst.graph};
  if (s) *s = inst.terminals.s;
  if (t) *t = inst.terminals.t;
}

std::string decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = q < 0;
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer rounded = scaled.get_num() / scaled.get_den();
  std::string text = rounded.get_str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
  }
  if (negative && rounded != 0) text.insert(0, "-");
  return text;
}

}  // namespace

extern "C" {

const char* srel_last_error(void) { return last_error.c_str(); }

const char* srel_version(void) { return "1.0.0"; }

void srel_string_free(char* text) { delete[] text; }

srel_status srel_graph_create(int n, const int* edges, size_t edge_count, srel_graph** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(edges != nullptr || edge_count == 0, "edge array is null");
    std::vector<std::pair<Vertex, Vertex>> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new srel_graph{Multigraph::build(n, list)};
  });
}

srel_status srel_graph_parse(const char* text, srel_graph** out, int* s, int* t) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    GraphDocument doc = parse_graph_document(text);
    *out = new srel_graph{doc.graph};
    if (s) *s = doc.terminals ? doc.terminals->s : -1;
    if (t) *t = doc.terminals ? doc.terminals->t : -1;
  });
}

srel_status srel_graph_from_family(const char* spec, srel_graph** out, int* s, int* t) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    export_document(construct(parse_family_spec(spec)), out, s, t);
  });
}

void srel_graph_free(srel_graph* g) { delete g; }

int srel_graph_order(const srel_graph* g) { return g ? g->graph.order() : 0; }

int srel_graph_size(const srel_graph* g) { return g ? g->graph.size() : 0; }

int srel_graph_component_count(const srel_graph* g) {
  return g ? static_cast<int>(components(g->graph).size()) : 0;
}

srel_status srel_graph_to_json(const srel_graph* g, int s, int t, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    std::optional<TerminalPair> tp;
    if (s >= 0 || t >= 0) tp = terminals(g, s, t);
    *out = copy_string(serialize_graph(g->graph, tp));
  });
}

srel_status srel_graph_canonical_key(const srel_graph* g, int s, int t, char** out_hex) {
  return guarded([&] {
    require(g != nullptr && out_hex != nullptr, "null argument");
    std::optional<TerminalPair> tp;
    if (s >= 0 || t >= 0) tp = terminals(g, s, t);
    *out_hex = copy_string(canonical_key(g->graph, tp).hex());
  });
}

srel_status srel_graph_min_cut(const srel_graph* g, int s, int t, int* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = min_st_cut(g->graph, terminals(g, s, t));
  });
}

srel_status srel_poly_parse(const char* text, srel_poly** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new srel_poly{IntPolynomial::parse(text)};
  });
}

void srel_poly_free(srel_poly* f) { delete f; }

int srel_poly_degree(const srel_poly* f) { return f ? f->poly.degree() : -1; }

srel_status srel_poly_to_string(const srel_poly* f, char** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = copy_string(f->poly.to_string());
  });
}

srel_status srel_poly_eval(const srel_poly* f, const char* p, char** out) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = copy_string(rational_to_string(f->poly.evaluate(parse_rational(p))));
  });
}

srel_status srel_poly_eval_decimal(const srel_poly* f, const char* p, int digits, char** out) {
  return guarded([&] {
    require(f != nullptr && p != nullptr && out != nullptr, "null argument");
    require(digits >= 0 && digits <= 100, "digits must be in [0, 100]");
    *out = copy_string(decimal(f->poly.evaluate(parse_rational(p)), digits));
  });
}

int srel_poly_equal(const srel_poly* f, const srel_poly* g) { return f && g && f->poly == g->poly; }

srel_status srel_compare(const srel_poly* f, const srel_poly* g, srel_relation* relation, char** first_larger,
                         char** second_larger) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && relation != nullptr, "null argument");
    DominanceVerdict v = dominates(f->poly, g->poly);
    switch (v.relation) {
      case Relation::kDominates: *relation = SREL_DOMINATES; break;
      case Relation::kDominatedBy: *relation = SREL_DOMINATED_BY; break;
      case Relation::kEqual: *relation = SREL_EQUAL; break;
      case Relation::kIncomparable: *relation = SREL_INCOMPARABLE; break;
    }
    if (first_larger) *first_larger = v.first_larger ? copy_string(rational_to_string(*v.first_larger)) : nullptr;
    if (second_larger) *second_larger = v.second_larger ? copy_string(rational_to_string(*v.second_larger)) : nullptr;
  });
}

srel_status srel_split(const srel_graph* g, int s, int t, srel_engine engine, int max_slots, srel_poly** out,
                       char** counts, int* cut) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    TerminalPair tp = terminals(g, s, t);
    SplitResult r;
    switch (engine) {
      case SREL_ENGINE_ORACLE:
        r = split_rel_oracle(g->graph, tp, slot_ceiling(max_slots));
        break;
      case SREL_ENGINE_FACTORING:
        r = make_split_result(g->graph, tp, split_rel_factoring(g->graph, tp));
        break;
      case SREL_ENGINE_BATCH: {
        TerminalPair key{std::min(s, t), std::max(s, t)};
        NVector nv = split_counts_all_pairs(g->graph, slot_ceiling(max_slots)).at(key);
        r = make_split_result(g->graph, tp, from_nvector(nv));
        break;
      }
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown engine");
    }
    if (counts) *counts = copy_string(counts_json(r.nvector).dump());
    if (cut) *cut = r.cutset_size;
    *out = new srel_poly{std::move(r.polynomial)};
  });
}

srel_status srel_all_terminal(const srel_graph* g, srel_engine engine, int max_slots, srel_poly** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    if (engine == SREL_ENGINE_FACTORING) {
      *out = new srel_poly{all_terminal_rel(g->graph)};
      return;
    }
    std::vector<Vertex> all(g->graph.order());
    for (int v = 0; v < g->graph.order(); ++v) all[v] = v;
    *out = new srel_poly{k_terminal_rel(g->graph, all, slot_ceiling(max_slots))};
  });
}

srel_status srel_two_terminal(const srel_graph* g, int s, int t, int max_slots, srel_poly** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new srel_poly{two_terminal_rel(g->graph, terminals(g, s, t), slot_ceiling(max_slots))};
  });
}

srel_status srel_k_terminal(const srel_graph* g, const int* terminal_list, size_t count, int max_slots,
                            srel_poly** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr && (terminal_list != nullptr || count == 0), "null argument");
    std::vector<Vertex> k(terminal_list, terminal_list + count);
    *out = new srel_poly{k_terminal_rel(g->graph, k, slot_ceiling(max_slots))};
  });
}

srel_status srel_pendant_identity(const srel_graph* g, int s, int u, int* holds) {
  return guarded([&] {
    require(g != nullptr && holds != nullptr, "null argument");
    *holds = pendant_identity_check(g->graph, s, u) ? 1 : 0;
  });
}

srel_status srel_family_info(const char* spec, char** out_json) {
  return guarded([&] {
    require(spec != nullptr && out_json != nullptr, "null argument");
    FamilySpec fs = parse_family_spec(spec);
    FamilyInstance inst = construct(fs);
    nlohmann::ordered_json j;
    j["family"] = to_string(fs);
    j["graph"] = graph_document_json(inst.graph, inst.terminals);
    j["counts"] = nullptr;
    if (has_stated_counts(fs.tag)) {
      try {
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        for (const auto& [index, value] : expected_ncounts(fs)) counts[std::to_string(index)] = value.get_str();
        j["counts"] = std::move(counts);
      } catch (const Error&) {
        // Counts are only stated on part of the parameter range.
      }
    }
    j["closed_form"] = has_closed_form(fs.tag) ? nlohmann::ordered_json(closed_form_split(fs).to_string())
                                               : nlohmann::ordered_json(nullptr);
    *out_json = copy_string(j.dump());
  });
}

srel_status srel_enumerate(int n, int m, srel_mode mode, srel_graph_visitor visit, void* user, size_t* visited) {
  return guarded([&] {
    require(visit != nullptr, "visitor is null");
    GraphClassIterator it(n, m, mode_of(mode));
    size_t count = 0;
    while (auto g = it.next()) {
      srel_graph handle{std::move(*g)};
      ++count;
      if (visit(&handle, user) != 0) break;
    }
    if (visited) *visited = count;
  });
}

srel_status srel_terminal_classes(const srel_graph* g, int orbit_reduction, int* pairs, size_t capacity,
                                  size_t* count) {
  return guarded([&] {
    require(g != nullptr && count != nullptr && (pairs != nullptr || capacity == 0), "null argument");
    std::vector<TerminalPair> classes = enumerate_terminal_classes(g->graph, orbit_reduction != 0);
    for (size_t i = 0; i < classes.size() && i < capacity; ++i) {
      pairs[2 * i] = classes[i].s;
      pairs[2 * i + 1] = classes[i].t;
    }
    *count = classes.size();
  });
}

void srel_options_default(srel_options* options) {
  if (options == nullptr) return;
  options->workers = 1;
  options->orbit_reduction = 1;
  options->engine = SREL_ENGINE_BATCH;
  options->shuffle_seed = 0;
}

srel_status srel_find_optimal(int n, int m, srel_mode mode, const srel_options* options, srel_report** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    auto* r = new srel_report;
    try {
      r->report = find_optimal(n, m, mode_of(mode), options_of(options));
      r->certified = refutations_verify(r->report);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void srel_report_free(srel_report* report) { delete report; }

int srel_report_exists(const srel_report* report) { return report && report->report.exists; }

int srel_report_certified(const srel_report* report) { return report && report->certified; }

srel_status srel_report_to_json(const srel_report* report, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    nlohmann::ordered_json j = report_json(report->report);
    j["certified"] = report->certified;
    *out = copy_string(j.dump());
  });
}

int srel_predicted_exists(int n, int m, srel_mode mode) {
  if (mode != SREL_MODE_SIMPLE && mode != SREL_MODE_MULTI) return -1;
  std::optional<bool> p = predicted_optimal_exists(n, m, mode_of(mode));
  return p ? (*p ? 1 : 0) : -1;
}

srel_status srel_verify(srel_mode mode, int n_min, int n_max, int m_max, const srel_options* options,
                        char** out_json, int* all_match) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    std::optional<int> cap;
    if (m_max > 0) cap = m_max;
    std::vector<VerificationRow> rows = verify_theorems(mode_of(mode), n_min, n_max, cap, options_of(options));
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    bool ok = true;
    for (const VerificationRow& row : rows) {
      nlohmann::ordered_json item;
      item["n"] = row.cell.n;
      item["m"] = row.cell.m;
      item["mode"] = to_string(row.mode);
      item["predicted"] = row.predicted ? nlohmann::ordered_json(*row.predicted) : nlohmann::ordered_json(nullptr);
      item["exists"] = row.report.exists;
      item["certified"] = row.certificates_ok;
      item["match"] = row.matches();
      item["seconds"] = row.seconds;
      item["report"] = report_json(row.report);
      ok = ok && row.matches();
      j.push_back(std::move(item));
    }
    if (all_match) *all_match = ok ? 1 : 0;
    *out_json = copy_string(j.dump());
  });
}

}  // extern "C"
