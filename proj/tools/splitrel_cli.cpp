// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitrel/splitrel.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(srel_status status) {
  if (status != SREL_OK) throw Failure(srel_last_error());
}

std::string take(char* text) {
  std::string out = text ? text : "";
  srel_string_free(text);
  return out;
}

struct GraphDeleter {
  void operator()(srel_graph* g) const { srel_graph_free(g); }
};
struct PolyDeleter {
  void operator()(srel_poly* f) const { srel_poly_free(f); }
};
struct ReportDeleter {
  void operator()(srel_report* r) const { srel_report_free(r); }
};
using GraphPtr = std::unique_ptr<srel_graph, GraphDeleter>;
using PolyPtr = std::unique_ptr<srel_poly, PolyDeleter>;
using ReportPtr = std::unique_ptr<srel_report, ReportDeleter>;

struct LoadedGraph {
  GraphPtr graph;
  int s = -1;
  int t = -1;
};

// A file path, "-" for stdin, or a family spec such as family:Gnm:4,4.
LoadedGraph load_graph(const std::string& source) {
  LoadedGraph out;
  srel_graph* raw = nullptr;
  if (source.rfind("family:", 0) == 0) {
    check(srel_graph_from_family(source.c_str(), &raw, &out.s, &out.t));
  } else {
    std::stringstream buffer;
    if (source == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream in(source);
      if (!in) throw Failure("cannot open graph file \"" + source + "\"");
      buffer << in.rdbuf();
    }
    check(srel_graph_parse(buffer.str().c_str(), &raw, &out.s, &out.t));
  }
  out.graph.reset(raw);
  return out;
}

// Command-line terminals override the ones stored with the graph.
void resolve_terminals(LoadedGraph& g, std::optional<int> s, std::optional<int> t) {
  if (s) g.s = *s;
  if (t) g.t = *t;
  if (g.s < 0 || g.t < 0) throw Failure("terminals are required: pass --s and --t or store them in the graph file");
}

srel_engine engine_of(const std::string& name) {
  if (name == "oracle") return SREL_ENGINE_ORACLE;
  if (name == "factoring") return SREL_ENGINE_FACTORING;
  if (name == "batch") return SREL_ENGINE_BATCH;
  throw Failure("unknown engine \"" + name + "\"");
}

srel_mode mode_of(const std::string& name) {
  if (name == "simple") return SREL_MODE_SIMPLE;
  if (name == "multi") return SREL_MODE_MULTI;
  throw Failure("unknown mode \"" + name + "\" (expected simple or multi)");
}

std::string poly_text(const srel_poly* f) {
  char* text = nullptr;
  check(srel_poly_to_string(f, &text));
  return take(text);
}

// "[8,2]": N_{n-2} onwards, trailing zeros dropped.
std::string counts_list(const json& nv) {
  std::vector<std::string> values;
  for (auto it = nv["counts"].begin(); it != nv["counts"].end(); ++it) values.push_back(it.value().get<std::string>());
  while (!values.empty() && values.back() == "0") values.pop_back();
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
  return out + "]";
}

struct SplitOutput {
  PolyPtr poly;
  json counts;
  int cut = 0;
};

SplitOutput run_split(const LoadedGraph& g, srel_engine engine, int max_slots) {
  SplitOutput out;
  srel_poly* raw = nullptr;
  char* counts = nullptr;
  check(srel_split(g.graph.get(), g.s, g.t, engine, max_slots, &raw, &counts, &out.cut));
  out.poly.reset(raw);
  out.counts = json::parse(take(counts));
  return out;
}

void warn_if_disconnected(const LoadedGraph& g) {
  int parts = srel_graph_component_count(g.graph.get());
  if (parts <= 1) return;
  std::cerr << "note: graph has " << parts
            << " components; split reliability is then the product of the all-terminal reliabilities of the two "
               "components when exactly two components separate s and t, and 0 otherwise\n";
}

struct Common {
  std::string engine = "oracle";
  int max_slots = 22;
  std::string format = "text";
  int workers = 1;
  std::string mode = "multi";
};

bool structured(const Common& c) { return c.format == "structured"; }

int cmd_compute(const std::string& source, std::optional<int> s, std::optional<int> t, const std::string& measure,
                const std::vector<int>& k_terminals, const Common& c, bool counts_only) {
  LoadedGraph g = load_graph(source);
  json out;
  if (measure == "allterm") {
    srel_poly* raw = nullptr;
    check(srel_all_terminal(g.graph.get(), c.engine == "factoring" ? SREL_ENGINE_FACTORING : SREL_ENGINE_ORACLE,
                            c.max_slots, &raw));
    PolyPtr f(raw);
    if (structured(c)) {
      out["measure"] = measure;
      out["polynomial"] = poly_text(f.get());
      std::cout << out.dump() << "\n";
    } else {
      std::cout << poly_text(f.get()) << "\n";
    }
    return kExitOk;
  }
  if (measure == "kterm") {
    if (k_terminals.empty()) throw Failure("kterm needs --terminals");
    srel_poly* raw = nullptr;
    check(srel_k_terminal(g.graph.get(), k_terminals.data(), k_terminals.size(), c.max_slots, &raw));
    PolyPtr f(raw);
    std::cout << (structured(c) ? json{{"measure", measure}, {"polynomial", poly_text(f.get())}}.dump()
                                : poly_text(f.get()))
              << "\n";
    return kExitOk;
  }
  resolve_terminals(g, s, t);
  if (measure == "twoterm") {
    srel_poly* raw = nullptr;
    check(srel_two_terminal(g.graph.get(), g.s, g.t, c.max_slots, &raw));
    PolyPtr f(raw);
    std::cout << (structured(c) ? json{{"measure", measure}, {"polynomial", poly_text(f.get())}}.dump()
                                : poly_text(f.get()))
              << "\n";
    return kExitOk;
  }
  if (measure != "split") throw Failure("unknown measure \"" + measure + "\"");

  warn_if_disconnected(g);
  const bool both = c.engine == "both";
  SplitOutput primary = run_split(g, both ? SREL_ENGINE_ORACLE : engine_of(c.engine), c.max_slots);
  std::optional<bool> agree;
  if (both) {
    SplitOutput second = run_split(g, SREL_ENGINE_FACTORING, c.max_slots);
    agree = srel_poly_equal(primary.poly.get(), second.poly.get()) != 0;
  }
  if (structured(c)) {
    out["measure"] = "split";
    out["s"] = g.s;
    out["t"] = g.t;
    if (!counts_only) out["polynomial"] = poly_text(primary.poly.get());
    out["nvector"] = primary.counts;
    out["c"] = primary.cut;
    if (agree) out["engines_agree"] = *agree;
    std::cout << out.dump() << "\n";
  } else {
    if (!counts_only) std::cout << poly_text(primary.poly.get()) << "\n";
    std::cout << "N: " << counts_list(primary.counts) << "\n";
    std::cout << "c=" << primary.cut << "\n";
    if (agree) std::cout << (*agree ? "engines agree" : "ENGINES DISAGREE") << "\n";
  }
  return agree && !*agree ? kExitMismatch : kExitOk;
}

int cmd_compare(const std::string& first, const std::string& second, std::optional<int> s1, std::optional<int> t1,
                std::optional<int> s2, std::optional<int> t2, const Common& c) {
  LoadedGraph a = load_graph(first);
  LoadedGraph b = load_graph(second);
  resolve_terminals(a, s1, t1);
  resolve_terminals(b, s2, t2);
  srel_engine engine = engine_of(c.engine == "both" ? "oracle" : c.engine);
  SplitOutput fa = run_split(a, engine, c.max_slots);
  SplitOutput fb = run_split(b, engine, c.max_slots);
  srel_relation relation;
  char* p1 = nullptr;
  char* p2 = nullptr;
  check(srel_compare(fa.poly.get(), fb.poly.get(), &relation, &p1, &p2));
  std::string first_larger = take(p1);
  std::string second_larger = take(p2);
  static const char* names[] = {"DOMINATES", "DOMINATED_BY", "EQUAL", "INCOMPARABLE"};
  if (structured(c)) {
    json out;
    out["relation"] = names[relation];
    out["first"] = poly_text(fa.poly.get());
    out["second"] = poly_text(fb.poly.get());
    out["first_larger_at"] = first_larger.empty() ? json(nullptr) : json(first_larger);
    out["second_larger_at"] = second_larger.empty() ? json(nullptr) : json(second_larger);
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  std::cout << names[relation];
  switch (relation) {
    case SREL_INCOMPARABLE: std::cout << " p1=" << first_larger << " p2=" << second_larger; break;
    case SREL_DOMINATES: std::cout << " p=" << first_larger; break;
    case SREL_DOMINATED_BY: std::cout << " p=" << second_larger; break;
    case SREL_EQUAL: break;
  }
  std::cout << "\n";
  return kExitOk;
}

struct EnumerateState {
  bool with_terminals = false;
  bool orbit_reduction = true;
  std::string error;
};

int enumerate_visit(const srel_graph* g, void* user) {
  auto* state = static_cast<EnumerateState*>(user);
  if (!state->with_terminals) {
    char* text = nullptr;
    if (srel_graph_to_json(g, -1, -1, &text) != SREL_OK) {
      state->error = srel_last_error();
      return 1;
    }
    std::cout << take(text) << "\n";
    return 0;
  }
  size_t count = 0;
  srel_terminal_classes(g, state->orbit_reduction, nullptr, 0, &count);
  std::vector<int> pairs(2 * count);
  if (srel_terminal_classes(g, state->orbit_reduction, pairs.data(), count, &count) != SREL_OK) {
    state->error = srel_last_error();
    return 1;
  }
  for (size_t i = 0; i < count; ++i) {
    char* text = nullptr;
    if (srel_graph_to_json(g, pairs[2 * i], pairs[2 * i + 1], &text) != SREL_OK) {
      state->error = srel_last_error();
      return 1;
    }
    std::cout << take(text) << "\n";
  }
  return 0;
}

int cmd_enumerate(int n, int m, bool with_terminals, bool orbit_reduction, const Common& c) {
  EnumerateState state{with_terminals, orbit_reduction, {}};
  size_t visited = 0;
  check(srel_enumerate(n, m, mode_of(c.mode), enumerate_visit, &state, &visited));
  if (!state.error.empty()) throw Failure(state.error);
  std::cerr << visited << " classes\n";
  return kExitOk;
}

srel_options options_from(const Common& c, bool orbit_reduction, unsigned long long seed) {
  srel_options opt;
  srel_options_default(&opt);
  opt.workers = c.workers;
  opt.orbit_reduction = orbit_reduction ? 1 : 0;
  opt.engine = engine_of(c.engine);
  opt.shuffle_seed = seed;
  return opt;
}

void print_report_text(const json& r) {
  std::cout << "(" << r["n"].get<int>() << "," << r["m"].get<int>() << ") " << r["mode"].get<std::string>() << ": "
            << (r["exists"].get<bool>() ? "optimal graph exists" : "no optimal graph") << "  [classes "
            << r["graph_classes"] << ", candidates " << r["candidates"] << ", distinct polynomials "
            << r["distinct_polynomials"] << ", maximal " << r["maximal"] << "]\n";
  if (r["exists"].get<bool>()) {
    std::cout << "  witness " << r["witness"]["graph"].dump() << "\n";
    std::cout << "  split = " << r["witness"]["polynomial"].get<std::string>() << "\n";
    return;
  }
  for (const auto& ref : r["refutations"]) {
    std::cout << "  " << ref["candidate"]["graph"].dump() << " beaten at p=" << ref["p"].get<std::string>()
              << " by " << ref["beater"]["graph"].dump() << "\n";
  }
}

int cmd_optimal(int n, int m, bool orbit_reduction, unsigned long long seed, const Common& c) {
  srel_options opt = options_from(c, orbit_reduction, seed);
  srel_report* raw = nullptr;
  check(srel_find_optimal(n, m, mode_of(c.mode), &opt, &raw));
  ReportPtr report(raw);
  char* text = nullptr;
  check(srel_report_to_json(report.get(), &text));
  json r = json::parse(take(text));
  if (structured(c)) {
    std::cout << r.dump() << "\n";
  } else {
    print_report_text(r);
    if (!r["certified"].get<bool>()) std::cout << "  CERTIFICATE CHECK FAILED\n";
  }
  return r["certified"].get<bool>() ? kExitOk : kExitMismatch;
}

int cmd_verify(int n_min, int n_max, int m_max, const Common& c) {
  srel_options opt = options_from(c, true, 0);
  char* text = nullptr;
  int all_match = 0;
  check(srel_verify(mode_of(c.mode), n_min, n_max, m_max, &opt, &text, &all_match));
  json rows = json::parse(take(text));
  if (structured(c)) {
    std::cout << rows.dump() << "\n";
  } else {
    std::printf("%-6s %3s %3s %-9s %-8s %-9s %s\n", "mode", "n", "m", "expected", "found", "certified", "result");
    for (const auto& row : rows) {
      std::string expected = row["predicted"].is_null() ? "-" : (row["predicted"].get<bool>() ? "exists" : "none");
      std::printf("%-6s %3d %3d %-9s %-8s %-9s %s  (%.2fs)\n", row["mode"].get<std::string>().c_str(),
                  row["n"].get<int>(), row["m"].get<int>(), expected.c_str(),
                  row["exists"].get<bool>() ? "exists" : "none", row["certified"].get<bool>() ? "yes" : "NO",
                  row["match"].get<bool>() ? "ok" : "MISMATCH", row["seconds"].get<double>());
      if (!row["match"].get<bool>()) print_report_text(row["report"]);
    }
    std::cout << (all_match ? "all rows match the truth table\n" : "DISAGREEMENT with the truth table\n");
  }
  return all_match ? kExitOk : kExitMismatch;
}

int cmd_family(const std::string& spec, const Common& c) {
  std::string full = spec.rfind("family:", 0) == 0 ? spec : "family:" + spec;
  char* text = nullptr;
  check(srel_family_info(full.c_str(), &text));
  json info = json::parse(take(text));
  if (structured(c)) {
    std::cout << info.dump() << "\n";
    return kExitOk;
  }
  std::cout << info["graph"].dump() << "\n";
  if (!info["counts"].is_null()) {
    std::string line;
    for (auto it = info["counts"].begin(); it != info["counts"].end(); ++it) {
      line += (line.empty() ? "" : " ") + std::string("N_") + it.key() + "=" + it.value().get<std::string>();
    }
    std::cout << line << "\n";
  }
  if (!info["closed_form"].is_null()) std::cout << "split = " << info["closed_form"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_plot(const std::string& source, std::optional<int> s, std::optional<int> t, int samples, const Common& c) {
  if (samples < 2) throw Failure("--samples must be at least 2");
  LoadedGraph g = load_graph(source);
  resolve_terminals(g, s, t);
  if (srel_graph_component_count(g.graph.get()) != 1) throw Failure("plot needs a connected graph");
  srel_engine engine = engine_of(c.engine == "both" ? "oracle" : c.engine);
  SplitOutput split = run_split(g, engine, c.max_slots);
  srel_poly* raw = nullptr;
  check(srel_all_terminal(g.graph.get(), engine == SREL_ENGINE_FACTORING ? SREL_ENGINE_FACTORING : SREL_ENGINE_ORACLE,
                          c.max_slots, &raw));
  PolyPtr allterm(raw);
  std::cout << "p,split,allterm\n";
  for (int k = 0; k < samples; ++k) {
    std::string p = std::to_string(k) + "/" + std::to_string(samples - 1);
    char* pv = nullptr;
    char* sv = nullptr;
    char* av = nullptr;
    srel_poly* identity = nullptr;
    check(srel_poly_parse("p", &identity));
    PolyPtr id(identity);
    check(srel_poly_eval_decimal(id.get(), p.c_str(), 12, &pv));
    check(srel_poly_eval_decimal(split.poly.get(), p.c_str(), 12, &sv));
    check(srel_poly_eval_decimal(allterm.get(), p.c_str(), 12, &av));
    std::cout << take(pv) << "," << take(sv) << "," << take(av) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact split reliability toolkit"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--engine", common.engine, "oracle|factoring|both (optimal: batch|oracle|factoring)")
        ->capture_default_str();
    sub->add_option("--max-slots", common.max_slots, "edge slot ceiling for state enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", common.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
  };

  std::string source;
  std::string source2;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<int> s2;
  std::optional<int> t2;
  std::string measure = "split";
  std::vector<int> k_terminals;

  auto* compute = app.add_subcommand("compute", "compute a reliability polynomial");
  compute->add_option("graph", source, "graph file, - for stdin, or family:<tag>:<params>")->required();
  compute->add_option("--s", s, "source terminal");
  compute->add_option("--t", t, "target terminal");
  compute->add_option("--measure", measure, "split|allterm|twoterm|kterm")
      ->check(CLI::IsMember({"split", "allterm", "twoterm", "kterm"}))
      ->capture_default_str();
  compute->add_option("--terminals", k_terminals, "terminal set for kterm");
  add_common(compute);

  auto* counts = app.add_subcommand("counts", "print the split state counts N_i");
  counts->add_option("graph", source, "graph file, - for stdin, or family:<tag>:<params>")->required();
  counts->add_option("--s", s, "source terminal");
  counts->add_option("--t", t, "target terminal");
  add_common(counts);

  auto* compare = app.add_subcommand("compare", "compare two split reliability polynomials on (0,1)");
  compare->add_option("first", source, "first graph")->required();
  compare->add_option("second", source2, "second graph")->required();
  compare->add_option("--s1", s, "first graph source terminal");
  compare->add_option("--t1", t, "first graph target terminal");
  compare->add_option("--s2", s2, "second graph source terminal");
  compare->add_option("--t2", t2, "second graph target terminal");
  add_common(compare);

  int n = 0;
  int m = 0;
  bool with_terminals = false;
  bool no_orbits = false;
  unsigned long long seed = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list connected (n,m) graph classes as graph objects");
  enumerate->add_option("--n", n, "vertices")->required();
  enumerate->add_option("--m", m, "edges")->required();
  enumerate->add_option("--mode", common.mode, "simple|multi")->capture_default_str();
  enumerate->add_flag("--terminals", with_terminals, "one line per terminal class");
  enumerate->add_flag("--all-pairs", no_orbits, "with --terminals, list every pair");

  auto* optimal = app.add_subcommand("optimal", "decide whether a uniformly optimal (n,m) graph exists");
  optimal->add_option("--n", n, "vertices")->required();
  optimal->add_option("--m", m, "edges")->required();
  optimal->add_option("--mode", common.mode, "simple|multi")->capture_default_str();
  optimal->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
  optimal->add_flag("--all-pairs", no_orbits, "skip terminal orbit reduction");
  optimal->add_option("--seed", seed, "shuffle candidate order with this seed");
  add_common(optimal);

  int n_min = 2;
  int n_max = 6;
  int m_max = 0;
  auto* verify = app.add_subcommand("verify", "check the existence table over a grid");
  verify->add_option("--mode", common.mode, "simple|multi")->capture_default_str();
  verify->add_option("--n-min", n_min, "smallest n")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest n")->capture_default_str();
  verify->add_option("--m-max", m_max, "cap on m (0: no cap)")->capture_default_str();
  verify->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
  add_common(verify);

  std::string spec;
  auto* family = app.add_subcommand("family", "build a named family graph");
  family->add_option("spec", spec, "e.g. family:Gnm:4,4 or Rn:6")->required();
  family->add_option("--format", common.format, "text|structured")->check(CLI::IsMember({"text", "structured"}));

  int samples = 101;
  auto* plot = app.add_subcommand("plot", "CSV of split and all-terminal reliability on a grid of p");
  plot->add_option("graph", source, "graph file, - for stdin, or family:<tag>:<params>")->required();
  plot->add_option("--s", s, "source terminal");
  plot->add_option("--t", t, "target terminal");
  plot->add_option("--samples", samples, "number of sample points, at least 2")->capture_default_str();
  plot->add_option("--engine", common.engine, "oracle|factoring")->capture_default_str();
  plot->add_option("--max-slots", common.max_slots, "edge slot ceiling")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (optimal->parsed() && common.engine == "oracle" && !optimal->get_option("--engine")->count()) {
      common.engine = "batch";
    }
    if (compute->parsed()) return cmd_compute(source, s, t, measure, k_terminals, common, false);
    if (counts->parsed()) return cmd_compute(source, s, t, "split", {}, common, true);
    if (compare->parsed()) return cmd_compare(source, source2, s, t, s2, t2, common);
    if (enumerate->parsed()) return cmd_enumerate(n, m, with_terminals, !no_orbits, common);
    if (optimal->parsed()) return cmd_optimal(n, m, !no_orbits, seed, common);
    if (verify->parsed()) {
      if (!verify->get_option("--engine")->count()) common.engine = "batch";
      return cmd_verify(n_min, n_max, m_max, common);
    }
    if (family->parsed()) return cmd_family(spec, common);
    if (plot->parsed()) return cmd_plot(source, s, t, samples, common);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
