#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "morse/families.hpp"
#include "morse/homology.hpp"
#include "morse/morse.hpp"
#include "morse/render.hpp"
#include "morse/search.hpp"

namespace morse::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string ideal_file;
  std::size_t cycle = 0;
  std::string graph_file;
  std::string order;
  std::string order2;
  bool json = false;
  std::string action;
  bool multigraded = false;
  std::string matching = "all";
  std::string mode = "first-hit";
  std::size_t workers = 1;
  bool force = false;
  bool progress = false;
  std::vector<std::string> gen_args;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void add_source(CLI::App* app, Request& r) {
  app->add_option("-i,--ideal", r.ideal_file, "ideal file (vars:/gens: lines)");
  app->add_option("--cycle", r.cycle, "edge ideal of the N-cycle")->check(CLI::Range(3, 64));
  app->add_option("--graph", r.graph_file, "edge ideal of a graph file (`V E` then 1-based edges)");
  app->add_option("--order", r.order, "generators smallest-first, comma-separated");
  app->add_flag("--json", r.json, "JSON output");
}

void add_search(CLI::App* app, Request& r) {
  app->add_option("--workers", r.workers, "worker threads")->check(CLI::Range(1, 1024));
  app->add_flag("--force", r.force, "allow more than 10 generators");
  app->add_flag("--progress", r.progress, "report progress on standard error");
}

MonomialIdeal load_ideal(const Request& r, std::ostream& err) {
  const int sources = !r.ideal_file.empty() + (r.cycle != 0) + !r.graph_file.empty();
  if (sources != 1) throw UsageError("exactly one of --ideal, --cycle, --graph is required");
  MonomialIdeal ideal;
  if (!r.ideal_file.empty()) {
    std::vector<std::string> warnings;
    ideal = parse_ideal(read_file(r.ideal_file), &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
  } else if (r.cycle) {
    ideal = cycle_edge_ideal(r.cycle);
  } else {
    ideal = edge_ideal(parse_graph(read_file(r.graph_file)));
  }
  if (ideal.empty()) throw Error("the ideal has no generators");
  if (!r.order.empty()) ideal = ideal.reordered(parse_order(ideal, r.order));
  return ideal;
}

json versioned(const char* key, json value) { return {{"schema_version", kSchemaVersion}, {key, std::move(value)}}; }

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

SearchOptions search_options(const Request& r, std::ostream& err) {
  SearchOptions o;
  o.workers = r.workers;
  o.force = r.force;
  o.progress = r.progress ? &err : nullptr;
  return o;
}

// Matching, family and critical cells for one of the bm/lyu/trim flavours.
struct Flavour {
  Matching matching;
  std::optional<CellFamily> family;
  CriticalCells critical;
};

Flavour compute(const TaylorComplex& tc, const std::string& kind, const std::string& order2) {
  const auto own = TotalOrder::identity(tc.generator_count());
  Flavour f;
  if (kind == "bm") {
    f.matching = bm_matching(tc, own);
  } else if (kind == "lyu") {
    f.matching = lyubeznik_matching(tc, own);
  } else if (kind == "trim") {
    const TotalOrder s2 = order2.empty() ? own : TotalOrder(parse_order(tc.ideal(), order2));
    f.family = lyubeznik_family(tc, own);
    f.matching = bm_matching(tc, s2, &*f.family);
  }
  f.critical = critical_cells(tc, f.matching, f.family ? &*f.family : nullptr);
  return f;
}

int run_flavour(const std::string& kind, const Request& r, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(r, err);
  const auto tc = build_taylor(ideal);
  const auto own = TotalOrder::identity(ideal.size());
  if (r.action == "possible-edges") {
    const auto edges = possible_edges_with_positions(tc, own);
    if (r.json) {
      json a = json::array();
      for (const auto& e : edges) a.push_back(possible_edge_json(ideal, e, own));
      emit(out, versioned("possible_edges", std::move(a)));
    } else {
      out << render_possible_edges(ideal, edges, own);
    }
    return 0;
  }
  const auto f = compute(tc, kind, r.order2);
  if (r.action == "matching") {
    if (r.json) emit(out, versioned("edges", matching_json(ideal, f.matching, own)));
    else out << render_matching(ideal, f.matching, own);
  } else if (r.action == "critical") {
    if (r.json) emit(out, versioned("critical", critical_json(ideal, f.critical, own)));
    else out << render_critical(ideal, f.critical, own);
  } else if (r.action == "ranks") {
    const auto ranks = f.critical.counts();
    if (r.json) emit(out, versioned("ranks", ranks));
    else out << render_ranks(ranks);
  } else if (r.action == "complex") {
    const auto complex = morse_differential(tc, f.matching, f.family ? &*f.family : nullptr);
    auto j = complex_json(ideal, complex, own);
    j["schema_version"] = kSchemaVersion;
    j["minimal"] = is_minimal(complex);
    if (r.json) {
      emit(out, j);
    } else {
      out << "ranks: " << render_ranks(ranks(complex));
      out << "minimal: " << (is_minimal(complex) ? "true" : "false") << '\n';
    }
  }
  return 0;
}

int run_betti(const Request& r, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(r, err);
  const auto table = betti_numbers(build_taylor(ideal));
  if (r.json) {
    emit(out, betti_json(table, r.multigraded));
    return 0;
  }
  out << render_ranks(table.totals);
  if (r.multigraded) {
    for (const auto& d : table.multigraded) out << to_string(d.degree) << ": " << render_ranks(d.counts);
  }
  return 0;
}

int run_check(const Request& r, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(r, err);
  const auto tc = build_taylor(ideal);
  const auto betti = betti_numbers(tc).totals;
  std::vector<std::string> kinds;
  if (r.matching == "all") kinds = {"bm", "lyu", "trim", "empty"};
  else kinds = {r.matching};

  bool all_ok = true;
  json report = json::array();
  for (const auto& kind : kinds) {
    Flavour f;
    if (kind != "empty") f = compute(tc, kind, r.order2);
    const auto v = validate_matching(tc, f.matching);
    bool complex_ok = false, homology_ok = false, minimal = false;
    if (v.ok()) {
      const auto complex = morse_differential(tc, f.matching, f.family ? &*f.family : nullptr);
      complex_ok = verify_complex(complex);
      homology_ok = homology_ranks(complex) == betti;
      minimal = is_minimal(complex);
    }
    const bool ok = v.ok() && complex_ok && homology_ok;
    all_ok = all_ok && ok;
    auto j = report_json(v);
    j["matching"] = kind;
    j["complex_ok"] = complex_ok;
    j["homology_matches_betti"] = homology_ok;
    j["minimal"] = minimal;
    j["ok"] = ok;
    report.push_back(std::move(j));
    if (!r.json) {
      auto yes = [](bool b) { return b ? "yes" : "no"; };
      out << kind << ": matching " << yes(v.is_matching) << ", homogeneous " << yes(v.is_homogeneous)
          << ", acyclic " << yes(v.is_acyclic) << ", d^2=0 " << yes(complex_ok) << ", homology=betti "
          << yes(homology_ok) << ", minimal " << yes(minimal) << '\n';
    }
  }
  if (r.json) {
    emit(out, {{"schema_version", kSchemaVersion}, {"checks", std::move(report)}, {"ok", all_ok}});
  }
  if (!all_ok) err << "error: check failed\n";
  return all_ok ? 0 : 1;
}

int run_friendly(const Request& r, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(r, err);
  const bool friendly = is_bridge_friendly(build_taylor(ideal));
  if (r.json) emit(out, versioned("bridge_friendly", friendly));
  else out << (friendly ? "true" : "false") << '\n';
  return 0;
}

int run_friendly_list(const Request& r, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(r, err);
  const auto list = bridge_friendly_list(build_taylor(ideal), search_options(r, err));
  if (!r.json) {
    out << render_friendly_list(ideal, list);
    return 0;
  }
  json a = json::array();
  for (const auto& f : list) {
    a.push_back({{"order", cell_json(ideal, Cell::full(ideal.size()), f.order)},
                 {"matching", matching_json(ideal, f.matching, f.order)}});
  }
  emit(out, versioned("orders", std::move(a)));
  return 0;
}

int run_minimal_search(const Request& r, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(r, err);
  const auto mode = r.mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::FirstHit;
  const auto result = bridge_minimal_search(build_taylor(ideal), mode, search_options(r, err));
  if (r.json) {
    json j = {{"schema_version", kSchemaVersion},
              {"mode", r.mode},
              {"witness", nullptr},
              {"betti", result.betti},
              {"hits", result.hits},
              {"orders_examined", result.orders_examined}};
    if (result.witness) {
      j["witness"] = cell_json(ideal, Cell::full(ideal.size()), *result.witness);
      j["witness_rank"] = result.witness_rank;
      j["ranks"] = result.ranks;
    }
    emit(out, j);
    return 0;
  }
  if (result.witness) {
    out << "witness: " << format_order(ideal, *result.witness) << '\n';
    out << "ranks: " << render_ranks(result.ranks);
  } else {
    out << "witness: none\n";
  }
  out << "betti: " << render_ranks(result.betti);
  if (mode == SearchMode::Exhaustive) out << "hits: " << result.hits << '\n';
  if (result.orders_examined) out << "orders examined: " << result.orders_examined << '\n';
  return 0;
}

std::uint64_t to_count(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size() && s[0] != '-') return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("invalid ") + what + " '" + s + "'");
}

int run_gen(const Request& r, std::ostream& out) {
  const auto& a = r.gen_args;
  if (a.empty()) throw UsageError("gen needs one of: cycle N | graph FILE | random SEED N_VARS N_GENS");
  if (a[0] == "cycle" && a.size() == 2) {
    out << format_ideal(cycle_edge_ideal(to_count(a[1], "cycle length")));
  } else if (a[0] == "graph" && a.size() == 2) {
    out << format_ideal(edge_ideal(parse_graph(read_file(a[1]))));
  } else if (a[0] == "random" && a.size() == 4) {
    out << format_ideal(
        random_squarefree_ideal(to_count(a[1], "seed"), to_count(a[2], "variable count"), to_count(a[3], "generator count")));
  } else {
    throw UsageError("gen needs one of: cycle N | graph FILE | random SEED N_VARS N_GENS");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request r;
  CLI::App app("Morse resolutions of monomial ideals", "morseres");
  app.require_subcommand(1);
  app.fallthrough(false);

  const std::vector<std::string> flavour_actions = {"matching", "critical", "ranks", "complex"};
  auto* bm = app.add_subcommand("bm", "Barile-Macchia matching");
  bm->add_option("action", r.action, "matching | possible-edges | critical | ranks | complex")
      ->required()
      ->check(CLI::IsMember({"matching", "possible-edges", "critical", "ranks", "complex"}));
  add_source(bm, r);

  auto* lyu = app.add_subcommand("lyu", "Lyubeznik matching");
  lyu->add_option("action", r.action, "matching | critical | ranks | complex")
      ->required()
      ->check(CLI::IsMember(flavour_actions));
  add_source(lyu, r);

  auto* trim = app.add_subcommand("trim", "trimmed Lyubeznik matching");
  trim->add_option("action", r.action, "matching | critical | ranks | complex")
      ->required()
      ->check(CLI::IsMember(flavour_actions));
  add_source(trim, r);
  trim->add_option("--order2", r.order2, "order for the Barile-Macchia step (default: --order)");

  auto* betti = app.add_subcommand("betti", "total Betti numbers");
  add_source(betti, r);
  betti->add_flag("--multigraded", r.multigraded, "also list multigraded Betti numbers");

  auto* check = app.add_subcommand("check", "validate matchings, d^2 = 0 and homology against the Betti numbers");
  add_source(check, r);
  check->add_option("--matching", r.matching, "bm | lyu | trim | empty | all")
      ->check(CLI::IsMember({"bm", "lyu", "trim", "empty", "all"}));
  check->add_option("--order2", r.order2, "order for the trimmed Barile-Macchia step");

  auto* friendly = app.add_subcommand("friendly", "is the ideal bridge-friendly under the order");
  add_source(friendly, r);

  auto* friendly_list = app.add_subcommand("friendly-list", "all orders under which the ideal is bridge-friendly");
  add_source(friendly_list, r);
  add_search(friendly_list, r);

  auto* minimal = app.add_subcommand("minimal-search", "look for an order giving a minimal Barile-Macchia resolution");
  add_source(minimal, r);
  add_search(minimal, r);
  minimal->add_option("--mode", r.mode, "first-hit | exhaustive")
      ->check(CLI::IsMember({"first-hit", "exhaustive"}));

  auto* gen = app.add_subcommand("gen", "print an ideal file: cycle N | graph FILE | random SEED N_VARS N_GENS");
  gen->add_option("args", r.gen_args, "generator arguments")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (bm->parsed()) return run_flavour("bm", r, out, err);
    if (lyu->parsed()) return run_flavour("lyu", r, out, err);
    if (trim->parsed()) return run_flavour("trim", r, out, err);
    if (betti->parsed()) return run_betti(r, out, err);
    if (check->parsed()) return run_check(r, out, err);
    if (friendly->parsed()) return run_friendly(r, out, err);
    if (friendly_list->parsed()) return run_friendly_list(r, out, err);
    if (minimal->parsed()) return run_minimal_search(r, out, err);
    if (gen->parsed()) return run_gen(r, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 1;
  }
  return 2;
}

}  // namespace morse::cli
