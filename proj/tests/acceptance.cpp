// Acceptance suite: one PASS/FAIL line per criterion, with the wall-clock
// limit pinned next to each one. Exit status is 0 only if all pass.
//
//   acceptance [--skip-slow] [--workers K]

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "morse/homology.hpp"
#include "morse/render.hpp"
#include "morse/search.hpp"
#include "support.hpp"

using namespace morse;
using namespace morse::test;

namespace {

struct Check {
  std::ostringstream failures;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) failures << what;
    ok = false;
  }
};

std::size_t g_workers = 8;

std::vector<Cell> group(const MonomialIdeal& I, std::initializer_list<std::initializer_list<const char*>> cells) {
  std::vector<Cell> out;
  for (auto c : cells) out.push_back(cell_of(I, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> sorted(std::vector<Cell> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool minimal_of(const TaylorComplex& tc, const Matching& m, const CellFamily* family = nullptr) {
  return is_minimal(morse_differential(tc, m, family));
}

// 1
void run4_bm(Check& c) {
  const auto I = run4();
  const auto tc = build_taylor(I);
  const auto pe = possible_edges_with_positions(tc);
  const std::vector<PossibleEdge> expected_pe = {
      {0, 0, cell_of(I, {"y*z", "x*y", "w*x", "w*z"}), cell_of(I, {"x*y", "w*x", "w*z"})},
      {1, 1, cell_of(I, {"y*z", "x*y", "w*x"}), cell_of(I, {"y*z", "w*x"})},
      {0, 0, cell_of(I, {"y*z", "x*y", "w*z"}), cell_of(I, {"x*y", "w*z"})},
      {3, 3, cell_of(I, {"y*z", "w*x", "w*z"}), cell_of(I, {"y*z", "w*x"})}};
  c.expect(pe == expected_pe, "possible edges differ; ");
  const Matching expected({edge_of(I, {"y*z", "x*y", "w*x"}, {"y*z", "w*x"}),
                     edge_of(I, {"y*z", "x*y", "w*z"}, {"x*y", "w*z"}),
                     edge_of(I, {"y*z", "x*y", "w*x", "w*z"}, {"x*y", "w*x", "w*z"})});
  const auto bm = bm_matching(tc);
  c.expect(bm == expected, "matching differs; ");
  c.expect(!is_bridge_friendly(tc), "bridge-friendly; ");
  const auto crit = critical_cells(tc, bm);
  c.expect(crit.of_cardinality(4).empty(), "critical group 4; ");
  c.expect(sorted(crit.of_cardinality(3)) == group(I, {{"y*z", "w*x", "w*z"}}), "critical group 3; ");
  c.expect(sorted(crit.of_cardinality(2)) ==
               group(I, {{"y*z", "x*y"}, {"x*y", "w*x"}, {"y*z", "w*z"}, {"w*x", "w*z"}}),
           "critical group 2; ");
  c.expect(sorted(crit.of_cardinality(1)) == group(I, {{"y*z"}, {"x*y"}, {"w*x"}, {"w*z"}}), "critical group 1; ");
  c.expect(crit.counts() == std::vector<std::size_t>{1, 4, 4, 1, 0}, "ranks; ");
  c.expect(minimal_of(tc, bm), "not minimal; ");
  c.expect(betti_numbers(tc).trimmed_totals() == std::vector<std::size_t>{1, 4, 4, 1}, "betti; ");
}

// 2
void run4_lyu(Check& c) {
  const auto I = run4();
  const auto tc = build_taylor(I);
  const Matching expected({edge_of(I, {"y*z", "x*y", "w*x", "w*z"}, {"x*y", "w*x", "w*z"}),
                      edge_of(I, {"y*z", "x*y", "w*z"}, {"x*y", "w*z"})});
  const auto L = lyubeznik_matching(tc);
  c.expect(L == expected, "matching differs; ");
  const auto crit = critical_cells(tc, L);
  c.expect(crit.of_cardinality(4).empty(), "critical group 4; ");
  c.expect(sorted(crit.of_cardinality(3)) == group(I, {{"y*z", "x*y", "w*x"}, {"y*z", "w*x", "w*z"}}),
           "critical group 3; ");
  c.expect(sorted(crit.of_cardinality(2)) ==
               group(I, {{"y*z", "x*y"}, {"y*z", "w*x"}, {"x*y", "w*x"}, {"y*z", "w*z"}, {"w*x", "w*z"}}),
           "critical group 2; ");
  c.expect(crit.of_cardinality(1).size() == 4, "critical group 1; ");
  c.expect(crit.counts() == std::vector<std::size_t>{1, 4, 5, 2, 0}, "ranks; ");
  c.expect(!minimal_of(tc, L), "unexpectedly minimal; ");
}

// 3
void run4_trim(Check& c) {
  const auto I = run4();
  const auto tc = build_taylor(I);
  const auto S = TotalOrder::identity(4);
  const auto T = trimmed_matching(tc, S, S);
  c.expect(T == Matching({edge_of(I, {"y*z", "x*y", "w*x"}, {"y*z", "w*x"})}), "matching differs; ");
  const auto K = lyubeznik_family(tc, S);
  const auto crit = critical_cells(tc, T, &K);
  c.expect(crit.of_cardinality(4).empty(), "critical group 4; ");
  c.expect(sorted(crit.of_cardinality(3)) == group(I, {{"y*z", "w*x", "w*z"}}), "critical group 3; ");
  c.expect(sorted(crit.of_cardinality(2)) ==
               group(I, {{"y*z", "x*y"}, {"x*y", "w*x"}, {"y*z", "w*z"}, {"w*x", "w*z"}}),
           "critical group 2; ");
  c.expect(crit.of_cardinality(1).size() == 4, "critical group 1; ");
  c.expect(crit.counts() == std::vector<std::size_t>{1, 4, 4, 1, 0}, "ranks; ");
  c.expect(minimal_of(tc, T, &K), "not minimal; ");
}

// 4
void tri_catalog(Check& c) {
  const auto I = tri();
  const auto list = bridge_friendly_list(build_taylor(I));
  // order smallest-first, then the single edge
  struct Row {
    const char *order, *source, *target;
  };
  const std::vector<Row> rows = {
      {"x*y,y*z,x*z", "x*y,y*z,x*z", "y*z,x*z"}, {"x*y,x*z,y*z", "x*y,x*z,y*z", "x*z,y*z"},
      {"y*z,x*y,x*z", "y*z,x*y,x*z", "x*y,x*z"}, {"y*z,x*z,x*y", "y*z,x*z,x*y", "x*z,x*y"},
      {"x*z,x*y,y*z", "x*z,x*y,y*z", "x*y,y*z"}, {"x*z,y*z,x*y", "x*z,y*z,x*y", "x*y,y*z"},
  };
  auto cell = [&](std::string text) {
    Cell out;
    std::istringstream in(text);
    for (std::string g; std::getline(in, g, ',');) out = out.with(I.find(g));
    return out;
  };
  c.expect(list.size() == 6, "not 6 orders; ");
  for (std::size_t i = 0; i < std::min(list.size(), rows.size()); ++i) {
    c.expect(list[i].order == TotalOrder(parse_order(I, rows[i].order)), "order " + std::to_string(i) + "; ");
    c.expect(list[i].matching == Matching({MatchingEdge(cell(rows[i].source), cell(rows[i].target))}),
             "matching " + std::to_string(i) + "; ");
  }
}

// 5
void run4_search(Check& c) { c.expect(bridge_friendly_list(build_taylor(run4())).empty(), "nonempty; "); }

// 6
void ex56_values(Check& c) {
  const auto I = ex56();
  const auto tc = build_taylor(I);
  auto m = [](std::size_t k) { return ex56_index(k); };
  const Cell s1 = Cell().with(m(1)).with(m(4)).with(m(5));
  const Cell s2 = Cell().with(m(1)).with(m(2)).with(m(3));
  const Cell s3 = Cell().with(m(2)).with(m(3)).with(m(4));
  c.expect(lyu_value(tc, s1) == std::optional<std::size_t>(3), "v_L(s1); ");
  c.expect(lyu_min(tc, s1) == m(6), "m_L(s1); ");
  c.expect(lyu_value(tc, s2) == std::optional<std::size_t>(2), "v_L(s2); ");
  c.expect(lyu_min(tc, s2) == m(3), "m_L(s2); ");
  c.expect(!lyu_value(tc, s3).has_value(), "v_L(s3); ");
  const auto L = lyubeznik_matching(tc);
  c.expect(L.contains(MatchingEdge(s1.with(m(6)), s1)), "edge from s1; ");
  c.expect(L.contains(MatchingEdge(s2, s2.without(m(3)))), "edge from s2; ");
  c.expect(!L.touches(s3), "s3 matched; ");
}

SearchOptions options() {
  SearchOptions o;
  o.workers = g_workers;
  o.force = true;
  return o;
}

void cycle_row(Check& c, std::size_t n, bool friendly, bool minimal, bool exhaustive = false) {
  const auto tc = build_taylor(cycle_edge_ideal(n));
  const auto o = options();
  const auto list = bridge_friendly_list(tc, o);
  c.expect(list.empty() != friendly, "C" + std::to_string(n) + " friendliness; ");
  const auto r = bridge_minimal_search(tc, exhaustive ? SearchMode::Exhaustive : SearchMode::FirstHit, o);
  c.expect(r.witness.has_value() == minimal, "C" + std::to_string(n) + " minimality; ");
  if (r.witness) c.expect(bm_ranks(tc, *r.witness) == r.betti, "C" + std::to_string(n) + " witness ranks; ");
  if (exhaustive) c.expect(r.orders_examined == factorial(n), "C" + std::to_string(n) + " not exhausted; ");
}

// 7
void table_fast(Check& c) {
  for (std::size_t n : {3, 5, 6}) cycle_row(c, n, true, true);
  for (std::size_t n : {4, 7}) cycle_row(c, n, false, true);
}

// 7 (slow row)
void table_c8(Check& c) { cycle_row(c, 8, false, true); }

// 8
void table_c9(Check& c) {
  const auto tc = build_taylor(cycle_edge_ideal(9));
  c.expect(betti_numbers(tc).trimmed_totals() == std::vector<std::size_t>{1, 9, 27, 39, 27, 9, 2}, "C9 betti; ");
  cycle_row(c, 9, false, false, true);
}

// 8 (budget-limited first hit)
void table_c10(Check& c) {
  const auto tc = build_taylor(cycle_edge_ideal(10));
  c.expect(bridge_friendly_list(tc, options()).empty(), "C10 friendliness; ");
  const auto r = bridge_minimal_search(tc, SearchMode::FirstHit, options());
  c.expect(r.witness.has_value(), "C10 no witness; ");
  if (r.witness) c.expect(bm_ranks(tc, *r.witness) == r.betti, "C10 witness ranks; ");
}

// 9
void property_suite(Check& c) {
  std::size_t index = 0;
  for (const auto& ideal : corpus()) {
    const auto tag = "ideal " + std::to_string(index++) + ": ";
    const auto tc = build_taylor(ideal);
    const auto n = ideal.size();
    const auto betti = betti_numbers(tc).totals;
    const auto S = TotalOrder::identity(n);
    const auto K = lyubeznik_family(tc, S);
    const auto bm = bm_matching(tc);
    const auto lyu = lyubeznik_matching(tc);
    const auto trim = trimmed_matching(tc, S, S);
    std::vector<std::size_t> lyu_ranks, trim_ranks, bm_ranks_;
    const std::vector<std::tuple<const char*, const Matching*, const CellFamily*>> cases = {
        {"bm", &bm, nullptr}, {"lyu", &lyu, nullptr}, {"trim", &trim, &K}, {"empty", nullptr, nullptr}};
    const Matching none;
    for (const auto& [name, mp, family] : cases) {
      const Matching& m = mp ? *mp : none;
      const auto v = validate_matching(tc, m);
      c.expect(v.ok(), tag + name + " invalid; ");
      if (!v.ok()) continue;
      const auto complex = morse_differential(tc, m, family);
      c.expect(verify_complex(complex), tag + name + " d^2 != 0; ");
      c.expect(homology_ranks(complex) == betti, tag + name + " homology; ");
      const auto r = ranks(complex);
      c.expect(is_minimal(complex) == (r == betti), tag + name + " minimality; ");
      if (mp == &lyu) lyu_ranks = r;
      if (mp == &trim) trim_ranks = r;
      if (mp == &bm) bm_ranks_ = r;
    }
    const auto pe = possible_edges(tc, S);
    for (const auto& e : bm) c.expect(pe.contains(e), tag + "bm edge not possible; ");
    for (std::size_t k = 0; k <= n && !trim_ranks.empty() && !lyu_ranks.empty(); ++k) {
      c.expect(trim_ranks[k] <= lyu_ranks[k], tag + "trim > lyu; ");
      c.expect(lyu_ranks[k] <= binomial(n, k), tag + "lyu > binomial; ");
      c.expect(betti[k] <= bm_ranks_[k], tag + "betti > bm; ");
    }
  }
}

// 10
void determinism(Check& c) {
  std::mt19937 rng(7);
  for (const auto& ideal : corpus()) {
    const auto tc = build_taylor(ideal);
    const auto S = TotalOrder::identity(ideal.size());
    const auto ref = bm_matching(tc, S);
    for (int s = 0; s < 20; ++s) {
      std::vector<std::vector<Cell>> levels(ideal.size() + 1);
      for (std::size_t k = 0; k <= ideal.size(); ++k) {
        const auto cells = tc.cells_of_cardinality(k);
        levels[k].assign(cells.begin(), cells.end());
        std::shuffle(levels[k].begin(), levels[k].end(), rng);
      }
      c.expect(bm_matching_with_levels(tc, S, levels) == ref, "shuffle changed the matching; ");
    }
  }
  std::vector<MonomialIdeal> ideals = {cycle_edge_ideal(6), cycle_edge_ideal(7), run4()};
  for (const auto& i : corpus(30)) ideals.push_back(i);
  for (const auto& ideal : ideals) {
    const auto tc = build_taylor(ideal);
    std::string ref;
    for (std::size_t w : {1, 2, 8}) {
      SearchOptions o;
      o.workers = w;
      std::ostringstream s;
      s << render_friendly_list(ideal, bridge_friendly_list(tc, o));
      for (auto mode : {SearchMode::FirstHit, SearchMode::Exhaustive}) {
        const auto r = bridge_minimal_search(tc, mode, o);
        s << r.witness.has_value() << ' ' << r.witness_rank << ' ' << r.hits << ' ' << r.orders_examined << '\n';
      }
      if (w == 1) ref = s.str();
      else c.expect(s.str() == ref, "worker count " + std::to_string(w) + " changed the output; ");
    }
  }
}

// 11
void oracle_self_check(Check& c) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 12), entry(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const int r = dim(rng), k = dim(rng);
    IntegerMatrix m(r, k);
    std::vector<std::vector<long long>> naive(r, std::vector<long long>(k));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < k; ++j) naive[i][j] = m(i, j) = entry(rng);
    }
    c.expect(static_cast<std::size_t>(exact_rank(m)) == oracle_rank(naive), "rank mismatch; ");
  }
  for (const auto& ideal : corpus()) {
    const auto tc = build_taylor(ideal);
    c.expect(homology_ranks(taylor_chain_complex(tc)) == betti_numbers(tc).totals, "Taylor homology; ");
  }
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_seconds;
  bool slow;
  std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  bool skip_slow = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--skip-slow")) {
      skip_slow = true;
    } else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) {
      g_workers = std::stoul(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--skip-slow] [--workers K]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {"1", "RUN4 Barile-Macchia suite", 1, false, run4_bm},
      {"2", "RUN4 Lyubeznik suite", 1, false, run4_lyu},
      {"3", "RUN4 trimmed suite", 1, false, run4_trim},
      {"4", "TRI bridge-friendly catalog", 1, false, tri_catalog},
      {"5", "RUN4 order search", 1, false, run4_search},
      {"6", "EX56 Lyubeznik values", 1, false, ex56_values},
      {"7", "cycles C3-C7 friendliness and minimality", 120, false, table_fast},
      {"7-slow", "cycle C8 friendliness and minimality", 900, true, table_c8},
      {"8-slow", "cycle C9 exhaustive search and Betti numbers", 1800, true, table_c9},
      {"8-slow", "cycle C10 first-hit minimal witness", 1800, true, table_c10},
      {"9", "property suite on 100 random ideals", 300, false, property_suite},
      {"10", "determinism under shuffles and worker counts", 300, false, determinism},
      {"11", "oracle self-check", 300, false, oracle_self_check},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    if (cr.slow && skip_slow) {
      std::cout << "[SKIP] " << std::left << std::setw(7) << cr.id << cr.name << '\n';
      continue;
    }
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_seconds) check.expect(false, "over the time limit");
    if (!check.ok) ++failed;
    std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << std::left << std::setw(7) << cr.id << cr.name << " ("
              << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0)
              << cr.limit_seconds << " s)";
    if (!check.ok) std::cout << ": " << check.failures.str();
    std::cout << '\n';
  }
  std::cout << (failed ? "FAILED " : "all passed ") << '(' << failed << " failing)\n";
  return failed ? 1 : 0;
}
