#pragma once

// Fixtures and independent brute-force oracles shared by the test suites.
// Oracles compute directly from monomials and set definitions and never call
// the precomputed tables they are checking.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morse/families.hpp"
#include "morse/matching.hpp"
#include "morse/morse.hpp"

namespace morse::test {

inline MonomialIdeal run4() { return parse_ideal("vars: w x y z\ngens: y*z x*y w*x w*z\n"); }
inline MonomialIdeal tri() { return parse_ideal("vars: x y z\ngens: x*y y*z x*z\n"); }

/// Generators m1..m6 listed smallest-first (m6 is the smallest).
inline MonomialIdeal ex56() {
  return parse_ideal(
      "vars: x1 x2 x3 x4 x5 x6 x7 x8\n"
      "gens: x7*x8 x2*x3*x8 x1*x2*x7 x1*x2*x5 x2*x3*x5*x6 x1*x2*x3*x4\n");
}
/// Generator index of m_k in ex56().
inline std::size_t ex56_index(std::size_t k) { return 6 - k; }

inline Cell cell_of(const MonomialIdeal& ideal, std::initializer_list<const char*> gens) {
  Cell c;
  for (const char* g : gens) {
    const auto i = ideal.find(g);
    if (i == ideal.size()) throw Error(std::string("fixture names unknown generator ") + g);
    c = c.with(i);
  }
  return c;
}

inline MatchingEdge edge_of(const MonomialIdeal& ideal, std::initializer_list<const char*> source,
                            std::initializer_list<const char*> target) {
  return MatchingEdge(cell_of(ideal, source), cell_of(ideal, target));
}

/// The property-test corpus: 100 seeded random square-free ideals with at
/// most 6 variables and at most 6 generators.
inline std::vector<MonomialIdeal> corpus(std::size_t count = 100) {
  std::vector<MonomialIdeal> out;
  for (std::uint64_t seed = 1; seed <= count; ++seed) {
    SplitMix64 shape(seed * 7919);
    const auto vars = 3 + static_cast<std::size_t>(shape.below(4));
    const auto gens = 2 + static_cast<std::size_t>(shape.below(5));
    out.push_back(random_squarefree_ideal(seed, vars, gens));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

inline Monomial oracle_lcm(const MonomialIdeal& ideal, Cell c) {
  Monomial m(ideal.context());
  for (auto g : c.members()) {
    std::vector<Monomial::Exponent> e(m.variable_count());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max(m.exponent(v), ideal.generator(g).exponent(v));
    m = Monomial(ideal.context(), e);
  }
  return m;
}

inline std::vector<std::size_t> oracle_bridges(const MonomialIdeal& ideal, Cell c) {
  std::vector<std::size_t> out;
  const auto full = oracle_lcm(ideal, c);
  for (auto g : c.members()) {
    if (oracle_lcm(ideal, c.without(g)) == full) out.push_back(g);
  }
  return out;
}

inline bool oracle_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.variable_count(); ++v) {
    if (a.exponent(v) > b.exponent(v)) return false;
  }
  return true;
}

/// v_L straight from the definition (generator order = ideal sequence).
inline int oracle_lyu_value(const MonomialIdeal& ideal, Cell c) {
  auto members = c.members();
  std::sort(members.rbegin(), members.rend());  // largest first
  int best = -1;
  for (std::size_t k = 1; k <= members.size(); ++k) {
    Cell prefix;
    for (std::size_t i = 0; i < k; ++i) prefix = prefix.with(members[i]);
    const auto l = oracle_lcm(ideal, prefix);
    for (std::size_t m = 0; m < members[k - 1]; ++m) {
      if (oracle_divides(ideal.generator(m), l)) best = static_cast<int>(k);
    }
  }
  return best;
}

/// Cycle detection on the full cell graph with matched edges reversed, by
/// Kahn's algorithm.
inline bool oracle_acyclic(std::size_t n, const Matching& m) {
  const std::size_t cells = std::size_t{1} << n;
  std::set<std::pair<Cell::Mask, Cell::Mask>> matched;
  for (const auto& e : m) matched.insert({e.source.mask(), e.target.mask()});
  std::vector<std::vector<Cell::Mask>> out(cells);
  std::vector<std::size_t> indegree(cells, 0);
  for (Cell::Mask s = 0; s < cells; ++s) {
    for (std::size_t g = 0; g < n; ++g) {
      if (!((s >> g) & 1u)) continue;
      const Cell::Mask t = s & ~(Cell::Mask{1} << g);
      if (matched.count({s, t})) {
        out[t].push_back(s);
        ++indegree[s];
      } else {
        out[s].push_back(t);
        ++indegree[t];
      }
    }
  }
  std::vector<Cell::Mask> ready;
  for (Cell::Mask v = 0; v < cells; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == cells;
}

/// Transfer by explicit enumeration of every gradient path from `tau`:
/// alternate an up step along a reversed matched edge with a down step to a
/// different facet, stopping at critical cells. The path weight is the
/// product of -[c:t] for up steps and [c:t'] for down steps.
inline std::map<Cell, std::int64_t> oracle_transfer(const Matching& m, Cell tau) {
  std::map<Cell::Mask, Cell> up;
  std::set<Cell::Mask> matched;
  for (const auto& e : m) {
    up.emplace(e.target.mask(), e.source);
    matched.insert(e.source.mask());
    matched.insert(e.target.mask());
  }
  std::map<Cell, std::int64_t> out;
  std::function<void(Cell, std::int64_t)> walk = [&](Cell t, std::int64_t weight) {
    if (!matched.count(t.mask())) {
      out[t] += weight;
      return;
    }
    auto it = up.find(t.mask());
    if (it == up.end()) return;  // matched downwards
    const Cell c = it->second;
    const std::int64_t w_up = -incidence_sign(c, t);
    for (auto g : c.members()) {
      const Cell f = c.without(g);
      if (f == t) continue;
      walk(f, weight * w_up * incidence_sign(c, f));
    }
  };
  walk(tau, 1);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

/// Rank over Q by plain Gaussian elimination on exact rationals.
inline std::size_t oracle_rank(std::vector<std::vector<long long>> a) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (auto& row : a) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace morse::test
