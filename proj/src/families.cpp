#include "morse/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

namespace morse {

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertex_count_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw Error("edge endpoint out of range");
    if (u == v) throw Error("graph has a loop at vertex " + std::to_string(u + 1));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw Error("graph has a duplicate edge");
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long v = -1, e = -1;
  if (!(in >> v >> e) || v < 0 || e < 0) throw Error("graph file must start with 'V E'");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (long long i = 0; i < e; ++i) {
    long long a = 0, b = 0;
    if (!(in >> a >> b)) throw Error("graph file lists fewer than " + std::to_string(e) + " edges");
    if (a < 1 || b < 1 || a > v || b > v) throw Error("graph vertex out of range 1.." + std::to_string(v));
    edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  std::string rest;
  if (in >> rest) throw Error("trailing content in graph file");
  return SimpleGraph(static_cast<std::size_t>(v), std::move(edges));
}

MonomialIdeal edge_ideal(const SimpleGraph& g, std::optional<VariableContext> names) {
  VariableContext ctx = names ? *names : VariableContext::numbered(g.vertex_count());
  if (ctx.size() != g.vertex_count()) throw Error("variable count does not match the vertex count");
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    std::vector<Monomial::Exponent> e(ctx.size(), 0);
    e[u] = e[v] = 1;
    gens.emplace_back(ctx, std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal cycle_edge_ideal(std::size_t n) {
  if (n < 3) throw Error("cycle edge ideal needs n >= 3");
  const auto ctx = VariableContext::numbered(n);
  std::vector<Monomial> gens;
  auto edge = [&](std::size_t u, std::size_t v) {
    std::vector<Monomial::Exponent> e(n, 0);
    e[u] = e[v] = 1;
    gens.emplace_back(ctx, std::move(e));
  };
  for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
  edge(0, n - 1);
  return MonomialIdeal(ctx, std::move(gens));
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

MonomialIdeal random_squarefree_ideal(std::uint64_t seed, std::size_t variables, std::size_t generators) {
  if (variables < 1 || variables > 12) throw Error("random ideals need 1..12 variables");
  if (generators < 1 || generators > 10) throw Error("random ideals need 1..10 generators");
  const auto ctx = VariableContext::numbered(variables);
  SplitMix64 rng(seed);
  const std::size_t min_support = variables >= 2 ? 2 : 1;
  std::vector<Monomial> gens;
  for (std::size_t attempt = 0; attempt < 64 * generators && gens.size() < generators; ++attempt) {
    const auto support = min_support + rng.below(variables - min_support + 1);
    std::vector<std::size_t> vars(variables);
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    // partial Fisher-Yates
    for (std::size_t i = 0; i < support; ++i) std::swap(vars[i], vars[i + rng.below(variables - i)]);
    std::vector<Monomial::Exponent> e(variables, 0);
    for (std::size_t i = 0; i < support; ++i) e[vars[i]] = 1;
    gens.emplace_back(ctx, std::move(e));
    gens = minimize_generators(gens).generators;
  }
  return MonomialIdeal(ctx, std::move(gens));
}

}  // namespace morse
