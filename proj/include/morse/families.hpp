#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "morse/algebra.hpp"

namespace morse {

/// Simple undirected graph on vertices 0..V-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws on loops, duplicate edges or out-of-range vertices.
  SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  static SimpleGraph cycle(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Graph file: `V E` on the first line, then E lines `u v` (1-based).
SimpleGraph parse_graph(std::string_view text);

/// Edge ideal with generators x_u x_v in sorted edge order. Variables default
/// to x1..xV.
MonomialIdeal edge_ideal(const SimpleGraph& g, std::optional<VariableContext> names = std::nullopt);

/// Edge ideal of the n-cycle over x1..xn listed as
/// x1*x2, x2*x3, ..., x(n-1)*xn, x1*xn.
MonomialIdeal cycle_edge_ideal(std::size_t n);

/// SplitMix64 generator. Each call advances the state by 0x9E3779B97F4A7C15
/// and returns the mixed state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Value in [0, bound) by reduction modulo bound.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Seeded random square-free ideal over x1..xN. Each draw picks a support
/// size uniformly in [2, N] (1 when N = 1), then a uniform subset of that
/// size; the list is minimized after each draw until `generators` survive
/// or 64 * generators draws have been made.
MonomialIdeal random_squarefree_ideal(std::uint64_t seed, std::size_t variables, std::size_t generators);

}  // namespace morse
