#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "morse/matching.hpp"

namespace morse {

/// A reordering of the generators, smallest first.
using OrderPermutation = TotalOrder;

std::uint64_t factorial(std::size_t n);

/// The permutation of 0..n-1 with the given lexicographic rank.
std::vector<std::size_t> permutation_at(std::size_t n, std::uint64_t rank);

/// All permutations of 0..n-1 in lexicographic order (n = 0 gives one empty
/// permutation).
std::vector<OrderPermutation> enumerate_orders(std::size_t n);

/// Contiguous lexicographic rank range [begin, end).
struct OrderChunk {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits the n! orders into at most `chunks` contiguous ranges, in order.
std::vector<OrderChunk> split_orders(std::size_t n, std::size_t chunks);

/// Visits the orders of a chunk in lexicographic order; stops early when
/// `visit` returns false.
void for_each_order(std::size_t n, OrderChunk chunk,
                    const std::function<bool(std::uint64_t rank, const std::vector<std::size_t>&)>& visit);

struct SearchOptions {
  std::size_t workers = 1;
  bool force = false;                    // lift the generator guard
  std::size_t max_generators = 10;       // guard on n! iterations
  std::ostream* progress = nullptr;      // progress lines, if set
};

struct FriendlyOrder {
  OrderPermutation order;
  Matching matching;  // Barile-Macchia matching under `order`
};

/// Every order under which the ideal is bridge-friendly, in lexicographic
/// order, each with its Barile-Macchia matching.
std::vector<FriendlyOrder> bridge_friendly_list(const TaylorComplex& tc, const SearchOptions& options = {});

enum class SearchMode { FirstHit, Exhaustive };

struct MinimalSearchResult {
  std::optional<OrderPermutation> witness;  // lexicographically least order
  std::uint64_t witness_rank = 0;           // lexicographic rank of witness
  std::vector<std::size_t> ranks;           // Barile-Macchia ranks under witness
  std::vector<std::size_t> betti;           // total Betti numbers, length n + 1
  std::uint64_t hits = 0;                   // successful orders (exhaustive mode)
  std::uint64_t orders_examined = 0;        // exhaustive mode: n!
};

/// Looks for an order whose Barile-Macchia resolution has the Betti numbers
/// as ranks, i.e. is minimal.
MinimalSearchResult bridge_minimal_search(const TaylorComplex& tc, SearchMode mode,
                                          const SearchOptions& options = {});

/// Barile-Macchia ranks under `order`, degree 0 first, length n + 1.
std::vector<std::size_t> bm_ranks(const TaylorComplex& tc, const TotalOrder& order);

}  // namespace morse
