#include "morse/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "bm_core.hpp"
#include "morse/homology.hpp"

namespace morse {

namespace {

// Fixed so that chunk boundaries, and hence merged output, never depend on
// the worker count.
constexpr std::size_t kChunks = 512;

void check_guard(const TaylorComplex& tc, const SearchOptions& options) {
  if (tc.generator_count() > options.max_generators && !options.force) {
    throw Error("order search over " + std::to_string(tc.generator_count()) + "! orders exceeds the guard of " +
                std::to_string(options.max_generators) + " generators; pass --force to run anyway");
  }
}

std::vector<std::size_t> binomials(std::size_t n) {
  std::vector<std::size_t> b(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) b[k] = b[k - 1] * (n - k + 1) / k;
  return b;
}

void positions_of(const std::vector<std::size_t>& sequence, std::vector<std::size_t>& position) {
  position.resize(sequence.size());
  for (std::size_t p = 0; p < sequence.size(); ++p) position[sequence[p]] = p;
}

class Progress {
 public:
  Progress(std::ostream* out, const char* label, std::uint64_t total) : out_(out), label_(label), total_(total) {}
  ~Progress() {
    if (out_) *out_ << '\n' << std::flush;
  }
  void add(std::uint64_t k) {
    if (!out_) return;
    const auto done = done_ += k;
    std::lock_guard lock(mutex_);
    *out_ << '\r' << label_ << ": " << done << " / " << total_ << " orders" << std::flush;
  }

 private:
  std::ostream* out_;
  const char* label_;
  std::uint64_t total_;
  std::atomic<std::uint64_t> done_{0};
  std::mutex mutex_;
};

/// Runs work(chunk_index, runner) on `workers` threads. Chunks are handed
/// out in increasing index order; a chunk is skipped when skip(index) holds.
template <typename Work, typename Skip>
void run_chunks(const TaylorComplex& tc, std::size_t chunk_count, std::size_t workers, Work&& work, Skip&& skip) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    detail::BarileMacchiaRunner runner(tc);
    while (true) {
      const auto c = next.fetch_add(1);
      if (c >= chunk_count || skip(c)) return;
      work(c, runner);
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, chunk_count));
  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunk_count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw Error("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::size_t> permutation_at(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw Error("permutation rank out of range");
  std::vector<std::size_t> pool(n), out;
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const auto block = factorial(i - 1);
    const auto k = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

std::vector<OrderPermutation> enumerate_orders(std::size_t n) {
  std::vector<OrderPermutation> out;
  for_each_order(n, {0, factorial(n)}, [&](std::uint64_t, const std::vector<std::size_t>& p) {
    out.emplace_back(p);
    return true;
  });
  return out;
}

std::vector<OrderChunk> split_orders(std::size_t n, std::size_t chunks) {
  const auto total = factorial(n);
  chunks = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(chunks, total)));
  std::vector<OrderChunk> out;
  for (std::size_t c = 0; c < chunks; ++c) {
    out.push_back({total * c / chunks, total * (c + 1) / chunks});
  }
  return out;
}

void for_each_order(std::size_t n, OrderChunk chunk,
                    const std::function<bool(std::uint64_t, const std::vector<std::size_t>&)>& visit) {
  if (chunk.begin >= chunk.end) return;
  auto p = permutation_at(n, chunk.begin);
  for (auto rank = chunk.begin; rank < chunk.end; ++rank) {
    if (!visit(rank, p)) return;
    std::next_permutation(p.begin(), p.end());
  }
}

std::vector<std::size_t> bm_ranks(const TaylorComplex& tc, const TotalOrder& order) {
  if (order.size() != tc.generator_count()) throw Error("total order size does not match the ideal");
  detail::BarileMacchiaRunner runner(tc);
  runner.run(order.positions(), nullptr);
  std::vector<std::size_t> matched;
  runner.matched_counts(matched);
  auto out = binomials(tc.generator_count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= matched[k];
  return out;
}

std::vector<FriendlyOrder> bridge_friendly_list(const TaylorComplex& tc, const SearchOptions& options) {
  check_guard(tc, options);
  const std::size_t n = tc.generator_count();
  const auto chunks = split_orders(n, kChunks);
  std::vector<std::vector<FriendlyOrder>> found(chunks.size());
  Progress progress(options.progress, "friendly-list", factorial(n));

  run_chunks(
      tc, chunks.size(), options.workers,
      [&](std::size_t c, detail::BarileMacchiaRunner& runner) {
        std::vector<std::size_t> position;
        for_each_order(n, chunks[c], [&](std::uint64_t, const std::vector<std::size_t>& seq) {
          positions_of(seq, position);
          runner.run(position, nullptr);
          if (runner.targets_distinct()) {
            std::vector<MatchingEdge> edges;
            for (const auto& e : runner.edges()) edges.emplace_back(e.source, e.target);
            found[c].push_back({TotalOrder(seq), Matching(std::move(edges))});
          }
          return true;
        });
        progress.add(chunks[c].end - chunks[c].begin);
      },
      [](std::size_t) { return false; });

  std::vector<FriendlyOrder> out;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
  return out;
}

MinimalSearchResult bridge_minimal_search(const TaylorComplex& tc, SearchMode mode, const SearchOptions& options) {
  check_guard(tc, options);
  const std::size_t n = tc.generator_count();
  MinimalSearchResult result;
  result.betti = betti_numbers(tc).totals;
  const auto binom = binomials(n);
  const auto chunks = split_orders(n, kChunks);
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();

  struct ChunkResult {
    std::uint64_t first_hit = kNone;
    std::uint64_t hits = 0;
  };
  std::vector<ChunkResult> per_chunk(chunks.size());
  std::atomic<std::size_t> best_chunk{std::numeric_limits<std::size_t>::max()};
  const bool first_hit = mode == SearchMode::FirstHit;
  Progress progress(options.progress, "minimal-search", factorial(n));

  run_chunks(
      tc, chunks.size(), options.workers,
      [&](std::size_t c, detail::BarileMacchiaRunner& runner) {
        std::vector<std::size_t> position, matched;
        auto& mine = per_chunk[c];
        std::uint64_t visited = 0;
        for_each_order(n, chunks[c], [&](std::uint64_t rank, const std::vector<std::size_t>& seq) {
          ++visited;
          positions_of(seq, position);
          runner.run(position, nullptr);
          runner.matched_counts(matched);
          bool minimal = true;
          for (std::size_t k = 0; k <= n && minimal; ++k) minimal = binom[k] - matched[k] == result.betti[k];
          if (!minimal) return true;
          ++mine.hits;
          if (mine.first_hit == kNone) mine.first_hit = rank;
          if (!first_hit) return true;
          auto current = best_chunk.load();
          while (c < current && !best_chunk.compare_exchange_weak(current, c)) {
          }
          return false;
        });
        progress.add(visited);
      },
      [&](std::size_t c) { return first_hit && c > best_chunk.load(); });

  for (const auto& r : per_chunk) {
    result.hits += r.hits;
    if (r.first_hit != kNone && !result.witness) {
      result.witness_rank = r.first_hit;
      result.witness = TotalOrder(permutation_at(n, r.first_hit));
    }
  }
  if (first_hit) result.hits = result.witness ? 1 : 0;
  if (!first_hit || !result.witness) result.orders_examined = factorial(n);
  if (result.witness) result.ranks = bm_ranks(tc, *result.witness);
  return result;
}

}  // namespace morse
