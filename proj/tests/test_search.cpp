#include <doctest.h>

#include <sstream>

#include "morse/homology.hpp"
#include "morse/render.hpp"
#include "morse/search.hpp"
#include "support.hpp"

using namespace morse;
using namespace morse::test;

TEST_CASE("permutation ranks are lexicographic") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(factorial(21), Error);
  std::vector<std::size_t> p = {0, 1, 2, 3, 4};
  for (std::uint64_t r = 0; r < 120; ++r) {
    CHECK(permutation_at(5, r) == p);
    std::next_permutation(p.begin(), p.end());
  }
  CHECK_THROWS_AS(permutation_at(3, 6), Error);
  CHECK(enumerate_orders(0).size() == 1);
  CHECK(enumerate_orders(4).size() == 24);
}

TEST_CASE("chunks partition the orders") {
  for (std::size_t n : {1, 3, 6}) {
    for (std::size_t chunks : {1, 7, 512}) {
      const auto c = split_orders(n, chunks);
      CHECK(c.front().begin == 0);
      CHECK(c.back().end == factorial(n));
      for (std::size_t i = 1; i < c.size(); ++i) {
        CHECK(c[i].begin == c[i - 1].end);
        CHECK(c[i].begin < c[i].end);
      }
    }
  }
}

TEST_CASE("bridge-friendly catalogs") {
  const auto T = tri();
  const auto list = bridge_friendly_list(build_taylor(T));
  REQUIRE(list.size() == 6);
  for (std::size_t r = 0; r < 6; ++r) {
    CHECK(list[r].order == TotalOrder(permutation_at(3, r)));
    CHECK(list[r].matching.size() == 1);
  }
  CHECK(bridge_friendly_list(build_taylor(run4())).empty());
}

TEST_CASE("bm_ranks agrees with critical cells") {
  for (const auto& ideal : corpus(30)) {
    const auto tc = build_taylor(ideal);
    for (const auto& order : enumerate_orders(std::min<std::size_t>(ideal.size(), 4))) {
      if (order.size() != ideal.size()) break;
      CHECK(bm_ranks(tc, order) == critical_cells(tc, bm_matching(tc, order)).counts());
    }
  }
}

TEST_CASE("minimal search on small cycles") {
  const auto c4 = build_taylor(cycle_edge_ideal(4));
  const auto first = bridge_minimal_search(c4, SearchMode::FirstHit);
  const auto all = bridge_minimal_search(c4, SearchMode::Exhaustive);
  REQUIRE(first.witness);
  REQUIRE(all.witness);
  CHECK(*first.witness == *all.witness);
  CHECK(first.witness_rank == all.witness_rank);
  CHECK(first.ranks == first.betti);
  CHECK(all.hits >= 1);
  CHECK(all.orders_examined == 24);
  // the witness really is the lexicographically least minimal order
  for (std::uint64_t r = 0; r < all.witness_rank; ++r) {
    CHECK(bm_ranks(c4, TotalOrder(permutation_at(4, r))) != all.betti);
  }
}

TEST_CASE("results do not depend on the worker count") {
  std::vector<MonomialIdeal> ideals = {cycle_edge_ideal(5), cycle_edge_ideal(6), run4()};
  for (const auto& i : corpus(20)) ideals.push_back(i);
  for (const auto& ideal : ideals) {
    const auto tc = build_taylor(ideal);
    std::string ref_list;
    std::optional<MinimalSearchResult> ref_first, ref_all;
    for (std::size_t w : {1, 2, 8}) {
      SearchOptions o;
      o.workers = w;
      const auto list = render_friendly_list(ideal, bridge_friendly_list(tc, o));
      const auto first = bridge_minimal_search(tc, SearchMode::FirstHit, o);
      const auto all = bridge_minimal_search(tc, SearchMode::Exhaustive, o);
      if (w == 1) {
        ref_list = list;
        ref_first = first;
        ref_all = all;
        continue;
      }
      CHECK(list == ref_list);
      CHECK(first.witness_rank == ref_first->witness_rank);
      CHECK(first.witness.has_value() == ref_first->witness.has_value());
      CHECK(all.hits == ref_all->hits);
      CHECK(all.witness_rank == ref_all->witness_rank);
    }
  }
}

TEST_CASE("search guard and progress") {
  const auto tc = build_taylor(cycle_edge_ideal(11));
  CHECK_THROWS_AS(bridge_friendly_list(tc), Error);
  CHECK_THROWS_AS(bridge_minimal_search(tc, SearchMode::FirstHit), Error);
  std::ostringstream progress;
  SearchOptions o;
  o.progress = &progress;
  bridge_friendly_list(build_taylor(tri()), o);
  CHECK(progress.str().find("6 / 6") != std::string::npos);
}
