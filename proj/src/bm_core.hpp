#pragma once

// Shared Barile-Macchia machinery for the matching constructors and the
// order searches. Works on generator indices; only smallest-bridge
// selection looks at positions.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "morse/matching.hpp"

namespace morse::detail {

struct RawEdge {
  Cell source;
  Cell target;
  std::size_t sbridge = 0;
  std::size_t position = 0;
};

class BarileMacchiaRunner {
 public:
  explicit BarileMacchiaRunner(const TaylorComplex& tc)
      : tc_(tc), removed_(tc.cell_count(), 0), best_(tc.cell_count(), 0), best_stamp_(tc.cell_count(), 0) {}

  /// Picking and pairing: cardinalities from the top down to 3, cells in the
  /// order given by level(k). Fills edges() with the possible edges.
  template <typename Levels>
  void run(std::span<const std::size_t> position, const CellFamily* family, Levels&& level) {
    next_stamp();
    edges_.clear();
    const std::size_t n = tc_.generator_count();
    for (std::size_t k = n; k >= 3; --k) {
      for (const Cell sigma : level(k)) {
        if (removed_[sigma.mask()] == stamp_) continue;
        if (family && !family->contains(sigma)) continue;
        removed_[sigma.mask()] = stamp_;
        auto bmask = tc_.bridge_mask(sigma);
        if (bmask == 0) continue;
        std::size_t best = 0, best_pos = std::numeric_limits<std::size_t>::max();
        for_each_member(bmask, [&](std::size_t g) {
          if (position[g] < best_pos) {
            best_pos = position[g];
            best = g;
          }
        });
        const Cell target = sigma.without(best);
        if (family && !family->contains(target)) {
          throw Error("cell family is not closed under removing the smallest bridge (source mask " +
                      std::to_string(sigma.mask()) + ")");
        }
        removed_[target.mask()] = stamp_;
        edges_.push_back({sigma, target, best, best_pos});
      }
    }
  }

  void run(std::span<const std::size_t> position, const CellFamily* family) {
    run(position, family, [this](std::size_t k) { return tc_.cells_of_cardinality(k); });
  }

  const std::vector<RawEdge>& edges() const { return edges_; }

  /// Duplicate-target resolution: per target, keep the edge with the
  /// smallest bridge position.
  std::vector<RawEdge> select() {
    next_best_stamp();
    for (const auto& e : edges_) {
      const auto t = e.target.mask();
      if (best_stamp_[t] != best_round_) {
        best_stamp_[t] = best_round_;
        best_[t] = static_cast<std::uint32_t>(e.position);
      } else if (best_[t] == e.position) {
        throw InternalError("two possible edges share a target and a smallest-bridge position");
      } else if (e.position < best_[t]) {
        best_[t] = static_cast<std::uint32_t>(e.position);
      }
    }
    std::vector<RawEdge> out;
    for (const auto& e : edges_) {
      if (best_[e.target.mask()] == e.position) out.push_back(e);
    }
    return out;
  }

  /// True iff no two possible edges share a target.
  bool targets_distinct() {
    next_best_stamp();
    for (const auto& e : edges_) {
      const auto t = e.target.mask();
      if (best_stamp_[t] == best_round_) return false;
      best_stamp_[t] = best_round_;
    }
    return true;
  }

  /// Number of matched cells per cardinality after selection.
  void matched_counts(std::vector<std::size_t>& out) {
    out.assign(tc_.generator_count() + 1, 0);
    for (const auto& e : select()) {
      ++out[e.source.cardinality()];
      ++out[e.target.cardinality()];
    }
  }

 private:
  void next_stamp() {
    if (++stamp_ == 0) {
      std::fill(removed_.begin(), removed_.end(), 0);
      stamp_ = 1;
    }
  }
  void next_best_stamp() {
    if (++best_round_ == 0) {
      std::fill(best_stamp_.begin(), best_stamp_.end(), 0);
      best_round_ = 1;
    }
  }

  const TaylorComplex& tc_;
  std::vector<std::uint32_t> removed_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> best_stamp_;
  std::uint32_t best_round_ = 0;
  std::vector<RawEdge> edges_;
};

}  // namespace morse::detail
