#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "morse/algebra.hpp"
#include "morse/chain.hpp"

namespace morse {

/// A face of the Taylor simplex: a subset of generator indices stored as a
/// bitmask (bit i set means generator i is a member).
class Cell {
 public:
  using Mask = std::uint32_t;

  constexpr Cell() = default;
  constexpr explicit Cell(Mask mask) : mask_(mask) {}

  static constexpr Cell singleton(std::size_t generator) { return Cell(Mask{1} << generator); }
  static constexpr Cell full(std::size_t n) {
    return Cell(n == 0 ? Mask{0} : static_cast<Mask>(~Mask{0} >> (32 - n)));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(std::size_t generator) const { return (mask_ >> generator) & 1u; }
  constexpr bool is_subset_of(Cell other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Cell without(std::size_t generator) const { return Cell(mask_ & ~(Mask{1} << generator)); }
  constexpr Cell with(std::size_t generator) const { return Cell(mask_ | (Mask{1} << generator)); }

  /// Member indices, ascending.
  std::vector<std::size_t> members() const;

  friend constexpr bool operator==(Cell a, Cell b) = default;
  friend constexpr auto operator<=>(Cell a, Cell b) = default;

 private:
  Mask mask_ = 0;
};

/// Calls f(i) for each member index of `mask`, ascending.
template <typename F>
constexpr void for_each_member(Cell::Mask mask, F&& f) {
  while (mask != 0) {
    f(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

/// A total order on generators, stored smallest-first: generator_at(0) is
/// the smallest element.
class TotalOrder {
 public:
  TotalOrder() = default;
  /// Throws unless `sequence` is a permutation of 0..n-1.
  explicit TotalOrder(std::vector<std::size_t> sequence);
  static TotalOrder identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  std::size_t generator_at(std::size_t position) const { return sequence_[position]; }
  std::size_t position_of(std::size_t generator) const { return position_[generator]; }
  std::span<const std::size_t> sequence() const { return sequence_; }
  std::span<const std::size_t> positions() const { return position_; }

  /// The cell re-indexed by position; its mask sorts cells the way they are
  /// listed under this order.
  Cell to_positional(Cell c) const;
  /// Members of `c` ordered by ascending position.
  std::vector<std::size_t> ordered_members(Cell c) const;

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

/// Every cell of the Taylor complex of an ideal, labelled by its lcm.
/// Distinct lcms are interned; equal lcm classes give equal class ids.
/// Bridges do not depend on the total order and are precomputed per cell.
class TaylorComplex {
 public:
  static constexpr std::size_t kDefaultMaxGenerators = 24;
  static constexpr std::size_t kHardMaxGenerators = 30;

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t generator_count() const { return ideal_.size(); }
  std::size_t cell_count() const { return lcm_class_.size(); }

  const Monomial& lcm(Cell c) const { return class_lcm_[lcm_class_[c.mask()]]; }
  std::uint32_t lcm_class(Cell c) const { return lcm_class_[c.mask()]; }
  std::size_t lcm_class_count() const { return class_lcm_.size(); }
  const Monomial& class_lcm(std::uint32_t id) const { return class_lcm_[id]; }
  /// Generators dividing the lcm of class `id`.
  Cell::Mask class_divisors(std::uint32_t id) const { return class_divisors_[id]; }

  Cell::Mask bridge_mask(Cell c) const { return bridge_mask_[c.mask()]; }
  /// Cells of the given cardinality in ascending mask order.
  std::span<const Cell> cells_of_cardinality(std::size_t k) const;

  friend TaylorComplex build_taylor(const MonomialIdeal& ideal, std::size_t max_generators);

 private:
  MonomialIdeal ideal_;
  std::vector<std::uint32_t> lcm_class_;
  std::vector<Monomial> class_lcm_;
  std::vector<Cell::Mask> class_divisors_;
  std::vector<Cell::Mask> bridge_mask_;
  std::vector<Cell> by_cardinality_;
  std::vector<std::size_t> level_offset_;
};

TaylorComplex build_taylor(const MonomialIdeal& ideal,
                           std::size_t max_generators = TaylorComplex::kDefaultMaxGenerators);

/// Bridges of `c`: members i with lcm(c \ i) == lcm(c), ascending.
std::vector<std::size_t> bridges(const TaylorComplex& tc, Cell c);

/// The bridge with the smallest position under `order`.
std::optional<std::size_t> smallest_bridge(const TaylorComplex& tc, Cell c, const TotalOrder& order);
std::optional<std::size_t> smallest_bridge(const TaylorComplex& tc, Cell c);

/// [source : target] = (-1)^j, j the rank of the removed index among the
/// members of `source` in ascending index order.
int incidence_sign(Cell source, Cell target);

/// Sign of removing member `generator` from `source`.
inline int removal_sign(Cell source, std::size_t generator) {
  const auto below = source.mask() & ((Cell::Mask{1} << generator) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

/// Taylor differential from cardinality-i cells (columns) to
/// cardinality-(i-1) cells (rows), both in ascending mask order.
DifferentialMatrix taylor_differential(const TaylorComplex& tc, std::size_t degree);

/// The whole Taylor resolution as a chain complex.
ChainComplex taylor_chain_complex(const TaylorComplex& tc);

}  // namespace morse
