#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "morse/taylor.hpp"

namespace morse {

/// Directed edge (source, target) of the Taylor cell graph with target a
/// facet of source.
struct MatchingEdge {
  Cell source;
  Cell target;

  MatchingEdge(Cell source, Cell target);

  friend bool operator==(const MatchingEdge&, const MatchingEdge&) = default;
};

/// A set of cell-graph edges, kept sorted by descending source cardinality
/// then ascending source mask. Construction does not enforce that the edges
/// form a matching; see validate_matching().
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<MatchingEdge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<MatchingEdge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  bool contains(const MatchingEdge& e) const;
  /// True iff some edge has `c` as source or target.
  bool touches(Cell c) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<MatchingEdge> edges_;
};

/// An edge produced before duplicate targets are resolved, together with
/// the smallest bridge that produced it.
struct PossibleEdge {
  std::size_t sbridge_position = 0;  // position of the bridge in the total order
  std::size_t sbridge = 0;           // generator index of the bridge
  Cell source;
  Cell target;

  friend bool operator==(const PossibleEdge&, const PossibleEdge&) = default;
};

/// A set of Taylor cells. The empty cell is always a member.
class CellFamily {
 public:
  CellFamily() = default;
  explicit CellFamily(std::size_t generator_count);
  static CellFamily all(std::size_t generator_count);

  std::size_t generator_count() const { return n_; }
  bool contains(Cell c) const { return c.empty() || member_[c.mask()] != 0; }
  void insert(Cell c) { member_[c.mask()] = 1; }
  std::size_t size() const;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> member_;
};

/// Unmatched cells grouped by cardinality from n down to 1; the empty cell
/// is always critical and is left out. Each group is in ascending mask order.
struct CriticalCells {
  std::size_t generator_count = 0;
  std::vector<std::vector<Cell>> groups;

  const std::vector<Cell>& of_cardinality(std::size_t k) const { return groups.at(generator_count - k); }
  /// Number of critical cells in each degree, degree 0 (the empty cell) first.
  std::vector<std::size_t> counts() const;
  CellFamily as_family() const;
};

struct MatchingReport {
  bool is_matching = false;
  bool is_homogeneous = false;
  bool is_acyclic = false;

  bool ok() const { return is_matching && is_homogeneous && is_acyclic; }
};

// Barile-Macchia construction. Without a family, every cell of cardinality
// at least 3 is a candidate source. With a family, candidate sources are its
// members of cardinality at least 3 and every produced target must be a
// member as well.
std::vector<PossibleEdge> possible_edges_with_positions(const TaylorComplex& tc);
std::vector<PossibleEdge> possible_edges_with_positions(const TaylorComplex& tc, const TotalOrder& order);
std::vector<PossibleEdge> possible_edges_with_positions(const TaylorComplex& tc, const TotalOrder& order,
                                                        const CellFamily* family);

Matching possible_edges(const TaylorComplex& tc, const TotalOrder& order);

Matching bm_matching(const TaylorComplex& tc);
Matching bm_matching(const TaylorComplex& tc, const TotalOrder& order);
Matching bm_matching(const TaylorComplex& tc, const TotalOrder& order, const CellFamily* family);

/// Barile-Macchia matching with caller-chosen processing order inside each
/// cardinality level; levels[k] lists the cells of cardinality k. The
/// result does not depend on the within-level order.
Matching bm_matching_with_levels(const TaylorComplex& tc, const TotalOrder& order,
                                 const std::vector<std::vector<Cell>>& levels);

bool is_bridge_friendly(const TaylorComplex& tc);
bool is_bridge_friendly(const TaylorComplex& tc, const TotalOrder& order);

// Lyubeznik construction. `order` defaults to the ideal's own sequence.
// v_L is reported 1-based; nullopt stands for minus infinity.
std::optional<std::size_t> lyu_value(const TaylorComplex& tc, Cell c, const TotalOrder& order);
std::optional<std::size_t> lyu_value(const TaylorComplex& tc, Cell c);
/// Generator index m_L(c). Throws when v_L(c) is minus infinity.
std::size_t lyu_min(const TaylorComplex& tc, Cell c, const TotalOrder& order);
std::size_t lyu_min(const TaylorComplex& tc, Cell c);

Matching lyubeznik_matching(const TaylorComplex& tc, const TotalOrder& order);
Matching lyubeznik_matching(const TaylorComplex& tc);

/// Critical cells of the Lyubeznik matching under `order`, as a family.
CellFamily lyubeznik_family(const TaylorComplex& tc, const TotalOrder& order);

/// Barile-Macchia under `bm_order` applied to the Lyubeznik-critical cells
/// under `lyu_order`.
Matching trimmed_matching(const TaylorComplex& tc, const TotalOrder& lyu_order, const TotalOrder& bm_order);
/// Same, with the ideal's own order for the Lyubeznik step.
Matching trimmed_matching(const TaylorComplex& tc, const TotalOrder& bm_order);

CriticalCells critical_cells(const TaylorComplex& tc, const Matching& matching,
                             const CellFamily* family = nullptr);

MatchingReport validate_matching(const TaylorComplex& tc, const Matching& matching);

}  // namespace morse
