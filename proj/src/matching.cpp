#include "morse/matching.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bm_core.hpp"

namespace morse {

namespace {

bool canonical_less(const MatchingEdge& a, const MatchingEdge& b) {
  const auto ca = a.source.cardinality(), cb = b.source.cardinality();
  if (ca != cb) return ca > cb;
  if (a.source != b.source) return a.source < b.source;
  return a.target < b.target;
}

Matching to_matching(const std::vector<detail::RawEdge>& raw) {
  std::vector<MatchingEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) edges.emplace_back(e.source, e.target);
  return Matching(std::move(edges));
}

void require_order(const TaylorComplex& tc, const TotalOrder& order) {
  if (order.size() != tc.generator_count()) {
    throw Error("total order has " + std::to_string(order.size()) + " generators, ideal has " +
                std::to_string(tc.generator_count()));
  }
}

Matching checked(const TaylorComplex& tc, Matching m, const char* what) {
  const auto report = validate_matching(tc, m);
  if (!report.ok()) throw InternalError(std::string(what) + " is not a homogeneous acyclic matching");
  return m;
}

}  // namespace

MatchingEdge::MatchingEdge(Cell source, Cell target) : source(source), target(target) {
  if (!target.is_subset_of(source) || source.cardinality() != target.cardinality() + 1) {
    throw Error("matching edge target must be a facet of its source");
  }
}

Matching::Matching(std::vector<MatchingEdge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), canonical_less);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Matching::contains(const MatchingEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, canonical_less);
}

bool Matching::touches(Cell c) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const MatchingEdge& e) { return e.source == c || e.target == c; });
}

CellFamily::CellFamily(std::size_t generator_count)
    : n_(generator_count), member_(std::size_t{1} << generator_count, 0) {
  member_[0] = 1;
}

CellFamily CellFamily::all(std::size_t generator_count) {
  CellFamily f(generator_count);
  std::fill(f.member_.begin(), f.member_.end(), 1);
  return f;
}

std::size_t CellFamily::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1));
}

std::vector<std::size_t> CriticalCells::counts() const {
  std::vector<std::size_t> out(generator_count + 1, 0);
  out[0] = 1;
  for (std::size_t k = 1; k <= generator_count; ++k) out[k] = of_cardinality(k).size();
  return out;
}

CellFamily CriticalCells::as_family() const {
  CellFamily f(generator_count);
  for (const auto& g : groups) {
    for (const Cell c : g) f.insert(c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Barile-Macchia

std::vector<PossibleEdge> possible_edges_with_positions(const TaylorComplex& tc, const TotalOrder& order,
                                                        const CellFamily* family) {
  require_order(tc, order);
  detail::BarileMacchiaRunner runner(tc);
  runner.run(order.positions(), family);
  std::vector<PossibleEdge> out;
  for (const auto& e : runner.edges()) out.push_back({e.position, e.sbridge, e.source, e.target});
  std::sort(out.begin(), out.end(), [&](const PossibleEdge& a, const PossibleEdge& b) {
    const auto ca = a.source.cardinality(), cb = b.source.cardinality();
    if (ca != cb) return ca > cb;
    return order.to_positional(a.source) < order.to_positional(b.source);
  });
  return out;
}

std::vector<PossibleEdge> possible_edges_with_positions(const TaylorComplex& tc, const TotalOrder& order) {
  return possible_edges_with_positions(tc, order, nullptr);
}

std::vector<PossibleEdge> possible_edges_with_positions(const TaylorComplex& tc) {
  return possible_edges_with_positions(tc, TotalOrder::identity(tc.generator_count()), nullptr);
}

Matching possible_edges(const TaylorComplex& tc, const TotalOrder& order) {
  std::vector<MatchingEdge> edges;
  for (const auto& e : possible_edges_with_positions(tc, order)) edges.emplace_back(e.source, e.target);
  return Matching(std::move(edges));
}

Matching bm_matching(const TaylorComplex& tc, const TotalOrder& order, const CellFamily* family) {
  require_order(tc, order);
  detail::BarileMacchiaRunner runner(tc);
  runner.run(order.positions(), family);
  return checked(tc, to_matching(runner.select()), "Barile-Macchia matching");
}

Matching bm_matching(const TaylorComplex& tc, const TotalOrder& order) { return bm_matching(tc, order, nullptr); }

Matching bm_matching(const TaylorComplex& tc) {
  return bm_matching(tc, TotalOrder::identity(tc.generator_count()), nullptr);
}

Matching bm_matching_with_levels(const TaylorComplex& tc, const TotalOrder& order,
                                 const std::vector<std::vector<Cell>>& levels) {
  require_order(tc, order);
  detail::BarileMacchiaRunner runner(tc);
  runner.run(order.positions(), nullptr, [&](std::size_t k) { return std::span<const Cell>(levels.at(k)); });
  return checked(tc, to_matching(runner.select()), "Barile-Macchia matching");
}

bool is_bridge_friendly(const TaylorComplex& tc, const TotalOrder& order) {
  require_order(tc, order);
  detail::BarileMacchiaRunner runner(tc);
  runner.run(order.positions(), nullptr);
  // The matching is the possible edges minus the losers of each duplicate
  // target, so equality means no target repeats.
  return runner.targets_distinct();
}

bool is_bridge_friendly(const TaylorComplex& tc) {
  return is_bridge_friendly(tc, TotalOrder::identity(tc.generator_count()));
}

// ---------------------------------------------------------------------------
// Lyubeznik

namespace {

struct LyubeznikData {
  std::size_t value = 0;  // 1-based v_L; 0 when minus infinity
  Cell prefix;            // m_1 .. m_{v_L}
};

LyubeznikData lyubeznik_data(const TaylorComplex& tc, Cell c, const TotalOrder& order) {
  // Members listed largest first: descending position.
  auto members = order.ordered_members(c);
  std::reverse(members.begin(), members.end());
  LyubeznikData out;
  Cell prefix;
  for (std::size_t k = 0; k < members.size(); ++k) {
    prefix = prefix.with(members[k]);
    const auto divisors = tc.class_divisors(tc.lcm_class(prefix));
    const auto mk_pos = order.position_of(members[k]);
    bool smaller_divides = false;
    for_each_member(divisors, [&](std::size_t g) { smaller_divides |= order.position_of(g) < mk_pos; });
    if (smaller_divides) {
      out.value = k + 1;
      out.prefix = prefix;
    }
  }
  return out;
}

std::size_t smallest_divisor(const TaylorComplex& tc, Cell prefix, const TotalOrder& order) {
  const auto divisors = tc.class_divisors(tc.lcm_class(prefix));
  std::size_t best = 0, best_pos = order.size();
  for_each_member(divisors, [&](std::size_t g) {
    if (order.position_of(g) < best_pos) {
      best_pos = order.position_of(g);
      best = g;
    }
  });
  return best;
}

}  // namespace

std::optional<std::size_t> lyu_value(const TaylorComplex& tc, Cell c, const TotalOrder& order) {
  require_order(tc, order);
  if (c.empty()) throw Error("v_L is defined for nonempty cells only");
  const auto d = lyubeznik_data(tc, c, order);
  if (d.value == 0) return std::nullopt;
  return d.value;
}

std::optional<std::size_t> lyu_value(const TaylorComplex& tc, Cell c) {
  return lyu_value(tc, c, TotalOrder::identity(tc.generator_count()));
}

std::size_t lyu_min(const TaylorComplex& tc, Cell c, const TotalOrder& order) {
  require_order(tc, order);
  if (c.empty()) throw Error("m_L is defined for nonempty cells only");
  const auto d = lyubeznik_data(tc, c, order);
  if (d.value == 0) throw Error("m_L is undefined: v_L is minus infinity");
  return smallest_divisor(tc, d.prefix, order);
}

std::size_t lyu_min(const TaylorComplex& tc, Cell c) {
  return lyu_min(tc, c, TotalOrder::identity(tc.generator_count()));
}

Matching lyubeznik_matching(const TaylorComplex& tc, const TotalOrder& order) {
  require_order(tc, order);
  std::vector<MatchingEdge> edges;
  for (std::size_t mask = 1; mask < tc.cell_count(); ++mask) {
    const Cell c(static_cast<Cell::Mask>(mask));
    const auto d = lyubeznik_data(tc, c, order);
    if (d.value == 0) continue;
    const auto m = smallest_divisor(tc, d.prefix, order);
    edges.emplace_back(c.with(m), c.without(m));
  }
  return checked(tc, Matching(std::move(edges)), "Lyubeznik matching");
}

Matching lyubeznik_matching(const TaylorComplex& tc) {
  return lyubeznik_matching(tc, TotalOrder::identity(tc.generator_count()));
}

CellFamily lyubeznik_family(const TaylorComplex& tc, const TotalOrder& order) {
  return critical_cells(tc, lyubeznik_matching(tc, order)).as_family();
}

Matching trimmed_matching(const TaylorComplex& tc, const TotalOrder& lyu_order, const TotalOrder& bm_order) {
  require_order(tc, bm_order);
  const auto family = lyubeznik_family(tc, lyu_order);
  detail::BarileMacchiaRunner runner(tc);
  try {
    runner.run(bm_order.positions(), &family);
  } catch (const InternalError&) {
    throw;
  } catch (const Error& e) {
    throw Error(std::string("trimmed matching: Lyubeznik-critical cells are not closed: ") + e.what());
  }
  return checked(tc, to_matching(runner.select()), "trimmed matching");
}

Matching trimmed_matching(const TaylorComplex& tc, const TotalOrder& bm_order) {
  return trimmed_matching(tc, TotalOrder::identity(tc.generator_count()), bm_order);
}

// ---------------------------------------------------------------------------
// Critical cells and validation

CriticalCells critical_cells(const TaylorComplex& tc, const Matching& matching, const CellFamily* family) {
  const std::size_t n = tc.generator_count();
  std::vector<unsigned char> matched(tc.cell_count(), 0);
  for (const auto& e : matching) {
    matched[e.source.mask()] = 1;
    matched[e.target.mask()] = 1;
  }
  CriticalCells out;
  out.generator_count = n;
  out.groups.resize(n);
  for (std::size_t k = n; k >= 1; --k) {
    auto& group = out.groups[n - k];
    for (const Cell c : tc.cells_of_cardinality(k)) {
      if (!matched[c.mask()] && (!family || family->contains(c))) group.push_back(c);
    }
  }
  return out;
}

namespace {

// Directed cycle search in the graph with matched edges reversed, for
// edge sets that are not matchings.
bool acyclic_general(const TaylorComplex& tc, const Matching& matching) {
  std::unordered_map<Cell::Mask, std::vector<Cell::Mask>> up;  // target -> sources
  std::unordered_set<std::uint64_t> reversed;
  for (const auto& e : matching) {
    up[e.target.mask()].push_back(e.source.mask());
    reversed.insert((std::uint64_t{e.source.mask()} << 32) | e.target.mask());
  }
  std::vector<unsigned char> color(tc.cell_count(), 0);  // 0 new, 1 on stack, 2 done
  auto successors = [&](Cell::Mask v) {
    std::vector<Cell::Mask> out;
    for_each_member(v, [&](std::size_t g) {
      const auto f = v & ~(Cell::Mask{1} << g);
      if (!reversed.count((std::uint64_t{v} << 32) | f)) out.push_back(f);
    });
    if (auto it = up.find(v); it != up.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
  };
  for (std::size_t start = 0; start < tc.cell_count(); ++start) {
    if (color[start]) continue;
    std::vector<std::pair<Cell::Mask, std::vector<Cell::Mask>>> stack;
    stack.emplace_back(static_cast<Cell::Mask>(start), successors(static_cast<Cell::Mask>(start)));
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next.empty()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const auto w = next.back();
      next.pop_back();
      if (color[w] == 1) return false;
      if (color[w] == 0) {
        color[w] = 1;
        stack.emplace_back(w, successors(w));
      }
    }
  }
  return true;
}

// For a matching every directed cycle alternates an up step along a
// reversed edge (target -> source) with a down step to another facet of
// that source, so cycles live on the graph of matched targets.
bool acyclic_matching(const Matching& matching) {
  std::unordered_map<Cell::Mask, Cell::Mask> source_of;
  for (const auto& e : matching) source_of.emplace(e.target.mask(), e.source.mask());
  std::unordered_map<Cell::Mask, unsigned char> color;
  for (const auto& e : matching) {
    if (color[e.target.mask()]) continue;
    // Iterative DFS; a frame is (target, remaining member mask of its source).
    std::vector<std::pair<Cell::Mask, Cell::Mask>> stack;
    stack.emplace_back(e.target.mask(), source_of.at(e.target.mask()));
    color[e.target.mask()] = 1;
    while (!stack.empty()) {
      auto& [tau, remaining] = stack.back();
      if (remaining == 0) {
        color[tau] = 2;
        stack.pop_back();
        continue;
      }
      const auto g = static_cast<std::size_t>(std::countr_zero(remaining));
      remaining &= remaining - 1;
      const auto source = source_of.at(tau);
      const auto facet = source & ~(Cell::Mask{1} << g);
      if (facet == tau) continue;
      auto it = source_of.find(facet);
      if (it == source_of.end()) continue;
      auto& c = color[facet];
      if (c == 1) return false;
      if (c == 0) {
        c = 1;
        stack.emplace_back(facet, it->second);
      }
    }
  }
  return true;
}

}  // namespace

MatchingReport validate_matching(const TaylorComplex& tc, const Matching& matching) {
  MatchingReport r;
  std::unordered_set<Cell::Mask> seen;
  r.is_matching = true;
  for (const auto& e : matching) {
    if (e.source.mask() >= tc.cell_count()) {
      r.is_matching = false;
      break;
    }
    if (!seen.insert(e.source.mask()).second || !seen.insert(e.target.mask()).second) r.is_matching = false;
  }
  r.is_homogeneous = true;
  for (const auto& e : matching) {
    if (e.source.mask() >= tc.cell_count() || tc.lcm_class(e.source) != tc.lcm_class(e.target)) {
      r.is_homogeneous = false;
    }
  }
  if (r.is_matching) {
    r.is_acyclic = acyclic_matching(matching);
  } else {
    bool in_range = std::all_of(matching.begin(), matching.end(),
                                [&](const MatchingEdge& e) { return e.source.mask() < tc.cell_count(); });
    r.is_acyclic = in_range && acyclic_general(tc, matching);
  }
  return r;
}

}  // namespace morse
