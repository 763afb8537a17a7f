#include "morse/taylor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace morse {

std::vector<std::size_t> Cell::members() const {
  std::vector<std::size_t> out;
  out.reserve(cardinality());
  for_each_member(mask_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

// ---------------------------------------------------------------------------
// TotalOrder

TotalOrder::TotalOrder(std::vector<std::size_t> sequence) : sequence_(std::move(sequence)) {
  position_.assign(sequence_.size(), sequence_.size());
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    const auto g = sequence_[p];
    if (g >= sequence_.size() || position_[g] != sequence_.size()) {
      throw Error("total order is not a permutation of the generators");
    }
    position_[g] = p;
  }
}

TotalOrder TotalOrder::identity(std::size_t n) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  return TotalOrder(std::move(seq));
}

Cell TotalOrder::to_positional(Cell c) const {
  Cell::Mask out = 0;
  for_each_member(c.mask(), [&](std::size_t g) { out |= Cell::Mask{1} << position_[g]; });
  return Cell(out);
}

std::vector<std::size_t> TotalOrder::ordered_members(Cell c) const {
  auto m = c.members();
  std::sort(m.begin(), m.end(), [&](std::size_t a, std::size_t b) { return position_[a] < position_[b]; });
  return m;
}

// ---------------------------------------------------------------------------
// TaylorComplex

TaylorComplex build_taylor(const MonomialIdeal& ideal, std::size_t max_generators) {
  if (max_generators > TaylorComplex::kHardMaxGenerators) {
    throw Error("generator cap " + std::to_string(max_generators) + " exceeds the hard limit of " +
                std::to_string(TaylorComplex::kHardMaxGenerators));
  }
  const std::size_t n = ideal.size();
  if (n > max_generators) {
    throw Error("ideal has " + std::to_string(n) + " generators; the Taylor complex cap is " +
                std::to_string(max_generators));
  }

  TaylorComplex tc;
  tc.ideal_ = ideal;
  const std::size_t cells = std::size_t{1} << n;
  tc.lcm_class_.assign(cells, 0);

  std::unordered_map<Monomial, std::uint32_t, MonomialHash> interned;
  auto intern = [&](Monomial m) {
    auto [it, inserted] = interned.try_emplace(m, static_cast<std::uint32_t>(tc.class_lcm_.size()));
    if (inserted) tc.class_lcm_.push_back(std::move(m));
    return it->second;
  };
  const auto& ctx = ideal.context();
  intern(ctx.size() > 0 ? Monomial(ctx) : Monomial());

  // lcm(c) = lcm(lcm(c minus its top member), top generator), memoized on
  // (parent class, generator).
  std::unordered_map<std::uint64_t, std::uint32_t> step;
  for (std::size_t mask = 1; mask < cells; ++mask) {
    const auto m = static_cast<Cell::Mask>(mask);
    const auto top = static_cast<std::size_t>(31 - std::countl_zero(m));
    const auto parent = tc.lcm_class_[m ^ (Cell::Mask{1} << top)];
    const std::uint64_t key = (std::uint64_t{parent} << 5) | top;
    auto it = step.find(key);
    if (it == step.end()) {
      const auto id = intern(lcm(tc.class_lcm_[parent], ideal.generator(top)));
      it = step.emplace(key, id).first;
    }
    tc.lcm_class_[m] = it->second;
  }

  tc.class_divisors_.assign(tc.class_lcm_.size(), 0);
  for (std::size_t id = 0; id < tc.class_lcm_.size(); ++id) {
    Cell::Mask d = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (divides(ideal.generator(g), tc.class_lcm_[id])) d |= Cell::Mask{1} << g;
    }
    tc.class_divisors_[id] = d;
  }

  tc.bridge_mask_.assign(cells, 0);
  for (std::size_t mask = 0; mask < cells; ++mask) {
    const auto m = static_cast<Cell::Mask>(mask);
    Cell::Mask b = 0;
    for_each_member(m, [&](std::size_t i) {
      if (tc.lcm_class_[m ^ (Cell::Mask{1} << i)] == tc.lcm_class_[m]) b |= Cell::Mask{1} << i;
    });
    tc.bridge_mask_[m] = b;
  }

  tc.level_offset_.assign(n + 2, 0);
  for (std::size_t mask = 0; mask < cells; ++mask) ++tc.level_offset_[std::popcount(mask) + 1];
  std::partial_sum(tc.level_offset_.begin(), tc.level_offset_.end(), tc.level_offset_.begin());
  tc.by_cardinality_.resize(cells);
  auto fill = tc.level_offset_;
  for (std::size_t mask = 0; mask < cells; ++mask) {
    tc.by_cardinality_[fill[std::popcount(mask)]++] = Cell(static_cast<Cell::Mask>(mask));
  }
  return tc;
}

std::span<const Cell> TaylorComplex::cells_of_cardinality(std::size_t k) const {
  if (k + 1 >= level_offset_.size()) return {};
  return std::span<const Cell>(by_cardinality_).subspan(level_offset_[k], level_offset_[k + 1] - level_offset_[k]);
}

std::vector<std::size_t> bridges(const TaylorComplex& tc, Cell c) {
  return Cell(tc.bridge_mask(c)).members();
}

std::optional<std::size_t> smallest_bridge(const TaylorComplex& tc, Cell c, const TotalOrder& order) {
  std::optional<std::size_t> best;
  for_each_member(tc.bridge_mask(c), [&](std::size_t g) {
    if (!best || order.position_of(g) < order.position_of(*best)) best = g;
  });
  return best;
}

std::optional<std::size_t> smallest_bridge(const TaylorComplex& tc, Cell c) {
  // Identity order: the smallest position is the lowest index.
  const auto b = tc.bridge_mask(c);
  if (b == 0) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(b));
}

int incidence_sign(Cell source, Cell target) {
  const auto removed = source.mask() & ~target.mask();
  if (!target.is_subset_of(source) || std::popcount(removed) != 1) {
    throw Error("incidence sign needs a facet of the source cell");
  }
  return removal_sign(source, static_cast<std::size_t>(std::countr_zero(removed)));
}

DifferentialMatrix taylor_differential(const TaylorComplex& tc, std::size_t degree) {
  const std::size_t n = tc.generator_count();
  if (degree == 0 || degree > n) {
    throw Error("Taylor differential degree " + std::to_string(degree) + " outside 1.." + std::to_string(n));
  }
  const auto rows = tc.cells_of_cardinality(degree - 1);
  const auto cols = tc.cells_of_cardinality(degree);
  std::unordered_map<Cell::Mask, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r].mask(), r);

  DifferentialMatrix d;
  d.rows = rows.size();
  d.cols = cols.size();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Cell sigma = cols[c];
    std::vector<DifferentialEntry> column;
    for_each_member(sigma.mask(), [&](std::size_t g) {
      const Cell facet = sigma.without(g);
      column.push_back({row_index.at(facet.mask()), c, removal_sign(sigma, g),
                        quotient(tc.lcm(sigma), tc.lcm(facet))});
    });
    std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    for (auto& e : column) d.entries.push_back(std::move(e));
  }
  return d;
}

ChainComplex taylor_chain_complex(const TaylorComplex& tc) {
  const std::size_t n = tc.generator_count();
  ChainComplex cx;
  cx.basis.resize(n + 1);
  cx.differentials.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (const Cell c : tc.cells_of_cardinality(k)) cx.basis[k].push_back({c.mask(), tc.lcm(c)});
    if (k > 0) cx.differentials[k] = taylor_differential(tc, k);
  }
  cx.differentials[0].rows = 0;
  cx.differentials[0].cols = cx.basis[0].size();
  return cx;
}

}  // namespace morse
