#include "morse/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace morse {

namespace {

// One multidegree block of a complex tensored with the field: cells per
// degree and the unit entries between them.
struct Block {
  std::vector<std::vector<std::size_t>> cells;  // degree -> global basis index
  std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::int64_t>>> entries;
};

std::vector<std::size_t> block_homology(const Block& b) {
  const std::size_t degrees = b.cells.size();
  std::vector<Eigen::Index> rank(degrees + 1, 0);
  for (std::size_t i = 1; i < degrees; ++i) {
    if (b.entries[i].empty()) continue;
    std::unordered_map<std::size_t, Eigen::Index> row_of, col_of;
    for (std::size_t r = 0; r < b.cells[i - 1].size(); ++r) row_of.emplace(b.cells[i - 1][r], r);
    for (std::size_t c = 0; c < b.cells[i].size(); ++c) col_of.emplace(b.cells[i][c], c);
    IntegerMatrix m = IntegerMatrix::Zero(static_cast<Eigen::Index>(b.cells[i - 1].size()),
                                          static_cast<Eigen::Index>(b.cells[i].size()));
    for (const auto& [rc, value] : b.entries[i]) m(row_of.at(rc.first), col_of.at(rc.second)) += value;
    rank[i] = exact_rank(m);
  }
  std::vector<std::size_t> out(degrees, 0);
  for (std::size_t i = 0; i < degrees; ++i) {
    out[i] = b.cells[i].size() - static_cast<std::size_t>(rank[i]) - static_cast<std::size_t>(rank[i + 1]);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> trim_zeros(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<std::size_t> BettiTable::trimmed_totals() const { return trim_zeros(totals); }

BettiTable betti_numbers(const TaylorComplex& tc) {
  const std::size_t n = tc.generator_count();
  const std::size_t degrees = n + 1;
  std::vector<Block> blocks(tc.lcm_class_count());
  for (auto& b : blocks) {
    b.cells.resize(degrees);
    b.entries.resize(degrees);
  }
  for (std::size_t mask = 0; mask < tc.cell_count(); ++mask) {
    const Cell c(static_cast<Cell::Mask>(mask));
    auto& b = blocks[tc.lcm_class(c)];
    const auto k = c.cardinality();
    b.cells[k].push_back(mask);
    // Only bridges keep the lcm when removed.
    for_each_member(tc.bridge_mask(c), [&](std::size_t g) {
      b.entries[k].push_back({{c.without(g).mask(), mask}, removal_sign(c, g)});
    });
  }

  BettiTable table;
  table.totals.assign(degrees, 0);
  for (std::size_t id = 0; id < blocks.size(); ++id) {
    const auto h = block_homology(blocks[id]);
    if (std::all_of(h.begin(), h.end(), [](std::size_t v) { return v == 0; })) continue;
    for (std::size_t i = 0; i < degrees; ++i) table.totals[i] += h[i];
    table.multigraded.push_back({tc.class_lcm(static_cast<std::uint32_t>(id)), h});
  }
  std::sort(table.multigraded.begin(), table.multigraded.end(),
            [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return table;
}

std::vector<std::size_t> homology_ranks(const ChainComplex& complex) {
  const std::size_t degrees = complex.basis.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> block_of;
  std::vector<Block> blocks;
  // Global index of (degree, position) is kept per degree; encode as position.
  std::vector<std::vector<std::size_t>> block_at(degrees);
  for (std::size_t i = 0; i < degrees; ++i) {
    for (std::size_t p = 0; p < complex.basis[i].size(); ++p) {
      auto [it, inserted] = block_of.try_emplace(complex.basis[i][p].lcm, blocks.size());
      if (inserted) {
        blocks.emplace_back();
        blocks.back().cells.resize(degrees);
        blocks.back().entries.resize(degrees);
      }
      blocks[it->second].cells[i].push_back(p);
      block_at[i].push_back(it->second);
    }
  }
  for (std::size_t i = 1; i < degrees && i < complex.differentials.size(); ++i) {
    for (const auto& e : complex.differentials[i].entries) {
      if (!e.factor.is_one() || e.coefficient == 0) continue;
      const auto b = block_at[i][e.col];
      if (block_at[i - 1][e.row] != b) throw Error("unit differential entry joins different multidegrees");
      blocks[b].entries[i].push_back({{e.row, e.col}, e.coefficient});
    }
  }
  std::vector<std::size_t> out(degrees, 0);
  for (const auto& b : blocks) {
    const auto h = block_homology(b);
    for (std::size_t i = 0; i < degrees; ++i) out[i] += h[i];
  }
  return out;
}

}  // namespace morse
