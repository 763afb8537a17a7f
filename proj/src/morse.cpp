#include "morse/morse.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace morse {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Morse coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Morse coefficient overflow");
  return r;
}

void accumulate(std::map<Cell, std::int64_t>& into, const CellChain& chain, std::int64_t scale) {
  for (const auto& [cell, coefficient] : chain) {
    auto& slot = into[cell];
    slot = checked_add(slot, checked_mul(scale, coefficient));
  }
}

CellChain to_chain(const std::map<Cell, std::int64_t>& m) {
  CellChain out;
  for (const auto& [cell, coefficient] : m) {
    if (coefficient != 0) out.emplace_back(cell, coefficient);
  }
  return out;
}

class TransferEngine {
 public:
  TransferEngine(const TaylorComplex& tc, const Matching& matching, const CellFamily* family)
      : family_(family) {
    for (const auto& e : matching) {
      if (e.source.mask() >= tc.cell_count()) throw Error("matching edge outside the Taylor complex");
      const bool fresh = matched_.insert(e.source.mask()).second && matched_.insert(e.target.mask()).second;
      if (!fresh) throw Error("edge set is not a matching: a cell lies on two edges");
      sources_.insert(e.source.mask());
      source_of_.emplace(e.target.mask(), e.source);
    }
  }

  bool is_critical(Cell c) const {
    return !matched_.count(c.mask()) && (!family_ || family_->contains(c));
  }

  const CellChain& transfer(Cell tau) {
    if (auto it = memo_.find(tau.mask()); it != memo_.end()) return it->second;
    if (family_ && !family_->contains(tau)) {
      throw Error("gradient path leaves the cell family at mask " + std::to_string(tau.mask()));
    }
    CellChain result;
    if (sources_.count(tau.mask())) {
      // matched downwards: no gradient path starts here
    } else if (auto up = source_of_.find(tau.mask()); up != source_of_.end()) {
      if (!active_.insert(tau.mask()).second) {
        throw Error("gradient path revisits a cell: the matching is not acyclic");
      }
      const Cell c = up->second;
      const std::int64_t lead = -incidence_sign(c, tau);
      std::map<Cell, std::int64_t> sum;
      for_each_member(c.mask(), [&](std::size_t g) {
        const Cell facet = c.without(g);
        if (facet == tau) return;
        accumulate(sum, transfer(facet), lead * removal_sign(c, g));
      });
      active_.erase(tau.mask());
      result = to_chain(sum);
    } else {
      result.emplace_back(tau, 1);
    }
    return memo_.emplace(tau.mask(), std::move(result)).first->second;
  }

 private:
  const CellFamily* family_;
  std::unordered_set<Cell::Mask> matched_;
  std::unordered_set<Cell::Mask> sources_;
  std::unordered_map<Cell::Mask, Cell> source_of_;
  std::unordered_map<Cell::Mask, CellChain> memo_;
  std::unordered_set<Cell::Mask> active_;
};

}  // namespace

CellChain transfer(const TaylorComplex& tc, const Matching& matching, Cell tau, const CellFamily* family) {
  TransferEngine engine(tc, matching, family);
  return engine.transfer(tau);
}

MorseComplex morse_differential(const TaylorComplex& tc, const Matching& matching, const CellFamily* family) {
  for (const auto& e : matching) {
    if (e.source.mask() < tc.cell_count() && tc.lcm_class(e.source) != tc.lcm_class(e.target)) {
      throw Error("Morse complex needs a homogeneous matching");
    }
  }
  TransferEngine engine(tc, matching, family);
  const std::size_t n = tc.generator_count();
  MorseComplex cx;
  cx.basis.resize(n + 1);
  cx.differentials.resize(n + 1);
  std::vector<std::unordered_map<Cell::Mask, std::size_t>> index(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (const Cell c : tc.cells_of_cardinality(k)) {
      if (!engine.is_critical(c)) continue;
      index[k].emplace(c.mask(), cx.basis[k].size());
      cx.basis[k].push_back({c.mask(), tc.lcm(c)});
    }
  }
  cx.differentials[0].cols = cx.basis[0].size();
  for (std::size_t k = 1; k <= n; ++k) {
    auto& d = cx.differentials[k];
    d.rows = cx.basis[k - 1].size();
    d.cols = cx.basis[k].size();
    for (std::size_t col = 0; col < cx.basis[k].size(); ++col) {
      const Cell sigma(cx.basis[k][col].cell);
      std::map<Cell, std::int64_t> sum;
      for_each_member(sigma.mask(), [&](std::size_t g) {
        accumulate(sum, engine.transfer(sigma.without(g)), removal_sign(sigma, g));
      });
      std::vector<DifferentialEntry> column;
      for (const auto& [target, coefficient] : sum) {
        if (coefficient == 0) continue;
        column.push_back({index[k - 1].at(target.mask()), col, coefficient, quotient(tc.lcm(sigma), tc.lcm(target))});
      }
      std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
      for (auto& e : column) d.entries.push_back(std::move(e));
    }
  }
  return cx;
}

}  // namespace morse
