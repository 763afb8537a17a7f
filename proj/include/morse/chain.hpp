#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "morse/algebra.hpp"

namespace morse {

class Cell;

/// One nonzero entry of a monomial-weighted differential.
struct DifferentialEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t coefficient = 0;
  Monomial factor;
};

/// Sparse differential, entries sorted by (col, row).
struct DifferentialMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<DifferentialEntry> entries;
};

/// A free chain complex whose basis elements are Taylor cells.
/// basis[i] holds the cells in homological degree i (cardinality i);
/// differentials[i] maps degree i to degree i-1, differentials[0] is empty.
struct ChainComplex {
  struct BasisElement {
    std::uint32_t cell = 0;  // Cell mask
    Monomial lcm;
  };

  std::vector<std::vector<BasisElement>> basis;
  std::vector<DifferentialMatrix> differentials;

  std::size_t top_degree() const { return basis.empty() ? 0 : basis.size() - 1; }
  const DifferentialMatrix& differential(std::size_t degree) const { return differentials.at(degree); }
};

/// True iff every composite of consecutive differentials vanishes, with
/// entries expanded as coefficient * monomial.
bool verify_complex(const ChainComplex& complex);

/// Rank of each free module, degree 0 first.
std::vector<std::size_t> ranks(const ChainComplex& complex);

/// True iff no differential entry has monomial factor 1.
bool is_minimal(const ChainComplex& complex);

}  // namespace morse
