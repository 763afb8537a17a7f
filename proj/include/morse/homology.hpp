#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "morse/chain.hpp"
#include "morse/taylor.hpp"

namespace morse {

using BigInt = boost::multiprecision::cpp_int;
using IntegerMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using BigIntegerMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank over the rationals of an integer matrix, by fraction-free (Bareiss)
/// elimination with arbitrary-precision intermediates.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  BigIntegerMatrix m = input.template cast<BigInt>();
  const Eigen::Index rows = m.rows(), cols = m.cols();
  BigInt previous = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const BigInt p = m(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const BigInt lead = m(i, col);
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = (p * m(i, j) - lead * m(rank, j)) / previous;
      }
      m(i, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

/// Betti numbers of R/I. totals[i] counts degree-i generators of the
/// minimal resolution (i = 0..n); multigraded splits them by multidegree.
struct BettiTable {
  struct Multidegree {
    Monomial degree;
    std::vector<std::size_t> counts;
  };

  std::vector<std::size_t> totals;
  std::vector<Multidegree> multigraded;  // sorted by degree, nonzero only

  /// totals without trailing zeros.
  std::vector<std::size_t> trimmed_totals() const;
};

/// Betti numbers from the Taylor complex tensored with the rationals. Only
/// cells with equal lcm are connected after tensoring, so the work splits
/// into one small elimination per lcm class.
BettiTable betti_numbers(const TaylorComplex& tc);

/// Homology dimensions of `complex` tensored with the rationals (entries
/// with monomial factor 1 kept, all others set to zero).
std::vector<std::size_t> homology_ranks(const ChainComplex& complex);

/// Drops trailing zeros.
std::vector<std::size_t> trim_zeros(std::vector<std::size_t> v);

}  // namespace morse
