#include "morse/chain.hpp"

#include <map>
#include <utility>

namespace morse {

namespace {

std::vector<std::size_t> column_offsets(const DifferentialMatrix& d) {
  std::vector<std::size_t> offset(d.cols + 1, 0);
  for (const auto& e : d.entries) ++offset[e.col + 1];
  for (std::size_t c = 0; c < d.cols; ++c) offset[c + 1] += offset[c];
  return offset;
}

}  // namespace

bool verify_complex(const ChainComplex& complex) {
  const std::size_t top = complex.top_degree();
  if (complex.differentials.size() != complex.basis.size()) return false;
  for (std::size_t i = 1; i <= top && !complex.basis.empty(); ++i) {
    const auto& d = complex.differentials[i];
    if (d.rows != complex.basis[i - 1].size() || d.cols != complex.basis[i].size()) return false;
  }
  for (std::size_t i = 2; i <= top; ++i) {
    const auto& upper = complex.differentials[i];
    const auto& lower = complex.differentials[i - 1];
    const auto lower_offset = column_offsets(lower);
    const auto upper_offset = column_offsets(upper);
    for (std::size_t col = 0; col < upper.cols; ++col) {
      std::map<std::pair<std::size_t, Monomial>, std::int64_t> sum;
      for (auto k = upper_offset[col]; k < upper_offset[col + 1]; ++k) {
        const auto& a = upper.entries[k];
        for (auto l = lower_offset[a.row]; l < lower_offset[a.row + 1]; ++l) {
          const auto& b = lower.entries[l];
          sum[{b.row, a.factor * b.factor}] += a.coefficient * b.coefficient;
        }
      }
      for (const auto& [key, value] : sum) {
        if (value != 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> ranks(const ChainComplex& complex) {
  std::vector<std::size_t> out;
  out.reserve(complex.basis.size());
  for (const auto& b : complex.basis) out.push_back(b.size());
  return out;
}

bool is_minimal(const ChainComplex& complex) {
  for (const auto& d : complex.differentials) {
    for (const auto& e : d.entries) {
      if (e.factor.is_one()) return false;
    }
  }
  return true;
}

}  // namespace morse
