#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "morse/chain.hpp"
#include "morse/matching.hpp"

namespace morse {

/// Formal integer combination of cells, sorted by cell mask, no zero terms.
using CellChain = std::vector<std::pair<Cell, std::int64_t>>;

/// The Morse complex of a homogeneous acyclic matching. Basis elements are
/// the critical cells; degree 0 holds the empty cell.
using MorseComplex = ChainComplex;

/// Sum over gradient paths from `tau` to critical cells of the same
/// cardinality, weighted by path sign.
///
/// A critical cell maps to itself. A cell matched downwards (a matching
/// source) maps to zero. A cell matched upwards to `c` maps to
/// -[c:tau] * sum over the other facets t of c of [c:t] * transfer(t).
///
/// Throws when `matching` is not vertex-disjoint or when a gradient path
/// revisits a cell (the matching is not acyclic).
CellChain transfer(const TaylorComplex& tc, const Matching& matching, Cell tau,
                   const CellFamily* family = nullptr);

/// Morse differential: for a critical cell s of cardinality i,
/// d(s) = sum over facets f of [s:f] * transfer(f), each critical target t
/// weighted by lcm(s)/lcm(t). Zero coefficients are dropped.
///
/// With a family (a set of cells closed under taking faces, e.g. the
/// Lyubeznik-critical cells), the complex is the Morse complex of the
/// matching on that subcomplex.
MorseComplex morse_differential(const TaylorComplex& tc, const Matching& matching,
                                const CellFamily* family = nullptr);

}  // namespace morse
