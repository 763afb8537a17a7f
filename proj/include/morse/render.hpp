#pragma once

// Plain-text and JSON renderings. Cells list their generators in ascending
// position under the given order, e.g. `{y*z, x*y, w*x}`; JSON encodes a
// cell as the same list of generator strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "morse/homology.hpp"
#include "morse/matching.hpp"
#include "morse/search.hpp"

namespace morse {

inline constexpr int kSchemaVersion = 1;

std::string format_cell(const MonomialIdeal& ideal, Cell c, const TotalOrder& order);
std::string format_order(const MonomialIdeal& ideal, const TotalOrder& order);
std::string format_edge(const MonomialIdeal& ideal, const MatchingEdge& e, const TotalOrder& order);
std::string format_possible_edge(const MonomialIdeal& ideal, const PossibleEdge& e, const TotalOrder& order);
/// Edges sorted by descending source cardinality, then by position mask.
std::vector<MatchingEdge> display_order(const Matching& m, const TotalOrder& order);

/// One edge per line; `{}` for no edges.
std::string render_matching(const MonomialIdeal& ideal, const Matching& m, const TotalOrder& order);
std::string render_possible_edges(const MonomialIdeal& ideal, const std::vector<PossibleEdge>& edges,
                                  const TotalOrder& order);
/// One line per cardinality from n down to 1; an empty group prints `{}`.
std::string render_critical(const MonomialIdeal& ideal, const CriticalCells& cells, const TotalOrder& order);
/// Space-separated, followed by a newline.
std::string render_ranks(const std::vector<std::size_t>& ranks);
/// One `{order, {edges}}` pair per line; `{}` when empty.
std::string render_friendly_list(const MonomialIdeal& ideal, const std::vector<FriendlyOrder>& list);

nlohmann::json cell_json(const MonomialIdeal& ideal, Cell c, const TotalOrder& order);
nlohmann::json edge_json(const MonomialIdeal& ideal, const MatchingEdge& e, const TotalOrder& order);
nlohmann::json possible_edge_json(const MonomialIdeal& ideal, const PossibleEdge& e, const TotalOrder& order);
nlohmann::json matching_json(const MonomialIdeal& ideal, const Matching& m, const TotalOrder& order);
nlohmann::json critical_json(const MonomialIdeal& ideal, const CriticalCells& cells, const TotalOrder& order);
nlohmann::json betti_json(const BettiTable& table, bool multigraded);
nlohmann::json complex_json(const MonomialIdeal& ideal, const ChainComplex& complex, const TotalOrder& order);
nlohmann::json report_json(const MatchingReport& report);

Cell cell_from_json(const MonomialIdeal& ideal, const nlohmann::json& j);
Matching matching_from_json(const MonomialIdeal& ideal, const nlohmann::json& edges);

}  // namespace morse
