#include "morse/render.hpp"

#include <algorithm>
#include <sstream>

namespace morse {

using nlohmann::json;

std::string format_cell(const MonomialIdeal& ideal, Cell c, const TotalOrder& order) {
  std::string out = "{";
  bool first = true;
  for (auto g : order.ordered_members(c)) {
    if (!first) out += ", ";
    out += to_string(ideal.generator(g));
    first = false;
  }
  return out + "}";
}

std::string format_order(const MonomialIdeal& ideal, const TotalOrder& order) {
  return format_cell(ideal, Cell::full(ideal.size()), order);
}

std::string format_edge(const MonomialIdeal& ideal, const MatchingEdge& e, const TotalOrder& order) {
  return "(" + format_cell(ideal, e.source, order) + ", " + format_cell(ideal, e.target, order) + ")";
}

std::string format_possible_edge(const MonomialIdeal& ideal, const PossibleEdge& e, const TotalOrder& order) {
  return "(" + std::to_string(e.sbridge_position) + ", " + format_cell(ideal, e.source, order) + ", " +
         format_cell(ideal, e.target, order) + ")";
}

std::vector<MatchingEdge> display_order(const Matching& m, const TotalOrder& order) {
  std::vector<MatchingEdge> edges(m.begin(), m.end());
  std::sort(edges.begin(), edges.end(), [&](const MatchingEdge& a, const MatchingEdge& b) {
    const auto ca = a.source.cardinality(), cb = b.source.cardinality();
    if (ca != cb) return ca > cb;
    return order.to_positional(a.source) < order.to_positional(b.source);
  });
  return edges;
}

std::string render_matching(const MonomialIdeal& ideal, const Matching& m, const TotalOrder& order) {
  if (m.empty()) return "{}\n";
  std::string out;
  for (const auto& e : display_order(m, order)) out += format_edge(ideal, e, order) + "\n";
  return out;
}

std::string render_possible_edges(const MonomialIdeal& ideal, const std::vector<PossibleEdge>& edges,
                                  const TotalOrder& order) {
  if (edges.empty()) return "{}\n";
  std::string out;
  for (const auto& e : edges) out += format_possible_edge(ideal, e, order) + "\n";
  return out;
}

namespace {

std::vector<Cell> positional_sorted(std::vector<Cell> cells, const TotalOrder& order) {
  std::sort(cells.begin(), cells.end(),
            [&](Cell a, Cell b) { return order.to_positional(a) < order.to_positional(b); });
  return cells;
}

}  // namespace

std::string render_critical(const MonomialIdeal& ideal, const CriticalCells& cells, const TotalOrder& order) {
  std::string out;
  for (const auto& group : cells.groups) {
    out += "{";
    bool first = true;
    for (const Cell c : positional_sorted(group, order)) {
      if (!first) out += ", ";
      out += format_cell(ideal, c, order);
      first = false;
    }
    out += "}\n";
  }
  return out;
}

std::string render_ranks(const std::vector<std::size_t>& ranks) {
  std::string out;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ranks[i]);
  }
  return out + "\n";
}

std::string render_friendly_list(const MonomialIdeal& ideal, const std::vector<FriendlyOrder>& list) {
  if (list.empty()) return "{}\n";
  std::string out;
  for (const auto& f : list) {
    out += "{" + format_order(ideal, f.order) + ", {";
    bool first = true;
    for (const auto& e : display_order(f.matching, f.order)) {
      if (!first) out += ", ";
      out += format_edge(ideal, e, f.order);
      first = false;
    }
    out += "}}\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

json cell_json(const MonomialIdeal& ideal, Cell c, const TotalOrder& order) {
  json out = json::array();
  for (auto g : order.ordered_members(c)) out.push_back(to_string(ideal.generator(g)));
  return out;
}

json edge_json(const MonomialIdeal& ideal, const MatchingEdge& e, const TotalOrder& order) {
  return {{"source", cell_json(ideal, e.source, order)}, {"target", cell_json(ideal, e.target, order)}};
}

json possible_edge_json(const MonomialIdeal& ideal, const PossibleEdge& e, const TotalOrder& order) {
  return {{"sbridge_position", e.sbridge_position},
          {"sbridge", to_string(ideal.generator(e.sbridge))},
          {"source", cell_json(ideal, e.source, order)},
          {"target", cell_json(ideal, e.target, order)}};
}

json matching_json(const MonomialIdeal& ideal, const Matching& m, const TotalOrder& order) {
  json out = json::array();
  for (const auto& e : display_order(m, order)) out.push_back(edge_json(ideal, e, order));
  return out;
}

json critical_json(const MonomialIdeal& ideal, const CriticalCells& cells, const TotalOrder& order) {
  json out = json::array();
  for (const auto& group : cells.groups) {
    json g = json::array();
    for (const Cell c : positional_sorted(group, order)) g.push_back(cell_json(ideal, c, order));
    out.push_back(std::move(g));
  }
  return out;
}

json betti_json(const BettiTable& table, bool multigraded) {
  json out = {{"schema_version", kSchemaVersion}, {"totals", table.totals}};
  if (multigraded) {
    json m = json::object();
    for (const auto& d : table.multigraded) m[to_string(d.degree)] = d.counts;
    out["multigraded"] = std::move(m);
  }
  return out;
}

json complex_json(const MonomialIdeal& ideal, const ChainComplex& complex, const TotalOrder& order) {
  json basis = json::array();
  for (const auto& degree : complex.basis) {
    json cells = json::array();
    for (const auto& b : degree) cells.push_back(cell_json(ideal, Cell(b.cell), order));
    basis.push_back(std::move(cells));
  }
  json diffs = json::array();
  for (std::size_t i = 1; i < complex.differentials.size(); ++i) {
    const auto& d = complex.differentials[i];
    json entries = json::array();
    for (const auto& e : d.entries) entries.push_back({e.row, e.col, e.coefficient, to_string(e.factor)});
    diffs.push_back({{"degree", i}, {"rows", d.rows}, {"cols", d.cols}, {"entries", std::move(entries)}});
  }
  return {{"basis", std::move(basis)}, {"differentials", std::move(diffs)}};
}

json report_json(const MatchingReport& report) {
  return {{"is_matching", report.is_matching},
          {"is_homogeneous", report.is_homogeneous},
          {"is_acyclic", report.is_acyclic}};
}

Cell cell_from_json(const MonomialIdeal& ideal, const json& j) {
  if (!j.is_array()) throw Error("cell must be a JSON array of generator strings");
  Cell c;
  for (const auto& item : j) {
    const auto g = ideal.find(item.get<std::string>());
    if (g == ideal.size()) throw Error("unknown generator '" + item.get<std::string>() + "' in cell");
    c = c.with(g);
  }
  return c;
}

Matching matching_from_json(const MonomialIdeal& ideal, const json& edges) {
  if (!edges.is_array()) throw Error("matching must be a JSON array of edges");
  std::vector<MatchingEdge> out;
  for (const auto& e : edges) {
    out.emplace_back(cell_from_json(ideal, e.at("source")), cell_from_json(ideal, e.at("target")));
  }
  return Matching(std::move(out));
}

}  // namespace morse
