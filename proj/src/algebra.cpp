#include "morse/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace morse {

namespace {

const std::vector<std::string> kNoNames;

void require_same_context(const Monomial& a, const Monomial& b) {
  if (!(a.context() == b.context())) {
    throw Error("monomials belong to different variable contexts");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VariableContext

bool is_valid_variable_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

VariableContext::VariableContext(std::vector<std::string> names) {
  if (names.empty()) throw Error("a variable context needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_valid_variable_name(n)) throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VariableContext VariableContext::numbered(std::size_t count, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VariableContext(std::move(names));
}

const std::vector<std::string>& VariableContext::names() const {
  return names_ ? *names_ : kNoNames;
}

std::size_t VariableContext::index_of(std::string_view name) const {
  const auto& ns = names();
  const auto it = std::find(ns.begin(), ns.end(), name);
  return static_cast<std::size_t>(it - ns.begin());
}

bool operator==(const VariableContext& a, const VariableContext& b) {
  return a.names_ == b.names_ || a.names() == b.names();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VariableContext context)
    : context_(std::move(context)), exponents_(context_.size(), 0) {
  classify();
}

Monomial::Monomial(VariableContext context, std::vector<Exponent> exponents)
    : context_(std::move(context)), exponents_(std::move(exponents)) {
  if (exponents_.size() != context_.size()) {
    throw Error("exponent vector length does not match the variable context");
  }
  for (auto e : exponents_) {
    if (e > kMaxExponent) throw Error("exponent exceeds 2^31-1");
  }
  classify();
}

Monomial Monomial::from_support(VariableContext context, std::uint64_t support) {
  std::vector<Exponent> e(context.size(), 0);
  for (std::size_t i = 0; i < e.size() && i < 64; ++i) e[i] = (support >> i) & 1u;
  return Monomial(std::move(context), std::move(e));
}

void Monomial::classify() {
  squarefree_ = exponents_.size() <= 64;
  support_ = 0;
  for (std::size_t i = 0; i < exponents_.size() && squarefree_; ++i) {
    if (exponents_[i] > 1) squarefree_ = false;
    else if (exponents_[i] == 1) support_ |= std::uint64_t{1} << i;
  }
  if (!squarefree_) support_ = 0;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : exponents_) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents_.begin(), b.exponents_.end(),
                                      a.exponents_.begin(), a.exponents_.end());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_context(a, b);
  if (a.is_squarefree() && b.is_squarefree()) {
    return Monomial::from_support(a.context(), a.support() | b.support());
  }
  std::vector<Monomial::Exponent> e(a.variable_count());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(a.context(), std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_context(a, b);
  if (a.is_squarefree() && b.is_squarefree()) return (a.support() & ~b.support()) == 0;
  for (std::size_t i = 0; i < a.variable_count(); ++i) {
    if (a.exponent(i) > b.exponent(i)) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_context(a, b);
  std::vector<Monomial::Exponent> e(a.variable_count());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t s = std::uint64_t{a.exponent(i)} + b.exponent(i);
    if (s > Monomial::kMaxExponent) throw Error("exponent overflow in monomial product");
    e[i] = static_cast<Monomial::Exponent>(s);
  }
  return Monomial(a.context(), std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw Error(to_string(b) + " does not divide " + to_string(a));
  std::vector<Monomial::Exponent> e(a.variable_count());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponent(i) - b.exponent(i);
  return Monomial(a.context(), std::move(e));
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.variable_count(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += m.context().name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const VariableContext& context, std::string_view text) {
  if (text == "1") return Monomial(context);
  std::vector<Monomial::Exponent> e(context.size(), 0);
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    const auto factor = text.substr(start, star == std::string_view::npos ? text.npos : star - start);
    if (factor.empty()) throw Error("malformed monomial '" + std::string(text) + "'");
    const auto caret = factor.find('^');
    const auto name = factor.substr(0, caret);
    const auto var = context.index_of(name);
    if (var == context.size()) {
      throw Error("unknown variable '" + std::string(name) + "' in '" + std::string(text) + "'");
    }
    std::uint64_t power = 1;
    if (caret != std::string_view::npos) {
      const auto digits = factor.substr(caret + 1);
      const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (digits.empty() || res.ec != std::errc{} || res.ptr != digits.data() + digits.size() ||
          power < 1) {
        throw Error("malformed power '" + std::string(factor) + "'");
      }
    }
    const std::uint64_t total = std::uint64_t{e[var]} + power;
    if (total > Monomial::kMaxExponent) throw Error("exponent exceeds 2^31-1 in '" + std::string(text) + "'");
    e[var] = static_cast<Monomial::Exponent>(total);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return Monomial(context, std::move(e));
}

// ---------------------------------------------------------------------------
// Ideals

MinimizedGenerators minimize_generators(const std::vector<Monomial>& monomials) {
  MinimizedGenerators out;
  for (const auto& m : monomials) {
    if (m.is_one()) throw Error("the monomial 1 generates the unit ideal");
  }
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < monomials.size() && keep; ++j) {
      if (i == j || !divides(monomials[j], monomials[i])) continue;
      // Equal monomials: the first occurrence survives.
      if (!(monomials[j] == monomials[i]) || j < i) keep = false;
    }
    if (keep) out.generators.push_back(monomials[i]);
  }
  out.changed = out.generators.size() != monomials.size();
  return out;
}

MonomialIdeal::MonomialIdeal(VariableContext context, std::vector<Monomial> generators)
    : context_(std::move(context)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!(g.context() == context_)) throw Error("generator over a different variable context");
  }
  if (minimize_generators(generators_).changed) {
    throw Error("generators are not a minimal generating set");
  }
}

std::size_t MonomialIdeal::find(std::string_view text) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (to_string(generators_[i]) == text) return i;
  }
  return generators_.size();
}

MonomialIdeal MonomialIdeal::reordered(const std::vector<std::size_t>& sequence) const {
  std::vector<Monomial> gens;
  gens.reserve(sequence.size());
  for (auto i : sequence) gens.push_back(generators_.at(i));
  return MonomialIdeal(context_, std::move(gens));
}

MonomialIdeal parse_ideal(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<VariableContext> context;
  bool in_gens = false;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (line.starts_with("vars:")) {
      if (context) throw Error("duplicate 'vars:' line" + where);
      std::vector<std::string> names;
      for (auto tok : split_whitespace(line.substr(5))) names.emplace_back(tok);
      try {
        context = VariableContext(std::move(names));
      } catch (const Error& e) {
        throw Error(e.what() + where);
      }
      continue;
    }
    std::string_view body = line;
    if (line.starts_with("gens:")) {
      if (!context) throw Error("'gens:' before 'vars:'" + where);
      if (in_gens) throw Error("duplicate 'gens:' line" + where);
      in_gens = true;
      body = line.substr(5);
    } else if (!in_gens) {
      throw Error("expected 'vars:' or 'gens:'" + where);
    }
    for (auto tok : split_whitespace(body)) {
      try {
        gens.push_back(parse_monomial(*context, tok));
      } catch (const Error& e) {
        throw Error(e.what() + where);
      }
    }
  }
  if (!context) throw Error("missing 'vars:' line");
  if (!in_gens) throw Error("missing 'gens:' line");
  auto minimized = minimize_generators(gens);
  if (minimized.changed && warnings) {
    warnings->push_back("generators were not minimal; removed " +
                        std::to_string(gens.size() - minimized.generators.size()) +
                        " redundant generator(s)");
  }
  return MonomialIdeal(*context, std::move(minimized.generators));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& n : ideal.context().names()) out << ' ' << n;
  out << "\ngens:";
  for (const auto& g : ideal.generators()) out << ' ' << to_string(g);
  out << '\n';
  return out.str();
}

std::vector<std::size_t> parse_order(const MonomialIdeal& ideal, std::string_view text) {
  std::vector<std::size_t> seq;
  std::vector<bool> used(ideal.size(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (item.empty() && comma == std::string_view::npos && seq.empty() && ideal.empty()) break;
    const auto idx = ideal.find(item);
    if (idx == ideal.size()) throw Error("order names unknown generator '" + std::string(item) + "'");
    if (used[idx]) throw Error("order repeats generator '" + std::string(item) + "'");
    used[idx] = true;
    seq.push_back(idx);
  }
  if (seq.size() != ideal.size()) {
    throw Error("order lists " + std::to_string(seq.size()) + " generators, ideal has " +
                std::to_string(ideal.size()));
  }
  return seq;
}

}  // namespace morse
