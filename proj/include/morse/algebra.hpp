#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "morse/error.hpp"

namespace morse {

/// Ordered list of distinct variable names shared by a family of monomials.
class VariableContext {
 public:
  VariableContext() = default;
  explicit VariableContext(std::vector<std::string> names);

  /// Context with variables `prefix1 .. prefixN`.
  static VariableContext numbered(std::size_t count, std::string_view prefix = "x");

  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const;
  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_valid_variable_name(std::string_view name);

/// A monomial x^a as an exponent vector over a VariableContext.
/// Square-free monomials over at most 64 variables also carry their support
/// as a bitmask, which gives constant-time lcm and divisibility.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  static constexpr Exponent kMaxExponent = 2147483647u;

  Monomial() = default;
  /// The monomial 1.
  explicit Monomial(VariableContext context);
  Monomial(VariableContext context, std::vector<Exponent> exponents);

  static Monomial from_support(VariableContext context, std::uint64_t support);

  const VariableContext& context() const { return context_; }
  std::size_t variable_count() const { return exponents_.size(); }
  Exponent exponent(std::size_t i) const { return exponents_[i]; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

  bool is_one() const;
  bool is_squarefree() const { return squarefree_; }
  /// Support bitmask; meaningful only when is_squarefree().
  std::uint64_t support() const { return support_; }
  std::uint64_t degree() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_ && a.context_ == b.context_;
  }
  /// Graded lexicographic order, for deterministic containers only.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  void classify();

  VariableContext context_;
  std::vector<Exponent> exponents_;
  std::uint64_t support_ = 0;
  bool squarefree_ = true;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b. Requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);

/// Canonical text: factors in context order, `^k` only when k > 1,
/// `*` separated; the monomial 1 prints as `1`.
std::string to_string(const Monomial& m);
/// Parses a `*`-joined product of `var` or `var^k` factors, or `1`.
Monomial parse_monomial(const VariableContext& context, std::string_view text);

struct MinimizedGenerators {
  std::vector<Monomial> generators;
  bool changed = false;
};

/// Drops duplicates and any monomial divisible by another one, keeping the
/// relative order of survivors.
MinimizedGenerators minimize_generators(const std::vector<Monomial>& monomials);

/// A monomial ideal given by its minimal generators. The sequence order is
/// the total order on generators: position 0 is the smallest.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Throws unless `generators` is already a minimal generating set.
  MonomialIdeal(VariableContext context, std::vector<Monomial> generators);

  const VariableContext& context() const { return context_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const Monomial& generator(std::size_t i) const { return generators_[i]; }
  const std::vector<Monomial>& generators() const { return generators_; }

  /// Index of the generator printing as `text`, or size() when absent.
  std::size_t find(std::string_view text) const;
  /// Same ideal with generators listed as generators()[sequence[0]], ...
  MonomialIdeal reordered(const std::vector<std::size_t>& sequence) const;

 private:
  VariableContext context_;
  std::vector<Monomial> generators_;
};

/// Reads the ideal file format. Minimization is applied when needed and
/// reported through `warnings`.
MonomialIdeal parse_ideal(std::string_view text,
                          std::vector<std::string>* warnings = nullptr);
/// Writes the canonical ideal file.
std::string format_ideal(const MonomialIdeal& ideal);

/// Parses a comma-separated, smallest-first list of generator names into a
/// permutation of the ideal's generator indices.
std::vector<std::size_t> parse_order(const MonomialIdeal& ideal, std::string_view text);

}  // namespace morse
