#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trisq/arith.hpp"

namespace trisq {

// Forms are limited to 8 variables.
inline constexpr std::size_t kMaxArity = 8;

enum class TermKind { Square, Triangular };

/// One coefficient-weighted generator term: coeff * s_x or coeff * t_x.
struct MixedTerm {
  u64 coeff;  // >= 1
  TermKind kind;
};

enum class IndexParity { Any, Even, Odd };

// Closed catalog of named pairwise predicates.
enum class PairPredicate {
  // x != y (mod 2), or x = y > 0 -- the side condition on the two square
  // variables in the "one triangular plus two squares" representation.
  DistinctParityOrEqualPositive,
};

/// index[self] >= index[partner] + min_gap. Carries the ordering side
/// conditions of the residue-class decomposition patterns (y >= z, y >= z+1).
struct OrderBond {
  std::size_t partner;
  u64 min_gap = 0;
};

struct VariableConstraint {
  u64 min_index = 0;
  IndexParity parity = IndexParity::Any;
  std::optional<std::pair<PairPredicate, std::size_t>> predicate;
  std::optional<OrderBond> order;

  // min_index and parity only; cross-variable conditions are checked on
  // full assignments.
  bool admits(u64 index) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A sum of square/triangular terms with one constraint slot per term.
struct MixedForm {
  std::vector<MixedTerm> terms;
  std::vector<VariableConstraint> constraints;  // same length as terms

  std::size_t arity() const { return terms.size(); }
  std::string kind_pattern() const;  // e.g. "sst"
  u64 coeff_gcd() const;
  bool has_cross_variable_constraints() const;
};

/// Parses "2s+3t"-style text: '+'-separated terms, each "[coeff]s" or
/// "[coeff]t", omitted coeff meaning 1, whitespace ignored. Terms keep their
/// written order. Throws ParseError with the offending position.
MixedForm parse_form(std::string_view text);

std::string render_form(const MixedForm& form);

/// Square terms before triangular ones, coefficients ascending within a
/// kind; constraints travel with their terms and slot references are
/// remapped. Idempotent.
MixedForm canonicalize(MixedForm form);

struct Representation {
  std::vector<u64> indices;  // one per term
  u64 value;
};

u64 generator_value(TermKind kind, u64 index);

/// Largest index whose generator value is <= bound.
u64 max_generator_index(TermKind kind, u64 bound);

u64 evaluate(const MixedForm& form, const std::vector<u64>& indices);
bool satisfies_constraints(const MixedForm& form, const std::vector<u64>& indices);

}  // namespace trisq
