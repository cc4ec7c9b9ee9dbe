#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisq/form.hpp"

namespace trisq {

struct TermValue {
  u64 index;
  u64 value;
};

/// Generator values <= bound in ascending order, each with its index.
std::vector<TermValue> term_values(TermKind kind, u64 bound);

/// Coefficient-scaled values of one term <= bound, honoring the slot's
/// min_index/parity constraint.
std::vector<TermValue> term_values(const MixedTerm& term, const VariableConstraint& constraint,
                                   u64 bound);

/// First constraint-satisfying representation of n, or absent. Deterministic:
/// the last variable is enumerated ascending outermost, then the middle ones;
/// the first variable is resolved by a membership test. First hit wins.
std::optional<Representation> find_representation(const MixedForm& form, u64 n);

/// ordered = true counts index tuples over the nonnegative domain;
/// ordered = false counts multisets of term values among terms sharing the
/// same (coefficient, kind).
u64 count_representations(const MixedForm& form, u64 n, bool ordered);

/// d_1(4n+1) - d_3(4n+1); equals the ordered two-triangular representation
/// count of n over nonnegative indices.
u64 ewell_t2(u64 n);

struct ScanOptions {
  u64 bound_ceiling = 100'000'000;  // sieve resource guard
  unsigned threads = 1;             // range partitioning degree
};

struct ExceptionReport {
  MixedForm form;
  u64 bound;
  std::vector<u64> exceptions;  // sorted; all n <= bound with no representation
};

/// Sieves [0, bound]: the partial sums of all-but-the-last term are collected
/// into a bitset, then probed with the last term's values. Rejects forms with
/// cross-variable constraints. Result is independent of opts.threads.
ExceptionReport exception_set(const MixedForm& form, u64 bound, const ScanOptions& opts = {});

enum class UniversalityStatus {
  Universal,
  NotUniversal,
  AlmostUniversal,
  AsymptoticallyUniversal,
  NotAsymptoticallyUniversal,
  Unknown,
};

std::string to_string(UniversalityStatus status);

struct FiniteCheck {
  u64 target;
  std::optional<Representation> witness;
};

struct ResidueCheck {
  std::string relation;  // e.g. "-bc R a'"
  i64 value;             // left argument
  u64 modulus;           // odd part on the right
  bool holds;
};

struct SideCondition {
  std::string condition;
  bool holds;
};

struct UniversalityVerdict {
  UniversalityStatus status = UniversalityStatus::Unknown;
  std::vector<FiniteCheck> finite_checks;
  std::vector<ResidueCheck> residue_checks;
  std::vector<SideCondition> side_conditions;
};

/// Kane's finite criterion for sums of triangular numbers: sum b_i * t_{x_i}
/// is universal iff it represents 1, 2, 4, 5 and 8.
UniversalityVerdict kane_triangular_universal(const std::vector<u64>& coeffs);

/// Kane's odd-square companion: with S = sum b_i, the diagonal form
/// sum b_i * s_{x_i} over odd x_i represents every 8n + S iff it represents
/// S+8, S+16, S+32, S+40 and S+64. Universal here means universal on that
/// residue class.
UniversalityVerdict kane_odd_square_check(const std::vector<u64>& coeffs);

/// Asymptotic-universality criteria for ternary forms with coprime
/// coefficients, pattern ttt, stt or sst after canonicalization:
///   ttt:  -bc R a',  -ac R b',  -ab R c'
///   stt:  -bc R a', -2ac R b', -2ab R c',  and 4 must not divide both b, c
///   sst: -2bc R a', -2ac R b',  -ab R c',  and either 4 does not divide c,
///        or v2(c) = 2 and v2(ab) = 1
/// where (a, b, c) follow canonical term order (squares first).
UniversalityVerdict asymptotically_universal(const MixedForm& form);

}  // namespace trisq
