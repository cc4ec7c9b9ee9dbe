#pragma once

#include <string>
#include <vector>

#include "trisq/solver.hpp"

namespace trisq {

struct BatteryResult {
  std::string suite;
  u64 checked = 0;
  u64 failures = 0;
  std::string first_counterexample;  // empty when clean
  bool passed() const { return failures == 0; }
};

/// The eight residue-class root identities, all indices <= index_bound.
BatteryResult verify_identities(u64 index_bound);

/// is_eligible(n) <=> r3_count(n) > 0 for all n <= bound.
BatteryResult verify_legendre_scan(u64 bound);

/// ewell_t2(n) == count_representations(t+t, n, ordered) for all n <= bound.
BatteryResult verify_ewell(u64 bound);

/// For every coefficient triple with sum <= coeff_sum_bound: the finite
/// triangular check agrees with an exception scan to scan_bound, the set of
/// universal triples is permutation-closed, contains (1,1,1), and contains no
/// triple with minimum > 1.
BatteryResult verify_kane_consistency(u64 coeff_sum_bound, u64 scan_bound,
                                      const ScanOptions& opts = {});

struct ConjecturedSetRow {
  std::string form;
  std::vector<u64> expected;  // restricted to the bound
  std::vector<u64> found;
  bool match;
};

struct ConjecturedSetReport {
  u64 bound;
  std::vector<ConjecturedSetRow> rows;
  bool passed() const;
};

/// Scans every catalogued form and compares against its conjectured
/// exception set restricted to [0, bound].
ConjecturedSetReport verify_conjectured_sets(u64 bound, const ScanOptions& opts = {});

}  // namespace trisq
