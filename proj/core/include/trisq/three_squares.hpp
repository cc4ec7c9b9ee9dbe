#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "trisq/arith.hpp"

namespace trisq {

/// Thrown by decompose() for numbers of the form 4^s * (8m + 7).
class IneligibleNumberError : public std::domain_error {
 public:
  IneligibleNumberError(u64 n, unsigned pow4, u64 m);
  u64 n() const { return n_; }
  unsigned pow4() const { return pow4_; }
  u64 m() const { return m_; }

 private:
  u64 n_;
  unsigned pow4_;
  u64 m_;
};

struct ThreeSquareDecomp {
  u64 n;
  std::array<u64, 3> roots;  // descending; x^2 + y^2 + z^2 = n
  std::string case_tag;      // residue class + pattern line, or "oracle-fallback"
};

/// False exactly when the 4-adic core of n is 7 mod 8 (n > 0); true for 0.
bool is_eligible(u64 n);

/// Constructive decomposition into at most three squares. Strips the 4-adic
/// part, solves the residue class of the core through the pattern table, maps
/// the indices to roots and scales back. Falls back to direct search (tagged
/// "oracle-fallback") only if no pattern matches, which signals a bug.
ThreeSquareDecomp decompose(u64 n);

/// Ordered triples (x, y, z) of nonnegative integers with x^2+y^2+z^2 = n.
/// Brute-force; serves as the independent oracle for eligibility.
u64 r3_count(u64 n);

/// Multisets {x >= y >= z} with x^2+y^2+z^2 = n; allow_zero = false requires
/// z >= 1 (partitions into three positive squares).
u64 p3_count(u64 n, bool allow_zero);

}  // namespace trisq
