#pragma once

#include <span>
#include <vector>

#include "trisq/arith.hpp"

namespace trisq::catalog {

struct CoeffTriple {
  u64 a, b, c;
};

/// The complete list of (a, b, c), a <= b, for which a*s + b*s + c*t is
/// universal.
std::span<const CoeffTriple> universal_sst_vectors();

/// The complete list of (a, b, c), b >= c, for which a*s + b*t + c*t is
/// universal.
std::span<const CoeffTriple> universal_stt_vectors();

struct ConjecturedExceptions {
  const char* form;              // form text
  std::vector<u64> exceptions;   // conjectured complete exception set
};

/// Conjectured exception sets for the catalogued almost-universal ternary
/// forms, verbatim as published.
std::span<const ConjecturedExceptions> conjectured_exception_sets();

/// Ternary forms catalogued as almost universal but not universal: the
/// coefficient-sum-10 lists plus each published equivalent spelling, verbatim.
std::span<const char* const> almost_universal_forms();

}  // namespace trisq::catalog
