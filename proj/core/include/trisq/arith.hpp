#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace trisq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Inputs to the public entry points are capped so that every intermediate
// product stays inside checked 64-bit arithmetic.
inline constexpr u64 kMaxInput = u64{1} << 62;

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);

// Exact integer square root (floor).
u64 isqrt(u64 n);

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime(u64 n);

/// n = 2^order * odd_part with odd_part odd.
struct TwoAdicSplit {
  unsigned order;
  u64 odd_part;
};

/// n = 4^exponent * core with 4 not dividing core.
struct FourAdicSplit {
  unsigned exponent;
  u64 core;
};

TwoAdicSplit two_adic_split(u64 n);
FourAdicSplit four_adic_split(u64 n);
u64 odd_part(u64 n);

struct PrimePower {
  u64 prime;
  unsigned multiplicity;
};

/// Factorization of a positive odd integer; primes strictly increasing.
struct OddFactorization {
  u64 base;
  std::vector<PrimePower> primes;
};

// Trial division by odd primes up to sqrt(m). Adequate at the coefficient
// scales this library works with; not meant for cryptographic-size inputs.
OddFactorization factor_odd(u64 m);

/// Legendre symbol (a/p) for an odd prime p; a may be negative.
/// Returns 0 iff p | a, 1 iff a is a nonzero square mod p, -1 otherwise.
int legendre_symbol(i64 a, u64 p);

/// The relation "a R m": (a/p) = 1 for every prime divisor p of the odd
/// positive integer m. Vacuously true for m = 1. Rejects a = 0 and even m.
bool residue_rel(i64 a, u64 m);

/// d_r(n): number of positive divisors of n congruent to r mod 4, r in {1,3}.
u64 divisor_count_mod4(u64 n, unsigned r);

/// Index k with k^2 = n, when one exists.
std::optional<u64> is_square(u64 n);
/// Index k with k(k+1)/2 = n, when one exists.
std::optional<u64> is_triangular(u64 n);

u64 square(u64 k);
u64 triangular(u64 k);

}  // namespace trisq
