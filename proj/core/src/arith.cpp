#include "trisq/arith.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace trisq {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_positive(u64 n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": zero is not accepted");
}

void require_in_range(u64 n, const char* what) {
  if (n > kMaxInput) {
    throw std::out_of_range(std::string(what) + ": input exceeds 2^62");
  }
}

// Jacobi symbol for odd positive n; equals the Legendre symbol when n is an
// odd prime.
int jacobi(u64 a, u64 n) {
  int t = 1;
  a %= n;
  while (a != 0) {
    unsigned z = static_cast<unsigned>(std::countr_zero(a));
    a >>= z;
    if ((z & 1u) != 0 && (n % 8 == 3 || n % 8 == 5)) t = -t;
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

u64 checked_add(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("addition overflows 64 bits");
  }
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("multiplication overflows 64 bits");
  }
  return r;
}

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  auto sq = [](u64 x) { return u128{x} * x; };
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && sq(r) > n) --r;
  while (sq(r + 1) <= n) ++r;
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = static_cast<unsigned>(std::countr_zero(d));
  d >>= s;
  // This witness set is deterministic for the full 64-bit range.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

TwoAdicSplit two_adic_split(u64 n) {
  require_positive(n, "two_adic_split");
  require_in_range(n, "two_adic_split");
  unsigned order = static_cast<unsigned>(std::countr_zero(n));
  return {order, n >> order};
}

FourAdicSplit four_adic_split(u64 n) {
  require_positive(n, "four_adic_split");
  require_in_range(n, "four_adic_split");
  unsigned exponent = static_cast<unsigned>(std::countr_zero(n)) / 2;
  return {exponent, n >> (2 * exponent)};
}

u64 odd_part(u64 n) {
  require_positive(n, "odd_part");
  return n >> std::countr_zero(n);
}

OddFactorization factor_odd(u64 m) {
  require_positive(m, "factor_odd");
  require_in_range(m, "factor_odd");
  if (m % 2 == 0) throw std::invalid_argument("factor_odd: even input");
  OddFactorization f{m, {}};
  u64 rest = m;
  for (u64 d = 3; d * d <= rest; d += 2) {
    if (rest % d != 0) continue;
    unsigned mult = 0;
    while (rest % d == 0) {
      rest /= d;
      ++mult;
    }
    f.primes.push_back({d, mult});
  }
  if (rest > 1) f.primes.push_back({rest, 1});
  return f;
}

int legendre_symbol(i64 a, u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime");
  }
  // Reduce a into [0, p).
  i64 r = a % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  u64 ar = static_cast<u64>(r);
  if (ar == 0) return 0;
  return jacobi(ar, p);
}

bool residue_rel(i64 a, u64 m) {
  if (a == 0) throw std::invalid_argument("residue_rel: a must be nonzero");
  require_positive(m, "residue_rel");
  if (m % 2 == 0) throw std::invalid_argument("residue_rel: modulus must be odd");
  for (const PrimePower& pp : factor_odd(m).primes) {
    if (legendre_symbol(a, pp.prime) != 1) return false;
  }
  return true;  // vacuous for m = 1
}

u64 divisor_count_mod4(u64 n, unsigned r) {
  require_positive(n, "divisor_count_mod4");
  require_in_range(n, "divisor_count_mod4");
  if (r != 1 && r != 3) throw std::invalid_argument("divisor_count_mod4: r must be 1 or 3");
  // Only odd divisors can be 1 or 3 mod 4.
  OddFactorization f = factor_odd(odd_part(n));
  std::vector<u64> divisors{1};
  for (const PrimePower& pp : f.primes) {
    const std::size_t existing = divisors.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.multiplicity; ++e) {
      power = checked_mul(power, pp.prime);
      for (std::size_t i = 0; i < existing; ++i) {
        divisors.push_back(checked_mul(divisors[i], power));
      }
    }
  }
  u64 count = 0;
  for (u64 d : divisors) {
    if (d % 4 == r) ++count;
  }
  return count;
}

std::optional<u64> is_square(u64 n) {
  require_in_range(n, "is_square");
  u64 k = isqrt(n);
  if (k * k == n) return k;
  return std::nullopt;
}

std::optional<u64> is_triangular(u64 n) {
  require_in_range(n, "is_triangular");
  // k(k+1)/2 = n  <=>  8n+1 = (2k+1)^2; estimate and fix up.
  u64 k = static_cast<u64>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (k > 0 && triangular(k) > n) --k;
  while (triangular(k + 1) <= n) ++k;
  if (triangular(k) == n) return k;
  return std::nullopt;
}

u64 square(u64 k) { return checked_mul(k, k); }

u64 triangular(u64 k) {
  if (k % 2 == 0) return checked_mul(k / 2, k + 1);
  return checked_mul(k, (k + 1) / 2);
}

}  // namespace trisq
