#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "descent3/arith.hpp"

namespace descent3::detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr i128 kI128Max = static_cast<i128>(~u128(0) >> 1);

inline bool fits_i64(const BigInt& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

inline std::int64_t to_i64(const BigInt& n) { return mpz_get_si(n.get_mpz_t()); }

inline BigInt from_i128(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? u128(0) - u128(v) : u128(v);
  BigInt hi(static_cast<unsigned long>(mag >> 64));
  BigInt out = hi;
  out <<= 64;
  out += static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull);
  return neg ? BigInt(-out) : out;
}

/// Floor square root of a nonnegative 128-bit value.
inline u128 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::optional<u128> sqrt_exact_u128(u128 n) {
  // Squares mod 64 form a set of 12 residues; cheap rejection before the root.
  static constexpr std::uint64_t kSq64 = 0x0202021202030213ull;
  if (!((kSq64 >> static_cast<unsigned>(n & 63)) & 1)) return std::nullopt;
  u128 r = isqrt_u128(n);
  if (r * r != n) return std::nullopt;
  return r;
}

inline i128 icbrt_i128(i128 n) {
  bool neg = n < 0;
  u128 m = neg ? u128(0) - u128(n) : u128(n);
  u128 r = static_cast<u128>(std::cbrt(static_cast<long double>(m)));
  while (r > 0 && r * r * r > m) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= m) ++r;
  return neg ? -static_cast<i128>(r) : static_cast<i128>(r);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace descent3::detail
