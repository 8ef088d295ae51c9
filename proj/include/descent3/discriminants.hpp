#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "descent3/arith.hpp"

namespace descent3 {

/// A validated triple with D = 4m^3 - 27n^2 squarefree and gcd(2m, 3n) = 1.
struct DiscriminantSeed {
  BigInt m;
  BigInt n;
  BigInt D;

  bool operator==(const DiscriminantSeed&) const = default;
};

BigInt family_disc(const BigInt& m, const BigInt& n);

/// Checks, in order: degenerate D in {-4, -3, 0, 1}, gcd(2m, 3n) = 1, squarefreeness.
/// Throws DegenerateDiscriminant, GcdViolation, NotSquarefree or FactorizationBudget.
DiscriminantSeed make_seed(const BigInt& m, const BigInt& n, const FactorOptions& opts = {});

/// True when no divisor h of n (of either sign) satisfies m*h = n + h^3.
/// Throws GcdViolation unless gcd(m, 3n) = 1.
bool honda_divisible_by_3(const BigInt& m, const BigInt& n);

enum class SignFilter { Any, Negative, Positive };

struct ScanSummary {
  std::uint64_t examined = 0;
  std::uint64_t emitted = 0;
  std::uint64_t gcd_violation = 0;
  std::uint64_t not_squarefree = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t sign_filtered = 0;
  std::uint64_t undecided = 0;
};

/// Visits every valid seed with m in [m_lo, m_hi], n in [n_lo, n_hi],
/// m outer ascending and n inner ascending.
ScanSummary scan(const BigInt& m_lo, const BigInt& m_hi, const BigInt& n_lo, const BigInt& n_hi,
                 SignFilter filter, const std::function<void(const DiscriminantSeed&)>& emit,
                 const FactorOptions& opts = {});

std::vector<DiscriminantSeed> scan_collect(const BigInt& m_lo, const BigInt& m_hi,
                                           const BigInt& n_lo, const BigInt& n_hi,
                                           SignFilter filter = SignFilter::Any,
                                           ScanSummary* summary = nullptr);

/// Smallest m (then n >= 0) with 4m^3 - 27n^2 = D, scanning at most max_steps
/// values of m upward from the least admissible one.
std::optional<DiscriminantSeed> seed_from_disc(const BigInt& D, std::uint64_t max_steps = 2'000'000);

}  // namespace descent3
