#pragma once

// Exact integer and rational kernel shared by every other module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace descent3 {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);

/// Parses a decimal integer, with optional leading sign. Throws ParseError.
BigInt parse_bigint(std::string_view text);
/// Parses "p" or "p/q".
BigRat parse_bigrat(std::string_view text);

enum class Tri { No, Yes, Unknown };

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  // Total number of rho iterations allowed across all cofactors.
  std::uint64_t rho_budget = 5'000'000;
};

/// Prime factorization of |n| as (prime, exponent) pairs in ascending order.
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

/// Trial division to opts.trial_bound, then Brent's rho on the cofactor.
/// Returns nullopt when the rho budget runs out. |n| = 1 yields {}.
std::optional<Factorization> factorize(const BigInt& n, const FactorOptions& opts = {});

/// Positive divisors of |n|, ascending. Throws FactorizationBudget.
std::vector<BigInt> divisors(const BigInt& n, const FactorOptions& opts = {});

/// Yes / No, or Unknown when the factorization effort is exhausted.
Tri squarefree_status(const BigInt& n, const FactorOptions& opts = {});

/// Throws ZeroInput for n = 0 and FactorizationBudget when undecided.
bool is_squarefree(const BigInt& n, const FactorOptions& opts = {});

std::optional<BigInt> cube_root_exact(const BigInt& n);
std::optional<BigInt> sqrt_exact(const BigInt& n);

bool is_probable_prime(const BigInt& n);

/// y^((l-1)/3) == 1 (mod l) for a prime l = 1 (mod 3) not dividing y.
bool is_cubic_residue(const BigInt& y, const BigInt& l);

/// Largest e with p^e | n (n != 0, p > 1).
unsigned valuation(const BigInt& n, const BigInt& p);

BigInt floor_div(const BigInt& a, const BigInt& b);

/// Rational roots of sum coeffs[i] x^i (ascending powers), each listed once,
/// ascending. Exact: candidates p/q come from divisors of the constant and
/// leading coefficients after denominators are cleared.
std::vector<BigRat> rational_roots(std::span<const BigRat> coeffs);

/// Integer roots of z^3 + c2 z^2 + c1 z + c0, ascending, without factoring.
/// The real line is split at the critical points and each monotone piece is
/// bisected exactly.
std::vector<BigInt> monic_cubic_integer_roots(const BigInt& c2, const BigInt& c1,
                                              const BigInt& c0);

}  // namespace descent3
