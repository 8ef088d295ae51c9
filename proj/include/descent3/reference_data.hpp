#pragma once

#include <array>
#include <vector>

#include "descent3/cubicforms.hpp"

namespace descent3::reference {

/// x^3 + a x^2 + b x + c with its point (X, Y) on Y^2 = X^3 - 432 D, D = -4897363.
/// X = 12 * x_num / x_den, Y = 108 * y_num / y_den as printed, Y sign included.
struct PolynomialRow {
  long a, b, c;
  long x_num, x_den;
  long y_num, y_den;
};

struct SeedRow {
  long m, n, D;
};

inline constexpr long kRankSixDisc = -4897363;
inline constexpr long kRankSixM = -34;
inline constexpr long kRankSixN = 419;

const std::vector<PolynomialRow>& rank_six_polynomials();

/// D < -4 with r3 = 2.
const std::vector<SeedRow>& negative_rank_two_seeds();
/// D > 4 with r3 = 1.
const std::vector<SeedRow>& positive_rank_one_seeds();

inline constexpr long kViolationDisc = 48035713;
inline constexpr long kViolationM = 229;
inline constexpr long kViolationN = 3;

/// G_1 .. G_4 of discriminant 48035713, as printed.
const std::vector<BinaryCubicForm>& violation_forms();

}  // namespace descent3::reference
