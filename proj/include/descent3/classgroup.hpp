#pragma once

#include <cstdint>
#include <vector>

#include "descent3/arith.hpp"

namespace descent3 {

/// Positive definite a x^2 + b x y + c y^2 of discriminant b^2 - 4ac < 0.
struct ReducedForm {
  std::int64_t a, b, c;
  bool operator==(const ReducedForm&) const = default;
};

struct ClassGroupInfo {
  std::vector<ReducedForm> forms;         // all reduced forms, the class group elements
  std::uint64_t h = 0;
  std::vector<std::uint64_t> invariants;  // d_1 | d_2 | ... reversed: largest first, each > 1
  int three_rank = 0;
};

/// Class group of the imaginary quadratic order of discriminant D via reduced forms and
/// Gauss composition. Throws PositiveDiscriminant for D >= 0, ExcludedDiscriminant for
/// D in {-3, -4}, InvalidArgument when D is not 0 or 1 mod 4 or |D| > 10^12.
ClassGroupInfo class_group_imaginary(const BigInt& D);

/// Composition followed by reduction (exposed for tests).
ReducedForm compose(const ReducedForm& f, const ReducedForm& g, std::int64_t D);
ReducedForm reduce_form(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace descent3
