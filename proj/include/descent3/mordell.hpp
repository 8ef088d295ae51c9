#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "descent3/arith.hpp"
#include "descent3/discriminants.hpp"
#include "descent3/quadfield.hpp"

namespace descent3 {

/// y^2 = x^3 + k.
struct MordellCurve {
  BigInt k;

  static MordellCurve e_d(const BigInt& D) { return {16 * D}; }
  static MordellCurve e_dprime(const BigInt& D) { return {-432 * D}; }
  bool contains(const BigRat& x, const BigRat& y) const { return y * y == x * x * x + k; }
};

/// Infinity or an affine rational point, always tagged with its curve.
class CurvePoint {
 public:
  static CurvePoint infinity(const BigInt& k);
  /// Throws OffCurve unless y^2 = x^3 + k, ZeroInput for k = 0.
  static CurvePoint affine(const BigInt& k, const BigRat& x, const BigRat& y);

  bool is_infinity() const { return inf_; }
  const BigInt& k() const { return k_; }
  const BigRat& x() const { return x_; }
  const BigRat& y() const { return y_; }

  bool operator==(const CurvePoint& o) const {
    return k_ == o.k_ && inf_ == o.inf_ && (inf_ || (x_ == o.x_ && y_ == o.y_));
  }

 private:
  CurvePoint() = default;
  BigInt k_;
  bool inf_ = true;
  BigRat x_;
  BigRat y_;
};

std::string to_string(const CurvePoint& P);

CurvePoint neg(const CurvePoint& P);
/// Throws CurveMismatch.
CurvePoint add(const CurvePoint& P, const CurvePoint& Q);
CurvePoint sub(const CurvePoint& P, const CurvePoint& Q);
CurvePoint mul_scalar(const CurvePoint& P, long long n);

/// 3-isogeny y^2 = x^3 + k  ->  Y^2 = X^3 - 27k with kernel {O, (0, +-sqrt(k))}.
/// Throws KernelXZero for a finite point with x = 0.
CurvePoint lambda(const CurvePoint& P);

/// Dual direction Y^2 = X^3 + k' -> y^2 = x^3 - k'/27 (needs 27 | k').
/// lambda(lambda_dual(S)) = 3S and lambda_dual(lambda(P)) = 3P.
CurvePoint lambda_dual(const CurvePoint& S);

/// R with lambda(R) = S, or nullopt when S is not in lambda of the rational points.
/// Throws DegenerateDenominator if x^3 = 8k for a candidate root.
std::optional<CurvePoint> lambda_preimage(const CurvePoint& S);

enum class DescentMap { Psi, PsiPrime };

/// Integral representative of a cube class: y + 4 sqrt(D) over Q(sqrt(D)) for psi,
/// Y + 12 sqrt(D') over Q(sqrt(D')) for psi_prime, denominators cleared by a cube.
struct DescentClass {
  QuadElem elem;
  DescentMap map;
};

/// P on y^2 = x^3 + 16D. Infinity maps to 1. Throws CurveMismatch or TorsionImage.
DescentClass psi(const CurvePoint& P, const BigInt& D);
/// S on Y^2 = X^3 - 432D.
DescentClass psi_prime(const CurvePoint& S, const BigInt& D);
bool is_trivial(const DescentClass& c);

/// S in lambda(E_D(Q)), decided through the cube class of psi_prime(S).
bool in_lambda_image(const CurvePoint& S, const BigInt& D);
/// S in 3 E_D'(Q). Throws PreimageMissing if psi_prime is trivial but no preimage exists.
bool in_three_times(const CurvePoint& S, const BigInt& D);

/// Points (4M, 4N) with N^2 = 4M^3 - 27D, N > 0, |M| <= 3 bound, ascending M.
/// This lattice contains (12m, 108n) for integral (m, n) as M = 3m, N = 27n.
std::vector<CurvePoint> search_monic_points(const DiscriminantSeed& seed, const BigInt& bound);

struct SpanResult {
  int dim = 0;
  std::vector<std::size_t> basis;  // indices into the input list
};

/// F_3-span of the points in E_D'(Q)/lambda(E_D(Q)). Stops once dim reaches cap (if cap >= 0).
SpanResult span_mod_lambda(const std::vector<CurvePoint>& points, const BigInt& D, int cap = -1);
/// F_3-span of the points in E_D'(Q)/3E_D'(Q).
SpanResult span_mod_3(const std::vector<CurvePoint>& points, const BigInt& D, int cap = -1);

inline int span_dim_mod_lambda(const std::vector<CurvePoint>& points, const BigInt& D) {
  return span_mod_lambda(points, D).dim;
}
inline int span_dim_mod_3(const std::vector<CurvePoint>& points, const BigInt& D) {
  return span_mod_3(points, D).dim;
}

}  // namespace descent3
