#pragma once

#include <optional>

#include "descent3/arith.hpp"
#include "descent3/discriminants.hpp"

namespace descent3 {

/// alpha = (u + v sqrt(d)) / 2, always an algebraic integer of Q(sqrt(d)).
struct QuadElem {
  BigInt d;
  BigInt u;
  BigInt v;

  bool operator==(const QuadElem&) const = default;
};

/// Validates d not in {0, 1} and the integrality parity of (u, v).
/// Squarefreeness of d is the caller's responsibility. Throws InvalidArgument.
QuadElem make_quad(const BigInt& d, const BigInt& u, const BigInt& v);
/// The rational integer n as an element of Q(sqrt(d)).
QuadElem quad_from_int(const BigInt& d, const BigInt& n);

QuadElem mul(const QuadElem& a, const QuadElem& b);
QuadElem add(const QuadElem& a, const QuadElem& b);
QuadElem conj(const QuadElem& a);
QuadElem pow(const QuadElem& a, unsigned e);
BigInt norm(const QuadElem& a);
BigInt trace(const QuadElem& a);
bool is_zero(const QuadElem& a);

/// beta with beta^3 = alpha, or nullopt. Throws ZeroInput for alpha = 0.
std::optional<QuadElem> is_cube(const QuadElem& alpha);

/// mu = (27n + 3 sqrt(D')) / 2 over d = D' = -3D.
QuadElem virtual_unit(const DiscriminantSeed& seed);

/// Whether two non-cubes generate the same cubic extension.
/// Throws FieldMismatch or CubeInput.
bool same_cubic_field(const QuadElem& mu1, const QuadElem& mu2);

/// Requires y^2 = 4x^3 + z^2 D_M and gcd(x, y) = 1.
/// True iff some prime l | x with l = 1 (mod 3) has y a cubic non-residue mod l.
/// Throws NotOnNormEquation or NotCoprime.
bool yamamoto_nonprincipal(const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& D_M);

std::string to_string(const QuadElem& a);

}  // namespace descent3
