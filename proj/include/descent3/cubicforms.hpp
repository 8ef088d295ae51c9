#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descent3/arith.hpp"
#include "descent3/discriminants.hpp"
#include "descent3/mordell.hpp"

namespace descent3 {

/// a x^3 + b x^2 y + c x y^2 + d y^3.
struct BinaryCubicForm {
  BigInt a, b, c, d;

  BigInt eval(const BigInt& x, const BigInt& y) const {
    return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
  }
  BinaryCubicForm negated() const { return {-a, -b, -c, -d}; }
  bool operator==(const BinaryCubicForm&) const = default;
};

/// A x^2 + B x y + C y^2.
struct QuadraticForm {
  BigInt A, B, C;

  BigInt disc() const { return B * B - 4 * A * C; }
  bool operator==(const QuadraticForm&) const = default;
};

/// [[p, q], [r, s]] acting by (x, y) -> (p x + q y, r x + s y).
struct Mat2 {
  BigInt p = 1, q = 0, r = 0, s = 1;

  BigInt det() const { return p * s - q * r; }
  Mat2 operator*(const Mat2& o) const {
    return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
  }
  bool operator==(const Mat2&) const = default;
};

/// "[a,b,c,d]".
std::string to_string(const BinaryCubicForm& F);
/// Parses "[a,b,c,d]" (spaces allowed). Throws ParseError.
BinaryCubicForm parse_form(const std::string& text);
/// "[A,B,C]".
std::string to_string(const QuadraticForm& q);

BigInt disc(const BinaryCubicForm& F);
/// (b^2 - 3ac, bc - 9ad, c^2 - 3bd); its discriminant is -3 disc(F).
QuadraticForm hessian(const BinaryCubicForm& F);
/// F(p x + q y, r x + s y). Throws NotUnimodular.
BinaryCubicForm act(const BinaryCubicForm& F, const Mat2& M);
QuadraticForm act(const QuadraticForm& H, const Mat2& M);

/// Irreducible over Q: a, d nonzero and no rational root of F(x, 1).
bool is_irreducible(const BinaryCubicForm& F);

/// Canonical representative of the GL_2(Z)-class of F. Throws ZeroDiscriminant or ReducibleForm.
BinaryCubicForm reduce(const BinaryCubicForm& F);
/// Also returns M with act(F, M) = reduce(F).
BinaryCubicForm reduce(const BinaryCubicForm& F, Mat2& M);
bool equivalent(const BinaryCubicForm& F, const BinaryCubicForm& G);

/// Canonical representatives of all classes of irreducible forms of discriminant D,
/// ascending lexicographically. Throws CountNotOfExpectedShape unless the count is
/// (3^r - 1)/2, and InvalidArgument when |D| exceeds the supported range.
std::vector<BinaryCubicForm> enumerate_classes(const BigInt& D);
/// The r with (3^r - 1)/2 = count, or nullopt.
std::optional<int> rank_from_class_count(std::size_t count);

/// X^3 - m X + n; thirds is set when (m, n) = (M/3, N/27) with M, N integral.
struct DepressedCubic {
  BigRat m;
  BigRat n;
  bool thirds = false;
};

/// Depression of x^3 + a x^2 + b x + c. Throws ReduciblePolynomial.
DepressedCubic depress(const BigInt& a, const BigInt& b, const BigInt& c);

enum class MonicStatus { FoundMonicAlready, Found, NotFoundWithinBound };

struct MonicSearchResult {
  MonicStatus status = MonicStatus::NotFoundWithinBound;
  Mat2 matrix;             // act(F, matrix) = monic
  BinaryCubicForm monic;   // leading coefficient 1, b in {-1, 0, 1}
  BigInt bound;            // search box used
};

/// Searches coprime (p, q), |p|, |q| <= bound, with F(p, q) = 1.
MonicSearchResult monic_representative(const BinaryCubicForm& F, const BigInt& bound);

/// (12m, 108n) on Y^2 = X^3 - 432D. Throws DiscriminantMismatch unless 4m^3 - 27n^2 = D.
CurvePoint point_from_depressed(const DepressedCubic& dc, const DiscriminantSeed& seed);

}  // namespace descent3
