#include "descent3/mordell.hpp"

#include <functional>

#include "descent3/error.hpp"
#include "internal/int128.hpp"

namespace descent3 {

CurvePoint CurvePoint::infinity(const BigInt& k) {
  if (k == 0) throw Error(Errc::ZeroInput, "singular curve k = 0");
  CurvePoint P;
  P.k_ = k;
  return P;
}

CurvePoint CurvePoint::affine(const BigInt& k, const BigRat& x, const BigRat& y) {
  if (k == 0) throw Error(Errc::ZeroInput, "singular curve k = 0");
  if (y * y != x * x * x + k) {
    throw Error(Errc::OffCurve, "(" + to_string(x) + ", " + to_string(y) + ") is not on y^2 = x^3 + " + to_string(k));
  }
  CurvePoint P;
  P.k_ = k;
  P.inf_ = false;
  P.x_ = x;
  P.y_ = y;
  return P;
}

std::string to_string(const CurvePoint& P) {
  if (P.is_infinity()) return "inf";
  return "(" + to_string(P.x()) + ", " + to_string(P.y()) + ")";
}

CurvePoint neg(const CurvePoint& P) {
  if (P.is_infinity()) return P;
  return CurvePoint::affine(P.k(), P.x(), -P.y());
}

CurvePoint add(const CurvePoint& P, const CurvePoint& Q) {
  if (P.k() != Q.k()) throw Error(Errc::CurveMismatch, "points on different curves");
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  BigRat slope;
  if (P.x() == Q.x()) {
    if (P.y() == -Q.y()) return CurvePoint::infinity(P.k());
    slope = 3 * P.x() * P.x() / (2 * P.y());
  } else {
    slope = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  BigRat x3 = slope * slope - P.x() - Q.x();
  BigRat y3 = slope * (P.x() - x3) - P.y();
  return CurvePoint::affine(P.k(), x3, y3);
}

CurvePoint sub(const CurvePoint& P, const CurvePoint& Q) { return add(P, neg(Q)); }

CurvePoint mul_scalar(const CurvePoint& P, long long n) {
  CurvePoint base = n < 0 ? neg(P) : P;
  unsigned long long e = n < 0 ? 0ull - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  CurvePoint acc = CurvePoint::infinity(P.k());
  while (e) {
    if (e & 1ull) acc = add(acc, base);
    e >>= 1;
    if (e) base = add(base, base);
  }
  return acc;
}

namespace {

// (x, y) -> ((y^2 + 3k)/x^2, y (x^3 - 8k)/x^3) onto Y^2 = X^3 - 27k.
CurvePoint isogeny_formula(const CurvePoint& P) {
  BigInt k2 = -27 * P.k();
  if (P.is_infinity()) return CurvePoint::infinity(k2);
  if (P.x() == 0) throw Error(Errc::KernelXZero, "x = 0 lies in the kernel");
  BigRat x2 = P.x() * P.x();
  BigRat x3 = x2 * P.x();
  BigRat X = (P.y() * P.y() + 3 * P.k()) / x2;
  BigRat Y = P.y() * (x3 - 8 * P.k()) / x3;
  return CurvePoint::affine(k2, X, Y);
}

BigInt source_k(const BigInt& kprime) {
  if (!mpz_divisible_ui_p(kprime.get_mpz_t(), 27)) {
    throw Error(Errc::InvalidArgument, "k' = " + to_string(kprime) + " is not divisible by 27");
  }
  return -kprime / 27;
}

}  // namespace

CurvePoint lambda(const CurvePoint& P) { return isogeny_formula(P); }

CurvePoint lambda_dual(const CurvePoint& S) {
  BigInt k = source_k(S.k());
  CurvePoint T = isogeny_formula(S);  // on y^2 = x^3 - 27 k' = x^3 + 729 k
  if (T.is_infinity()) return CurvePoint::infinity(k);
  return CurvePoint::affine(k, T.x() / 9, T.y() / 27);
}

std::optional<CurvePoint> lambda_preimage(const CurvePoint& S) {
  BigInt k = source_k(S.k());
  if (S.is_infinity()) return CurvePoint::infinity(k);
  // x^3 - X x^2 + 4k = 0; with X = u/e and z = x e: z^3 - u z^2 + 4k e^3 = 0.
  const BigInt& u = S.x().get_num();
  const BigInt& e = S.x().get_den();
  for (const BigInt& z : monic_cubic_integer_roots(-u, 0, 4 * k * e * e * e)) {
    BigRat x = make_rat(z, e);
    BigRat x3 = x * x * x;
    if (x3 == 8 * k) throw Error(Errc::DegenerateDenominator, "x^3 = 8k");
    if (x == 0) continue;
    BigRat y = S.y() * x3 / (x3 - 8 * k);
    if (!MordellCurve{k}.contains(x, y)) continue;
    CurvePoint R = CurvePoint::affine(k, x, y);
    if (lambda(R) == S) return R;
  }
  return std::nullopt;
}

namespace {

DescentClass descent_image(const CurvePoint& P, const BigInt& d, const BigInt& coeff, DescentMap map) {
  if (P.is_infinity()) return {quad_from_int(d, 1), map};
  if (P.x() == 0) throw Error(Errc::TorsionImage, "y + c sqrt(d) vanishes only on the kernel");
  // y = a / e with e a cube; e (y + c sqrt d) = a + c e sqrt d lies in the same cube class.
  const BigInt& a = P.y().get_num();
  const BigInt& e = P.y().get_den();
  return {make_quad(d, 2 * a, 2 * coeff * e), map};
}

}  // namespace

DescentClass psi(const CurvePoint& P, const BigInt& D) {
  if (P.k() != 16 * D) throw Error(Errc::CurveMismatch, "psi expects a point on y^2 = x^3 + 16D");
  return descent_image(P, D, 4, DescentMap::Psi);
}

DescentClass psi_prime(const CurvePoint& S, const BigInt& D) {
  if (S.k() != -432 * D) throw Error(Errc::CurveMismatch, "psi_prime expects a point on Y^2 = X^3 - 432D");
  return descent_image(S, -3 * D, 12, DescentMap::PsiPrime);
}

bool is_trivial(const DescentClass& c) { return is_cube(c.elem).has_value(); }

bool in_lambda_image(const CurvePoint& S, const BigInt& D) {
  if (S.is_infinity()) return true;
  return is_trivial(psi_prime(S, D));
}

bool in_three_times(const CurvePoint& S, const BigInt& D) {
  if (S.is_infinity()) return true;
  if (!is_trivial(psi_prime(S, D))) return false;
  auto R = lambda_preimage(S);
  if (!R) {
    throw Error(Errc::PreimageMissing, "trivial descent class without a rational preimage for " + to_string(S));
  }
  return is_trivial(psi(*R, D));
}

std::vector<CurvePoint> search_monic_points(const DiscriminantSeed& seed, const BigInt& bound) {
  using detail::i128;
  std::vector<CurvePoint> out;
  const BigInt k = -432 * seed.D;
  BigInt Mmax = 3 * bound;
  // Start from the least M with 4M^3 > 27D.
  BigInt Mmin = -Mmax;
  {
    BigInt t = floor_div(27 * seed.D, 4), r;
    mpz_root(r.get_mpz_t(), t.get_mpz_t(), 3);
    r -= 1;
    if (r > Mmin) Mmin = r;
  }
  auto emit = [&](const BigInt& M, const BigInt& N) {
    out.push_back(CurvePoint::affine(k, BigRat(4 * M), BigRat(4 * N)));
  };
  BigInt lim = abs(Mmin) > Mmax ? abs(Mmin) : Mmax;
  bool small = lim <= BigInt("1000000000000") && abs(seed.D) <= BigInt("1000000000000000000");
  if (small) {
    const i128 D = static_cast<i128>(detail::to_i64(seed.D));
    const std::int64_t lo = detail::to_i64(Mmin), hi = detail::to_i64(Mmax);
    for (std::int64_t M = lo; M <= hi; ++M) {
      i128 v = 4 * static_cast<i128>(M) * M * M - 27 * D;
      if (v <= 0) continue;
      auto r = detail::sqrt_exact_u128(static_cast<detail::u128>(v));
      if (r) emit(BigInt(static_cast<long>(M)), detail::from_i128(static_cast<i128>(*r)));
    }
  } else {
    for (BigInt M = Mmin; M <= Mmax; ++M) {
      BigInt v = 4 * M * M * M - 27 * seed.D;
      if (v <= 0) continue;
      if (auto r = sqrt_exact(v)) emit(M, *r);
    }
  }
  return out;
}

namespace {

SpanResult span_generic(const std::vector<CurvePoint>& points, int cap,
                        const std::function<bool(const CurvePoint&)>& trivial) {
  SpanResult res;
  if (points.empty()) return res;
  // Balanced lifts: every class in the current span has a representative in V.
  std::vector<CurvePoint> V{CurvePoint::infinity(points.front().k())};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (cap >= 0 && res.dim >= cap) break;
    const CurvePoint& P = points[i];
    bool dependent = false;
    for (const CurvePoint& v : V) {
      if (trivial(add(P, v))) {
        dependent = true;
        break;
      }
    }
    if (dependent) continue;
    res.basis.push_back(i);
    ++res.dim;
    std::size_t n = V.size();
    V.reserve(3 * n);
    for (std::size_t j = 0; j < n; ++j) {
      V.push_back(add(V[j], P));
      V.push_back(sub(V[j], P));
    }
  }
  return res;
}

}  // namespace

SpanResult span_mod_lambda(const std::vector<CurvePoint>& points, const BigInt& D, int cap) {
  return span_generic(points, cap, [&](const CurvePoint& S) { return in_lambda_image(S, D); });
}

SpanResult span_mod_3(const std::vector<CurvePoint>& points, const BigInt& D, int cap) {
  return span_generic(points, cap, [&](const CurvePoint& S) { return in_three_times(S, D); });
}

}  // namespace descent3
