#include "descent3/quadfield.hpp"

#include "descent3/error.hpp"

namespace descent3 {

namespace {

bool integral(const BigInt& d, const BigInt& u, const BigInt& v) {
  BigInt r = d % 4;
  if (r < 0) r += 4;
  if (r == 1) return mpz_even_p(u.get_mpz_t()) == mpz_even_p(v.get_mpz_t());
  return mpz_even_p(u.get_mpz_t()) && mpz_even_p(v.get_mpz_t());
}

void same_field(const QuadElem& a, const QuadElem& b) {
  if (a.d != b.d) {
    throw Error(Errc::FieldMismatch, "Q(sqrt(" + to_string(a.d) + ")) vs Q(sqrt(" + to_string(b.d) + "))");
  }
}

}  // namespace

QuadElem make_quad(const BigInt& d, const BigInt& u, const BigInt& v) {
  if (d == 0 || d == 1) throw Error(Errc::InvalidArgument, "radicand must not be 0 or 1");
  if (!integral(d, u, v)) {
    throw Error(Errc::InvalidArgument, "(" + to_string(u) + " + " + to_string(v) + " sqrt(" +
                                           to_string(d) + "))/2 is not integral");
  }
  return QuadElem{d, u, v};
}

QuadElem quad_from_int(const BigInt& d, const BigInt& n) { return make_quad(d, 2 * n, 0); }

QuadElem mul(const QuadElem& a, const QuadElem& b) {
  same_field(a, b);
  // ((u1 + v1 s)(u2 + v2 s))/4 = (u1u2 + v1v2 d + (u1v2 + u2v1) s)/4
  BigInt u = a.u * b.u + a.v * b.v * a.d;
  BigInt v = a.u * b.v + a.v * b.u;
  mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), 2);
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
  return QuadElem{a.d, u, v};
}

QuadElem add(const QuadElem& a, const QuadElem& b) {
  same_field(a, b);
  return QuadElem{a.d, a.u + b.u, a.v + b.v};
}

QuadElem conj(const QuadElem& a) { return QuadElem{a.d, a.u, -a.v}; }

QuadElem pow(const QuadElem& a, unsigned e) {
  QuadElem result = quad_from_int(a.d, 1), base = a;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

BigInt norm(const QuadElem& a) {
  BigInt n = a.u * a.u - a.v * a.v * a.d;
  mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
  return n;
}

BigInt trace(const QuadElem& a) { return a.u; }

bool is_zero(const QuadElem& a) { return a.u == 0 && a.v == 0; }

std::optional<QuadElem> is_cube(const QuadElem& alpha) {
  if (is_zero(alpha)) throw Error(Errc::ZeroInput, "cube test of 0");
  auto q = cube_root_exact(norm(alpha));
  if (!q) return std::nullopt;
  // beta = (T + W sqrt(d))/2 with norm q and trace T satisfies T^3 - 3qT = trace(alpha).
  for (const BigInt& T : monic_cubic_integer_roots(0, -3 * *q, -trace(alpha))) {
    BigInt num = T * T - 4 * *q;
    if (!mpz_divisible_p(num.get_mpz_t(), alpha.d.get_mpz_t())) continue;
    auto W = sqrt_exact(num / alpha.d);
    if (!W) continue;
    for (const BigInt& w : {*W, BigInt(-*W)}) {
      if (!integral(alpha.d, T, w)) continue;
      QuadElem beta{alpha.d, T, w};
      if (pow(beta, 3) == alpha) return beta;
    }
  }
  return std::nullopt;
}

QuadElem virtual_unit(const DiscriminantSeed& seed) {
  return make_quad(-3 * seed.D, 27 * seed.n, 3);
}

bool same_cubic_field(const QuadElem& mu1, const QuadElem& mu2) {
  same_field(mu1, mu2);
  if (is_cube(mu1) || is_cube(mu2)) throw Error(Errc::CubeInput, "argument is a cube");
  QuadElem sq = mul(mu2, mu2);
  if (is_cube(mul(mu1, sq))) return true;
  return is_cube(mul(mu1, conj(sq))).has_value();
}

bool yamamoto_nonprincipal(const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& D_M) {
  if (y * y != 4 * x * x * x + z * z * D_M) {
    throw Error(Errc::NotOnNormEquation, "y^2 != 4x^3 + z^2 D");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 1) throw Error(Errc::NotCoprime, "gcd(x, y) = " + to_string(g));
  if (abs(x) <= 1) return false;
  auto f = factorize(x);
  if (!f) throw Error(Errc::FactorizationBudget, "cannot factor " + to_string(x));
  for (const auto& pe : *f) {
    const BigInt& l = pe.first;
    if (l % 3 == 1 && !is_cubic_residue(y, l)) return true;
  }
  return false;
}

std::string to_string(const QuadElem& a) {
  return "(" + to_string(a.u) + " + " + to_string(a.v) + "*sqrt(" + to_string(a.d) + "))/2";
}

}  // namespace descent3
