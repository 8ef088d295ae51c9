#include <gtest/gtest.h>

#include <random>

#include "descent3/error.hpp"
#include "descent3/mordell.hpp"
#include "oracles.hpp"
#include "points.hpp"

using namespace descent3;

namespace {

const BigInt kD23 = -23;

CurvePoint pt(const BigInt& k, long x, long y) { return CurvePoint::affine(k, BigRat(x), BigRat(y)); }

// rank six example, Table points as (X, Y)
std::vector<CurvePoint> rank_six_points() {
  BigInt k = -432 * BigInt(-4897363);
  return {pt(k, 4344, 289980), pt(k, -408, 45252),     pt(k, 1744, 86140),
          pt(k, 2832, 157572), pt(k, 6472, 522692), CurvePoint::affine(k, 670920, BigRat(BigInt("549548604")))};
}

}  // namespace

TEST(CurvePoint, OnCurveCheck) {
  EXPECT_NO_THROW(pt(16 * kD23, 8, 12));
  try {
    pt(16 * kD23, 8, 13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OffCurve);
  }
  EXPECT_TRUE(MordellCurve::e_d(kD23).contains(8, 12));
  EXPECT_TRUE(MordellCurve::e_dprime(kD23).contains(-15, 81));
}

TEST(GroupLaw, IdentityAndInverse) {
  CurvePoint P = pt(-368, 8, 12);
  CurvePoint O = CurvePoint::infinity(-368);
  EXPECT_EQ(add(P, O), P);
  EXPECT_EQ(add(O, P), P);
  EXPECT_TRUE(add(P, neg(P)).is_infinity());
  CurvePoint P2 = mul_scalar(P, 2);
  EXPECT_TRUE(MordellCurve{-368}.contains(P2.x(), P2.y()));
  EXPECT_EQ(P2, add(P, P));
  EXPECT_EQ(mul_scalar(P, -3), neg(add(P2, P)));
  EXPECT_TRUE(mul_scalar(P, 0).is_infinity());
  try {
    add(P, pt(-432 * kD23, -15, 81));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CurveMismatch);
  }
}

TEST(GroupLaw, Axioms) {
  std::mt19937_64 rng(41);
  auto seeds = scan_collect(-12, 12, 1, 9);
  for (const auto& s : seeds) {
    auto gens = testpts::dual_generators(s);
    for (int i = 0; i < 8; ++i) {
      CurvePoint P = testpts::random_combo(gens, rng), Q = testpts::random_combo(gens, rng),
                 R = testpts::random_combo(gens, rng);
      ASSERT_EQ(add(add(P, Q), R), add(P, add(Q, R)));
      ASSERT_EQ(add(P, Q), add(Q, P));
      ASSERT_EQ(sub(add(P, Q), Q), P);
      ASSERT_EQ(P.x().get_den(), [&] {
        BigInt w;
        mpz_sqrt(w.get_mpz_t(), P.x().get_den().get_mpz_t());
        return BigInt(w * w);
      }());
    }
  }
}

TEST(Lambda, FixedCase) {
  CurvePoint S = lambda(pt(-368, 8, 12));
  EXPECT_EQ(S, pt(-432 * kD23, -15, 81));
  EXPECT_EQ(BigInt(81 * 81), BigInt(-15 * -15 * -15 + 9936));
  EXPECT_TRUE(lambda(CurvePoint::infinity(-368)).is_infinity());
  EXPECT_TRUE(lambda_dual(CurvePoint::infinity(9936)).is_infinity());
}

TEST(Lambda, DualComposition) {
  CurvePoint P = pt(-368, 8, 12);
  EXPECT_EQ(lambda_dual(lambda(P)), mul_scalar(P, 3));
  DiscriminantSeed s = make_seed(7, 3);
  CurvePoint S = pt(-432 * s.D, 84, 324);
  EXPECT_EQ(lambda(lambda_dual(S)), mul_scalar(S, 3));
}

TEST(Lambda, KernelX) {
  // x = 0 is never on E_D for squarefree D, so construct on y^2 = x^3 + 16 (k = 16, D = 1)
  try {
    lambda(pt(16, 0, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::KernelXZero);
  }
}

TEST(Lambda, HomomorphismAndPreimage) {
  std::mt19937_64 rng(43);
  for (const auto& s : scan_collect(-9, 9, 1, 7)) {
    auto gens = testpts::dual_generators(s);
    for (auto& g : gens) g = lambda_dual(g);  // points on E_D
    for (int i = 0; i < 5; ++i) {
      CurvePoint P = testpts::random_combo(gens, rng), Q = testpts::random_combo(gens, rng);
      ASSERT_EQ(lambda(add(P, Q)), add(lambda(P), lambda(Q)));
      ASSERT_EQ(lambda_dual(lambda(P)), mul_scalar(P, 3));
      auto R = lambda_preimage(lambda(P));
      ASSERT_TRUE(R);
      ASSERT_EQ(lambda(*R), lambda(P));
    }
  }
}

TEST(LambdaPreimage, Examples) {
  auto R = lambda_preimage(pt(-432 * kD23, -15, 81));
  ASSERT_TRUE(R);
  EXPECT_EQ(*R, pt(-368, 8, 12));
  EXPECT_FALSE(lambda_preimage(pt(-432 * kD23, 12, 108)));
  // independent check: x^3 - 12x^2 - 1472 has no integer root (a rational root of a monic is integral)
  for (long x = -2000; x <= 2000; ++x) ASSERT_NE(x * x * x - 12 * x * x - 1472, 0);
}

TEST(Psi, DescentImages) {
  DiscriminantSeed s = make_seed(-34, 419);
  DescentClass c = psi_prime(pt(-432 * s.D, 1744, 86140), s.D);
  EXPECT_EQ(c.map, DescentMap::PsiPrime);
  EXPECT_EQ(c.elem, make_quad(-3 * s.D, 2 * 86140, 24));
  EXPECT_TRUE(is_trivial(psi(CurvePoint::infinity(16 * s.D), s.D)));
  EXPECT_TRUE(is_trivial(psi_prime(CurvePoint::infinity(-432 * s.D), s.D)));
  // psi_prime(12m, 108n) is 8 mu
  DescentClass seedc = psi_prime(pt(-432 * s.D, 12 * -34, 108 * 419), s.D);
  EXPECT_EQ(seedc.elem, mul(quad_from_int(-3 * s.D, 8), virtual_unit(s)));
  try {
    psi(pt(-432 * s.D, 1744, 86140), s.D);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CurveMismatch);
  }
}

TEST(Psi, HomomorphismKernelAndNorm) {
  std::mt19937_64 rng(47);
  for (const auto& s : scan_collect(-10, 10, 1, 7)) {
    auto gens = testpts::dual_generators(s);
    std::vector<CurvePoint> egens;
    for (auto& g : gens) egens.push_back(lambda_dual(g));
    for (int i = 0; i < 4; ++i) {
      CurvePoint S = testpts::random_combo(gens, rng), T = testpts::random_combo(gens, rng);
      CurvePoint ST = add(S, T);
      QuadElem a = psi_prime(S, s.D).elem, b = psi_prime(T, s.D).elem;
      QuadElem ab = ST.is_infinity() ? quad_from_int(a.d, 1) : psi_prime(ST, s.D).elem;
      QuadElem prod = mul(ab, pow(mul(a, b), 2));
      ASSERT_TRUE(is_cube(prod)) << to_string(S) << " + " << to_string(T);
      ASSERT_TRUE(cube_root_exact(norm(a)));
      CurvePoint P = testpts::random_combo(egens, rng);
      ASSERT_TRUE(is_trivial(psi_prime(lambda(P), s.D)));
      ASSERT_TRUE(cube_root_exact(norm(psi(P, s.D).elem)));
    }
  }
}

TEST(MonicSearch, Examples) {
  DiscriminantSeed s = make_seed(7, 3);
  auto pts = search_monic_points(s, 100);
  EXPECT_NE(std::find(pts.begin(), pts.end(), pt(-432 * s.D, 84, 324)), pts.end());
  EXPECT_EQ(BigInt(324 * 324), BigInt(84L * 84 * 84) - 487728);
  DiscriminantSeed t = make_seed(1, 1);
  auto tp = search_monic_points(t, 10);
  EXPECT_NE(std::find(tp.begin(), tp.end(), pt(9936, 12, 108)), tp.end());
  DiscriminantSeed u = make_seed(-34, 419);
  auto up = search_monic_points(u, 60000);
  for (const auto& P : rank_six_points()) {
    bool found = std::find(up.begin(), up.end(), P) != up.end() || std::find(up.begin(), up.end(), neg(P)) != up.end();
    EXPECT_TRUE(found) << to_string(P);
  }
}

TEST(MonicSearch, AgreesWithBruteForce) {
  for (const auto& s : scan_collect(-15, 15, 1, 15)) {
    auto pts = search_monic_points(s, 30);
    std::set<std::pair<long, long>> got;
    for (auto& P : pts) {
      ASSERT_EQ(P.x().get_den(), 1);
      got.insert({P.x().get_num().get_si(), P.y().get_num().get_si()});
    }
    std::set<std::pair<long, long>> want;
    long D = s.D.get_si();
    for (long M = -90; M <= 90; ++M) {
      long t = 4 * M * M * M - 27 * D;
      if (t <= 0) continue;
      long N = std::lround(std::sqrt(double(t)));
      while (N * N > t) --N;
      while ((N + 1) * (N + 1) <= t) ++N;
      if (N * N == t) want.insert({4 * M, 4 * N});
    }
    ASSERT_EQ(got, want) << to_string(s.D);
  }
}

TEST(Span, RankSixExample) {
  auto P = rank_six_points();
  BigInt D = -4897363;
  for (auto& p : P) EXPECT_TRUE(MordellCurve::e_dprime(D).contains(p.x(), p.y()));
  EXPECT_EQ(span_dim_mod_lambda({P[0], P[1], P[2]}, D), 3);
  EXPECT_EQ(span_dim_mod_3(P, D), 6);
}

TEST(Span, SmallCases) {
  DiscriminantSeed s = make_seed(-34, 419);
  CurvePoint P = rank_six_points()[0];
  EXPECT_EQ(span_dim_mod_lambda({P}, s.D), 1);
  EXPECT_EQ(span_dim_mod_3({P, mul_scalar(P, 3)}, s.D), 1);
  EXPECT_EQ(span_dim_mod_3({P, neg(P)}, s.D), 1);
  CurvePoint Q = lambda(lambda_dual(rank_six_points()[1]));
  EXPECT_EQ(span_dim_mod_lambda({P, Q}, s.D), 1);
  EXPECT_EQ(span_dim_mod_3({}, s.D), 0);
  auto r = span_mod_lambda(rank_six_points(), s.D, 2);
  EXPECT_EQ(r.dim, 2);
}

TEST(Span, OrderingBetweenQuotients) {
  std::mt19937_64 rng(53);
  for (const auto& s : scan_collect(-8, 8, 1, 5)) {
    auto gens = testpts::dual_generators(s, 60);
    std::vector<CurvePoint> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(testpts::random_combo(gens, rng, 1));
    int lam = span_dim_mod_lambda(pts, s.D);
    int three = span_dim_mod_3(pts, s.D);
    ASSERT_LE(lam, three);
    ASSERT_LE(three, static_cast<int>(gens.size()));
  }
}

TEST(Membership, ThreeTimes) {
  DiscriminantSeed s = make_seed(-34, 419);
  CurvePoint P = rank_six_points()[3];
  EXPECT_TRUE(in_three_times(mul_scalar(P, 3), s.D));
  EXPECT_FALSE(in_three_times(P, s.D));
  EXPECT_TRUE(in_lambda_image(lambda(lambda_dual(P)), s.D));
  EXPECT_FALSE(in_lambda_image(P, s.D));
}
