#include <gtest/gtest.h>

#include "descent3/discriminants.hpp"
#include "descent3/error.hpp"
#include "descent3/reference_data.hpp"
#include "oracles.hpp"

using namespace descent3;

TEST(MakeSeed, WorkedExamples) {
  EXPECT_EQ(make_seed(-34, 419).D, -4897363);
  EXPECT_EQ(make_seed(7, 3).D, 1129);
  EXPECT_EQ(make_seed(229, 3).D, 48035713);
  EXPECT_EQ(make_seed(1, 1).D, -23);
}

TEST(MakeSeed, Rejections) {
  auto code = [](long m, long n) {
    try {
      make_seed(m, n);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code(2, 2), Errc::GcdViolation);
  EXPECT_EQ(code(0, 0), Errc::DegenerateDiscriminant);
  EXPECT_EQ(code(-1, 0), Errc::DegenerateDiscriminant);  // D = -4
  EXPECT_EQ(code(1, 0), Errc::GcdViolation);              // D = 4, gcd(2, 0) = 2
  // first non-squarefree family member in a small box
  bool found = false;
  for (long m = 1; m < 60 && !found; ++m) {
    for (long n = 1; n < 60 && !found; n += 2) {
      if (std::gcd(2 * m, 3 * n) != 1) continue;
      BigInt D = family_disc(m, n);
      if (D == 0 || D == 1 || D == -3 || D == -4) continue;
      long a = std::labs(D.get_si());
      bool square_factor = false;
      for (long p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0) square_factor = true;
      if (square_factor) {
        EXPECT_EQ(code(m, n), Errc::NotSquarefree) << m << " " << n;
        found = true;
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(MakeSeed, ReferenceRows) {
  for (const auto& r : reference::negative_rank_two_seeds()) EXPECT_EQ(make_seed(r.m, r.n).D, r.D);
  for (const auto& r : reference::positive_rank_one_seeds()) EXPECT_EQ(make_seed(r.m, r.n).D, r.D);
}

TEST(Honda, Examples) {
  EXPECT_TRUE(honda_divisible_by_3(-34, 419));
  EXPECT_TRUE(honda_divisible_by_3(1, 1));
  EXPECT_FALSE(honda_divisible_by_3(5, 2));
  EXPECT_THROW(honda_divisible_by_3(3, 1), Error);
}

TEST(Honda, AgreesWithDivisorOracle) {
  for (long m = -40; m <= 40; ++m) {
    for (long n = 1; n <= 40; ++n) {
      if (std::gcd(std::labs(m), 3 * n) != 1) continue;
      bool rep = false;
      for (long h : oracle::divisors_of(n)) {
        if (m * h == n + h * h * h || -m * h == n - h * h * h) rep = true;
      }
      ASSERT_EQ(honda_divisible_by_3(m, n), !rep) << m << " " << n;
    }
  }
}

TEST(Scan, SmallBoxes) {
  auto one = scan_collect(-34, -34, 419, 419);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].D, -4897363);
  auto tiny = scan_collect(1, 1, 1, 1);
  ASSERT_EQ(tiny.size(), 1u);
  EXPECT_EQ(tiny[0].D, -23);
  ScanSummary s;
  EXPECT_TRUE(scan_collect(2, 2, 2, 2, SignFilter::Any, &s).empty());
  EXPECT_EQ(s.gcd_violation, 1u);
  EXPECT_TRUE(scan_collect(5, 4, 1, 1).empty());
}

TEST(Scan, OrderAndInvariants) {
  ScanSummary s;
  auto seeds = scan_collect(-30, 30, -20, 20, SignFilter::Any, &s);
  EXPECT_EQ(s.examined, 61u * 41u);
  EXPECT_EQ(s.emitted, seeds.size());
  EXPECT_EQ(s.examined, s.emitted + s.gcd_violation + s.not_squarefree + s.degenerate + s.sign_filtered + s.undecided);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& z = seeds[i];
    EXPECT_EQ(z.D, 4 * z.m * z.m * z.m - 27 * z.n * z.n);
    EXPECT_TRUE(is_squarefree(z.D));
    BigInt g;
    mpz_gcd(g.get_mpz_t(), BigInt(2 * z.m).get_mpz_t(), BigInt(3 * z.n).get_mpz_t());
    EXPECT_EQ(g, 1);
    if (i) EXPECT_TRUE(seeds[i - 1].m < z.m || (seeds[i - 1].m == z.m && seeds[i - 1].n < z.n));
  }
  auto neg = scan_collect(-30, 30, -20, 20, SignFilter::Negative);
  auto pos = scan_collect(-30, 30, -20, 20, SignFilter::Positive);
  EXPECT_EQ(neg.size() + pos.size(), seeds.size());
  for (auto& z : neg) EXPECT_LT(z.D, 0);
  for (auto& z : pos) EXPECT_GT(z.D, 0);
}

TEST(Scan, SquarefreeFractionStable) {
  // fixed odd n: the squarefree fraction over m in [1, N] stays in a narrow band
  for (long n : {1L, 5L, 7L}) {
    double prev = -1;
    for (long N : {500L, 1000L, 2000L}) {
      auto seeds = scan_collect(1, N, n, n);
      long admissible = 0;
      for (long m = 1; m <= N; ++m) admissible += std::gcd(2 * m, 3 * n) == 1;
      double frac = double(seeds.size()) / double(admissible);
      EXPECT_GT(frac, 0.3);
      if (prev > 0) EXPECT_NEAR(frac, prev, 0.08);
      prev = frac;
    }
  }
}

TEST(SeedFromDisc, Recovers) {
  auto s = seed_from_disc(48035713);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->m, 229);
  EXPECT_EQ(s->n, 3);
  auto t = seed_from_disc(-4897363);
  ASSERT_TRUE(t);
  EXPECT_EQ(family_disc(t->m, t->n), -4897363);
  EXPECT_FALSE(seed_from_disc(2, 1000));
}
