#include <gtest/gtest.h>

#include "descent3/error.hpp"
#include "descent3/genus1.hpp"
#include "descent3/reference_data.hpp"
#include "oracles.hpp"

using namespace descent3;

namespace {

DiscriminantSeed violation_seed() { return make_seed(229, 3); }

HomogeneousSpace space(int i) { return make_space(reference::violation_forms()[i], violation_seed()); }

// Forms outside the family, for local fixtures only.
HomogeneousSpace raw_space(BinaryCubicForm F) { return HomogeneousSpace{F, DiscriminantSeed{0, 0, disc(F)}}; }

void check_witness(const HomogeneousSpace& C, const LocalResult& r) {
  ASSERT_TRUE(r.witness);
  BigInt pk = 1;
  for (unsigned i = 0; i < r.witness->level; ++i) pk *= r.p;
  BigInt val = C.form.eval(r.witness->x, r.witness->y) - r.witness->z * r.witness->z * r.witness->z;
  EXPECT_EQ(BigInt(val % pk), 0) << r.p;
}

}  // namespace

TEST(MakeSpace, Mismatch) {
  try {
    make_space({1, 0, -1, 1}, violation_seed());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DiscriminantMismatch);
  }
}

TEST(GlobalSearch, Examples) {
  auto P = global_search(space(0), 100);
  ASSERT_TRUE(P);
  EXPECT_EQ(*P, (ProjPoint{1, 0, 1}));
  // (n : m : n) on the monic curve
  EXPECT_EQ(space(0).form.eval(3, 229), 27);
  EXPECT_FALSE(global_search(space(1), 10000));
}

TEST(GlobalSearch, ResultsAreExact) {
  for (const auto& F : enumerate_classes(-4897363)) {
    auto C = make_space(F, make_seed(-34, 419));
    if (auto P = global_search(C, 200)) {
      EXPECT_EQ(F.eval(P->x, P->y), P->z * P->z * P->z);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), P->x.get_mpz_t(), P->y.get_mpz_t());
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(Local, RealPlace) {
  LocalResult r = locally_solvable(space(2), 0);
  EXPECT_EQ(r.status, Tri::Yes);
}

TEST(Local, ViolationFormsSmallPrimes) {
  for (int i = 1; i < 4; ++i) {
    for (long p : {2L, 3L, 7L, 11L, 13L}) {
      LocalResult r = locally_solvable(space(i), p);
      EXPECT_EQ(r.status, Tri::Yes) << i << " " << p;
      check_witness(space(i), r);
    }
  }
}

TEST(Local, SmoothFastPath) {
  LocalResult r = locally_solvable(space(1), 47);
  EXPECT_EQ(r.status, Tri::Yes);
  check_witness(space(1), r);
  for (long p : {53L, 97L, 101L, 1009L}) EXPECT_EQ(locally_solvable(space(3), p).status, Tri::Yes);
}

TEST(Local, InsolvableFixtures) {
  // v_7(7x^3 + 49y^3) is 1 or 2 for primitive (x, y): never a cube
  EXPECT_EQ(locally_solvable(raw_space({7, 0, 0, 49}), 7).status, Tri::No);
  EXPECT_EQ(locally_solvable(raw_space({2, 0, 0, 4}), 2).status, Tri::No);
  EXPECT_EQ(locally_solvable(raw_space({7, 0, 0, 49}), 2).status, Tri::Yes);
}

TEST(Local, ExhaustiveOracleAgreesOnNo) {
  // p u x^3 + p^2 y^3 = z^3: brute force mod p^3 finds no primitive solution
  for (long p : {2L, 3L, 5L, 7L}) {
    const long p3 = p * p * p;
    std::set<long> cubes;
    for (long z = 0; z < p3; ++z) cubes.insert(z * z % p3 * z % p3);
    for (long u = 1; u < p; ++u) {
      bool any = false;
      for (long x = 0; x < p3 && !any; ++x)
        for (long y = 0; y < p3 && !any; ++y) {
          if (x % p == 0 && y % p == 0) continue;
          long g = (p * u % p3 * (x * x % p3) % p3 * x + p * p * (y * y % p3) % p3 * y) % p3;
          any = cubes.count(g) > 0;
        }
      EXPECT_FALSE(any);
      EXPECT_EQ(locally_solvable(raw_space({p * u, 0, 0, p * p}), p).status, Tri::No) << p << " " << u;
    }
  }
}

TEST(Local, DefaultPrimes) {
  auto ps = default_local_primes(reference::violation_forms()[1], 100);
  EXPECT_EQ(ps.front(), 0);
  for (long p : oracle::primes_up_to(100)) EXPECT_NE(std::find(ps.begin(), ps.end(), BigInt(p)), ps.end());
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
}

TEST(Verdict, ViolationExample) {
  HasseConfig cfg;
  auto classes = enumerate_classes(48035713);
  Genus1Verdict v1 = hasse_verdict(space(0), cfg, &classes);
  EXPECT_EQ(v1.kind, VerdictKind::HasGlobalPoint);
  EXPECT_EQ(*v1.point, (ProjPoint{1, 0, 1}));
  cfg.global_bound = 300;
  for (int i = 1; i < 4; ++i) {
    Genus1Verdict v = hasse_verdict(space(i), cfg, &classes);
    EXPECT_EQ(v.kind, VerdictKind::CertifiedViolation);
    EXPECT_TRUE(v.theorem_conditional);
    EXPECT_TRUE(v.class_enumerated);
    EXPECT_EQ(v.monic, MonicStatus::NotFoundWithinBound);
    for (const auto& r : v.local) EXPECT_EQ(r.status, Tri::Yes) << to_string(r.p);
  }
}

TEST(Verdict, MonicClass) {
  auto cl = enumerate_classes(-23);
  Genus1Verdict v = hasse_verdict(make_space(cl[0], make_seed(1, 1)), HasseConfig{});
  EXPECT_EQ(v.kind, VerdictKind::HasGlobalPoint);
  ASSERT_TRUE(v.point);
  EXPECT_EQ(cl[0].eval(v.point->x, v.point->y), v.point->z * v.point->z * v.point->z);
}

TEST(Verdict, MonotoneInBounds) {
  auto seed = make_seed(-41, 3);
  auto cl = enumerate_classes(seed.D);
  for (const auto& F : cl) {
    HasseConfig small, big;
    small.global_bound = 20;
    big.global_bound = 200;
    auto a = hasse_verdict(make_space(F, seed), small, &cl);
    auto b = hasse_verdict(make_space(F, seed), big, &cl);
    if (a.kind == VerdictKind::HasGlobalPoint) EXPECT_EQ(b.kind, VerdictKind::HasGlobalPoint);
  }
}
