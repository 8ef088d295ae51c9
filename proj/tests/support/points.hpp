#pragma once

// Random rational points on the family curves, built from the seed point by the group law.

#include <random>
#include <vector>

#include "descent3/mordell.hpp"

namespace testpts {

using namespace descent3;

/// (12m, 108n) and any further search points on Y^2 = X^3 - 432D.
inline std::vector<CurvePoint> dual_generators(const DiscriminantSeed& s, long bound = 40) {
  std::vector<CurvePoint> g{CurvePoint::affine(-432 * s.D, BigRat(12 * s.m), BigRat(108 * s.n))};
  for (const auto& P : search_monic_points(s, bound)) {
    if (P != g[0] && P != neg(g[0]) && g.size() < 3) g.push_back(P);
  }
  return g;
}

/// a*G0 + b*G1 (+ c*G2) with small random coefficients, never infinity.
inline CurvePoint random_combo(const std::vector<CurvePoint>& gens, std::mt19937_64& rng, int range = 2) {
  for (;;) {
    CurvePoint P = CurvePoint::infinity(gens[0].k());
    for (const auto& G : gens) {
      long long c = static_cast<long long>(rng() % (2 * range + 1)) - range;
      P = add(P, mul_scalar(G, c));
    }
    if (!P.is_infinity()) return P;
  }
}

}  // namespace testpts
