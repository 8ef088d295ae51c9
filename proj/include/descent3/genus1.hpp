#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descent3/arith.hpp"
#include "descent3/cubicforms.hpp"
#include "descent3/discriminants.hpp"

namespace descent3 {

/// The plane cubic G(x, y) = z^3.
struct HomogeneousSpace {
  BinaryCubicForm form;
  DiscriminantSeed seed;
};

/// Throws DiscriminantMismatch unless disc(form) = seed.D.
HomogeneousSpace make_space(const BinaryCubicForm& form, const DiscriminantSeed& seed);

struct ProjPoint {
  BigInt x, y, z;
  bool operator==(const ProjPoint&) const = default;
};

std::string to_string(const ProjPoint& P);

/// First coprime (x, y), y ascending from 0 then x ascending, |x|, |y| <= bound, with
/// G(x, y) a cube. For y = 0 only x = 1 is tried.
std::optional<ProjPoint> global_search(const HomogeneousSpace& C, const BigInt& bound);

/// x, y, z with G(x, y) - z^3 = 0 mod p^level and a partial derivative small enough for
/// the point to lift to Z_p.
struct LocalWitness {
  BigInt x, y, z;
  unsigned level = 0;
};

/// p = 0 denotes the real place.
struct LocalResult {
  BigInt p;
  Tri status = Tri::Unknown;
  std::optional<LocalWitness> witness;
  std::string method;
};

/// Local solvability at p (prime, or 0 for the real place). effort bounds the lifting depth.
LocalResult locally_solvable(const HomogeneousSpace& C, const BigInt& p, unsigned effort = 12);

/// 0 (real place), then every prime dividing 3 disc(F) and every prime <= primes_max, ascending.
std::vector<BigInt> default_local_primes(const BinaryCubicForm& F, unsigned primes_max);

enum class VerdictKind { HasGlobalPoint, LocallyInsolvable, ViolationCandidate, CertifiedViolation };

const char* verdict_name(VerdictKind k) noexcept;

struct HasseConfig {
  BigInt monic_bound = 1000;
  BigInt global_bound = 10000;
  unsigned primes_max = 100;
  unsigned local_effort = 12;
};

struct Genus1Verdict {
  VerdictKind kind = VerdictKind::ViolationCandidate;
  BinaryCubicForm form;
  MonicStatus monic = MonicStatus::NotFoundWithinBound;
  std::optional<ProjPoint> point;
  BigInt insolvable_prime;          // set for LocallyInsolvable
  std::vector<LocalResult> local;   // empty when a global point was found
  BigInt monic_bound;
  BigInt search_bound;
  bool class_enumerated = false;
  bool theorem_conditional = false;  // set for CertifiedViolation
};

/// Verdict for a space built from a class of discriminant D. The class list, when given,
/// must be enumerate_classes(D); otherwise it is computed.
Genus1Verdict hasse_verdict(const HomogeneousSpace& C, const HasseConfig& cfg,
                            const std::vector<BinaryCubicForm>* classes = nullptr);

}  // namespace descent3
