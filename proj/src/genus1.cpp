#include "descent3/genus1.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "descent3/error.hpp"
#include "internal/int128.hpp"

namespace descent3 {

HomogeneousSpace make_space(const BinaryCubicForm& form, const DiscriminantSeed& seed) {
  BigInt d = disc(form);
  if (d != seed.D) {
    throw Error(Errc::DiscriminantMismatch, "disc" + to_string(form) + " = " + to_string(d) + " != " + to_string(seed.D));
  }
  return {form, seed};
}

std::string to_string(const ProjPoint& P) {
  return "(" + to_string(P.x) + " : " + to_string(P.y) + " : " + to_string(P.z) + ")";
}

const char* verdict_name(VerdictKind k) noexcept {
  switch (k) {
    case VerdictKind::HasGlobalPoint: return "HasGlobalPoint";
    case VerdictKind::LocallyInsolvable: return "LocallyInsolvable";
    case VerdictKind::ViolationCandidate: return "ViolationCandidate";
    case VerdictKind::CertifiedViolation: return "CertifiedViolation";
  }
  return "Unknown";
}

namespace {

constexpr int kCubeModulus = 819;  // 7 * 9 * 13

const std::array<bool, kCubeModulus>& cube_residues() {
  static const std::array<bool, kCubeModulus> table = [] {
    std::array<bool, kCubeModulus> t{};
    for (int z = 0; z < kCubeModulus; ++z) t[(z * z % kCubeModulus) * z % kCubeModulus] = true;
    return t;
  }();
  return table;
}

}  // namespace

std::optional<ProjPoint> global_search(const HomogeneousSpace& C, const BigInt& bound) {
  const BinaryCubicForm& F = C.form;
  if (auto z = cube_root_exact(F.a)) return ProjPoint{1, 0, *z};
  BigInt coef_sum = abs(F.a) + abs(F.b) + abs(F.c) + abs(F.d);
  // |G(x, y)| <= coef_sum * bound^3 must fit in 62 bits for the fast path.
  BigInt worst = coef_sum * bound * bound * bound;
  const auto& cubes = cube_residues();
  if (worst < (BigInt(1) << 62)) {
    const std::int64_t a = detail::to_i64(F.a), b = detail::to_i64(F.b), c = detail::to_i64(F.c),
                       d = detail::to_i64(F.d), B = detail::to_i64(bound);
    for (std::int64_t y = 1; y <= B; ++y) {
      const std::int64_t cy2 = c * y * y, dy3 = d * y * y * y, by = b * y;
      for (std::int64_t x = -B; x <= B; ++x) {
        std::int64_t v = ((a * x + by) * x + cy2) * x + dy3;
        std::int64_t r = v % kCubeModulus;
        if (r < 0) r += kCubeModulus;
        if (!cubes[static_cast<std::size_t>(r)]) continue;
        std::int64_t z = static_cast<std::int64_t>(detail::icbrt_i128(v));
        if (z * z * z != v) continue;
        if (detail::gcd64(x, y) != 1) continue;
        return ProjPoint{BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)), BigInt(static_cast<long>(z))};
      }
    }
    return std::nullopt;
  }
  for (BigInt y = 1; y <= bound; ++y) {
    for (BigInt x = -bound; x <= bound; ++x) {
      BigInt v = F.eval(x, y);
      BigInt r = v % kCubeModulus;
      if (r < 0) r += kCubeModulus;
      if (!cubes[r.get_ui()]) continue;
      auto z = cube_root_exact(v);
      if (!z) continue;
      BigInt g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      if (g != 1) continue;
      return ProjPoint{x, y, *z};
    }
  }
  return std::nullopt;
}

namespace {

struct LocalSearch {
  const BinaryCubicForm& F;
  BigInt p;
  unsigned effort;
  std::uint64_t node_cap = 2'000'000;
  std::uint64_t nodes = 0;
  bool hit_cap = false;

  BigInt f(const BigInt& x, const BigInt& y, const BigInt& z) const { return F.eval(x, y) - z * z * z; }

  // Smallest valuation among the three partial derivatives (max() when all vanish).
  unsigned grad_val(const BigInt& x, const BigInt& y, const BigInt& z) const {
    const BigInt fx = 3 * F.a * x * x + 2 * F.b * x * y + F.c * y * y;
    const BigInt fy = F.b * x * x + 2 * F.c * x * y + 3 * F.d * y * y;
    const BigInt fz = -3 * z * z;
    unsigned m = std::numeric_limits<unsigned>::max();
    for (const BigInt* g : {&fx, &fy, &fz}) {
      if (*g != 0) m = std::min(m, valuation(*g, p));
    }
    return m;
  }

  bool liftable(const BigInt& x, const BigInt& y, const BigInt& z) const {
    BigInt v = f(x, y, z);
    if (v == 0) return true;
    unsigned m = grad_val(x, y, z);
    if (m == std::numeric_limits<unsigned>::max()) return false;
    return valuation(v, p) > 2 * m;
  }

  // pattern 0: (1, s, t); pattern 1: (s, 1, t) with p | s.
  void coords(int pattern, const BigInt& s, const BigInt& t, BigInt& x, BigInt& y, BigInt& z) const {
    if (pattern == 0) {
      x = 1;
      y = s;
    } else {
      x = s;
      y = 1;
    }
    z = t;
  }

  LocalResult run() {
    LocalResult res;
    res.p = p;
    res.method = "residue-tree lifting";
    const unsigned long pu = p.get_ui();
    for (int pattern = 0; pattern < 2; ++pattern) {
      // Frontier of residue pairs (s, t) mod p^k with f = 0 mod p^k.
      std::vector<std::pair<BigInt, BigInt>> frontier;
      BigInt pk = p;
      for (unsigned long s = 0; s < (pattern == 0 ? pu : 1ul); ++s) {
        for (unsigned long t = 0; t < pu; ++t) {
          BigInt x, y, z;
          coords(pattern, BigInt(s), BigInt(t), x, y, z);
          if (mpz_divisible_p(f(x, y, z).get_mpz_t(), pk.get_mpz_t())) frontier.emplace_back(s, t);
        }
      }
      for (unsigned k = 1; !frontier.empty(); ++k) {
        for (const auto& [s, t] : frontier) {
          BigInt x, y, z;
          coords(pattern, s, t, x, y, z);
          if (liftable(x, y, z)) {
            res.status = Tri::Yes;
            res.witness = LocalWitness{x, y, z, k};
            return res;
          }
        }
        if (k >= effort) {
          hit_cap = true;
          break;
        }
        BigInt pk1 = pk * p;
        std::vector<std::pair<BigInt, BigInt>> next;
        for (const auto& [s, t] : frontier) {
          for (unsigned long i = 0; i < pu; ++i) {
            for (unsigned long j = 0; j < pu; ++j) {
              if (++nodes > node_cap) {
                hit_cap = true;
                break;
              }
              BigInt s2 = s + pk * i, t2 = t + pk * j;
              BigInt x, y, z;
              coords(pattern, s2, t2, x, y, z);
              if (mpz_divisible_p(f(x, y, z).get_mpz_t(), pk1.get_mpz_t())) next.emplace_back(s2, t2);
            }
            if (hit_cap) break;
          }
          if (hit_cap) break;
        }
        if (hit_cap) break;
        frontier.swap(next);
        pk = pk1;
      }
    }
    // Points with p | x and p | y force p^3 | z^3 = G(x, y) with z a unit: impossible.
    res.status = hit_cap ? Tri::Unknown : Tri::No;
    return res;
  }
};

// Good reduction with p > 43: the reduction is a smooth plane cubic with at least
// p + 1 - 2 sqrt(p) > 0 points; find one with y = 1 and lift it.
std::optional<LocalWitness> smooth_fast_path(const BinaryCubicForm& F, unsigned long p) {
  std::vector<long> root(p, -1);
  for (unsigned long z = 0; z < p; ++z) {
    unsigned long c = static_cast<unsigned long>((static_cast<unsigned __int128>(z) * z % p) * z % p);
    if (root[c] < 0) root[c] = static_cast<long>(z);
  }
  LocalSearch probe{F, BigInt(p), 1};
  for (unsigned long x = 0; x < p; ++x) {
    BigInt v = F.eval(BigInt(x), 1) % p;
    if (v < 0) v += p;
    long z = root[v.get_ui()];
    if (z < 0) continue;
    if (probe.liftable(BigInt(x), 1, BigInt(z))) return LocalWitness{BigInt(x), 1, BigInt(z), 1};
  }
  return std::nullopt;
}

}  // namespace

LocalResult locally_solvable(const HomogeneousSpace& C, const BigInt& p, unsigned effort) {
  if (p == 0) {
    // G(1, 0) = a is nonzero and every real number has a real cube root.
    LocalResult res{p, Tri::Yes, LocalWitness{1, 0, 0, 0}, "real cube root of G(1,0)"};
    if (C.form.a == 0) res.witness = LocalWitness{0, 1, 0, 0};
    return res;
  }
  if (!is_probable_prime(p)) throw Error(Errc::BadPrime, to_string(p) + " is not prime");
  BigInt D = disc(C.form);
  if (p > 43 && p <= BigInt(10'000'000) && !mpz_divisible_p(BigInt(3 * D).get_mpz_t(), p.get_mpz_t())) {
    if (auto w = smooth_fast_path(C.form, p.get_ui())) {
      return LocalResult{p, Tri::Yes, w, "smooth reduction, Hasse-Weil"};
    }
  }
  if (p > BigInt(100'000)) return LocalResult{p, Tri::Unknown, std::nullopt, "prime too large for residue search"};
  LocalSearch search{C.form, p, std::max(1u, effort)};
  return search.run();
}

std::vector<BigInt> default_local_primes(const BinaryCubicForm& F, unsigned primes_max) {
  std::vector<BigInt> out{0};
  for (unsigned p = 2; p <= primes_max; ++p) {
    if (is_probable_prime(BigInt(p))) out.emplace_back(p);
  }
  BigInt D = disc(F);
  if (D != 0) {
    auto f = factorize(3 * D);
    if (f) {
      for (const auto& pe : *f) out.push_back(pe.first);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Genus1Verdict hasse_verdict(const HomogeneousSpace& C, const HasseConfig& cfg,
                            const std::vector<BinaryCubicForm>* classes) {
  make_space(C.form, C.seed);
  Genus1Verdict v;
  v.form = C.form;
  v.monic_bound = cfg.monic_bound;
  v.search_bound = cfg.global_bound;

  MonicSearchResult monic = monic_representative(C.form, cfg.monic_bound);
  v.monic = monic.status;
  if (monic.status != MonicStatus::NotFoundWithinBound) {
    // The first column (p, q) of the matrix has G(p, q) = 1.
    ProjPoint P{monic.matrix.p, monic.matrix.r, 1};
    if (C.form.eval(P.x, P.y) != 1) {
      throw Error(Errc::InconsistentInputs, "monic completion does not represent 1");
    }
    v.kind = VerdictKind::HasGlobalPoint;
    v.point = P;
    v.class_enumerated = true;
    return v;
  }
  if (auto P = global_search(C, cfg.global_bound)) {
    v.kind = VerdictKind::HasGlobalPoint;
    v.point = P;
    return v;
  }
  bool unknown = false;
  for (const BigInt& p : default_local_primes(C.form, cfg.primes_max)) {
    LocalResult r = locally_solvable(C, p, cfg.local_effort);
    v.local.push_back(r);
    if (r.status == Tri::No) {
      v.kind = VerdictKind::LocallyInsolvable;
      v.insolvable_prime = p;
      return v;
    }
    if (r.status == Tri::Unknown) unknown = true;
  }
  std::vector<BinaryCubicForm> own;
  if (!classes) {
    own = enumerate_classes(C.seed.D);
    classes = &own;
  }
  BinaryCubicForm canon = reduce(C.form);
  v.class_enumerated = std::find(classes->begin(), classes->end(), canon) != classes->end();
  if (unknown || !v.class_enumerated) {
    v.kind = VerdictKind::ViolationCandidate;
  } else {
    v.kind = VerdictKind::CertifiedViolation;
    v.theorem_conditional = true;
  }
  return v;
}

}  // namespace descent3
