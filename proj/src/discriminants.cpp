#include "descent3/discriminants.hpp"

#include "descent3/error.hpp"

namespace descent3 {

BigInt family_disc(const BigInt& m, const BigInt& n) { return 4 * m * m * m - 27 * n * n; }

DiscriminantSeed make_seed(const BigInt& m, const BigInt& n, const FactorOptions& opts) {
  BigInt D = family_disc(m, n);
  if (D == -4 || D == -3 || D == 0 || D == 1) {
    throw Error(Errc::DegenerateDiscriminant, "D = " + to_string(D) + " is excluded");
  }
  BigInt a = 2 * m, b = 3 * n, g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) {
    throw Error(Errc::GcdViolation,
                "gcd(2m, 3n) = " + to_string(g) + " for (m, n) = (" + to_string(m) + ", " + to_string(n) + ")");
  }
  if (!is_squarefree(D, opts)) {
    throw Error(Errc::NotSquarefree, "D = " + to_string(D) + " is not squarefree");
  }
  return DiscriminantSeed{m, n, D};
}

bool honda_divisible_by_3(const BigInt& m, const BigInt& n) {
  BigInt g, three_n = 3 * n;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), three_n.get_mpz_t());
  if (g != 1) throw Error(Errc::GcdViolation, "gcd(m, 3n) != 1");
  if (n == 0) {
    // m*h = h^3 for some h != 0 iff m is a positive square.
    return !(m > 0 && sqrt_exact(m).has_value());
  }
  for (const BigInt& h : divisors(n)) {
    for (const BigInt& s : {h, BigInt(-h)}) {
      if (m * s == n + s * s * s) return false;
    }
  }
  return true;
}

ScanSummary scan(const BigInt& m_lo, const BigInt& m_hi, const BigInt& n_lo, const BigInt& n_hi,
                 SignFilter filter, const std::function<void(const DiscriminantSeed&)>& emit,
                 const FactorOptions& opts) {
  ScanSummary s;
  for (BigInt m = m_lo; m <= m_hi; ++m) {
    for (BigInt n = n_lo; n <= n_hi; ++n) {
      ++s.examined;
      BigInt D = family_disc(m, n);
      if ((filter == SignFilter::Negative && D >= 0) || (filter == SignFilter::Positive && D <= 0)) {
        ++s.sign_filtered;
        continue;
      }
      try {
        emit(make_seed(m, n, opts));
        ++s.emitted;
      } catch (const Error& e) {
        switch (e.code()) {
          case Errc::GcdViolation: ++s.gcd_violation; break;
          case Errc::NotSquarefree: ++s.not_squarefree; break;
          case Errc::DegenerateDiscriminant: ++s.degenerate; break;
          case Errc::FactorizationBudget: ++s.undecided; break;
          default: throw;
        }
      }
    }
  }
  return s;
}

std::vector<DiscriminantSeed> scan_collect(const BigInt& m_lo, const BigInt& m_hi,
                                           const BigInt& n_lo, const BigInt& n_hi,
                                           SignFilter filter, ScanSummary* summary) {
  std::vector<DiscriminantSeed> out;
  ScanSummary s = scan(m_lo, m_hi, n_lo, n_hi, filter,
                       [&](const DiscriminantSeed& seed) { out.push_back(seed); });
  if (summary) *summary = s;
  return out;
}

std::optional<DiscriminantSeed> seed_from_disc(const BigInt& D, std::uint64_t max_steps) {
  // 4m^3 >= D, so m >= ceil(cbrt(D / 4)).
  BigInt m;
  {
    BigInt q = floor_div(D, 4), r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), 3);  // truncates toward zero
    m = r - 1;
    while (4 * m * m * m < D) ++m;
  }
  for (std::uint64_t step = 0; step < max_steps; ++step, ++m) {
    BigInt t = 4 * m * m * m - D;
    if (mpz_divisible_ui_p(t.get_mpz_t(), 27) == 0) continue;
    auto n = sqrt_exact(t / 27);
    if (!n) continue;
    try {
      return make_seed(m, *n);
    } catch (const Error&) {
      return std::nullopt;  // D itself is invalid; any representation fails the same way
    }
  }
  return std::nullopt;
}

}  // namespace descent3
