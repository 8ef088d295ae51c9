#include "descent3/arith.hpp"

#include <algorithm>
#include <cctype>

#include "descent3/error.hpp"

namespace descent3 {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::ZeroInput, "zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw Error(Errc::ParseError, "empty integer");
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(Errc::ParseError, "not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRat parse_bigrat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator");
  return make_rat(num, den);
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

BigInt rho_step(const BigInt& x, const BigInt& c, const BigInt& n) {
  BigInt r = x * x + c;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Brent's variant. Returns a nontrivial factor, or nullopt when budget is spent.
std::optional<BigInt> brent_rho(const BigInt& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c_ui = 1; budget > 0; ++c_ui) {
    BigInt c(c_ui);
    BigInt y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = rho_step(y, c, n);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = rho_step(y, c, n);
          BigInt diff = abs(x - y);
          q = (q * diff) % n;
        }
        budget = budget > lim ? budget - lim : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        if (budget == 0 && g == 1) return std::nullopt;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = rho_step(ys, c, n);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

bool split_cofactor(const BigInt& n, std::vector<BigInt>& primes, std::uint64_t& budget) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return true;
  }
  for (unsigned long k = 2; k <= 3; ++k) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      for (unsigned long i = 0; i < k; ++i) {
        if (!split_cofactor(root, primes, budget)) return false;
      }
      return true;
    }
  }
  auto f = brent_rho(n, budget);
  if (!f) return false;
  BigInt other = n / *f;
  return split_cofactor(*f, primes, budget) && split_cofactor(other, primes, budget);
}

}  // namespace

std::optional<Factorization> factorize(const BigInt& n_in, const FactorOptions& opts) {
  if (n_in == 0) throw Error(Errc::ZeroInput, "factorize(0)");
  BigInt n = abs(n_in);
  Factorization out;
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e) out.emplace_back(BigInt(p), e);
  };
  take(2);
  take(3);
  for (unsigned long p = 5; p <= opts.trial_bound; p += 6) {
    if (BigInt(p) * p > n) break;
    take(p);
    take(p + 2);
  }
  if (n == 1) return out;
  BigInt bound(static_cast<unsigned long>(opts.trial_bound));
  if (n <= bound * bound) {
    out.emplace_back(n, 1);
    return out;
  }
  std::vector<BigInt> primes;
  std::uint64_t budget = opts.rho_budget;
  if (!split_cofactor(n, primes, budget)) return std::nullopt;
  std::sort(primes.begin(), primes.end());
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.emplace_back(primes[i], static_cast<unsigned>(j - i));
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& n, const FactorOptions& opts) {
  auto f = factorize(n, opts);
  if (!f) throw Error(Errc::FactorizationBudget, "cannot factor " + to_string(n));
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : *f) {
    size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Tri squarefree_status(const BigInt& n, const FactorOptions& opts) {
  if (n == 0) throw Error(Errc::ZeroInput, "squarefree test of 0");
  auto f = factorize(n, opts);
  if (!f) return Tri::Unknown;
  for (const auto& pe : *f) {
    if (pe.second > 1) return Tri::No;
  }
  return Tri::Yes;
}

bool is_squarefree(const BigInt& n, const FactorOptions& opts) {
  Tri t = squarefree_status(n, opts);
  if (t == Tri::Unknown) {
    throw Error(Errc::FactorizationBudget, "squarefreeness undecided for " + to_string(n));
  }
  return t == Tri::Yes;
}

std::optional<BigInt> cube_root_exact(const BigInt& n) {
  BigInt r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) != 0) return r;
  return std::nullopt;
}

std::optional<BigInt> sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_cubic_residue(const BigInt& y, const BigInt& l) {
  if (!is_probable_prime(l) || l % 3 != 1) {
    throw Error(Errc::BadPrime, to_string(l) + " is not a prime congruent to 1 mod 3");
  }
  BigInt r = y % l;
  if (r < 0) r += l;
  if (r == 0) throw Error(Errc::NotCoprime, to_string(l) + " divides " + to_string(y));
  BigInt e = (l - 1) / 3, out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
  return out == 1;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw Error(Errc::ZeroInput, "valuation of 0");
  BigInt m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<BigRat> rational_roots(std::span<const BigRat> coeffs) {
  std::vector<BigRat> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw Error(Errc::InvalidArgument, "zero polynomial");

  std::vector<BigRat> roots;
  size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (c.size() == 1) return roots;

  BigInt lcm = 1;
  for (const auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(c.size());
  for (const auto& q : c) ints.push_back(BigInt(q * lcm));

  const size_t deg = ints.size() - 1;
  auto vanishes = [&](const BigInt& p, const BigInt& q) {
    // sum ints[i] p^i q^(deg-i)
    BigInt acc = 0, ppow = 1;
    std::vector<BigInt> qpow(deg + 1);
    qpow[0] = 1;
    for (size_t i = 1; i <= deg; ++i) qpow[i] = qpow[i - 1] * q;
    for (size_t i = 0; i <= deg; ++i) {
      acc += ints[i] * ppow * qpow[deg - i];
      ppow *= p;
    }
    return acc == 0;
  };

  auto num_divs = divisors(ints.front());
  auto den_divs = divisors(ints.back());
  for (const auto& q : den_divs) {
    for (const auto& p : num_divs) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      if (vanishes(p, q)) roots.push_back(make_rat(p, q));
      BigInt np = -p;
      if (vanishes(np, q)) roots.push_back(make_rat(np, q));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

BigInt eval_monic_cubic(const BigInt& z, const BigInt& c2, const BigInt& c1, const BigInt& c0) {
  BigInt r = z + c2;
  r = r * z + c1;
  r = r * z + c0;
  return r;
}

// Integer roots of g on [lo, hi], where g is monotone there.
void roots_on_monotone(BigInt lo, BigInt hi, bool increasing, const BigInt& c2, const BigInt& c1,
                       const BigInt& c0, std::vector<BigInt>& out) {
  if (lo > hi) return;
  // first z in [lo, hi] with g(z) >= 0 (increasing) or g(z) <= 0 (decreasing)
  auto reached = [&](const BigInt& z) {
    int s = sgn(eval_monic_cubic(z, c2, c1, c0));
    return increasing ? s >= 0 : s <= 0;
  };
  if (!reached(hi)) return;
  while (lo < hi) {
    BigInt mid = floor_div(lo + hi, 2);
    if (reached(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (eval_monic_cubic(lo, c2, c1, c0) == 0) out.push_back(lo);
}

BigInt root_floor(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace

std::vector<BigInt> monic_cubic_integer_roots(const BigInt& c2, const BigInt& c1, const BigInt& c0) {
  // Fujiwara: every complex root has |z| <= 2 max(|c2|, |c1|^(1/2), |c0/2|^(1/3)).
  BigInt bound = abs(c2);
  bound = std::max(bound, BigInt(root_floor(abs(c1), 2) + 1));
  bound = std::max(bound, BigInt(root_floor(abs(c0), 3) + 1));
  bound = 2 * bound + 1;

  std::vector<BigInt> out;
  // g'(z) = 3z^2 + 2 c2 z + c1; critical points (-c2 -+ sqrt(c2^2 - 3 c1)) / 3.
  BigInt delta = c2 * c2 - 3 * c1;
  if (delta <= 0) {
    roots_on_monotone(-bound, bound, true, c2, c1, c0, out);
  } else {
    BigInt t;
    mpz_sqrt(t.get_mpz_t(), delta.get_mpz_t());
    BigInt k1, k2;
    if (t * t == delta) {
      k1 = floor_div(-c2 - t, 3);
      k2 = floor_div(-c2 + t, 3);
    } else {
      // sqrt(delta) lies strictly between t and t + 1, and no multiple of 3
      // falls strictly between consecutive integers.
      k1 = floor_div(-c2 - t - 1, 3);
      k2 = floor_div(-c2 + t, 3);
    }
    roots_on_monotone(-bound, k1, true, c2, c1, c0, out);
    roots_on_monotone(k1 + 1, k2, false, c2, c1, c0, out);
    roots_on_monotone(k2 + 1, bound, true, c2, c1, c0, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace descent3
