#include "descent3/cubicforms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <set>
#include <tuple>

#include "descent3/error.hpp"
#include "internal/int128.hpp"

namespace descent3 {

std::string to_string(const BinaryCubicForm& F) {
  return "[" + to_string(F.a) + "," + to_string(F.b) + "," + to_string(F.c) + "," + to_string(F.d) + "]";
}

std::string to_string(const QuadraticForm& q) {
  return "[" + to_string(q.A) + "," + to_string(q.B) + "," + to_string(q.C) + "]";
}

BinaryCubicForm parse_form(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(Errc::ParseError, "form must look like [a,b,c,d]: '" + text + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<BigInt> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    parts.push_back(parse_bigint(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw Error(Errc::ParseError, "form needs four coefficients: '" + text + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

BigInt disc(const BinaryCubicForm& F) {
  const auto& [a, b, c, d] = F;
  return 18 * a * b * c * d + b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d;
}

QuadraticForm hessian(const BinaryCubicForm& F) {
  const auto& [a, b, c, d] = F;
  return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

namespace {

void require_unimodular(const Mat2& M) {
  BigInt det = M.det();
  if (det != 1 && det != -1) throw Error(Errc::NotUnimodular, "det = " + to_string(det));
}

}  // namespace

BinaryCubicForm act(const BinaryCubicForm& F, const Mat2& M) {
  require_unimodular(M);
  const auto& [a, b, c, d] = F;
  const BigInt &al = M.p, &be = M.q, &ga = M.r, &de = M.s;
  BinaryCubicForm G;
  G.a = F.eval(al, ga);
  G.d = F.eval(be, de);
  G.b = 3 * a * al * al * be + b * (al * al * de + 2 * al * be * ga) + c * (2 * al * ga * de + be * ga * ga) +
        3 * d * ga * ga * de;
  G.c = 3 * a * al * be * be + b * (2 * al * be * de + be * be * ga) + c * (al * de * de + 2 * be * ga * de) +
        3 * d * ga * de * de;
  return G;
}

QuadraticForm act(const QuadraticForm& H, const Mat2& M) {
  require_unimodular(M);
  auto ev = [&](const BigInt& x, const BigInt& y) -> BigInt { return H.A * x * x + H.B * x * y + H.C * y * y; };
  QuadraticForm G;
  G.A = ev(M.p, M.r);
  G.C = ev(M.q, M.s);
  G.B = 2 * H.A * M.p * M.q + H.B * (M.p * M.s + M.q * M.r) + 2 * H.C * M.r * M.s;
  return G;
}

bool is_irreducible(const BinaryCubicForm& F) {
  if (F.a == 0 || F.d == 0) return false;
  // a^2 F(x, 1) is monic in z = a x.
  return monic_cubic_integer_roots(F.b, F.a * F.c, F.a * F.a * F.d).empty();
}

namespace {

const Mat2 kSwap{0, -1, 1, 0};
const Mat2 kReflect{1, 0, 0, -1};
const Mat2 kMinusId{-1, 0, 0, -1};

Mat2 translation(const BigInt& k) { return Mat2{1, k, 0, 1}; }

// Preference among candidates of one class: positive leading coefficient,
// smallest a, then lexicographically greatest (b, c, d).
bool better(const BinaryCubicForm& x, const BinaryCubicForm& y) {
  if (x.a != y.a) return x.a < y.a;
  return std::tie(x.b, x.c, x.d) > std::tie(y.b, y.c, y.d);
}

struct Candidate {
  BinaryCubicForm form;
  Mat2 matrix;
};

void consider(std::optional<Candidate>& best, const BinaryCubicForm& G, const Mat2& M) {
  if (G.a <= 0) return;
  if (!best || better(G, best->form)) best = Candidate{G, M};
}

// Three real roots: the Hessian is positive definite.
BinaryCubicForm reduce_real(const BinaryCubicForm& F, Mat2& T) {
  BinaryCubicForm G = F;
  T = Mat2{};
  QuadraticForm H = hessian(G);
  for (int guard = 0; guard < 100000; ++guard) {
    BigInt k = floor_div(H.A - H.B, 2 * H.A);
    if (k != 0) {
      Mat2 M = translation(k);
      G = act(G, M);
      H = act(H, M);
      T = T * M;
    }
    if (H.A > H.C) {
      G = act(G, kSwap);
      H = act(H, kSwap);
      T = T * kSwap;
      continue;
    }
    break;
  }
  // Every weakly reduced form in the class of H is H o M with entries of M in {-1, 0, 1}.
  std::optional<Candidate> best;
  for (int p = -1; p <= 1; ++p) {
    for (int q = -1; q <= 1; ++q) {
      for (int r = -1; r <= 1; ++r) {
        for (int s = -1; s <= 1; ++s) {
          Mat2 M{p, q, r, s};
          BigInt det = M.det();
          if (det != 1 && det != -1) continue;
          QuadraticForm H2 = act(H, M);
          if (abs(H2.B) > H2.A || H2.A > H2.C) continue;
          consider(best, act(G, M), T * M);
        }
      }
    }
  }
  T = best->matrix;
  return best->form;
}

int sgn(const BigInt& x) { return ::sgn(x); }

// For F with one real root theta: theta < p/q (q != 0).
bool root_below(const BinaryCubicForm& F, const BigInt& p, const BigInt& q) {
  return sgn(F.eval(p, q)) * sgn(q) == sgn(F.a);
}

// One real root: F = a (x - theta y) (x^2 + s x y + t y^2) with the quadratic
// factor positive definite; reduced when |s| < 1 < t.
BinaryCubicForm reduce_complex(const BinaryCubicForm& F, Mat2& T) {
  BinaryCubicForm G = F;
  T = Mat2{};
  for (int guard = 0; guard < 100000; ++guard) {
    // Largest k with theta < (a - b - 2ka)/a puts s + 2k into (-1, 1).
    BigInt cauchy = 2;
    for (const BigInt* x : {&G.b, &G.c, &G.d}) {
      BigInt v = abs(*x) / abs(G.a) + 2;
      if (v > cauchy) cauchy = v;
    }
    BigInt span = cauchy + abs(G.b) / abs(G.a) + 2;
    BigInt lo = -span, hi = span;  // predicate true at lo, false at hi
    auto pred = [&](const BigInt& k) { return root_below(G, G.a - G.b - 2 * k * G.a, G.a); };
    while (hi - lo > 1) {
      BigInt mid = floor_div(lo + hi, 2);
      if (pred(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (lo != 0) {
      Mat2 M = translation(lo);
      G = act(G, M);
      T = T * M;
    }
    // t < 1 iff |theta| > |d / a|.
    BigInt ad = abs(G.d), aa = abs(G.a);
    bool t_small = !root_below(G, ad, aa) || root_below(G, -ad, aa);
    if (!t_small) break;
    G = act(G, kSwap);
    T = T * kSwap;
  }
  std::optional<Candidate> best;
  for (const Mat2& M : {Mat2{}, kReflect, kMinusId, kMinusId * kReflect}) {
    consider(best, act(G, M), T * M);
  }
  T = best->matrix;
  return best->form;
}

}  // namespace

BinaryCubicForm reduce(const BinaryCubicForm& F, Mat2& M) {
  BigInt D = disc(F);
  if (D == 0) throw Error(Errc::ZeroDiscriminant, to_string(F));
  if (!is_irreducible(F)) throw Error(Errc::ReducibleForm, to_string(F));
  return D > 0 ? reduce_real(F, M) : reduce_complex(F, M);
}

BinaryCubicForm reduce(const BinaryCubicForm& F) {
  Mat2 M;
  return reduce(F, M);
}

bool equivalent(const BinaryCubicForm& F, const BinaryCubicForm& G) {
  if (disc(F) != disc(G)) {
    // still validate both inputs
    reduce(F);
    reduce(G);
    return false;
  }
  return reduce(F) == reduce(G);
}

std::optional<int> rank_from_class_count(std::size_t count) {
  std::size_t target = 2 * count + 1, p = 1;
  for (int r = 0; r < 64; ++r) {
    if (p == target) return r;
    if (p > target) break;
    p *= 3;
  }
  return std::nullopt;
}

namespace {

using detail::i128;

struct Enumerator {
  i128 D;
  std::set<std::tuple<BigInt, BigInt, BigInt, BigInt>> classes;

  void solve(i128 a, i128 b, i128 c) {
    i128 P = b * b - 3 * a * c;
    i128 delta4 = 4 * P * P * P - 27 * a * a * D;  // discriminant of the d-quadratic is 4 delta4
    if (delta4 < 0) return;
    auto r = detail::sqrt_exact_u128(static_cast<detail::u128>(delta4));
    if (!r) return;
    i128 sq = 2 * static_cast<i128>(*r);
    i128 lin = 18 * a * b * c - 4 * b * b * b;
    i128 den = 54 * a * a;
    for (i128 num : {lin + sq, lin - sq}) {
      if (num % den != 0) continue;
      i128 d = num / den;
      if (d == 0) continue;
      BinaryCubicForm F{detail::from_i128(a), detail::from_i128(b), detail::from_i128(c), detail::from_i128(d)};
      if (disc(F) != detail::from_i128(D) || !is_irreducible(F)) continue;
      BinaryCubicForm G = reduce(F);
      classes.emplace(G.a, G.b, G.c, G.d);
      if (sq == 0) break;
    }
  }
};

}  // namespace

std::vector<BinaryCubicForm> enumerate_classes(const BigInt& Dbig) {
  if (Dbig == 0) throw Error(Errc::ZeroDiscriminant, "D = 0");
  if (abs(Dbig) > BigInt("1000000000000")) {
    throw Error(Errc::InvalidArgument, "enumeration supports |D| <= 10^12");
  }
  Enumerator en{static_cast<i128>(detail::to_i64(Dbig)), {}};
  const i128 D = en.D;
  const long double absD = static_cast<long double>(D < 0 ? -D : D);

  if (D > 0) {
    // Reduced Hessian: P <= sqrt(D); 4P^3 >= 27 a^2 D; |b| <= 3a/2 + 3 sqrt(2P).
    const i128 Pmax = static_cast<i128>(detail::isqrt_u128(static_cast<detail::u128>(D)));
    for (i128 a = 1; 27 * a * a * D <= 4 * Pmax * Pmax * Pmax; ++a) {
      i128 Pmin = detail::icbrt_i128((27 * a * a * D) / 4) - 1;
      while (4 * Pmin * Pmin * Pmin < 27 * a * a * D) ++Pmin;
      if (Pmin < 1) Pmin = 1;
      i128 bmax = static_cast<i128>(1.5L * static_cast<long double>(a) +
                                    3.0L * std::sqrt(2.0L * static_cast<long double>(Pmax))) + 2;
      for (i128 b = -bmax; b <= bmax; ++b) {
        // P = b^2 - 3ac in [Pmin, Pmax].
        i128 clo = -((Pmax - b * b) / (3 * a)) - 1;  // margin on both ends; P is rechecked
        i128 chi = (b * b - Pmin) / (3 * a) + 1;
        for (i128 c = clo; c <= chi; ++c) {
          i128 P = b * b - 3 * a * c;
          if (P < Pmin || P > Pmax) continue;
          en.solve(a, b, c);
        }
      }
    }
  } else {
    // Julia-reduced: a^4 < 16|D|/27, t^3 < 16|D|/(27 a^4), |theta| < rho/a + 1/2,
    // |b| < rho + 3a/2, |c| < a (t + |theta|), rho = (|D|/3)^(1/4).
    const i128 absDi = -D;
    const long double rho = std::pow(absD / 3.0L, 0.25L);
    for (i128 a = 1; 27 * a * a * a * a < 16 * absDi; ++a) {
      long double al = static_cast<long double>(a);
      long double tmax = std::cbrt(16.0L * absD / (27.0L * al * al * al * al));
      i128 bmax = static_cast<i128>(rho + 1.5L * al) + 2;
      i128 cmax = static_cast<i128>(al * tmax + rho + 0.5L * al) + 2;
      for (i128 b = -bmax; b <= bmax; ++b) {
        for (i128 c = -cmax; c <= cmax; ++c) en.solve(a, b, c);
      }
    }
  }

  std::vector<BinaryCubicForm> out;
  out.reserve(en.classes.size());
  for (const auto& [a, b, c, d] : en.classes) out.push_back({a, b, c, d});
  if (!rank_from_class_count(out.size())) {
    throw Error(Errc::CountNotOfExpectedShape,
                std::to_string(out.size()) + " classes of discriminant " + to_string(Dbig));
  }
  return out;
}

DepressedCubic depress(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (!monic_cubic_integer_roots(a, b, c).empty()) {
    throw Error(Errc::ReduciblePolynomial, "x^3 + (" + to_string(a) + ")x^2 + (" + to_string(b) + ")x + (" +
                                               to_string(c) + ") has an integer root");
  }
  DepressedCubic dc;
  BigRat A(a);
  dc.m = A * A / 3 - BigRat(b);
  dc.n = BigRat(c) + 2 * A * A * A / 27 - A * BigRat(b) / 3;
  dc.m.canonicalize();
  dc.n.canonicalize();
  dc.thirds = (a % 3 != 0);
  return dc;
}

namespace {

// F(p, q) for |p|, |q| <= bound, scanned q ascending then p ascending.
std::optional<std::pair<BigInt, BigInt>> find_unit_value(const BinaryCubicForm& F, const BigInt& bound) {
  BigInt maxc = std::max({abs(F.a), abs(F.b), abs(F.c), abs(F.d)});
  bool small = bound <= BigInt(1000000) && maxc <= BigInt("1000000000000000000");
  if (small) {
    const i128 a = detail::to_i64(F.a), b = detail::to_i64(F.b), c = detail::to_i64(F.c),
               d = detail::to_i64(F.d);
    const std::int64_t B = detail::to_i64(bound);
    for (std::int64_t q = 0; q <= B; ++q) {
      const i128 qq = q;
      for (std::int64_t p = (q == 0 ? 1 : -B); p <= B; ++p) {
        const i128 pp = p;
        i128 v = ((a * pp + b * qq) * pp + c * qq * qq) * pp + d * qq * qq * qq;
        if (v == 1) return std::make_pair(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
        if (v == -1) return std::make_pair(BigInt(static_cast<long>(-p)), BigInt(static_cast<long>(-q)));
        if (q == 0) break;
      }
    }
    return std::nullopt;
  }
  for (BigInt q = 0; q <= bound; ++q) {
    for (BigInt p = (q == 0 ? BigInt(1) : BigInt(-bound)); p <= bound; ++p) {
      BigInt v = F.eval(p, q);
      if (v == 1) return std::make_pair(p, q);
      if (v == -1) return std::make_pair(BigInt(-p), BigInt(-q));
      if (q == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace

MonicSearchResult monic_representative(const BinaryCubicForm& F, const BigInt& bound) {
  MonicSearchResult res;
  res.bound = bound;
  std::optional<std::pair<BigInt, BigInt>> pq;
  if (F.a == 1) {
    res.status = MonicStatus::FoundMonicAlready;
    pq = std::make_pair(BigInt(1), BigInt(0));
  } else {
    pq = find_unit_value(F, bound);
    if (!pq) return res;
    res.status = MonicStatus::Found;
  }
  const auto& [p, q] = *pq;
  // |F(p, q)| = 1 forces gcd(p, q) = 1; complete (p, q) to a unimodular matrix.
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Mat2 M{p, BigInt(-t), q, s};
  if (g == -1) M = Mat2{p, t, q, BigInt(-s)};
  BinaryCubicForm G = act(F, M);
  BigInt k = floor_div(1 - G.b, 3);
  if (k != 0) {
    M = M * translation(k);
    G = act(F, M);
  }
  res.matrix = M;
  res.monic = G;
  return res;
}

CurvePoint point_from_depressed(const DepressedCubic& dc, const DiscriminantSeed& seed) {
  if (4 * dc.m * dc.m * dc.m - 27 * dc.n * dc.n != BigRat(seed.D)) {
    throw Error(Errc::DiscriminantMismatch, "4m^3 - 27n^2 != " + to_string(seed.D));
  }
  return CurvePoint::affine(-432 * seed.D, 12 * dc.m, 108 * dc.n);
}

}  // namespace descent3
