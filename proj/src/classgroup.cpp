#include "descent3/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "descent3/error.hpp"
#include "internal/int128.hpp"

namespace descent3 {

namespace {

using detail::i128;

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 mod128(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

// g = gcd(a, b) = x a + y b.
i128 ext_gcd(i128 a, i128 b, i128& x, i128& y) {
  i128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    i128 q = floor_div128(a, b);
    i128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace

ReducedForm reduce_form(std::int64_t a0, std::int64_t b0, std::int64_t c0) {
  i128 a = a0, b = b0, c = c0;
  while (true) {
    if (b > a || b <= -a) {
      // b -> b + 2ka in (-a, a]
      i128 k = floor_div128(a - b, 2 * a);
      i128 nb = b + 2 * k * a;
      c = c + k * b + k * k * a;
      b = nb;
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    if (a == c && b < 0) b = -b;
    break;
  }
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c)};
}

ReducedForm compose(const ReducedForm& f, const ReducedForm& g, std::int64_t D) {
  const i128 a1 = f.a, b1 = f.b, a2 = g.a, b2 = g.b;
  const i128 beta = (b1 + b2) / 2;
  i128 x1, y1, x2, w;
  i128 g1 = ext_gcd(a1, a2, x1, y1);
  i128 e = ext_gcd(g1, beta, x2, w);
  i128 u = x2 * x1, v = x2 * y1;
  i128 a3 = (a1 / e) * (a2 / e);
  i128 m = 2 * a3;
  // b3 = (u a1 b2 + v a2 b1 + w (b1 b2 + D)/2) / e mod 2 a3; magnitudes stay far below 2^127.
  i128 q = (b1 * b2 + static_cast<i128>(D)) / 2;
  i128 num = u * a1 * b2 + v * a2 * b1 + w * q;
  i128 b3 = mod128(num / e, m);
  if (b3 > a3) b3 -= m;
  i128 c3 = (b3 * b3 - D) / (4 * a3);
  return reduce_form(static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3), static_cast<std::int64_t>(c3));
}

ClassGroupInfo class_group_imaginary(const BigInt& Dbig) {
  if (Dbig >= 0) throw Error(Errc::PositiveDiscriminant, "D = " + to_string(Dbig));
  if (Dbig == -3 || Dbig == -4) throw Error(Errc::ExcludedDiscriminant, "D = " + to_string(Dbig));
  if (Dbig < BigInt("-1000000000000")) throw Error(Errc::InvalidArgument, "|D| > 10^12");
  const std::int64_t D = detail::to_i64(Dbig);
  if (((D % 4) + 4) % 4 > 1) throw Error(Errc::InvalidArgument, "D must be 0 or 1 mod 4");

  ClassGroupInfo info;
  const std::int64_t amax = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(-D) / 3.0L)) + 1;
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - D) % 2) != 0) continue;
      i128 num = static_cast<i128>(b) * b - D;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = static_cast<std::int64_t>(num / (4 * a));
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      info.forms.push_back({a, b, c});
    }
  }
  info.h = info.forms.size();

  // Orders of all elements by repeated composition.
  const ReducedForm id = info.forms.front();
  std::vector<std::uint64_t> orders;
  orders.reserve(info.h);
  for (const ReducedForm& f : info.forms) {
    ReducedForm x = f;
    std::uint64_t ord = 1;
    while (!(x == id)) {
      x = compose(x, f, D);
      ++ord;
    }
    orders.push_back(ord);
  }

  // For each prime p | h: #{x : ord(x) | p^j} = p^(sum_i min(j, e_i)).
  std::map<std::uint64_t, std::vector<int>> exponents;  // p -> e_i descending
  std::uint64_t rest = info.h;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<int> layer;  // r_j = #{i : e_i >= j}
    int prev_log = 0;
    std::uint64_t pj = 1;
    for (int j = 1; j <= e; ++j) {
      pj *= p;
      std::uint64_t cnt = 0;
      for (std::uint64_t o : orders) {
        if (pj % o == 0) ++cnt;
      }
      int lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      layer.push_back(lg - prev_log);
      prev_log = lg;
    }
    std::vector<int> es;
    int r1 = layer.empty() ? 0 : layer[0];
    for (int i = 0; i < r1; ++i) {
      int ei = 0;
      for (int rj : layer) {
        if (rj > i) ++ei;
      }
      es.push_back(ei);
    }
    exponents[p] = es;
    if (p == 3) info.three_rank = r1;
  }
  std::size_t width = 0;
  for (const auto& kv : exponents) width = std::max(width, kv.second.size());
  for (std::size_t i = 0; i < width; ++i) {
    std::uint64_t d = 1;
    for (const auto& [p, es] : exponents) {
      if (i < es.size()) {
        for (int k = 0; k < es[i]; ++k) d *= p;
      }
    }
    info.invariants.push_back(d);
  }
  return info;
}

}  // namespace descent3
