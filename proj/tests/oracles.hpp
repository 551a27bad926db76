#pragma once

// Brute-force reference computations, written independently of the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using ld = long double;
using lcplx = std::complex<long double>;

// Rudin-Shapiro sign: (-1)^(number of adjacent "11" pairs in the binary digits of j).
inline int rs_sign(std::uint64_t j) {
  int pairs = 0;
  for (; j; j >>= 1) pairs += (j & 3u) == 3u;
  return pairs % 2 ? -1 : 1;
}

inline std::vector<int> rs_p(int k) {
  std::vector<int> c(std::size_t{1} << k);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = rs_sign(j);
  return c;
}

// Q_k agrees with P_k on the first half and is its negative on the second.
inline std::vector<int> rs_q(int k) {
  auto c = rs_p(k);
  for (std::size_t j = c.size() / 2; j < c.size() && k > 0; ++j) c[j] = -c[j];
  return c;
}

inline lcplx eval(const std::vector<int>& c, ld t) {
  lcplx s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += ld(c[j]) * std::polar(ld(1), ld(j) * t);
  return s;
}

inline std::vector<std::int64_t> autocorr(const std::vector<int>& c) {
  std::vector<std::int64_t> a(c.size(), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t m = 0; m + j < c.size(); ++m) a[j] += c[m] * c[m + j];
  }
  return a;
}

// Legendre symbol by listing the quadratic residues.
inline std::vector<int> legendre_table(std::uint64_t p) {
  std::vector<int> t(p, -1);
  t[0] = 0;
  for (std::uint64_t x = 1; x < p; ++x) t[(x * x) % p] = 1;
  return t;
}

// sup over alpha of |F(alpha) - alpha| for F the law of cos^2(t/2), t uniform:
// F(alpha) = 1 - (2/pi) arccos(sqrt(alpha)).
inline double saffari_k1_sup() {
  double best = 0.0;
  const int steps = 2000000;
  for (int i = 0; i <= steps; ++i) {
    const double a = double(i) / steps;
    const double f = 1.0 - 2.0 / M_PI * std::acos(std::sqrt(a));
    best = std::max(best, std::abs(f - a));
  }
  return best;
}

}  // namespace oracle
