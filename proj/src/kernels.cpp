#include "rslab/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rslab/errors.hpp"

namespace rslab::kernels {

namespace {

constexpr std::size_t kSumBlock = 4096;
constexpr std::size_t kParallelFftMin = std::size_t{1} << 14;

inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

std::vector<cplx> twiddles(std::size_t n, Direction dir) {
  std::vector<cplx> tw(n / 2);
  const double sign = dir == Direction::forward ? -1.0 : 1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    tw[k] = {std::cos(ang), sign * std::sin(ang)};
  }
  return tw;
}

unsigned log2_exact(std::size_t n) {
  unsigned b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

std::size_t bit_reverse(std::size_t i, unsigned bits) {
  std::size_t r = 0;
  for (unsigned b = 0; b < bits; ++b) {
    r = (r << 1) | (i & 1);
    i >>= 1;
  }
  return r;
}

void check_size(std::size_t n) {
  if (!is_power_of_two(n)) throw DomainError("fft: size must be a power of two");
}

// Per-root Aberth update shared by the serial and parallel sweeps.
struct HornerOut {
  cplx value, deriv;
  double bound;
};

HornerOut horner_with_bound(std::span<const cplx> c, std::span<const double> abs_c, cplx z) {
  const std::size_t d = c.size() - 1;
  cplx p = c[d];
  cplx dp = 0.0;
  double b = abs_c[d];
  const double az = std::abs(z);
  for (std::size_t j = d; j-- > 0;) {
    dp = mul(dp, z) + p;
    p = mul(p, z) + c[j];
    b = b * az + abs_c[j];
  }
  return {p, dp, b};
}

bool update_root(const AberthProblem& pb, std::span<const cplx> z_old, std::size_t i,
                 cplx& z_new) {
  const std::size_t d = pb.coeffs.size() - 1;
  const cplx z = z_old[i];
  cplx log_deriv;  // f'(z) / f(z)
  if (std::abs(z) <= 1.0) {
    const auto h = horner_with_bound(pb.coeffs, pb.abs_coeffs, z);
    if (std::abs(h.value) <= pb.stop_factor * h.bound) return true;
    log_deriv = h.deriv / h.value;
  } else {
    // f(z) = z^d g(w), w = 1/z, g the reversed polynomial.
    const cplx w = 1.0 / z;
    const auto h = horner_with_bound(pb.reversed, pb.abs_reversed, w);
    if (std::abs(h.value) <= pb.stop_factor * h.bound) return true;
    log_deriv = (static_cast<double>(d) - w * h.deriv / h.value) * w;
  }
  cplx s = 0.0;
  for (std::size_t j = 0; j < z_old.size(); ++j) {
    if (j != i) s += 1.0 / (z - z_old[j]);
  }
  const cplx denom = log_deriv - s;
  if (denom == cplx(0.0)) {
    z_new = z;
    return false;
  }
  const cplx corr = 1.0 / denom;
  z_new = z - corr;
  return std::abs(corr) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z);
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

AberthProblem make_aberth_problem(std::span<const cplx> coeffs) {
  AberthProblem pb;
  pb.coeffs.assign(coeffs.begin(), coeffs.end());
  pb.reversed.assign(coeffs.rbegin(), coeffs.rend());
  for (auto c : pb.coeffs) pb.abs_coeffs.push_back(std::abs(c));
  for (auto c : pb.reversed) pb.abs_reversed.push_back(std::abs(c));
  const double d = static_cast<double>(coeffs.size() - 1);
  pb.stop_factor = 2.0 * (d + 1.0) * std::numeric_limits<double>::epsilon();
  return pb;
}

// ---------------------------------------------------------------------------
// serial references

namespace serial {

void fft(std::span<cplx> a, Direction dir) {
  const std::size_t n = a.size();
  check_size(n);
  if (n == 1) return;
  const unsigned bits = log2_exact(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = bit_reverse(i, bits);
    if (i < r) std::swap(a[i], a[r]);
  }
  const auto tw = twiddles(n, dir);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[base + j];
        const cplx v = mul(a[base + j + half], tw[j * stride]);
        a[base + j] = u + v;
        a[base + j + half] = u - v;
      }
    }
  }
}

double blocked_sum(std::span<const double> x) {
  const std::size_t nb = (x.size() + kSumBlock - 1) / kSumBlock;
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    double s = 0.0;
    const std::size_t end = std::min(x.size(), (b + 1) * kSumBlock);
    for (std::size_t i = b * kSumBlock; i < end; ++i) s += x[i];
    total += s;
  }
  return total;
}

std::vector<std::int64_t> autocorrelation_direct(std::span<const std::int8_t> c) {
  const std::size_t n = c.size();
  std::vector<std::int64_t> a(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t s = 0;
    for (std::size_t m = 0; m + j < n; ++m) s += c[m] * c[m + j];
    a[j] = s;
  }
  return a;
}

std::size_t aberth_sweep(const AberthProblem& problem, std::span<const cplx> z_old,
                         std::span<cplx> z_new, std::span<std::uint8_t> done) {
  std::size_t active = 0;
  for (std::size_t i = 0; i < z_old.size(); ++i) {
    if (done[i]) {
      z_new[i] = z_old[i];
      continue;
    }
    z_new[i] = z_old[i];
    if (update_root(problem, z_old, i, z_new[i])) {
      done[i] = 1;
    } else {
      ++active;
    }
  }
  return active;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP versions

void fft(std::span<cplx> a, Direction dir) {
  const std::size_t n = a.size();
  check_size(n);
  if (n < kParallelFftMin) {
    serial::fft(a, dir);
    return;
  }
  const unsigned bits = log2_exact(n);
  const auto tw = twiddles(n, dir);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
      const auto r = static_cast<std::ptrdiff_t>(bit_reverse(static_cast<std::size_t>(i), bits));
      if (i < r) std::swap(a[i], a[r]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n / len;
      const auto blocks = static_cast<std::ptrdiff_t>(n / len);
      if (blocks >= 64) {
#pragma omp for schedule(static)
        for (std::ptrdiff_t b = 0; b < blocks; ++b) {
          const std::size_t base = static_cast<std::size_t>(b) * len;
          for (std::size_t j = 0; j < half; ++j) {
            const cplx u = a[base + j];
            const cplx v = mul(a[base + j + half], tw[j * stride]);
            a[base + j] = u + v;
            a[base + j + half] = u - v;
          }
        }
      } else {
        for (std::size_t base = 0; base < n; base += len) {
#pragma omp for schedule(static)
          for (std::ptrdiff_t sj = 0; sj < static_cast<std::ptrdiff_t>(half); ++sj) {
            const auto j = static_cast<std::size_t>(sj);
            const cplx u = a[base + j];
            const cplx v = mul(a[base + j + half], tw[j * stride]);
            a[base + j] = u + v;
            a[base + j + half] = u - v;
          }
        }
      }
    }
  }
}

double blocked_sum(std::span<const double> x) {
  const std::size_t nb = (x.size() + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static) if (nb > 4)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
    double s = 0.0;
    const std::size_t begin = static_cast<std::size_t>(b) * kSumBlock;
    const std::size_t end = std::min(x.size(), begin + kSumBlock);
    for (std::size_t i = begin; i < end; ++i) s += x[i];
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

std::vector<std::int64_t> autocorrelation_direct(std::span<const std::int8_t> c) {
  const std::size_t n = c.size();
  std::vector<std::int64_t> a(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t sj = 0; sj < static_cast<std::ptrdiff_t>(n); ++sj) {
    const auto j = static_cast<std::size_t>(sj);
    std::int64_t s = 0;
    for (std::size_t m = 0; m + j < n; ++m) s += c[m] * c[m + j];
    a[j] = s;
  }
  return a;
}

std::size_t aberth_sweep(const AberthProblem& problem, std::span<const cplx> z_old,
                         std::span<cplx> z_new, std::span<std::uint8_t> done) {
  std::size_t active = 0;
  const auto n = static_cast<std::ptrdiff_t>(z_old.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : active)
  for (std::ptrdiff_t si = 0; si < n; ++si) {
    const auto i = static_cast<std::size_t>(si);
    z_new[i] = z_old[i];
    if (done[i]) continue;
    if (update_root(problem, z_old, i, z_new[i])) {
      done[i] = 1;
    } else {
      ++active;
    }
  }
  return active;
}

}  // namespace rslab::kernels
