#include "scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rslab::detail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int sgn(double v) { return v < 0.0 ? -1 : 1; }

}  // namespace

double wrap_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

Extremum golden_section(const RealFn& fn, double a, double b, int sign, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = sign * fn(c);
  double fd = sign * fn(d);
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sign * fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sign * fn(d);
    }
  }
  const double t = fc > fd ? c : d;
  return {t, sign * std::max(fc, fd)};
}

Extremum refine_max(std::span<const double> y, double h, const RealFn& fn,
                    std::size_t candidates) {
  const std::size_t n = y.size();
  std::vector<std::size_t> peaks;
  for (std::size_t m = 0; m < n; ++m) {
    const double l = y[(m + n - 1) % n];
    const double r = y[(m + 1) % n];
    if (y[m] >= l && y[m] >= r) peaks.push_back(m);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
    return y[a] > y[b] || (y[a] == y[b] && a < b);
  });
  if (peaks.size() > candidates) peaks.resize(candidates);
  Extremum best{0.0, -INFINITY};
  for (std::size_t m : peaks) {
    const double t = static_cast<double>(m) * h;
    Extremum e = golden_section(fn, t - h, t + h, +1);
    if (y[m] > e.value) e = {t, y[m]};
    if (e.value > best.value) best = e;
  }
  best.t = wrap_angle(best.t);
  return best;
}

double bisect(const RealFn& fn, double a, double b, double fa, double tol) {
  const int sa = sgn(fa);
  for (int it = 0; it < 100 && (b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    if (sgn(fn(m)) == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

PeriodicInterpolant::PeriodicInterpolant(std::vector<double> samples, double theta0,
                                         double wrap_sign, int half_width)
    : y_(std::move(samples)),
      theta0_(theta0),
      h_(kTwoPi / static_cast<double>(y_.size())),
      wrap_(wrap_sign),
      w_(half_width) {
  // Barycentric weights for 2w equispaced nodes: (-1)^i C(2w-1, i).
  const int m = 2 * w_;
  weights_.resize(static_cast<std::size_t>(m));
  double binom = 1.0;
  for (int i = 0; i < m; ++i) {
    weights_[static_cast<std::size_t>(i)] = (i % 2 == 0 ? 1.0 : -1.0) * binom;
    binom = binom * (m - 1 - i) / (i + 1);
  }
}

double PeriodicInterpolant::at(long long m) const {
  const auto n = static_cast<long long>(y_.size());
  long long q = m / n;
  long long r = m % n;
  if (r < 0) {
    r += n;
    --q;
  }
  const double v = y_[static_cast<std::size_t>(r)];
  return (q % 2 != 0) ? wrap_ * v : v;
}

double PeriodicInterpolant::operator()(double t) const {
  const double u = (t - theta0_) / h_;
  const double base = std::floor(u);
  const double frac = u - base;
  const auto m0 = static_cast<long long>(base);
  if (frac == 0.0) return at(m0);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 2 * w_; ++i) {
    const long long node = m0 - w_ + 1 + i;
    const double x = frac - static_cast<double>(node - m0);
    const double c = weights_[static_cast<std::size_t>(i)] / x;
    num += c * at(node);
    den += c;
  }
  return num / den;
}

ScanResult scan_zeros(const ScanInput& in) {
  const std::size_t n = in.samples.size();
  const double h = kTwoPi / static_cast<double>(n);
  auto y = [&](long long m) {
    const auto sn = static_cast<long long>(n);
    if (m < 0) return in.wrap_sign * in.samples[static_cast<std::size_t>(m + sn)];
    if (m >= sn) return in.wrap_sign * in.samples[static_cast<std::size_t>(m - sn)];
    return in.samples[static_cast<std::size_t>(m)];
  };
  auto theta = [&](long long m) { return in.theta0 + static_cast<double>(m) * h; };

  // bracket m covers [theta_m, theta_{m+1}]
  std::vector<std::uint8_t> bracket(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    const auto sm = static_cast<long long>(m);
    if (sgn(y(sm)) != sgn(y(sm + 1))) bracket[m] = 1;
  }

  ScanResult out;
  std::vector<double> hidden;
  double last_tangency = -INFINITY;
  for (std::size_t m = 0; m < n; ++m) {
    const auto sm = static_cast<long long>(m);
    const double yl = y(sm - 1), ym = y(sm), yr = y(sm + 1);
    const bool is_max = ym >= yl && ym >= yr;
    const bool is_min = ym <= yl && ym <= yr;
    if (!(is_max || is_min)) continue;
    if (std::abs(ym) > std::abs(yl) || std::abs(ym) > std::abs(yr)) continue;
    const Extremum e = golden_section(in.eval, theta(sm - 1), theta(sm + 1), is_max ? 1 : -1);
    if (std::abs(e.value) <= in.tangent_tol) {
      if (e.t - last_tangency > 0.5 * h) {
        out.tangencies.push_back(wrap_angle(e.t));
        last_tangency = e.t;
      }
      bracket[(m + n - 1) % n] = 0;
      bracket[m] = 0;
    } else if (sgn(e.value) != sgn(ym) && sgn(yl) == sgn(ym) && sgn(yr) == sgn(ym)) {
      const bool dup = !hidden.empty() && std::abs(hidden.back() - e.t) < 0.5 * h;
      if (!dup) {
        hidden.push_back(e.t);
        out.crossings.push_back(wrap_angle(bisect(in.eval, theta(sm - 1), e.t, yl, in.angle_tol)));
        out.crossings.push_back(wrap_angle(bisect(in.eval, e.t, theta(sm + 1), e.value, in.angle_tol)));
        ++out.hidden_pairs;
      }
    }
  }
  if (out.tangencies.size() > 1 &&
      out.tangencies.front() + kTwoPi - out.tangencies.back() < 0.5 * h) {
    out.tangencies.pop_back();
  }

  for (std::size_t m = 0; m < n; ++m) {
    if (!bracket[m]) continue;
    const auto sm = static_cast<long long>(m);
    out.crossings.push_back(wrap_angle(bisect(in.eval, theta(sm), theta(sm + 1), y(sm), in.angle_tol)));
  }
  std::sort(out.crossings.begin(), out.crossings.end());
  std::sort(out.tangencies.begin(), out.tangencies.end());
  return out;
}

}  // namespace rslab::detail
