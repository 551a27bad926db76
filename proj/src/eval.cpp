#include "rslab/eval.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rslab/errors.hpp"
#include "rslab/kernels.hpp"

namespace rslab {

namespace {

struct Dd {
  double hi, lo;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// x*y = p + err exactly up to the rounding of err itself.
inline void two_prod(cplx x, cplx y, cplx& p, cplx& err) {
  const Dd p1 = two_prod(x.real(), y.real());
  const Dd p2 = two_prod(x.imag(), y.imag());
  const Dd p3 = two_prod(x.real(), y.imag());
  const Dd p4 = two_prod(x.imag(), y.real());
  const Dd re = two_sum(p1.hi, -p2.hi);
  const Dd im = two_sum(p3.hi, p4.hi);
  p = {re.hi, im.hi};
  err = {p1.lo - p2.lo + re.lo, p3.lo + p4.lo + im.lo};
}

inline void two_sum(cplx a, cplx b, cplx& s, cplx& err) {
  const Dd re = two_sum(a.real(), b.real());
  const Dd im = two_sum(a.imag(), b.imag());
  s = {re.hi, im.hi};
  err = {re.lo, im.lo};
}

template <class Coeff>
cplx comp_horner(std::span<const Coeff> c, cplx z) {
  if (c.empty()) return 0.0;
  cplx r = static_cast<cplx>(c.back());
  cplx e = 0.0;
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    cplx p, pe, se;
    two_prod(r, z, p, pe);
    two_sum(p, static_cast<cplx>(c[j]), r, se);
    e = e * z + (pe + se);
  }
  return r + e;
}

}  // namespace

double GridSamples::angle(std::size_t m) const {
  return 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n_grid);
}

double GridSamples::mean_squared_modulus() const {
  std::vector<double> sq(values.size());
  for (std::size_t m = 0; m < values.size(); ++m) sq[m] = std::norm(values[m]);
  return kernels::blocked_sum(sq) / static_cast<double>(values.size());
}

std::vector<cplx> to_complex(const SignedPoly& f) {
  std::vector<cplx> c(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) c[j] = static_cast<double>(f[j]);
  return c;
}

std::vector<cplx> eval_on_circle(std::span<const cplx> coeffs, std::size_t n_grid, double offset) {
  if (!kernels::is_power_of_two(n_grid)) {
    throw DomainError("grid size " + std::to_string(n_grid) + " is not a power of two");
  }
  std::vector<cplx> buf(n_grid, 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    cplx c = coeffs[j];
    if (offset != 0.0) c *= std::polar(1.0, static_cast<double>(j) * offset);
    buf[j % n_grid] += c;
  }
  kernels::fft(buf, kernels::Direction::backward);
  return buf;
}

GridSamples eval_grid(const SignedPoly& f, std::size_t n_grid) {
  if (!kernels::is_power_of_two(n_grid)) {
    throw DomainError("eval_grid: N = " + std::to_string(n_grid) + " is not a power of two");
  }
  if (n_grid < f.size()) {
    throw DomainError("eval_grid: N = " + std::to_string(n_grid) + " < deg f + 1 = " +
                      std::to_string(f.size()));
  }
  GridSamples out;
  out.n_grid = n_grid;
  out.source_degree = f.degree();
  out.values = eval_on_circle(to_complex(f), n_grid);
  return out;
}

cplx eval_point(const SignedPoly& f, cplx z) { return comp_horner(f.coeffs(), z); }

cplx eval_point(std::span<const cplx> coeffs, cplx z) { return comp_horner(coeffs, z); }

CosinePoly::CosinePoly(std::vector<double> a) : a_(std::move(a)) {}

double CosinePoly::operator()(double t) const {
  if (a_.empty()) return 0.0;
  // Re(a_0 + 2 sum a_j w^j) by Horner in w = e^{it}.
  const cplx w = std::polar(1.0, t);
  cplx acc = 0.0;
  for (std::size_t j = a_.size() - 1; j >= 1; --j) acc = (acc + 2.0 * a_[j]) * w;
  return a_[0] + acc.real();
}

double CosinePoly::derivative(double t) const {
  if (a_.size() < 2) return 0.0;
  // d/dt Re(sum b_j e^{ijt}) = -Im(sum j b_j e^{ijt}).
  const cplx w = std::polar(1.0, t);
  cplx acc = 0.0;
  for (std::size_t j = a_.size() - 1; j >= 1; --j) {
    acc = (acc + 2.0 * static_cast<double>(j) * a_[j]) * w;
  }
  return -acc.imag();
}

std::vector<double> CosinePoly::sample(std::size_t n_grid, double offset) const {
  std::vector<cplx> b(a_.size());
  for (std::size_t j = 0; j < a_.size(); ++j) b[j] = (j == 0 ? 1.0 : 2.0) * a_[j];
  const auto v = eval_on_circle(b, n_grid, offset);
  std::vector<double> out(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) out[m] = v[m].real();
  return out;
}

std::vector<double> CosinePoly::sample_derivative(std::size_t n_grid, double offset) const {
  std::vector<cplx> b(a_.size());
  for (std::size_t j = 0; j < a_.size(); ++j) b[j] = 2.0 * static_cast<double>(j) * a_[j];
  const auto v = eval_on_circle(b, n_grid, offset);
  std::vector<double> out(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) out[m] = -v[m].imag();
  return out;
}

std::vector<cplx> CosinePoly::algebraic_coeffs() const {
  if (a_.empty()) return {};
  const std::size_t d = a_.size() - 1;
  std::vector<cplx> c(2 * d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    c[d + j] = a_[j];
    c[d - j] = a_[j];
  }
  return c;
}

std::vector<std::int64_t> autocorrelation(const SignedPoly& f) {
  const std::size_t n = f.size();
  if (n == 0) return {};
  const std::size_t m = kernels::next_power_of_two(2 * n);
  std::vector<cplx> buf(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) buf[j] = static_cast<double>(f[j]);
  kernels::fft(buf, kernels::Direction::forward);
  for (auto& v : buf) v = std::norm(v);
  kernels::fft(buf, kernels::Direction::backward);
  std::vector<std::int64_t> a(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = buf[j].real() * scale;
    const double r = std::nearbyint(x);
    if (std::abs(x - r) > 0.25) {
      throw Error("autocorrelation: FFT result not integral at lag " + std::to_string(j));
    }
    a[j] = static_cast<std::int64_t>(r);
  }
  return a;
}

CosinePoly modulus_squared(const SignedPoly& f) {
  if (f.is_zero()) throw DomainError("modulus_squared: zero polynomial");
  const auto a = autocorrelation(f);
  return CosinePoly(std::vector<double>(a.begin(), a.end()));
}

double derivative_values(const CosinePoly& r, double t) { return r.derivative(t); }

}  // namespace rslab
