#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rslab/poly.hpp"

namespace rslab {

using cplx = std::complex<double>;

// values[m] = f(exp(2 pi i m / N)).
struct GridSamples {
  std::size_t n_grid = 0;
  std::vector<cplx> values;
  int source_degree = -1;

  double angle(std::size_t m) const;
  // Mean of |values|^2; equals the coefficient energy when N > degree.
  double mean_squared_modulus() const;
};

// Zero-padded FFT evaluation. Throws DomainError if N is not a power of two
// or N < deg f + 1.
GridSamples eval_grid(const SignedPoly& f, std::size_t n_grid);

// sum_j c_j exp(i j theta_m), theta_m = 2 pi m / N + offset. Coefficient
// sequences longer than N are folded modulo N (exact for a periodic grid).
std::vector<cplx> eval_on_circle(std::span<const cplx> coeffs, std::size_t n_grid,
                                 double offset = 0.0);

std::vector<cplx> to_complex(const SignedPoly& f);

// Compensated Horner evaluation (error-free product/sum transformations).
cplx eval_point(const SignedPoly& f, cplx z);
cplx eval_point(std::span<const cplx> coeffs, cplx z);

// Real trigonometric polynomial R(t) = a_0 + 2 sum_{j>=1} a_j cos(j t).
class CosinePoly {
 public:
  CosinePoly() = default;
  explicit CosinePoly(std::vector<double> a);

  std::span<const double> coeffs() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.size(); }
  // Trigonometric degree (size - 1).
  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }

  double operator()(double t) const;
  double derivative(double t) const;

  // R and R' on theta_m = 2 pi m / N + offset.
  std::vector<double> sample(std::size_t n_grid, double offset = 0.0) const;
  std::vector<double> sample_derivative(std::size_t n_grid, double offset = 0.0) const;

  // Coefficients of A(z) = sum_{j=-d}^{d} a_|j| z^{j+d}, so R(t) = e^{-idt} A(e^{it})
  // also for complex t.
  std::vector<cplx> algebraic_coeffs() const;

 private:
  std::vector<double> a_;
};

// Aperiodic autocorrelations a_j = sum_m c_m c_{m+j}, j = 0..deg, computed by
// FFT and rounded to integers (throws Error if rounding is not clean).
std::vector<std::int64_t> autocorrelation(const SignedPoly& f);

// |f(e^{it})|^2 as a CosinePoly with a_j = autocorrelation(f)[j].
CosinePoly modulus_squared(const SignedPoly& f);

// R'(t) = -2 sum j a_j sin(j t).
double derivative_values(const CosinePoly& r, double t);

}  // namespace rslab
