#pragma once

// Sign-change machinery shared by the crossing, real-part, Fekete and
// sublevel computations: a real function y(t) is sampled on a uniform grid,
// transversal zeros are bracketed by sign changes and refined by bisection,
// and near-zero local extrema are refined to classify tangencies or to
// recover pairs of zeros that fall between two samples.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rslab::detail {

using RealFn = std::function<double(double)>;

inline constexpr double kAngleTol = 1e-12;

struct Extremum {
  double t = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum (sign = +1) or minimum (sign = -1)
// of fn on [a, b].
Extremum golden_section(const RealFn& fn, double a, double b, int sign, double tol = kAngleTol);

// Refines the largest `candidates` local maxima of periodic samples taken at
// t_m = m h and returns the best one.
Extremum refine_max(std::span<const double> samples, double h, const RealFn& fn,
                    std::size_t candidates);

// Bisection for a sign change of fn on [a, b] given the endpoint values.
double bisect(const RealFn& fn, double a, double b, double fa, double tol = kAngleTol);

// Local barycentric Lagrange interpolation of uniformly sampled, periodic
// (wrap_sign = +1) or antiperiodic (wrap_sign = -1) data.
class PeriodicInterpolant {
 public:
  PeriodicInterpolant(std::vector<double> samples, double theta0, double wrap_sign,
                      int half_width = 8);
  double operator()(double t) const;

 private:
  double at(long long m) const;

  std::vector<double> y_;
  double theta0_;
  double h_;
  double wrap_;
  int w_;
  std::vector<double> weights_;
};

struct ScanInput {
  std::span<const double> samples;  // y(theta0 + m * step), m = 0..N-1, step = 2 pi / N
  double theta0 = 0.0;
  double wrap_sign = 1.0;  // y(t + 2 pi) = wrap_sign * y(t)
  RealFn eval;             // y at arbitrary t, consistent with the samples
  double tangent_tol = 0.0;
  double angle_tol = kAngleTol;
};

struct ScanResult {
  std::vector<double> crossings;   // transversal zeros in [theta0, theta0 + 2 pi)
  std::vector<double> tangencies;  // even-order contacts within tangent_tol
  std::size_t hidden_pairs = 0;    // zero pairs found between two samples of equal sign
};

ScanResult scan_zeros(const ScanInput& in);

// Maps an angle into [0, 2 pi).
double wrap_angle(double t);

}  // namespace rslab::detail
