#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rslab/audit.hpp"
#include "rslab/eval.hpp"
#include "rslab/poly.hpp"
#include "rslab/roots.hpp"

namespace rslab {

inline constexpr double kDefaultDeltaCircle = 1e-8;
// Above this trigonometric degree, refinement evaluates a local interpolant
// of the (oversampled) grid instead of the full sum.
inline constexpr int kExactEvalMaxDegree = 1024;

// ---------------------------------------------------------------------------
// Zero classification and counting

struct ZeroClassification {
  double n = 1.0;
  double delta_circle = kDefaultDeltaCircle;
  double c1 = 1.0;
  int degree = 0;
  std::size_t on_circle = 0;   // ||z| - 1| <= delta_circle
  std::size_t annulus = 0;     // 1 - c1/n < |z| < 1 + c1/n
  std::size_t inside = 0;      // |z| < 1 - delta_circle
  std::size_t outside = 0;     // |z| > 1 + delta_circle
  std::size_t real_zeros = 0;  // |Im z| <= delta_circle

  double on_circle_fraction() const { return static_cast<double>(on_circle) / n; }
  double annulus_fraction() const { return static_cast<double>(annulus) / n; }
};

// Throws DomainError for an unconverged root set.
ZeroClassification classify(const RootSet& roots, double n, double delta_circle = kDefaultDeltaCircle,
                            double c1 = 1.0);

// Number of zeros in |z| < rho from the winding number of f along |z| = rho,
// sampled at N points with adaptive arc refinement. Throws ContourError when
// the contour cannot be resolved away from a zero.
int argument_principle_count(const SignedPoly& f, double rho, std::size_t n_grid);
int argument_principle_count(std::span<const cplx> coeffs, double rho, std::size_t n_grid);

struct UnimodularCount {
  std::uint64_t p = 0;
  std::size_t n_grid = 0;
  std::size_t sign_changes = 0;      // lower bound for the unimodular zeros
  std::vector<double> locations;     // refined angles of the sign changes
  std::vector<double> tangencies;    // even-order contacts (e.g. the double zero at 1)
  double fraction() const { return static_cast<double>(sign_changes) / static_cast<double>(p - 1); }
};

// Sign changes of the real function exp(-i p t / 2) f_p(e^{it}) (real part for
// p = 1 mod 4, imaginary part for p = 3 mod 4) over a full period. Throws
// DomainError for N < 4p or N not a power of two.
UnimodularCount unimodular_count_reciprocal(const FeketePoly& f, std::size_t n_grid);

struct CrossingReport {
  double eta = 0.0;
  double scale = 0.0;  // the n in R(t) = eta n
  std::size_t n_grid = 0;
  std::size_t count = 0;  // distinct solutions = transversal + tangent
  std::size_t count_transversal = 0;
  std::size_t count_tangent = 0;
  std::size_t hidden_pairs = 0;
  std::vector<double> locations;
  std::vector<double> tangent_locations;

  std::size_t count_with_multiplicity() const { return count_transversal + 2 * count_tangent; }
};

// Solutions of R(t) = eta n in [0, 2 pi). Requires N >= 16 n. Throws Error if
// the count would exceed twice the degree of R.
CrossingReport level_crossings(const CosinePoly& r, double eta, double n, std::size_t n_grid);

struct SublevelResult {
  double alpha = 0.0;
  double sup = 0.0;      // max R
  double measure = 0.0;  // radians, out of 2 pi
  std::size_t n_grid = 0;
};

// Lebesgue measure of { t : R(t) <= alpha max R }. Requires N >= 16 size(R).
SublevelResult sublevel_measure(const CosinePoly& r, double alpha, std::size_t n_grid);

enum class Part { re, im };

struct PartZeroCount {
  Part part = Part::re;
  std::size_t n_grid = 0;
  std::size_t count = 0;  // transversal sign changes
  std::size_t tangencies = 0;
  double n = 0.0;         // deg f + 1
  std::vector<double> locations;
  double ratio() const { return static_cast<double>(count) / n; }
};

// Zeros of Re f(e^{it}) or Im f(e^{it}). Requires N >= 16 (deg f + 1).
PartZeroCount realpart_zero_count(const SignedPoly& f, Part part, std::size_t n_grid);

// ---------------------------------------------------------------------------
// Instance audits

// 400 e^2 / c^2: radius constant (times 1/n) for which a large derivative
// R'(t0) >= c n^2 forces a zero of f within c4/n of e^{i t0}.
double nearest_zero_c4_bound(double c);

// For all angles t0 of a 16n-point grid with R'(t0) >= c n^2, the distance
// from e^{i t0} to the nearest root times n. lhs is the worst such value and
// rhs the bound (c4_bound <= 0 selects nearest_zero_c4_bound(c)).
AuditReport nearest_zero_audit(const SignedPoly& f, const CosinePoly& r, double c,
                               const RootSet& roots, double c4_bound = -1.0);

// |S'(a)| <= 5e sqrt(2n/r) max|S| for S without zeros in the complex disk
// D(a, r); roots_of_s are the roots of S.algebraic_coeffs(). Inconclusive if
// the zero-free condition cannot be confirmed.
AuditReport bernstein_audit(const CosinePoly& s, double a, double r, const RootSet& roots_of_s);

// min over even j and r = +-1 of max(|P_k(z_j)|^2, |P_k(z_{j+r})|^2) versus
// 2 gamma n, gamma = sin^2(pi/8), z_j the n-th roots of unity.
AuditReport root_of_unity_floor(int k);

// Zeros of S = Re/Im f(e^{it}) in [t0 - r, t0 + r] against e n r max|S| / |S(t0)|.
AuditReport zero_density_audit(const SignedPoly& f, Part part, double t0, double r);

// m{ |f|^2 <= alpha max |f|^2 } against (sqrt(alpha)/e)(u/n), u the number of
// zeros of f on the circle and n = deg f. Reports both the radian and the
// fraction-of-2pi reading; status follows the radian reading.
AuditReport sublevel_audit(const SignedPoly& f, double alpha, std::size_t zeros_on_circle,
                           std::size_t n_grid);

}  // namespace rslab
