#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <string>

#include "rslab/poly.hpp"
#include "rslab/roots.hpp"

namespace rslab {

enum class NormRoute { quadrature, jensen, exact_parseval };
std::string to_string(NormRoute r);

inline constexpr double kNormZero = 0.0;
inline constexpr double kNormInfinity = std::numeric_limits<double>::infinity();

struct NormResult {
  double q = 2.0;  // kNormZero for the Mahler measure, kNormInfinity for the sup norm
  double value = 0.0;
  std::size_t n_grid = 0;
  NormRoute route = NormRoute::quadrature;
  // |value(2N) - value(N)| for quadratures; gain of the sup refinement for q = inf.
  double doubling_delta = 0.0;
};

// next power of two >= 8 (deg f + 1)
std::size_t default_norm_grid(const SignedPoly& f);

// M_q by the trapezoidal rule on the N-grid for finite q > 0; for q = inf the
// grid maximum is refined by golden-section search (angle tolerance 1e-12).
// Throws DomainError for q <= 0 or N < 4 (deg f + 1).
NormResult mq_norm(const SignedPoly& f, double q, std::size_t n_grid);
NormResult mq_norm(const SignedPoly& f, double q);

// sqrt(sum c_j^2).
NormResult parseval_norm(const SignedPoly& f);

// exp(mean log|f|) on the midpoint grid t_m = 2 pi (m + 1/2) / N. Throws
// SingularSampleError when a sample falls below 1e-13 M_2(f).
NormResult mahler_quadrature(const SignedPoly& f, std::size_t n_grid);
NormResult mahler_quadrature(const SignedPoly& f);

// |leading| prod max(1, |z_j|). Throws DomainError for an incomplete root set.
NormResult mahler_jensen(const RootSet& roots, std::complex<double> leading);

// sum_{|j|<n} a_j^2 = M_4(P_k)^4 from the integer autocorrelations.
std::int64_t m4_fourth_power(int k);
// M_4(P_k)^4 / (4^{k+1}/3). Throws DomainError for k outside [0, 20].
double m4_ratio(int k);

}  // namespace rslab
