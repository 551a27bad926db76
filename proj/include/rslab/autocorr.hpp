#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rslab/poly.hpp"

namespace rslab {

inline constexpr double kAutocorrUpperExponent = 0.8190;
inline constexpr double kAutocorrLowerExponent = 0.73;

struct AutocorrProfile {
  int k = 0;
  std::size_t n = 1;
  std::int64_t max_abs = 0;  // max_{1<=j<n} |a_j|; a_0 = n is excluded
  std::size_t argmax_j = 0;  // smallest index attaining max_abs (0 when n = 1)
  std::int64_t l2 = 0;       // sum_{j>=1} a_j^2
  std::vector<std::int64_t> a;
};

// Autocorrelations of P_k. Throws CapacityError above max_generation.
AutocorrProfile autocorr_profile(int k, int max_generation = kDefaultMaxGeneration);

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;   // log C
  double residual = 0.0;    // RMS residual of the log-log fit
  double half_width = 0.0;  // 95% normal-approximation half-width of the slope
  std::size_t points = 0;
};

// Least-squares slope of log y against log x. Throws DomainError for fewer
// than two points, nonpositive data, or identical x values.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

// Slope of log max_abs against log n over k_lo..k_hi (at least 5 generations).
PowerLawFit growth_exponent(int k_lo, int k_hi);
PowerLawFit growth_exponent(std::span<const AutocorrProfile> profiles);

// max over profiles of max_abs / n^exponent.
double calibrate_autocorr_constant(std::span<const AutocorrProfile> profiles,
                                   double exponent = kAutocorrUpperExponent);

}  // namespace rslab
