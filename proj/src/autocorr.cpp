#include "rslab/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rslab/errors.hpp"
#include "rslab/eval.hpp"

namespace rslab {

AutocorrProfile autocorr_profile(int k, int max_generation) {
  const auto pair = rudin_shapiro(k, max_generation);
  AutocorrProfile out;
  out.k = k;
  out.n = pair.n;
  out.a = autocorrelation(pair.p);
  for (std::size_t j = 1; j < out.a.size(); ++j) {
    const std::int64_t v = std::llabs(out.a[j]);
    if (v > out.max_abs) {
      out.max_abs = v;
      out.argmax_j = j;
    }
    out.l2 += out.a[j] * out.a[j];
  }
  return out;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("fit_power_law: need at least two (x, y) pairs");
  }
  const std::size_t m = x.size();
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit_power_law: data must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_power_law: degenerate x range");
  PowerLawFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(m));
  if (m > 2) fit.half_width = 1.96 * std::sqrt(ss / static_cast<double>(m - 2) / sxx);
  return fit;
}

PowerLawFit growth_exponent(std::span<const AutocorrProfile> profiles) {
  if (profiles.size() < 5) {
    throw DomainError("growth_exponent: range must cover at least 5 generations");
  }
  std::vector<double> x, y;
  for (const auto& p : profiles) {
    x.push_back(static_cast<double>(p.n));
    y.push_back(static_cast<double>(p.max_abs));
  }
  return fit_power_law(x, y);
}

PowerLawFit growth_exponent(int k_lo, int k_hi) {
  if (k_hi - k_lo + 1 < 5) {
    throw DomainError("growth_exponent: range " + std::to_string(k_lo) + ".." +
                      std::to_string(k_hi) + " has fewer than 5 generations");
  }
  if (k_lo < 0 || k_hi > kDefaultMaxGeneration) {
    throw CapacityError("growth_exponent: generation outside [0, " +
                        std::to_string(kDefaultMaxGeneration) + "]");
  }
  std::vector<AutocorrProfile> profiles(static_cast<std::size_t>(k_hi - k_lo + 1));
#pragma omp parallel for schedule(dynamic)
  for (int k = k_lo; k <= k_hi; ++k) {
    profiles[static_cast<std::size_t>(k - k_lo)] = autocorr_profile(k);
  }
  return growth_exponent(profiles);
}

double calibrate_autocorr_constant(std::span<const AutocorrProfile> profiles, double exponent) {
  double c = 0.0;
  for (const auto& p : profiles) {
    c = std::max(c, static_cast<double>(p.max_abs) / std::pow(static_cast<double>(p.n), exponent));
  }
  return c;
}

}  // namespace rslab
