#include "rslab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "rslab/errors.hpp"
#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"
#include "rslab/norms.hpp"
#include "rslab/rng.hpp"

namespace rslab {

namespace {

void require_grid(int k, std::size_t n_grid, const char* what) {
  if (k < 0 || k > kDefaultMaxGeneration) {
    throw CapacityError(std::string(what) + ": generation out of range");
  }
  const std::size_t need = std::size_t{16} << k;
  if (!kernels::is_power_of_two(n_grid) || n_grid < need) {
    throw DomainError(std::string(what) + ": grid N = " + std::to_string(n_grid) +
                      " must be a power of two >= 16 * 2^k = " + std::to_string(need));
  }
}

// |f|^2 / 2^{k+1} on the grid.
std::vector<double> normalized_power(const SignedPoly& f, std::size_t n_grid, double scale) {
  const auto g = eval_grid(f, n_grid);
  std::vector<double> v(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) v[m] = std::norm(g.values[m]) / scale;
  return v;
}

double cdf_deviation(const std::vector<double>& cdf) {
  const double last = static_cast<double>(cdf.size() - 1);
  double dev = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    dev = std::max(dev, std::abs(cdf[i] - static_cast<double>(i) / last));
  }
  return dev;
}

std::vector<double> cell_fractions(const SignedPoly& f, std::size_t n_grid, double scale,
                                   int radial, int angular) {
  const auto g = eval_grid(f, n_grid);
  std::vector<std::size_t> count(static_cast<std::size_t>(radial * angular), 0);
  const double two_pi = 2.0 * std::numbers::pi;
  for (const cplx& v : g.values) {
    const cplx w = v / std::sqrt(scale);
    const int ri = std::min(radial - 1, static_cast<int>(std::floor(std::norm(w) * radial)));
    const int ai = std::min(angular - 1, static_cast<int>(std::floor(
                                             (std::arg(w) + std::numbers::pi) / two_pi * angular)));
    ++count[static_cast<std::size_t>(ri * angular + ai)];
  }
  std::vector<double> frac(count.size());
  for (std::size_t c = 0; c < count.size(); ++c) {
    frac[c] = static_cast<double>(count[c]) / static_cast<double>(n_grid);
  }
  return frac;
}

double cell_deviation(const std::vector<double>& frac) {
  const double limit = 1.0 / static_cast<double>(frac.size());
  double dev = 0.0;
  for (double f : frac) dev = std::max(dev, std::abs(f - limit));
  return dev;
}

}  // namespace

std::string to_string(Family f) {
  return f == Family::saffari_cdf ? "saffari_cdf" : "montgomery_cells";
}

std::vector<double> empirical_cdf(std::span<const double> values, std::size_t points) {
  if (points < 2) throw DomainError("empirical_cdf: need at least two alpha points");
  const double last = static_cast<double>(points - 1);
  std::vector<std::size_t> hist(points + 1, 0);
  for (double v : values) {
    // smallest i with v <= i / last; points means "above every alpha"
    double idx = std::ceil(v * last);
    std::size_t i = idx <= 0.0 ? 0 : static_cast<std::size_t>(std::min(idx, last + 1.0));
    while (i > 0 && i <= points - 1 && v <= static_cast<double>(i - 1) / last) --i;
    while (i <= points - 1 && v > static_cast<double>(i) / last) ++i;
    ++hist[i];
  }
  std::vector<double> cdf(points);
  std::size_t acc = 0;
  for (std::size_t i = 0; i < points; ++i) {
    acc += hist[i];
    cdf[i] = static_cast<double>(acc) / static_cast<double>(values.size());
  }
  return cdf;
}

DiscrepancyReport saffari_discrepancy(int k, std::size_t n_grid) {
  require_grid(k, n_grid, "saffari_discrepancy");
  const auto pair = rudin_shapiro(k);
  const double scale = std::ldexp(1.0, k + 1);
  DiscrepancyReport out;
  out.k = k;
  out.n_grid = n_grid;
  out.family = Family::saffari_cdf;
  out.cells = "alpha grid i/1023, 1024 points";
  out.detail = empirical_cdf(normalized_power(pair.p, n_grid, scale));
  out.sup_dev_p = cdf_deviation(out.detail);
  out.sup_dev_q = cdf_deviation(empirical_cdf(normalized_power(pair.q, n_grid, scale)));
  out.sup_dev = std::max(out.sup_dev_p, out.sup_dev_q);
  return out;
}

DiscrepancyReport montgomery_discrepancy(int k, std::size_t n_grid, int radial, int angular) {
  require_grid(k, n_grid, "montgomery_discrepancy");
  if (radial < 1 || angular < 1 || radial > kMaxCellsPerAxis || angular > kMaxCellsPerAxis) {
    throw DomainError("montgomery_discrepancy: cell counts must lie in [1, 64]");
  }
  const auto pair = rudin_shapiro(k);
  const double scale = std::ldexp(1.0, k + 1);
  DiscrepancyReport out;
  out.k = k;
  out.n_grid = n_grid;
  out.family = Family::montgomery_cells;
  out.radial = radial;
  out.angular = angular;
  out.cells = "equal-area polar " + std::to_string(radial) + "x" + std::to_string(angular);
  out.detail = cell_fractions(pair.p, n_grid, scale, radial, angular);
  out.sup_dev_p = cell_deviation(out.detail);
  out.sup_dev_q = cell_deviation(cell_fractions(pair.q, n_grid, scale, radial, angular));
  out.sup_dev = std::max(out.sup_dev_p, out.sup_dev_q);
  return out;
}

SignedPoly ensemble_sample(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  const auto key = Philox4x32::key_from_seed(seed);
  std::vector<std::int8_t> c(n);
  Philox4x32::Block bits{};
  for (std::size_t j = 0; j < n; ++j) {
    if (j % 128 == 0) {
      bits = Philox4x32::generate({static_cast<std::uint32_t>(j / 128), 0u,
                                   static_cast<std::uint32_t>(index),
                                   static_cast<std::uint32_t>(index >> 32)},
                                  key);
    }
    const std::uint32_t word = bits[(j % 128) / 32];
    c[j] = ((word >> (j % 32)) & 1u) ? 1 : -1;
  }
  return SignedPoly(std::move(c));
}

EnsembleEstimate ensemble_mean(std::size_t n, double q, std::size_t samples, std::uint64_t seed) {
  if (samples < 100) throw DomainError("ensemble_mean: need at least 100 samples");
  if (n < 1) throw DomainError("ensemble_mean: n must be positive");
  if (!(q >= 0.0)) throw DomainError("ensemble_mean: q must be >= 0");
  const std::size_t n_grid = kernels::next_power_of_two(64 * n);
  std::vector<double> value(samples);
  const auto count = static_cast<long long>(samples);
  const double dn = static_cast<double>(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long long s = 0; s < count; ++s) {
    try {
    const auto f = ensemble_sample(n, seed, static_cast<std::uint64_t>(s));
    double v;
    if (q == 0.0) {
      v = mahler_quadrature(f, n_grid).value / std::sqrt(dn);
    } else {
      v = std::pow(mq_norm(f, q, n_grid).value, q) / std::pow(dn, 0.5 * q);
    }
    value[static_cast<std::size_t>(s)] = v;
    } catch (...) {
#pragma omp critical(rslab_ensemble_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  EnsembleEstimate out;
  out.n = n;
  out.q = q;
  out.samples = samples;
  out.seed = seed;
  out.mean = kernels::blocked_sum(value) / static_cast<double>(samples);
  std::vector<double> dev(samples);
  for (std::size_t s = 0; s < samples; ++s) dev[s] = (value[s] - out.mean) * (value[s] - out.mean);
  const double var = kernels::blocked_sum(dev) / static_cast<double>(samples - 1);
  out.std_err = std::sqrt(var / static_cast<double>(samples));
  return out;
}

}  // namespace rslab
