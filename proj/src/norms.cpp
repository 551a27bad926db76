#include "rslab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"
#include "scan.hpp"

namespace rslab {

namespace {

void check_grid(const SignedPoly& f, std::size_t n_grid, const char* who) {
  if (!kernels::is_power_of_two(n_grid)) {
    throw DomainError(std::string(who) + ": grid size must be a power of two");
  }
  if (n_grid < 4 * f.size()) {
    throw DomainError(std::string(who) + ": grid size " + std::to_string(n_grid) +
                      " below 4 (deg f + 1) = " + std::to_string(4 * f.size()));
  }
}

double power_mean(std::span<const cplx> v, double q, std::size_t stride) {
  std::vector<double> terms;
  terms.reserve(v.size() / stride);
  for (std::size_t m = 0; m < v.size(); m += stride) terms.push_back(std::pow(std::abs(v[m]), q));
  return kernels::blocked_sum(terms) / static_cast<double>(terms.size());
}

double log_mean(const SignedPoly& f, std::size_t n_grid) {
  const auto v = eval_on_circle(to_complex(f), n_grid, std::numbers::pi / static_cast<double>(n_grid));
  const double floor = 1e-13 * std::sqrt(static_cast<double>(f.energy()));
  std::vector<double> logs(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) {
    const double a = std::abs(v[m]);
    if (a <= floor) {
      const double t = 2.0 * std::numbers::pi * (static_cast<double>(m) + 0.5) /
                       static_cast<double>(n_grid);
      throw SingularSampleError("mahler_quadrature: |f| vanishes at angle " + std::to_string(t), t);
    }
    logs[m] = std::log(a);
  }
  return kernels::blocked_sum(logs) / static_cast<double>(n_grid);
}

double sup_modulus(const SignedPoly& f, std::size_t n_grid, double& grid_max) {
  const auto v = eval_on_circle(to_complex(f), n_grid);
  std::vector<double> mod(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) mod[m] = std::abs(v[m]);
  grid_max = *std::max_element(mod.begin(), mod.end());
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n_grid);
  auto eval = [&](double t) { return std::abs(eval_point(f, std::polar(1.0, t))); };
  return detail::refine_max(mod, h, eval, 16).value;
}

}  // namespace

std::string to_string(NormRoute r) {
  switch (r) {
    case NormRoute::quadrature:
      return "quadrature";
    case NormRoute::jensen:
      return "jensen";
    case NormRoute::exact_parseval:
      return "exact-parseval";
  }
  return "?";
}

std::size_t default_norm_grid(const SignedPoly& f) {
  return kernels::next_power_of_two(8 * std::max<std::size_t>(f.size(), 1));
}

NormResult mq_norm(const SignedPoly& f, double q, std::size_t n_grid) {
  if (!(q > 0.0)) throw DomainError("mq_norm: q must be positive; use mahler_quadrature for q = 0");
  check_grid(f, n_grid, "mq_norm");
  NormResult r;
  r.q = q;
  r.n_grid = n_grid;
  r.route = NormRoute::quadrature;
  if (std::isinf(q)) {
    double grid_max = 0.0;
    r.value = sup_modulus(f, n_grid, grid_max);
    r.doubling_delta = r.value - grid_max;
    return r;
  }
  const auto v = eval_on_circle(to_complex(f), 2 * n_grid);
  r.value = std::pow(power_mean(v, q, 2), 1.0 / q);
  const double fine = std::pow(power_mean(v, q, 1), 1.0 / q);
  r.doubling_delta = std::abs(fine - r.value);
  return r;
}

NormResult mq_norm(const SignedPoly& f, double q) { return mq_norm(f, q, default_norm_grid(f)); }

NormResult parseval_norm(const SignedPoly& f) {
  NormResult r;
  r.q = 2.0;
  r.value = std::sqrt(static_cast<double>(f.energy()));
  r.route = NormRoute::exact_parseval;
  return r;
}

NormResult mahler_quadrature(const SignedPoly& f, std::size_t n_grid) {
  check_grid(f, n_grid, "mahler_quadrature");
  NormResult r;
  r.q = kNormZero;
  r.n_grid = n_grid;
  r.route = NormRoute::quadrature;
  r.value = std::exp(log_mean(f, n_grid));
  r.doubling_delta = std::abs(std::exp(log_mean(f, 2 * n_grid)) - r.value);
  return r;
}

NormResult mahler_quadrature(const SignedPoly& f) {
  return mahler_quadrature(f, default_norm_grid(f));
}

NormResult mahler_jensen(const RootSet& roots, std::complex<double> leading) {
  if (!roots.converged || roots.roots.size() != static_cast<std::size_t>(roots.degree)) {
    throw DomainError("mahler_jensen: root set is incomplete or unconverged");
  }
  double log_m = std::log(std::abs(leading));
  for (auto z : roots.roots) log_m += std::log(std::max(1.0, std::abs(z)));
  NormResult r;
  r.q = kNormZero;
  r.value = std::exp(log_m);
  r.route = NormRoute::jensen;
  return r;
}

std::int64_t m4_fourth_power(int k) {
  if (k < 0 || k > 20) throw DomainError("m4_ratio: generation must lie in [0, 20]");
  const auto pair = rudin_shapiro(k);
  const auto a = autocorrelation(pair.p);
  std::int64_t s = a[0] * a[0];
  for (std::size_t j = 1; j < a.size(); ++j) s += 2 * a[j] * a[j];
  return s;
}

double m4_ratio(int k) {
  const double target = std::ldexp(1.0, 2 * (k + 1)) / 3.0;
  return static_cast<double>(m4_fourth_power(k)) / target;
}

}  // namespace rslab
