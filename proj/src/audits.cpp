#include <algorithm>
#include <cmath>
#include <numbers>

#include "rslab/errors.hpp"
#include "rslab/kernels.hpp"
#include "rslab/zeros.hpp"
#include "scan.hpp"

namespace rslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kGamma = std::pow(std::sin(std::numbers::pi / 8.0), 2);

double max_abs_on_circle(const CosinePoly& s) {
  const std::size_t n_grid = kernels::next_power_of_two(16 * std::max<std::size_t>(s.size(), 1));
  auto y = s.sample(n_grid);
  for (auto& v : y) v = std::abs(v);
  auto fn = [&s](double t) { return std::abs(s(t)); };
  return detail::refine_max(y, kTwoPi / static_cast<double>(n_grid), fn, 16).value;
}

}  // namespace

double nearest_zero_c4_bound(double c) {
  if (!(c > 0.0)) throw DomainError("nearest_zero_c4_bound: c must be positive");
  const double e = std::numbers::e;
  return 400.0 * e * e / (c * c);
}

AuditReport nearest_zero_audit(const SignedPoly& f, const CosinePoly& r, double c,
                               const RootSet& roots, double c4_bound) {
  AuditReport rep;
  rep.name = "nearest_zero";
  rep.anchor = "R_k^{\\prime}(t_0) \\geq cn^2";
  const double n = static_cast<double>(f.size());
  const double c4 = c4_bound > 0.0 ? c4_bound : nearest_zero_c4_bound(c);
  const double e = std::numbers::e;
  rep.add_param("c", c);
  rep.add_param("n", n);
  rep.add_param("c4", c4);
  rep.add_param("c4_literal", c * c / (400.0 * e * e));

  const std::size_t n_grid = kernels::next_power_of_two(static_cast<std::size_t>(16 * n));
  const auto d = r.sample_derivative(n_grid);
  const double threshold = c * n * n * (1.0 - 1e-12);
  double worst = 0.0;
  std::size_t qualifying = 0;
  for (std::size_t m = 0; m < n_grid; ++m) {
    if (d[m] < threshold) continue;
    ++qualifying;
    const double t = kTwoPi * static_cast<double>(m) / static_cast<double>(n_grid);
    const cplx w = std::polar(1.0, t);
    double best = INFINITY;
    for (const cplx& z : roots.roots) best = std::min(best, std::abs(z - w));
    const double scaled = n * best;
    if (scaled > worst) worst = scaled;
    rep.witnesses.push_back(t);
  }
  rep.add_param("qualifying", static_cast<double>(qualifying));
  rep.add_param("c4_empirical", worst);
  rep.add_param("satisfies_literal", worst <= c * c / (400.0 * e * e) ? "yes" : "no");
  if (qualifying == 0) rep.note = "vacuous: no grid angle reaches the derivative threshold";
  rep.settle(worst, c4, roots.converged);
  return rep;
}

AuditReport bernstein_audit(const CosinePoly& s, double a, double r, const RootSet& roots_of_s) {
  if (!(r > 0.0 && r <= 2.0)) throw DomainError("bernstein_audit: radius outside (0, 2]");
  AuditReport rep;
  rep.name = "bernstein";
  rep.anchor = "5e \\sqrt{\\frac{2n}{r}}";
  const double n = static_cast<double>(std::max(s.degree(), 0));
  rep.add_param("a", a);
  rep.add_param("r", r);
  rep.add_param("n", n);

  // Roots w of the algebraic form correspond to t = arg w - i log|w|.
  bool zero_free = roots_of_s.converged && roots_of_s.degree == 2 * s.degree();
  double nearest = INFINITY;
  for (const cplx& w : roots_of_s.roots) {
    if (w == cplx(0.0)) {
      zero_free = false;
      continue;
    }
    const double dist = std::hypot(std::remainder(std::arg(w) - a, kTwoPi), std::log(std::abs(w)));
    nearest = std::min(nearest, dist);
  }
  if (nearest <= r) zero_free = false;
  rep.add_param("nearest_zero_distance", nearest);

  const double sup = max_abs_on_circle(s);
  const double lhs = std::abs(s.derivative(a));
  const double rhs = 5.0 * std::numbers::e * std::sqrt(2.0 * n / r) * sup;
  rep.add_param("sup", sup);
  rep.add_param("ratio", rhs > 0.0 ? lhs / rhs : 0.0);
  if (!zero_free) rep.note = "zero-free disk not confirmed";
  rep.settle(lhs, rhs, zero_free);
  return rep;
}

AuditReport root_of_unity_floor(int k) {
  if (k < 1 || k > 18) throw DomainError("root_of_unity_floor: k outside [1, 18]");
  const auto pair = rudin_shapiro(k);
  const std::size_t n = pair.n;
  const auto g = eval_grid(pair.p, n);
  AuditReport rep;
  rep.name = "root_of_unity_floor";
  rep.anchor = "\\geq \\gamma 2^{k+1} = 2\\gamma n";
  rep.add_param("k", static_cast<double>(k));
  rep.add_param("gamma", kGamma);
  const double target = 2.0 * kGamma * static_cast<double>(n);
  double worst = INFINITY;
  for (std::size_t j = 0; j < n; j += 2) {
    const double here = std::norm(g.values[j]);
    for (int side : {-1, 1}) {
      const std::size_t other = (side < 0 ? j + n - 1 : j + 1) % n;
      const double v = std::max(here, std::norm(g.values[other]));
      if (v < worst) {
        worst = v;
        rep.witnesses.assign(1, g.angle(j));
      }
    }
  }
  rep.add_param("min_ratio", worst / target);
  rep.settle(target, worst);
  return rep;
}

AuditReport zero_density_audit(const SignedPoly& f, Part part, double t0, double r) {
  if (!(r > 0.0 && r < std::numbers::pi)) throw DomainError("zero_density_audit: r outside (0, pi)");
  AuditReport rep;
  rep.name = "zero_density";
  rep.anchor = "enr|S(t_0)|^{-1} \\|S\\|_K";
  const std::size_t n_grid = kernels::next_power_of_two(16 * f.size());
  const auto zc = realpart_zero_count(f, part, n_grid);
  const double n = static_cast<double>(std::max(f.degree(), 0));
  const bool re = part == Part::re;
  auto part_of = [re](cplx w) { return re ? w.real() : w.imag(); };

  const auto v = eval_on_circle(to_complex(f), n_grid);
  double sup = 0.0;
  for (const auto& w : v) sup = std::max(sup, std::abs(part_of(w)));
  {
    std::vector<double> y(n_grid);
    for (std::size_t m = 0; m < n_grid; ++m) y[m] = std::abs(part_of(v[m]));
    auto fn = [&](double t) { return std::abs(part_of(eval_point(f, std::polar(1.0, t)))); };
    sup = std::max(sup, detail::refine_max(y, kTwoPi / static_cast<double>(n_grid), fn, 16).value);
  }
  const double s0 = std::abs(part_of(eval_point(f, std::polar(1.0, t0))));

  std::size_t count = 0;
  for (double t : zc.locations) {
    if (std::abs(std::remainder(t - t0, kTwoPi)) <= r) {
      ++count;
      rep.witnesses.push_back(t);
    }
  }
  rep.add_param("part", re ? "re" : "im");
  rep.add_param("t0", t0);
  rep.add_param("r", r);
  rep.add_param("n", n);
  rep.add_param("sup", sup);
  rep.add_param("value_at_t0", s0);
  rep.add_param("tangencies_total", static_cast<double>(zc.tangencies));
  const double bound = s0 > 0.0 ? std::numbers::e * n * r * sup / s0 : INFINITY;
  rep.settle(static_cast<double>(count), bound);
  return rep;
}

AuditReport sublevel_audit(const SignedPoly& f, double alpha, std::size_t zeros_on_circle,
                           std::size_t n_grid) {
  AuditReport rep;
  rep.name = "sublevel";
  rep.anchor = "\\frac{\\sqrt{\\alpha}}{e} \\, \\frac kn";
  if (f.degree() < 1) throw DomainError("sublevel_audit: degree must be at least 1");
  const auto s = modulus_squared(f);
  const auto m = sublevel_measure(s, alpha, n_grid);
  const double n = static_cast<double>(f.degree());
  const double lhs = std::sqrt(alpha) / std::numbers::e * static_cast<double>(zeros_on_circle) / n;
  const double fraction = m.measure / kTwoPi;
  rep.add_param("alpha", alpha);
  rep.add_param("u", static_cast<double>(zeros_on_circle));
  rep.add_param("n", n);
  rep.add_param("measure_radians", m.measure);
  rep.add_param("measure_fraction", fraction);
  rep.add_param("fraction_margin", fraction - lhs);
  const bool raw_ok = m.measure >= lhs;
  const bool frac_ok = fraction >= lhs;
  rep.add_param("readings_satisfied", raw_ok && frac_ok ? "both" : raw_ok ? "radians" : frac_ok ? "fraction" : "none");
  rep.settle(lhs, m.measure);
  return rep;
}

}  // namespace rslab
