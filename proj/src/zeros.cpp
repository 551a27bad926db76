#include "rslab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "rslab/errors.hpp"
#include "rslab/kernels.hpp"
#include "scan.hpp"

namespace rslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxArcDepth = 40;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Argument increment of s(e^{it}) from ta to tb, with fa, fm, fb the values at
// ta, the midpoint and tb. Splits the arc until the samples resolve it.
double arc_increment(std::span<const cplx> s, double ta, double tb, cplx fa, cplx fm, cplx fb,
                     int depth) {
  const double interp_err = std::abs(fm - 0.5 * (fa + fb));
  const double floor = std::min({std::abs(fa), std::abs(fm), std::abs(fb)});
  const double d1 = std::arg(fm / fa);
  const double d2 = std::arg(fb / fm);
  const double quarter = 0.5 * std::numbers::pi;
  if (floor > 0.0 && floor >= 10.0 * interp_err && std::abs(d1) < quarter &&
      std::abs(d2) < quarter) {
    return d1 + d2;
  }
  if (depth >= kMaxArcDepth || floor == 0.0) {
    throw ContourError("argument principle: contour too close to a zero on arc [" + fmt(ta) +
                           ", " + fmt(tb) + "]",
                       ta, tb);
  }
  const double tm = 0.5 * (ta + tb);
  const double q1 = 0.5 * (ta + tm), q3 = 0.5 * (tm + tb);
  const cplx f1 = eval_point(s, std::polar(1.0, q1));
  const cplx f3 = eval_point(s, std::polar(1.0, q3));
  return arc_increment(s, ta, tm, fa, f1, fm, depth + 1) +
         arc_increment(s, tm, tb, fm, f3, fb, depth + 1);
}

int winding_inside(std::span<const cplx> c, double rho, std::size_t n_grid) {
  std::vector<cplx> s(c.begin(), c.end());
  double scale = 1.0;
  for (auto& v : s) {
    v *= scale;
    scale *= rho;
  }
  const std::size_t n2 = 2 * n_grid;
  const auto v = eval_on_circle(s, n2);
  double total = 0.0;
  const double h = kTwoPi / static_cast<double>(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) {
    const double ta = h * static_cast<double>(m);
    total += arc_increment(s, ta, ta + h, v[2 * m], v[2 * m + 1], v[(2 * m + 2) % n2], 0);
  }
  const double w = total / kTwoPi;
  const double r = std::nearbyint(w);
  if (std::abs(w - r) > 0.1) {
    throw ContourError("argument principle: winding number " + fmt(w) + " is not integral", 0.0,
                       kTwoPi);
  }
  return static_cast<int>(r);
}

// Full-period sign-change scan of real samples taken at theta0 + 2 pi m / N.
detail::ScanResult scan(std::vector<double> samples, double theta0, double wrap,
                        detail::RealFn exact, bool use_exact, double tangent_tol) {
  detail::ScanInput in;
  in.samples = samples;
  in.theta0 = theta0;
  in.wrap_sign = wrap;
  in.tangent_tol = tangent_tol;
  if (use_exact) {
    in.eval = std::move(exact);
    return detail::scan_zeros(in);
  }
  auto interp = std::make_shared<detail::PeriodicInterpolant>(samples, theta0, wrap);
  in.eval = [interp](double t) { return (*interp)(t); };
  return detail::scan_zeros(in);
}

void require_grid(std::size_t n_grid, std::size_t minimum, const char* what) {
  if (!kernels::is_power_of_two(n_grid) || n_grid < minimum) {
    throw DomainError(std::string(what) + ": grid N = " + std::to_string(n_grid) +
                      " must be a power of two >= " + std::to_string(minimum));
  }
}

}  // namespace

ZeroClassification classify(const RootSet& roots, double n, double delta_circle, double c1) {
  if (!roots.converged) throw DomainError("classify: root set did not converge");
  ZeroClassification out;
  out.n = n;
  out.delta_circle = delta_circle;
  out.c1 = c1;
  out.degree = roots.degree;
  const double band = c1 / n;
  for (const cplx& z : roots.roots) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= delta_circle) {
      ++out.on_circle;
    } else if (r < 1.0) {
      ++out.inside;
    } else {
      ++out.outside;
    }
    if (r > 1.0 - band && r < 1.0 + band) ++out.annulus;
    if (std::abs(z.imag()) <= delta_circle) ++out.real_zeros;
  }
  return out;
}

int argument_principle_count(std::span<const cplx> coeffs, double rho, std::size_t n_grid) {
  if (!(rho > 0.0)) throw DomainError("argument_principle_count: radius must be positive");
  require_grid(n_grid, 4, "argument_principle_count");
  std::size_t d = coeffs.size();
  while (d > 0 && coeffs[d - 1] == cplx(0.0)) --d;
  if (d == 0) throw DomainError("argument_principle_count: zero polynomial");
  const auto c = coeffs.first(d);
  const int degree = static_cast<int>(d) - 1;
  if (rho <= 1.0) return winding_inside(c, rho, n_grid);
  std::vector<cplx> rev(c.rbegin(), c.rend());
  while (!rev.empty() && rev.back() == cplx(0.0)) rev.pop_back();
  return degree - winding_inside(rev, 1.0 / rho, n_grid);
}

int argument_principle_count(const SignedPoly& f, double rho, std::size_t n_grid) {
  const auto c = to_complex(f);
  return argument_principle_count(c, rho, n_grid);
}

UnimodularCount unimodular_count_reciprocal(const FeketePoly& f, std::size_t n_grid) {
  require_grid(n_grid, 4 * f.p, "unimodular_count_reciprocal");
  const bool use_re = f.reciprocity == Reciprocity::self;
  const double half_p = 0.5 * static_cast<double>(f.p);
  const double theta0 = std::numbers::pi / static_cast<double>(n_grid);
  const auto v = eval_on_circle(to_complex(f.poly), n_grid, theta0);
  const double h = kTwoPi / static_cast<double>(n_grid);
  std::vector<double> g(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) {
    const double t = theta0 + h * static_cast<double>(m);
    const cplx w = std::polar(1.0, -half_p * t) * v[m];
    g[m] = use_re ? w.real() : w.imag();
  }
  const SignedPoly& poly = f.poly;
  auto exact = [&poly, half_p, use_re](double t) {
    const cplx w = std::polar(1.0, -half_p * t) * eval_point(poly, std::polar(1.0, t));
    return use_re ? w.real() : w.imag();
  };
  const double tol = 1e-8 * std::sqrt(static_cast<double>(f.p - 1));
  const auto res = scan(std::move(g), theta0, -1.0, exact,
                        poly.degree() <= kExactEvalMaxDegree, tol);
  UnimodularCount out;
  out.p = f.p;
  out.n_grid = n_grid;
  out.sign_changes = res.crossings.size();
  out.locations = res.crossings;
  out.tangencies = res.tangencies;
  return out;
}

PartZeroCount realpart_zero_count(const SignedPoly& f, Part part, std::size_t n_grid) {
  if (f.is_zero()) throw DomainError("realpart_zero_count: zero polynomial");
  require_grid(n_grid, 16 * f.size(), "realpart_zero_count");
  const bool re = part == Part::re;
  const auto v = eval_on_circle(to_complex(f), n_grid);
  std::vector<double> y(n_grid);
  for (std::size_t m = 0; m < n_grid; ++m) y[m] = re ? v[m].real() : v[m].imag();
  auto exact = [&f, re](double t) {
    const cplx w = eval_point(f, std::polar(1.0, t));
    return re ? w.real() : w.imag();
  };
  const double tol = 1e-9 * std::sqrt(static_cast<double>(f.energy()));
  const auto res = scan(std::move(y), 0.0, 1.0, exact, f.degree() <= kExactEvalMaxDegree, tol);
  PartZeroCount out;
  out.part = part;
  out.n_grid = n_grid;
  out.count = res.crossings.size();
  out.tangencies = res.tangencies.size();
  out.n = static_cast<double>(f.size());
  out.locations = res.crossings;
  return out;
}

CrossingReport level_crossings(const CosinePoly& r, double eta, double n, std::size_t n_grid) {
  require_grid(n_grid, static_cast<std::size_t>(std::ceil(16.0 * n)), "level_crossings");
  const double level = eta * n;
  auto y = r.sample(n_grid);
  for (auto& v : y) v -= level;
  auto exact = [&r, level](double t) { return r(t) - level; };
  const auto res =
      scan(std::move(y), 0.0, 1.0, exact, r.degree() <= kExactEvalMaxDegree, 1e-9 * std::max(n, 1.0));
  CrossingReport out;
  out.eta = eta;
  out.scale = n;
  out.n_grid = n_grid;
  out.count_transversal = res.crossings.size();
  out.count_tangent = res.tangencies.size();
  out.count = out.count_transversal + out.count_tangent;
  out.hidden_pairs = res.hidden_pairs;
  out.locations = res.crossings;
  out.tangent_locations = res.tangencies;
  const std::size_t cap = 2 * static_cast<std::size_t>(std::max(r.degree(), 0));
  if (out.count_with_multiplicity() > cap) {
    throw Error("level_crossings: " + std::to_string(out.count_with_multiplicity()) +
                " solutions exceed the cap 2 deg R = " + std::to_string(cap));
  }
  return out;
}

SublevelResult sublevel_measure(const CosinePoly& r, double alpha, std::size_t n_grid) {
  require_grid(n_grid, 16 * r.size(), "sublevel_measure");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("sublevel_measure: alpha outside (0, 1]");
  const double h = kTwoPi / static_cast<double>(n_grid);
  auto y = r.sample(n_grid);
  const bool use_exact = r.degree() <= kExactEvalMaxDegree;
  detail::RealFn eval_r;
  if (use_exact) {
    eval_r = [&r](double t) { return r(t); };
  } else {
    auto interp = std::make_shared<detail::PeriodicInterpolant>(y, 0.0, 1.0);
    eval_r = [interp](double t) { return (*interp)(t); };
  }
  const auto top = detail::refine_max(y, h, eval_r, 16);
  const double level = alpha * top.value;
  std::size_t below = 0;
  for (auto& v : y) {
    v -= level;
    if (v <= 0.0) ++below;
  }
  auto eval_y = [eval_r, level](double t) { return eval_r(t) - level; };
  const auto res = scan(y, 0.0, 1.0, eval_y, true, 1e-12 * std::max(top.value, 1.0));

  SublevelResult out;
  out.alpha = alpha;
  out.sup = top.value;
  out.n_grid = n_grid;
  const auto& c = res.crossings;
  if (c.empty()) {
    out.measure = 2 * below > n_grid ? kTwoPi : 0.0;
    return out;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double a = c[i];
    const double b = i + 1 < c.size() ? c[i + 1] : c[0] + kTwoPi;
    if (eval_y(0.5 * (a + b)) <= 0.0) out.measure += b - a;
  }
  return out;
}

}  // namespace rslab
