#include "rslab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <cstdio>
#include <string>

#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"

namespace rslab {

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// |f(z)| / max(1,|z|)^d, evaluated on the reversed polynomial outside the disk.
double scaled_residual(std::span<const cplx> c, std::span<const cplx> rev, cplx z) {
  if (std::abs(z) <= 1.0) return std::abs(eval_point(c, z));
  return std::abs(eval_point(rev, 1.0 / z));
}

double newton_step(std::span<const cplx> c, cplx z) {
  cplx p = c.back(), dp = 0.0;
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[j];
  }
  return dp == cplx(0.0) ? INFINITY : std::abs(p / dp);
}

// Newton steps with compensated evaluation of f (on the reversed polynomial
// outside the unit disk); keeps the best iterate.
cplx polish(std::span<const cplx> c, std::span<const cplx> rev, cplx z, double& res) {
  res = scaled_residual(c, rev, z);
  for (int it = 0; it < 3 && res > 0.0; ++it) {
    const bool outside = std::abs(z) > 1.0;
    const auto poly = outside ? rev : c;
    const cplx x = outside ? 1.0 / z : z;
    cplx dp = 0.0, p = poly.back();
    for (std::size_t j = poly.size() - 1; j-- > 0;) {
      dp = dp * x + p;
      p = p * x + poly[j];
    }
    if (dp == cplx(0.0)) break;
    const cplx x_new = x - eval_point(poly, x) / dp;
    const cplx z_new = outside ? 1.0 / x_new : x_new;
    const double r = scaled_residual(c, rev, z_new);
    if (!(r < res)) break;
    z = z_new;
    res = r;
  }
  return z;
}

std::vector<cplx> initial_points(std::span<const cplx> c, std::uint64_t seed) {
  const std::size_t d = c.size() - 1;
  double max_low = 0.0, max_high = 0.0;
  for (std::size_t j = 0; j < d; ++j) max_low = std::max(max_low, std::abs(c[j]));
  for (std::size_t j = 1; j <= d; ++j) max_high = std::max(max_high, std::abs(c[j]));
  const double upper = 1.0 + max_low / std::abs(c[d]);
  const double lower = std::abs(c[0]) / (std::abs(c[0]) + max_high);
  const double radius = std::sqrt(upper * lower);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<cplx> z(d);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double ang = step * (static_cast<double>(i) + 0.25 + jitter(rng));
    z[i] = std::polar(radius * (1.0 + jitter(rng) * 0.01), ang);
  }
  return z;
}

// Groups roots closer than radius * max(1,|z|); returns cluster ids.
std::vector<int> cluster_ids(std::span<const cplx> z, double radius) {
  const std::size_t n = z.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return z[a].real() < z[b].real(); });
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    const double r = radius * std::max(1.0, std::abs(z[i]));
    for (std::size_t b = a + 1; b < n && z[order[b]].real() - z[i].real() <= r; ++b) {
      const std::size_t j = order[b];
      if (std::abs(z[i] - z[j]) <= r) {
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
      }
    }
  }
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = find(static_cast<int>(i));
  return ids;
}

}  // namespace

double RootSet::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

int RootSet::multiplicity(std::size_t i) const {
  return static_cast<int>(std::count(cluster.begin(), cluster.end(), cluster[i]));
}

double default_root_tol(std::span<const cplx> coeffs) {
  double e = 0.0;
  for (auto c : coeffs) e += std::norm(c);
  return 1e-10 * std::sqrt(e);
}

RootSet find_roots(std::span<const cplx> coeffs_in, const RootOptions& opts) {
  std::vector<cplx> c(coeffs_in.begin(), coeffs_in.end());
  while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
  if (c.empty()) throw DomainError("find_roots: zero polynomial");

  RootSet out;
  out.degree = static_cast<int>(c.size()) - 1;
  if (out.degree > opts.degree_cap) {
    throw CapacityError("find_roots: degree " + std::to_string(out.degree) + " exceeds cap " +
                        std::to_string(opts.degree_cap));
  }
  out.tol = opts.tol > 0.0 ? opts.tol : default_root_tol(c);

  std::size_t origin = 0;
  while (c[origin] == cplx(0.0)) ++origin;
  out.origin_multiplicity = origin;
  std::vector<cplx> g(c.begin() + static_cast<std::ptrdiff_t>(origin), c.end());
  const std::size_t d = g.size() - 1;

  std::vector<cplx> z;
  if (d == 1) {
    z = {-g[0] / g[1]};
  } else if (d > 1) {
    const auto problem = kernels::make_aberth_problem(g);
    z = initial_points(g, opts.seed);
    std::vector<cplx> z_next(d);
    std::vector<std::uint8_t> done(d, 0);
    std::size_t active = d;
    while (active > 0 && out.iterations < opts.max_iterations) {
      active = kernels::aberth_sweep(problem, z, z_next, done);
      z.swap(z_next);
      ++out.iterations;
    }
    if (active > 0) {
      out.roots.assign(origin, 0.0);
      out.roots.insert(out.roots.end(), z.begin(), z.end());
      const std::string what =
          "find_roots: iteration cap reached with " + std::to_string(active) + " roots active";
      throw NonConvergenceError(what, std::move(out));
    }
  }

  std::vector<cplx> rev(g.rbegin(), g.rend());
  std::vector<double> res(d);
  const auto dd = static_cast<long long>(d);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < dd; ++i) {
    const auto u = static_cast<std::size_t>(i);
    z[u] = polish(g, rev, z[u], res[u]);
  }

  // Replace each cluster by its centroid when that does not worsen the residual.
  auto ids = cluster_ids(z, opts.cluster_radius);
  for (std::size_t i = 0; i < d; ++i) {
    if (ids[i] != static_cast<int>(i)) continue;
    cplx sum = 0.0;
    double worst = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (ids[j] == ids[i]) {
        sum += z[j];
        worst = std::max(worst, res[j]);
        ++count;
      }
    }
    if (count < 2) continue;
    const cplx centroid = sum / static_cast<double>(count);
    const double r = scaled_residual(g, rev, centroid);
    if (r <= worst) {
      for (std::size_t j = 0; j < d; ++j) {
        if (ids[j] == ids[i]) {
          z[j] = centroid;
          res[j] = r;
        }
      }
    }
  }

  out.roots.assign(origin, 0.0);
  out.residuals.assign(origin, 0.0);
  out.newton_steps.assign(origin, 0.0);
  for (std::size_t i = 0; i < origin; ++i) out.cluster.push_back(0);
  for (std::size_t i = 0; i < d; ++i) {
    out.roots.push_back(z[i]);
    out.residuals.push_back(res[i]);
    out.newton_steps.push_back(newton_step(g, z[i]));
    out.cluster.push_back(ids[i] + static_cast<int>(origin) + (origin > 0 ? 1 : 0));
  }
  out.converged = true;
  if (out.max_residual() > out.tol) {
    out.converged = false;
    const std::string what = "find_roots: residual " + fmt_g(out.max_residual()) +
                             " exceeds tol " + fmt_g(out.tol);
    throw NonConvergenceError(what, std::move(out));
  }
  return out;
}

RootSet find_roots(const SignedPoly& f, const RootOptions& opts) {
  return find_roots(to_complex(f), opts);
}

RootSet find_roots(const SignedPoly& f, double tol) {
  RootOptions opts;
  opts.tol = tol;
  return find_roots(f, opts);
}

}  // namespace rslab
