#include "rslab/audit_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rslab/autocorr.hpp"
#include "rslab/distribution.hpp"
#include "rslab/errors.hpp"
#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"
#include "rslab/norms.hpp"

namespace rslab {

namespace {

std::size_t grid_for(std::size_t n, int factor) {
  return kernels::next_power_of_two(static_cast<std::size_t>(factor) * n);
}

AuditReport make(const std::string& name, const std::string& anchor, int k) {
  AuditReport r;
  r.name = name;
  r.anchor = anchor;
  r.add_param("k", static_cast<double>(k));
  return r;
}

// lhs and rhs with a failed precondition, e.g. a missing calibration value.
void settle_missing(AuditReport& r, const std::string& key) {
  r.note = "calibration key '" + key + "' missing";
  r.settle(0.0, 0.0, false);
}

}  // namespace

double rs_gamma() { return std::pow(std::sin(std::numbers::pi / 8.0), 2); }

AuditSuite::AuditSuite(RunConfig cfg, Calibration cal) : cfg_(std::move(cfg)), cal_(std::move(cal)) {}

const std::vector<std::string>& AuditSuite::names() {
  static const std::vector<std::string> n{
      "eq11",        "parseval",     "m4",         "autocorr_bound", "root_floor",
      "real_zero",   "on_circle",    "annulus",    "nearest_zero",   "bernstein",
      "zero_density", "sublevel",    "crossing_cap", "crossing_lower", "realpart",
      "saffari",     "montgomery"};
  return n;
}

std::pair<int, int> AuditSuite::k_limits(const std::string& name) {
  static const std::map<std::string, std::pair<int, int>> lim{
      {"eq11", {0, 18}},         {"parseval", {0, 18}},      {"m4", {0, 20}},
      {"autocorr_bound", {1, 20}}, {"root_floor", {1, 18}},  {"real_zero", {1, 12}},
      {"on_circle", {1, 12}},    {"annulus", {8, 11}},       {"nearest_zero", {1, 12}},
      {"bernstein", {1, 9}},     {"zero_density", {1, 14}},  {"sublevel", {1, 12}},
      {"crossing_cap", {1, 18}}, {"crossing_lower", {12, 18}}, {"realpart", {8, 14}},
      {"saffari", {1, 18}},      {"montgomery", {1, 18}}};
  const auto it = lim.find(name);
  if (it == lim.end()) throw Error("unknown audit '" + name + "'");
  return it->second;
}

double AuditSuite::c1() const { return cal_.get_or("annulus_c1", 1.0); }

const RootSet& AuditSuite::roots(char family, int k) {
  const auto key = std::make_pair(family, k);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto pair = rudin_shapiro(k);
  const SignedPoly& f = family == 'q' ? pair.q : pair.p;
  RootOptions opts;
  opts.tol = cfg_.root_tol * std::sqrt(static_cast<double>(f.energy()));
  opts.cluster_radius = cfg_.cluster_radius;
  opts.seed = cfg_.seed;
  return cache_.emplace(key, find_roots(f, opts)).first->second;
}

ZeroClassification AuditSuite::classification(char family, int k, double delta_scale) {
  const double n = std::ldexp(1.0, k);
  return classify(roots(family, k), n, cfg_.delta_circle * delta_scale, c1());
}

std::vector<AuditReport> AuditSuite::run(const std::string& name, int k) {
  const auto [lo, hi] = k_limits(name);
  if (k < lo || k > hi) return {};
  const auto pair = rudin_shapiro(k);
  const std::size_t n = pair.n;
  const double dn = static_cast<double>(n);
  std::vector<AuditReport> out;

  if (name == "eq11") {
    auto r = make(name, "2^{k+1} = 2n", k);
    const std::size_t n_grid = grid_for(n, cfg_.grid_factor);
    const auto gp = eval_grid(pair.p, n_grid);
    const auto gq = eval_grid(pair.q, n_grid);
    double dev = 0.0;
    for (std::size_t m = 0; m < n_grid; ++m) {
      dev = std::max(dev, std::abs(std::norm(gp.values[m]) + std::norm(gq.values[m]) - 2.0 * dn));
    }
    r.add_param("n_grid", static_cast<double>(n_grid));
    r.settle(dev, 1e-6 * 2.0 * dn);
    out.push_back(r);
  } else if (name == "parseval") {
    auto r = make(name, "M_2(P_k) = 2^{k/2}", k);
    const double exact = std::sqrt(dn);
    double err = 0.0;
    for (const SignedPoly* f : {&pair.p, &pair.q}) {
      err = std::max(err, std::abs(mq_norm(*f, 2.0).value - exact) / exact);
    }
    r.settle(err, 1e-10);
    out.push_back(r);
  } else if (name == "m4") {
    auto r = make(name, "M_4(P_k) \\sim (4^{k+1}/3)^{1/4}", k);
    const double ratio = m4_ratio(k);
    r.add_param("fourth_power", static_cast<double>(m4_fourth_power(k)));
    r.add_param("ratio", ratio);
    r.settle(std::abs(ratio - 1.0), std::ldexp(1.0, 1 - k));
    out.push_back(r);
  } else if (name == "autocorr_bound") {
    auto r = make(name, "\\leq Cn^{0.8190}", k);
    const auto prof = autocorr_profile(k);
    r.add_param("max_abs", static_cast<double>(prof.max_abs));
    r.add_param("argmax_j", static_cast<double>(prof.argmax_j));
    if (!cal_.has("autocorr_C")) {
      settle_missing(r, "autocorr_C");
    } else {
      const double c = cal_.get("autocorr_C");
      r.add_param("C", c);
      r.settle(static_cast<double>(prof.max_abs), c * std::pow(dn, kAutocorrUpperExponent));
    }
    out.push_back(r);
  } else if (name == "root_floor") {
    out.push_back(root_of_unity_floor(k));
  } else if (name == "real_zero") {
    auto r = make(name, "#\\{x \\in \\mathbb{R}: P_k(x) = 0\\} = 1", k);
    double miss = 0.0;
    bool ok = true;
    for (char fam : {'p', 'q'}) {
      const auto& rs = roots(fam, k);
      ok = ok && rs.converged;
      const auto c = classification(fam, k);
      miss += std::abs(static_cast<double>(c.real_zeros) - 1.0);
      r.add_param(std::string("real_zeros_") + fam, static_cast<double>(c.real_zeros));
      for (const cplx& z : rs.roots) {
        if (std::abs(z.imag()) <= cfg_.delta_circle) {
          r.add_param(std::string("real_root_") + fam, z.real());
        }
      }
    }
    r.settle(miss, 0.0, ok);
    out.push_back(r);
  } else if (name == "on_circle") {
    auto r = make(name, "o(n)", k);
    double worst = -INFINITY;
    for (char fam : {'p', 'q'}) {
      for (double scale : {0.1, 1.0, 10.0}) {
        const auto c = classification(fam, k, scale);
        char key[48];
        std::snprintf(key, sizeof key, "on_circle_%c_delta_x%g", fam, scale);
        r.add_param(key, static_cast<double>(c.on_circle));
        if (scale == 1.0) {
          r.add_param(std::string("annulus_") + fam, static_cast<double>(c.annulus));
          worst = std::max(worst, static_cast<double>(c.on_circle) - static_cast<double>(c.annulus));
        }
      }
    }
    // on_circle <= annulus(c1) whenever c1/n >= delta
    r.settle(worst, 0.0, c1() / dn >= cfg_.delta_circle);
    out.push_back(r);
  } else if (name == "annulus") {
    auto r = make(name, "c_2n", k);
    double frac = INFINITY;
    for (char fam : {'p', 'q'}) {
      const auto c = classification(fam, k);
      r.add_param(std::string("annulus_") + fam, static_cast<double>(c.annulus));
      frac = std::min(frac, c.annulus_fraction());
    }
    r.add_param("c1", c1());
    r.add_param("c2_empirical", frac);
    if (!cal_.has("annulus_c2_floor")) {
      settle_missing(r, "annulus_c2_floor");
    } else {
      r.settle(cal_.get("annulus_c2_floor"), frac);
    }
    out.push_back(r);
  } else if (name == "nearest_zero") {
    const double c = rs_gamma() / (2.0 * std::numbers::pi);
    const auto s = modulus_squared(pair.p);
    auto r = nearest_zero_audit(pair.p, s, c, roots('p', k), cal_.get_or("nearest_zero_c4", -1.0));
    r.params.insert(r.params.begin(), {"k", std::to_string(k)});
    out.push_back(r);
  } else if (name == "bernstein") {
    const auto s = modulus_squared(pair.p);
    const std::size_t n_grid = grid_for(n, 16);
    const auto d = s.sample_derivative(n_grid);
    std::size_t best = 0;
    for (std::size_t m = 1; m < n_grid; ++m) {
      if (std::abs(d[m]) > std::abs(d[best])) best = m;
    }
    const double a = 2.0 * std::numbers::pi * static_cast<double>(best) / static_cast<double>(n_grid);
    const auto alg = s.algebraic_coeffs();
    RootOptions opts;
    opts.seed = cfg_.seed;
    opts.cluster_radius = cfg_.cluster_radius;
    RootSet rs;
    try {
      rs = find_roots(alg, opts);
    } catch (const NonConvergenceError& e) {
      rs = e.partial();
    }
    auto r = bernstein_audit(s, a, 1.0 / (2.0 * dn), rs);
    r.params.insert(r.params.begin(), {"k", std::to_string(k)});
    out.push_back(r);
  } else if (name == "zero_density") {
    auto r = zero_density_audit(pair.p, Part::re, 0.0, std::numbers::pi / 4.0);
    r.params.insert(r.params.begin(), {"k", std::to_string(k)});
    out.push_back(r);
  } else if (name == "sublevel") {
    const auto c = classification('p', k);
    for (double alpha : cfg_.alphas) {
      auto r = sublevel_audit(pair.p, alpha, c.on_circle, grid_for(n, std::max(cfg_.grid_factor, 16)));
      r.params.insert(r.params.begin(), {"k", std::to_string(k)});
      out.push_back(r);
    }
  } else if (name == "crossing_cap" || name == "crossing_lower") {
    const auto s = modulus_squared(pair.p);
    const std::size_t n_grid = grid_for(n, std::max(cfg_.grid_factor, 16));
    const double cap = 2.0 * (dn - 1.0);
    for (double eta : cfg_.etas) {
      if (name == "crossing_lower" && !(eta > 0.0 && eta < 2.0 * rs_gamma())) continue;
      auto r = make(name,
                    name == "crossing_cap" ? "2(n-1)"
                                           : "(1-\\varepsilon)\\eta n/2",
                    k);
      r.add_param("eta", eta);
      try {
        const auto cr = level_crossings(s, eta, dn, n_grid);
        r.add_param("count", static_cast<double>(cr.count));
        r.add_param("count_transversal", static_cast<double>(cr.count_transversal));
        r.add_param("count_tangent", static_cast<double>(cr.count_tangent));
        if (name == "crossing_cap") {
          r.settle(static_cast<double>(cr.count_with_multiplicity()), cap);
        } else {
          r.add_param("epsilon", 0.1);
          r.settle(0.9 * eta * dn / 2.0, static_cast<double>(cr.count));
        }
      } catch (const Error& e) {
        r.note = e.what();
        r.settle(INFINITY, cap);
      }
      out.push_back(r);
    }
  } else if (name == "realpart") {
    auto r = make(name, "cn", k);
    const std::size_t n_grid = grid_for(n, std::max(cfg_.grid_factor, 16));
    double ratio = INFINITY;
    for (const SignedPoly* f : {&pair.p, &pair.q}) {
      const auto zc = realpart_zero_count(*f, Part::re, n_grid);
      ratio = std::min(ratio, zc.ratio());
    }
    r.add_param("c_empirical", ratio);
    if (!cal_.has("realpart_c_floor")) {
      settle_missing(r, "realpart_c_floor");
    } else {
      r.settle(cal_.get("realpart_c_floor"), ratio);
    }
    out.push_back(r);
  } else if (name == "saffari" || name == "montgomery") {
    const bool saff = name == "saffari";
    auto r = make(name, saff ? "= 2\\pi(\\beta - \\alpha)" : "E \\subset D", k);
    const std::size_t n_grid = grid_for(n, std::max(cfg_.grid_factor, 16));
    const auto d = saff ? saffari_discrepancy(k, n_grid)
                        : montgomery_discrepancy(k, n_grid, cfg_.radial_cells, cfg_.angular_cells);
    r.add_param("n_grid", static_cast<double>(n_grid));
    r.add_param("cells", d.cells);
    r.add_param("sup_dev_p", d.sup_dev_p);
    r.add_param("sup_dev_q", d.sup_dev_q);
    bool ok = true;
    if (saff) {
      r.add_param("cdf_at_1", d.detail.back());
      ok = d.detail.back() == 1.0;
    }
    const std::string key = name + "_threshold_k" + std::to_string(k);
    const double bound = cal_.get_or(key, 1.0);
    r.add_param("threshold_source", cal_.has(key) ? key : "invariant");
    r.settle(d.sup_dev, bound, ok);
    out.push_back(r);
  } else {
    throw Error("unknown audit '" + name + "'");
  }
  return out;
}

AuditReport AuditSuite::run_fekete(std::uint64_t p) {
  const auto f = fekete(p);
  const std::size_t n_grid = kernels::next_power_of_two(8 * p);
  const auto u = unimodular_count_reciprocal(f, n_grid);
  AuditReport r;
  r.name = "fekete";
  r.anchor = "0.500813>\\kappa_0>0.500668";
  r.add_param("p", static_cast<double>(p));
  r.add_param("n_grid", static_cast<double>(n_grid));
  r.add_param("sign_changes", static_cast<double>(u.sign_changes));
  r.add_param("tangencies", static_cast<double>(u.tangencies.size()));
  r.add_param("fraction", u.fraction());
  // fraction within [0.49, 0.52]
  r.settle(std::abs(u.fraction() - 0.505), 0.015);
  return r;
}

}  // namespace rslab
