#include "rslab/commands.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "rslab/audit_suite.hpp"
#include "rslab/autocorr.hpp"
#include "rslab/config.hpp"
#include "rslab/distribution.hpp"
#include "rslab/errors.hpp"
#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"
#include "rslab/norms.hpp"
#include "rslab/output.hpp"
#include "rslab/poly.hpp"
#include "rslab/zeros.hpp"

namespace rslab {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Flags {
  std::string k, k_range, prime, eta, alpha, config, out, name, q;
  int grid_factor = 0, threads = -1, k_max = -1;
  std::uint64_t fekete = 0;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0, n = 0;
};

struct Context {
  RunConfig cfg;
  Calibration cal;
  std::string hash;
  std::ostream& out;
  std::ostream& err;

  std::string path(const std::string& file) const { return (fs::path(cfg.out_dir) / file).string(); }
};

std::string coeff_string(const SignedPoly& f) {
  std::string s;
  for (auto c : f.coeffs()) s += c > 0 ? '+' : c < 0 ? '-' : '0';
  return s;
}

std::string num(double v) { return format_number(v); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

json config_json(const Context& ctx) {
  json c = json::object();
  std::istringstream in(ctx.cfg.canonical());
  for (const auto& [k, v] : parse_key_values(in, "canonical")) c[k] = v;
  return c;
}

json report_json(const AuditReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return json{{"name", r.name},     {"anchor", r.anchor},         {"params", params},
              {"lhs", num(r.lhs)},  {"rhs", num(r.rhs)},          {"margin", num(r.margin)},
              {"status", to_string(r.status)}, {"witnesses", r.witnesses.size()}, {"note", r.note}};
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
}

json envelope(const Context& ctx, const std::string& kind) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", kind},
              {"config_hash", ctx.hash},
              {"config", config_json(ctx)}};
}

std::vector<int> k_values(const RunConfig& cfg) {
  std::vector<int> ks;
  for (int k = cfg.k_range.lo; k <= cfg.k_range.hi; ++k) ks.push_back(k);
  return ks;
}

int cmd_build(Context& ctx) {
  CsvWriter w(ctx.path("polys.csv"), {"family", "index", "n", "degree", "reciprocity", "coefficients"},
              ctx.hash);
  if (ctx.cfg.primes.empty()) {
    for (int k : k_values(ctx.cfg)) {
      const auto pair = rudin_shapiro(k);
      w.row({"P", num(k), num(pair.n), num(pair.p.degree()), "", coeff_string(pair.p)});
      w.row({"Q", num(k), num(pair.n), num(pair.q.degree()), "", coeff_string(pair.q)});
    }
  }
  for (auto p : ctx.cfg.primes) {
    const auto f = fekete(p);
    w.row({"fekete", std::to_string(p), num(f.poly.size()), num(f.poly.degree()),
           f.reciprocity == Reciprocity::self ? "self" : "anti_self", coeff_string(f.poly)});
  }
  ctx.out << "wrote " << w.path() << '\n';
  return kExitOk;
}

int cmd_norms(Context& ctx) {
  CsvWriter w(ctx.path("norms.csv"),
              {"family", "k", "n", "q", "value", "route", "n_grid", "doubling_delta"}, ctx.hash);
  CsvWriter m4(ctx.path("m4.csv"), {"k", "fourth_power", "ratio", "deviation", "bound"}, ctx.hash);
  auto emit = [&](const char* fam, int k, std::size_t n, const NormResult& r) {
    const std::string q = r.q == kNormZero ? "0" : std::isinf(r.q) ? "inf" : num(r.q);
    w.row({fam, num(k), num(n), q, num(r.value), to_string(r.route), num(r.n_grid), num(r.doubling_delta)});
  };
  for (int k : k_values(ctx.cfg)) {
    const auto pair = rudin_shapiro(k);
    for (const auto& [fam, f] : {std::pair<const char*, const SignedPoly*>{"P", &pair.p}, {"Q", &pair.q}}) {
      for (double q : ctx.cfg.qs) {
        if (q > 0.0) emit(fam, k, pair.n, mq_norm(*f, q));
      }
      emit(fam, k, pair.n, mq_norm(*f, kNormInfinity));
      emit(fam, k, pair.n, parseval_norm(*f));
      emit(fam, k, pair.n, mahler_quadrature(*f));
      if (k <= 10) {
        RootOptions opts;
        opts.seed = ctx.cfg.seed;
        opts.cluster_radius = ctx.cfg.cluster_radius;
        emit(fam, k, pair.n, mahler_jensen(find_roots(*f, opts), static_cast<double>(f->leading())));
      }
    }
    if (k <= 20) {
      const double ratio = m4_ratio(k);
      m4.row({num(k), std::to_string(m4_fourth_power(k)), num(ratio), num(std::abs(ratio - 1.0)),
              num(std::ldexp(1.0, 1 - k))});
    }
  }
  ctx.out << "wrote " << w.path() << " and " << m4.path() << '\n';
  return kExitOk;
}

int cmd_autocorr(Context& ctx) {
  CsvWriter w(ctx.path("autocorr.csv"), {"k", "n", "max_abs", "argmax_j", "l2"}, ctx.hash);
  std::vector<AutocorrProfile> profiles;
  for (int k : k_values(ctx.cfg)) {
    auto p = autocorr_profile(k);
    w.row({num(k), num(p.n), std::to_string(p.max_abs), num(p.argmax_j), std::to_string(p.l2)});
    p.a.clear();
    profiles.push_back(std::move(p));
  }
  if (profiles.size() >= 5) {
    const auto fit = growth_exponent(profiles);
    auto j = envelope(ctx, "autocorr_fit");
    j["k_lo"] = ctx.cfg.k_range.lo;
    j["k_hi"] = ctx.cfg.k_range.hi;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["residual"] = fit.residual;
    j["half_width"] = fit.half_width;
    j["bracket"] = {kAutocorrLowerExponent, kAutocorrUpperExponent};
    write_json(ctx.path("autocorr_fit.json"), j);
    ctx.out << "slope " << num(fit.slope) << " +- " << num(fit.half_width) << '\n';
  }
  ctx.out << "wrote " << w.path() << '\n';
  return kExitOk;
}

const char* root_class(cplx z, double delta) {
  const double r = std::abs(z);
  if (std::abs(r - 1.0) <= delta) return "on_circle";
  return r < 1.0 ? "inside" : "outside";
}

int cmd_zeros(Context& ctx) {
  const double delta = ctx.cfg.delta_circle;
  CsvWriter roots_csv(ctx.path("roots.csv"),
                      {"family", "index", "re", "im", "modulus", "residual", "class"}, ctx.hash);
  auto dump_roots = [&](const std::string& fam, std::uint64_t idx, const RootSet& rs) {
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      const cplx z = rs.roots[i];
      roots_csv.row({fam, std::to_string(idx), num(z.real()), num(z.imag()), num(std::abs(z)),
                     num(rs.residuals[i]), root_class(z, delta)});
    }
  };
  RootOptions opts;
  opts.seed = ctx.cfg.seed;
  opts.cluster_radius = ctx.cfg.cluster_radius;

  if (!ctx.cfg.primes.empty()) {
    CsvWriter fk(ctx.path("fekete.csv"),
                 {"p", "n_grid", "sign_changes", "tangencies", "fraction", "reciprocity"}, ctx.hash);
    for (auto p : ctx.cfg.primes) {
      const auto f = fekete(p);
      if (f.poly.degree() <= kRootDegreeCap) {
        opts.tol = ctx.cfg.root_tol * std::sqrt(static_cast<double>(f.poly.energy()));
        dump_roots("fekete", p, find_roots(f.poly, opts));
      }
      const std::size_t n_grid = kernels::next_power_of_two(8 * p);
      const auto u = unimodular_count_reciprocal(f, n_grid);
      fk.row({std::to_string(p), num(n_grid), num(u.sign_changes), num(u.tangencies.size()),
              num(u.fraction()), f.reciprocity == Reciprocity::self ? "self" : "anti_self"});
      ctx.out << "p=" << p << " unimodular_fraction=" << num(u.fraction()) << '\n';
    }
    return kExitOk;
  }

  AuditSuite suite(ctx.cfg, ctx.cal);
  CsvWriter sum(ctx.path("zeros_summary.csv"),
                {"family", "k", "n", "degree", "on_circle", "annulus", "inside", "outside", "real_zeros",
                 "delta_circle", "c1", "on_circle_delta_x0.1", "on_circle_delta_x10"},
                ctx.hash);
  for (int k : k_values(ctx.cfg)) {
    for (char fam : {'p', 'q'}) {
      const std::string name = fam == 'p' ? "P" : "Q";
      dump_roots(name, static_cast<std::uint64_t>(k), suite.roots(fam, k));
      const auto c = suite.classification(fam, k);
      sum.row({name, num(k), num(std::ldexp(1.0, k)), num(c.degree), num(c.on_circle), num(c.annulus),
               num(c.inside), num(c.outside), num(c.real_zeros), num(delta), num(c.c1),
               num(suite.classification(fam, k, 0.1).on_circle),
               num(suite.classification(fam, k, 10.0).on_circle)});
    }
  }
  ctx.out << "wrote " << roots_csv.path() << " and " << sum.path() << '\n';
  return kExitOk;
}

int cmd_crossings(Context& ctx) {
  CsvWriter w(ctx.path("crossings.csv"),
              {"k", "eta", "n", "count", "count_transversal", "count_tangent", "hidden_pairs", "cap"},
              ctx.hash);
  for (int k : k_values(ctx.cfg)) {
    const auto pair = rudin_shapiro(k);
    const auto s = modulus_squared(pair.p);
    const double n = static_cast<double>(pair.n);
    const std::size_t n_grid =
        kernels::next_power_of_two(static_cast<std::size_t>(ctx.cfg.grid_factor) * pair.n);
    for (double eta : ctx.cfg.etas) {
      const auto r = level_crossings(s, eta, n, n_grid);
      w.row({num(k), num(eta), num(pair.n), num(r.count), num(r.count_transversal), num(r.count_tangent),
             num(r.hidden_pairs), num(2 * (pair.n - 1))});
    }
  }
  ctx.out << "wrote " << w.path() << '\n';
  return kExitOk;
}

int cmd_dist(Context& ctx) {
  CsvWriter w(ctx.path("dist.csv"), {"k", "N", "family", "sup_dev", "sup_dev_p", "sup_dev_q", "cells"},
              ctx.hash);
  auto j = envelope(ctx, "montgomery_cells");
  j["cells"] = json::array();
  for (int k : k_values(ctx.cfg)) {
    const std::size_t n_grid =
        kernels::next_power_of_two(static_cast<std::size_t>(ctx.cfg.grid_factor) << k);
    const auto s = saffari_discrepancy(k, n_grid);
    const auto m = montgomery_discrepancy(k, n_grid, ctx.cfg.radial_cells, ctx.cfg.angular_cells);
    for (const auto* d : {&s, &m}) {
      w.row({num(k), num(n_grid), to_string(d->family), num(d->sup_dev), num(d->sup_dev_p),
             num(d->sup_dev_q), d->cells});
    }
    j["cells"].push_back({{"k", k}, {"radial", m.radial}, {"angular", m.angular},
                          {"limit", 1.0 / static_cast<double>(m.detail.size())}, {"fraction_p", m.detail}});
  }
  write_json(ctx.path("dist_cells.json"), j);
  ctx.out << "wrote " << w.path() << '\n';
  return kExitOk;
}

int cmd_ensemble(Context& ctx) {
  CsvWriter w(ctx.path("ensemble.csv"), {"n", "q", "samples", "mean", "std_err", "limit", "seed", "rng"},
              ctx.hash);
  std::vector<double> qs = ctx.cfg.qs;
  for (double q : qs) {
    const auto e = ensemble_mean(ctx.cfg.ensemble_n, q, ctx.cfg.samples, ctx.cfg.seed);
    const double limit = q == 0.0 ? std::exp(-std::numbers::egamma / 2.0) : std::tgamma(1.0 + q / 2.0);
    w.row({num(e.n), num(q), num(e.samples), num(e.mean), num(e.std_err), num(limit),
           std::to_string(e.seed), e.rng});
    ctx.out << "q=" << num(q) << " mean=" << num(e.mean) << " se=" << num(e.std_err) << '\n';
  }
  ctx.out << "wrote " << w.path() << '\n';
  return kExitOk;
}

std::size_t count_failures(const std::vector<AuditReport>& rs) {
  std::size_t f = 0;
  for (const auto& r : rs) f += r.status == AuditStatus::fail;
  return f;
}

void print_summary(Context& ctx, const std::vector<AuditReport>& rs) {
  for (const auto& r : rs) {
    ctx.out << to_string(r.status) << ' ' << r.name << ' ' << r.params_string()
            << " margin=" << num(r.margin) << '\n';
  }
}

int cmd_audit(Context& ctx, const std::string& name) {
  if (name.empty()) throw Error("audit: --name is required");
  AuditSuite suite(ctx.cfg, ctx.cal);
  std::vector<AuditReport> reports;
  const bool all = name == "all";
  if (name == "fekete" || (all && !ctx.cfg.primes.empty())) {
    if (ctx.cfg.primes.empty()) throw Error("audit fekete: --prime is required");
    for (auto p : ctx.cfg.primes) reports.push_back(suite.run_fekete(p));
  }
  if (name != "fekete") {
    const auto names = all ? AuditSuite::names() : std::vector<std::string>{name};
    for (const auto& nm : names) {
      AuditSuite::k_limits(nm);  // rejects unknown names
      for (int k : k_values(ctx.cfg)) {
        for (auto& r : suite.run(nm, k)) reports.push_back(std::move(r));
      }
    }
  }
  if (reports.empty()) throw Error("audit: no audit applies to the selected range");
  write_audits_csv(ctx.path("audits.csv"), reports, ctx.hash);
  print_summary(ctx, reports);
  return count_failures(reports) ? kExitAuditFailed : kExitOk;
}

int cmd_report(Context& ctx) {
  AuditSuite suite(ctx.cfg, ctx.cal);
  std::vector<AuditReport> reports;
  for (const auto& nm : AuditSuite::names()) {
    for (int k : k_values(ctx.cfg)) {
      for (auto& r : suite.run(nm, k)) reports.push_back(std::move(r));
    }
  }
  PlotSet plots;
  for (auto p : ctx.cfg.primes) {
    reports.push_back(suite.run_fekete(p));
    plots.fekete.push_back(unimodular_count_reciprocal(fekete(p), kernels::next_power_of_two(8 * p)));
  }
  for (int k : k_values(ctx.cfg)) {
    if (k < 1) continue;
    const std::size_t n_grid =
        kernels::next_power_of_two(static_cast<std::size_t>(std::max(ctx.cfg.grid_factor, 16)) << k);
    plots.discrepancy.push_back(saffari_discrepancy(k, n_grid));
    plots.discrepancy.push_back(
        montgomery_discrepancy(k, n_grid, ctx.cfg.radial_cells, ctx.cfg.angular_cells));
    auto prof = autocorr_profile(k);
    prof.a.clear();
    plots.autocorr.push_back(std::move(prof));
    if (k <= 12) plots.annulus.emplace_back(k, suite.classification('p', k));
  }
  write_audits_csv(ctx.path("audits.csv"), reports, ctx.hash);
  auto j = envelope(ctx, "report");
  j["audits"] = json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
  for (const auto& r : reports) {
    j["audits"].push_back(report_json(r));
    ++counts[to_string(r.status)];
  }
  j["summary"] = counts;
  write_json(ctx.path("report.json"), j);
  const auto files = emit_plotdata(plots, ctx.path("plots"));
  ctx.out << "audits: " << counts["pass"] << " pass, " << counts["fail"] << " fail, "
          << counts["inconclusive"] << " inconclusive\n"
          << "wrote " << ctx.path("report.json") << " and " << files.size() << " plot files\n";
  return counts["fail"] ? kExitAuditFailed : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rudin-Shapiro and Fekete polynomial lab"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags fl;
  app.add_option("--k", fl.k, "generation (or range a..b)");
  app.add_option("--k-range", fl.k_range, "generation range a..b");
  app.add_option("--prime", fl.prime, "comma-separated odd primes");
  app.add_option("--eta", fl.eta, "comma-separated crossing levels");
  app.add_option("--alpha", fl.alpha, "comma-separated sublevel fractions");
  app.add_option("--grid-factor", fl.grid_factor, "grid points per coefficient");
  app.add_option("--seed", fl.seed, "RNG / root-finder seed");
  app.add_option("--threads", fl.threads, "OpenMP thread count");
  app.add_option("--config", fl.config, "key=value config file");
  app.add_option("--out", fl.out, "output directory");

  std::map<std::string, CLI::App*> sub;
  for (const char* name : {"build", "norms", "autocorr", "zeros", "crossings", "dist", "ensemble", "audit", "report"}) {
    sub[name] = app.add_subcommand(name);
  }
  sub["build"]->description("write P_k, Q_k (or Fekete) coefficient tables");
  sub["norms"]->description("M_q norms, Mahler measure and the M_4 ratio");
  sub["autocorr"]->description("autocorrelation profiles and growth exponent");
  sub["zeros"]->description("root sets and zero classification (or Fekete counts)");
  sub["crossings"]->description("solutions of R_k(t) = eta n");
  sub["dist"]->description("Saffari and Montgomery discrepancies");
  sub["ensemble"]->description("random Littlewood ensemble means");
  sub["audit"]->description("run one named audit (or 'all')");
  sub["report"]->description("run every audit and bundle the results");
  for (const char* name : {"build", "zeros"}) {
    sub[name]->add_option("--fekete", fl.fekete, "Fekete prime");
  }
  sub["ensemble"]->add_option("--q", fl.q, "comma-separated exponents (0 = Mahler)");
  sub["ensemble"]->add_option("--samples", fl.samples, "sample count");
  sub["ensemble"]->add_option("--n", fl.n, "degree + 1");
  sub["norms"]->add_option("--q", fl.q, "comma-separated exponents");
  sub["audit"]->add_option("--name", fl.name, "audit name")->required();
  sub["report"]->add_option("--k-max", fl.k_max, "run generations 1..k-max");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    RunConfig cfg;
    KeyValues file_kv;
    if (!fl.config.empty()) file_kv = read_key_value_file(fl.config);
    cfg.apply(file_kv);
    KeyValues kv;
    if (sub["ensemble"]->parsed() && !file_kv.count("q")) kv["q"] = "0,2,4";
    if (!fl.k.empty()) kv["k"] = fl.k;
    if (!fl.k_range.empty()) kv["k_range"] = fl.k_range;
    if (fl.k_max >= 0) kv["k_range"] = "1.." + std::to_string(fl.k_max);
    if (!fl.prime.empty()) kv["prime"] = fl.prime;
    if (fl.fekete) kv["prime"] = std::to_string(fl.fekete);
    if (!fl.eta.empty()) kv["eta"] = fl.eta;
    if (!fl.alpha.empty()) kv["alpha"] = fl.alpha;
    if (!fl.q.empty()) kv["q"] = fl.q;
    if (fl.grid_factor) kv["grid_factor"] = std::to_string(fl.grid_factor);
    if (fl.seed) kv["seed"] = std::to_string(*fl.seed);
    if (fl.threads >= 0) kv["threads"] = std::to_string(fl.threads);
    if (!fl.out.empty()) kv["out"] = fl.out;
    if (fl.samples) kv["samples"] = std::to_string(fl.samples);
    if (fl.n) kv["ensemble_n"] = std::to_string(fl.n);
    cfg.apply(kv);
    cfg.validate();
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    fs::create_directories(cfg.out_dir);

    Calibration cal;
    if (fs::exists(cfg.calibration)) {
      cal = Calibration::load(cfg.calibration);
    } else {
      err << "note: calibration file '" << cfg.calibration << "' not found; calibrated audits are inconclusive\n";
    }
    Context ctx{cfg, cal, cfg.hash_hex(), out, err};

    if (sub["build"]->parsed()) return cmd_build(ctx);
    if (sub["norms"]->parsed()) return cmd_norms(ctx);
    if (sub["autocorr"]->parsed()) return cmd_autocorr(ctx);
    if (sub["zeros"]->parsed()) return cmd_zeros(ctx);
    if (sub["crossings"]->parsed()) return cmd_crossings(ctx);
    if (sub["dist"]->parsed()) return cmd_dist(ctx);
    if (sub["ensemble"]->parsed()) return cmd_ensemble(ctx);
    if (sub["audit"]->parsed()) return cmd_audit(ctx, fl.name);
    if (sub["report"]->parsed()) return cmd_report(ctx);
    err << "error: no subcommand\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace rslab
