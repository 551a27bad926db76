// One PASS/FAIL line per acceptance criterion. Run from the repository root so
// that calibration/constants.cfg is found.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rslab/audit_suite.hpp"
#include "rslab/autocorr.hpp"
#include "rslab/distribution.hpp"
#include "rslab/errors.hpp"
#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"
#include "rslab/norms.hpp"
#include "rslab/zeros.hpp"

using namespace rslab;

namespace {

// tolerances
constexpr double kParallelogramTol = 1e-6;
constexpr double kParsevalTol = 1e-10;
constexpr double kFeketeLo = 0.49, kFeketeHi = 0.52, kFeketeMean = 0.5007, kFeketeMeanTol = 0.005;
constexpr double kAnnulusRatioLo = 1.6, kAnnulusRatioHi = 2.4, kAnnulusSpread = 2.0;
constexpr double kCrossingEps = 0.1, kCrossingExponent = 0.36;
constexpr double kSaffariK1Tol = 1e-3;
constexpr double kEnsembleSigmas = 3.0, kMahlerLimit = 0.749306, kMahlerTol = 0.03;
constexpr double kJensenRelTol = 1e-6;
constexpr std::uint64_t kSeed = 12345;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s C%d %s (%.1fs):%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.str().c_str());
  std::fflush(stdout);
}

Calibration load_calibration() {
  try {
    return Calibration::load("calibration/constants.cfg");
  } catch (const Error& e) {
    std::printf("note: %s\n", e.what());
    return {};
  }
}

}  // namespace

int main() {
  const Calibration cal = load_calibration();
  RunConfig cfg;
  AuditSuite suite(cfg, cal);

  criterion(1, "parallelogram identity", [](Outcome& o) {
    double worst = 0.0;
    for (int k = 1; k <= 14; ++k) {
      const auto pair = rudin_shapiro(k);
      const std::size_t n_grid = 16 * pair.n;
      const auto gp = eval_grid(pair.p, n_grid);
      const auto gq = eval_grid(pair.q, n_grid);
      const double target = std::ldexp(1.0, k + 1);
      double dev = 0.0;
      for (std::size_t m = 0; m < n_grid; ++m) {
        dev = std::max(dev, std::abs(std::norm(gp.values[m]) + std::norm(gq.values[m]) - target));
      }
      worst = std::max(worst, dev / target);
      o.require(dev <= kParallelogramTol * target, "k=" + std::to_string(k));
    }
    o.detail << " worst relative deviation " << worst;
  });

  criterion(2, "Parseval", [](Outcome& o) {
    double worst = 0.0;
    for (int k = 0; k <= 18; ++k) {
      const auto pair = rudin_shapiro(k);
      const double target = std::sqrt(std::ldexp(1.0, k));
      for (const SignedPoly* f : {&pair.p, &pair.q}) {
        const double exact = parseval_norm(*f).value;
        const double quad = mq_norm(*f, 2.0, 4 * pair.n).value;
        const double err = std::max(std::abs(exact - target), std::abs(quad - target)) / target;
        worst = std::max(worst, err);
        o.require(err <= kParsevalTol, "k=" + std::to_string(k));
      }
    }
    o.detail << " worst relative error " << worst;
  });

  criterion(3, "M4 asymptotics", [](Outcome& o) {
    o.require(m4_ratio(1) == 1.125, "k=1 anchor");
    o.require(m4_ratio(2) == 0.9375, "k=2 anchor");
    for (int k = 0; k <= 6; ++k) {
      const auto c = oracle::rs_p(k);
      const std::size_t n_grid = 8 * c.size();
      oracle::ld s = 0;
      for (std::size_t m = 0; m < n_grid; ++m) {
        const auto v = std::norm(oracle::eval(c, 2 * M_PIl * m / n_grid));
        s += v * v;
      }
      const auto direct = std::llround(s / n_grid);
      o.require(direct == m4_fourth_power(k), "quadrature oracle k=" + std::to_string(k));
    }
    double worst = 0.0;
    for (int k = 2; k <= 18; ++k) {
      const double dev = std::abs(m4_ratio(k) - 1.0);
      const double bound = std::ldexp(1.0, -k + 1);
      worst = std::max(worst, dev / bound);
      o.require(dev <= bound, "k=" + std::to_string(k));
    }
    o.detail << " worst deviation / bound " << worst;
  });

  criterion(4, "autocorrelation bracket", [](Outcome& o) {
    for (int k = 0; k <= 10; ++k) {
      const auto a = autocorr_profile(k).a;
      const auto ref = oracle::autocorr(oracle::rs_p(k));
      o.require(a == ref, "oracle mismatch k=" + std::to_string(k));
    }
    const auto fit = growth_exponent(8, 18);
    o.detail << " slope " << fit.slope << " +/- " << fit.half_width << " (95% interval " << fit.slope - fit.half_width
             << ".." << fit.slope + fit.half_width << ")";
    o.require(fit.slope >= 0.70 && fit.slope <= 0.85, "slope in [0.70, 0.85]");
  });

  criterion(5, "Fekete unimodular zeros", [](Outcome& o) {
    double sum = 0.0;
    const std::vector<std::uint64_t> primes{1009, 2003, 3001, 4001, 5003};
    for (auto p : primes) {
      const auto u = unimodular_count_reciprocal(fekete(p), kernels::next_power_of_two(8 * p));
      const double fr = u.fraction();
      sum += fr;
      o.detail << " p" << p << "=" << fr;
      o.require(fr >= kFeketeLo && fr <= kFeketeHi, "p=" + std::to_string(p));
    }
    const double mean = sum / static_cast<double>(primes.size());
    o.detail << " mean " << mean;
    o.require(std::abs(mean - kFeketeMean) <= kFeketeMeanTol, "mean");
  });

  criterion(6, "one real zero", [&](Outcome& o) {
    for (int k = 1; k <= 12; ++k) {
      for (char fam : {'p', 'q'}) {
        const auto c = suite.classification(fam, k);
        o.require(c.real_zeros == 1, std::string(1, fam) + std::to_string(k) + " has " +
                                         std::to_string(c.real_zeros));
      }
    }
  });

  criterion(7, "on-circle fraction nonincreasing", [&](Outcome& o) {
    for (char fam : {'p', 'q'}) {
      double prev = INFINITY;
      o.detail << " " << fam << ":";
      for (int k = 6; k <= 12; ++k) {
        const auto c = suite.classification(fam, k);
        const auto lo = suite.classification(fam, k, 0.1);
        const auto hi = suite.classification(fam, k, 10.0);
        o.detail << " k" << k << "=" << c.on_circle << "(" << lo.on_circle << "," << hi.on_circle << ")";
        const double frac = c.on_circle_fraction();
        o.require(frac <= prev + 1.0 / c.n, std::string(1, fam) + std::to_string(k));
        prev = frac;
      }
    }
  });

  criterion(8, "annulus scaling", [&](Outcome& o) {
    o.require(cal.has("annulus_c1"), "annulus_c1 calibrated");
    o.detail << " c1=" << suite.c1();
    for (char fam : {'p', 'q'}) {
      std::vector<double> counts, c2;
      for (int k = 8; k <= 11; ++k) {
        const auto c = suite.classification(fam, k);
        counts.push_back(static_cast<double>(c.annulus));
        c2.push_back(c.annulus_fraction());
      }
      o.detail << " " << fam << ":";
      for (std::size_t i = 0; i < counts.size(); ++i) o.detail << " " << counts[i];
      for (std::size_t i = 1; i < counts.size(); ++i) {
        const double ratio = counts[i] / counts[i - 1];
        o.require(ratio >= kAnnulusRatioLo && ratio <= kAnnulusRatioHi,
                  std::string(1, fam) + " ratio " + std::to_string(ratio));
      }
      const auto [mn, mx] = std::minmax_element(c2.begin(), c2.end());
      o.require(*mn > 0.0, "c2 positive");
      o.require(*mx <= kAnnulusSpread * *mn, "c2 stable within x2");
    }
  });

  criterion(9, "crossing counts", [](Outcome& o) {
    const double gamma = rs_gamma();
    std::size_t checked = 0;
    double worst_lower = INFINITY;
    for (int k = 12; k <= 16; ++k) {
      const auto pair = rudin_shapiro(k);
      const double n = static_cast<double>(pair.n);
      const auto r = modulus_squared(pair.p);
      for (double eta : {0.1, 0.2, 0.29}) {
        const auto rep = level_crossings(r, eta, n, 16 * pair.n);
        ++checked;
        o.require(rep.count_with_multiplicity() <= 2 * (pair.n - 1), "cap");
        if (eta < 2 * gamma) {
          const double need = (1.0 - kCrossingEps) * eta * n / 2.0;
          worst_lower = std::min(worst_lower, rep.count / need);
          o.require(rep.count >= need, "lower bound k=" + std::to_string(k));
        }
      }
    }
    std::vector<double> ns, counts;
    for (int k = 10; k <= 18; ++k) {
      const auto pair = rudin_shapiro(k);
      const double n = static_cast<double>(pair.n);
      const auto rep = level_crossings(modulus_squared(pair.p), 1.0, n, 16 * pair.n);
      ++checked;
      o.require(rep.count_with_multiplicity() <= 2 * (pair.n - 1), "cap");
      ns.push_back(n);
      counts.push_back(static_cast<double>(rep.count));
    }
    const auto fit = fit_power_law(ns, counts);
    o.detail << " " << checked << " level sets; min count/lower bound " << worst_lower << "; exponent at level n "
             << fit.slope;
    o.require(fit.slope >= kCrossingExponent, "exponent");
  });

  criterion(10, "Saffari/Montgomery convergence", [&](Outcome& o) {
    const auto s10 = saffari_discrepancy(10, std::size_t{16} << 10);
    const auto s18 = saffari_discrepancy(18, std::size_t{16} << 18);
    const auto m10 = montgomery_discrepancy(10, std::size_t{16} << 10, 16, 16);
    const auto m18 = montgomery_discrepancy(18, std::size_t{16} << 18, 16, 16);
    o.detail << " saffari " << s10.sup_dev << " -> " << s18.sup_dev << "; montgomery " << m10.sup_dev << " -> "
             << m18.sup_dev;
    o.require(s18.sup_dev < s10.sup_dev, "saffari decrease");
    o.require(m18.sup_dev < m10.sup_dev, "montgomery decrease");
    const double k1 = saffari_discrepancy(1, std::size_t{1} << 16).sup_dev;
    const double ref = oracle::saffari_k1_sup();
    o.detail << "; k1 " << k1 << " vs " << ref;
    o.require(std::abs(k1 - ref) <= kSaffariK1Tol, "k=1 anchor");
    o.require(cal.has("saffari_threshold_k18") && cal.has("montgomery_threshold_k18"), "thresholds frozen");
    if (cal.has("saffari_threshold_k18")) {
      o.require(s18.sup_dev <= cal.get("saffari_threshold_k18"), "saffari regression");
    }
    if (cal.has("montgomery_threshold_k18")) {
      o.require(m18.sup_dev <= cal.get("montgomery_threshold_k18"), "montgomery regression");
    }
  });

  criterion(11, "ensemble limits", [](Outcome& o) {
    const auto q4 = ensemble_mean(64, 4.0, 2000, kSeed);
    const auto m0 = ensemble_mean(64, 0.0, 2000, kSeed);
    o.detail << " seed " << kSeed << "; q4 " << q4.mean << " +/- " << q4.std_err << "; mahler " << m0.mean;
    o.require(std::abs(q4.mean - 2.0) <= kEnsembleSigmas * q4.std_err, "q=4 within 3 se of 2");
    o.require(std::abs(m0.mean - kMahlerLimit) <= kMahlerTol, "mahler mean");
  });

  criterion(12, "cross-oracle coherence", [&](Outcome& o) {
    std::size_t bands = 0, skipped = 0;
    auto band_check = [&](const SignedPoly& f, const RootSet& rs, const std::string& label) {
      for (double rho : {0.9, 0.95, 1.05, 1.1}) {
        int inside = 0;
        for (const auto& z : rs.roots) inside += std::abs(z) < rho;
        try {
          const int ap = argument_principle_count(f, rho, kernels::next_power_of_two(4 * f.size()));
          ++bands;
          o.require(ap == inside, label + " rho=" + std::to_string(rho));
        } catch (const ContourError&) {
          ++skipped;
        }
      }
    };
    double worst = 0.0;
    for (int k = 1; k <= 10; ++k) {
      const auto pair = rudin_shapiro(k);
      for (char fam : {'p', 'q'}) {
        const SignedPoly& f = fam == 'p' ? pair.p : pair.q;
        const auto& rs = suite.roots(fam, k);
        const std::string label = std::string(1, fam) + std::to_string(k);
        band_check(f, rs, label);
        const double jensen = mahler_jensen(rs, static_cast<double>(f.leading())).value;
        const double quad = mahler_quadrature(f, std::size_t{1} << 22).value;
        const double rel = std::abs(jensen - quad) / quad;
        worst = std::max(worst, rel);
        o.require(rel <= kJensenRelTol, "mahler " + label);
      }
    }
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 101u, 103u, 509u, 1019u}) {
      const auto f = fekete(p);
      band_check(f.poly, find_roots(f.poly, RootOptions{}), "fekete" + std::to_string(p));
    }
    o.detail << " " << bands << " band counts (" << skipped << " contour skips); worst mahler rel " << worst;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
