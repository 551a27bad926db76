// Computes the empirical constants frozen in calibration/constants.cfg.
// Usage: pilot_calibration [output path]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rslab/audit_suite.hpp"
#include "rslab/autocorr.hpp"
#include "rslab/distribution.hpp"
#include "rslab/kernels.hpp"
#include "rslab/zeros.hpp"

namespace {

// Rounds to six significant digits, away from the data (up or down).
double round_sig(double v, bool up) {
  if (v == 0.0) return 0.0;
  const double scale = std::pow(10.0, std::floor(std::log10(std::abs(v))) - 5.0);
  return (up ? std::ceil(v / scale) : std::floor(v / scale)) * scale;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rslab;
  const std::string path = argc > 1 ? argv[1] : "calibration/constants.cfg";
  std::vector<std::pair<std::string, std::string>> out;
  auto put = [&](const std::string& key, double v, const std::string& why) {
    out.emplace_back(key, fmt(v) + "  # " + why);
    std::cout << key << " = " << fmt(v) << '\n';
  };

  std::vector<AutocorrProfile> profiles;
  for (int k = 1; k <= 10; ++k) profiles.push_back(autocorr_profile(k));
  put("autocorr_C", round_sig(calibrate_autocorr_constant(profiles), true),
      "max over k = 1..10 of max|a_j| / n^0.8190");

  const double c1 = 1.0;
  put("annulus_c1", c1, "annulus half-width c1 / n");
  RunConfig cfg;
  Calibration cal(std::map<std::string, double>{{"annulus_c1", c1}});
  AuditSuite suite(cfg, cal);
  double c2_min = INFINITY;
  for (int k = 8; k <= 11; ++k) {
    for (char fam : {'p', 'q'}) {
      const auto c = suite.classification(fam, k);
      std::cout << "  annulus k=" << k << ' ' << fam << ": " << c.annulus << " (" << fmt(c.annulus_fraction())
                << ")\n";
      c2_min = std::min(c2_min, c.annulus_fraction());
    }
  }
  put("annulus_c2_floor", round_sig(0.5 * c2_min, false), "half the smallest annulus fraction, k = 8..11");

  double c4_max = 0.0;
  const double c = rs_gamma() / (2.0 * std::acos(-1.0));
  for (int k = 8; k <= 12; ++k) {
    const auto pair = rudin_shapiro(k);
    const auto r = nearest_zero_audit(pair.p, modulus_squared(pair.p), c, suite.roots('p', k));
    for (const auto& [key, v] : r.params) {
      if (key == "c4_empirical") c4_max = std::max(c4_max, std::stod(v));
    }
  }
  put("nearest_zero_c4", round_sig(c4_max, true), "max over k = 8..12 of n * nearest-root distance");

  double re_min = INFINITY;
  for (int k = 8; k <= 14; ++k) {
    const auto pair = rudin_shapiro(k);
    const std::size_t n_grid = kernels::next_power_of_two(16 * pair.n);
    for (const SignedPoly* f : {&pair.p, &pair.q}) {
      re_min = std::min(re_min, realpart_zero_count(*f, Part::re, n_grid).ratio());
    }
  }
  put("realpart_c_floor", round_sig(0.5 * re_min, false), "half the smallest Re-zero count / n, k = 8..14");

  for (int k : {10, 18}) {
    const std::size_t n_grid = std::size_t{16} << k;
    put("saffari_threshold_k" + std::to_string(k), round_sig(saffari_discrepancy(k, n_grid).sup_dev, true),
        "pilot sup deviation");
    put("montgomery_threshold_k" + std::to_string(k),
        round_sig(montgomery_discrepancy(k, n_grid, 16, 16).sup_dev, true), "pilot sup deviation, 16x16 cells");
  }

  std::ofstream f(path);
  if (!f) {
    std::cerr << "cannot write " << path << '\n';
    return 1;
  }
  f << "# Empirical constants frozen from the pilot run (tools/pilot_calibration).\n";
  for (const auto& [k, v] : out) f << k << " = " << v << '\n';
  std::cout << "wrote " << path << '\n';
  return 0;
}
