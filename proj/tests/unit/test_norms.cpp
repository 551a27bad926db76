#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rslab/errors.hpp"
#include "rslab/norms.hpp"

using namespace rslab;

TEST_CASE("mq_norm anchors") {
  const auto p1 = rudin_shapiro(1).p;
  CHECK(mq_norm(p1, kNormInfinity).value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mq_norm(p1, 4.0).value == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-14));
  for (int k = 0; k <= 16; ++k) {
    const auto p = rudin_shapiro(k).p;
    CHECK(mq_norm(p, 2.0).value == doctest::Approx(std::sqrt(std::ldexp(1.0, k))).epsilon(1e-10));
  }
  CHECK_THROWS_AS(mq_norm(p1, 0.0), DomainError);
  CHECK_THROWS_AS(mq_norm(rudin_shapiro(4).p, 2.0, 32), DomainError);
}

TEST_CASE("sup norm refinement beats the grid") {
  // |P_3| maximum located by a fine long-double scan
  const auto c = oracle::rs_p(3);
  long double best = 0;
  for (int i = 0; i < 2000000; ++i) best = std::max(best, std::abs(oracle::eval(c, 2 * M_PIl * i / 2000000)));
  CHECK(mq_norm(rudin_shapiro(3).p, kNormInfinity).value == doctest::Approx(double(best)).epsilon(1e-10));
}

TEST_CASE("norms are monotone in q") {
  for (int k : {3, 7, 10}) {
    const auto p = rudin_shapiro(k).p;
    double prev = mahler_quadrature(p, 1 << 16).value;
    for (double q : {0.5, 1.0, 2.0, 4.0, 8.0, kNormInfinity}) {
      const double v = mq_norm(p, q).value;
      CHECK(v >= prev * (1 - 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("mahler measure anchors") {
  // quadrature error for z + 1 on the midpoint grid is 2^{1/N}
  const auto m = mahler_quadrature(SignedPoly{1, 1}, 1 << 16);
  CHECK(m.value == doctest::Approx(1.0).epsilon(2e-5));
  CHECK(std::abs(m.value - std::pow(2.0, 1.0 / 65536)) < 1e-12);
  CHECK(mahler_quadrature(SignedPoly{1, -1, -1, 1}, 1 << 16).value == doctest::Approx(1.0).epsilon(1e-4));

  RootSet rs;
  rs.roots = {-1.0};
  rs.degree = 1;
  rs.converged = true;
  CHECK(mahler_jensen(rs, 1.0).value == doctest::Approx(1.0));
  rs.roots = {2.0};
  CHECK(mahler_jensen(rs, 2.0).value == doctest::Approx(4.0));
  rs.converged = false;
  CHECK_THROWS_AS(mahler_jensen(rs, 2.0), DomainError);

  const auto p2 = rudin_shapiro(2).p;
  const auto roots = find_roots(p2, 1e-12);
  CHECK(mahler_jensen(roots, -1.0).value ==
        doctest::Approx(mahler_quadrature(p2, 1 << 16).value).epsilon(1e-8));
}

TEST_CASE("mahler measure of P_k grows like sqrt(n)") {
  double lo = 1e9, hi = 0;
  for (int k = 4; k <= 14; ++k) {
    const double ratio = mahler_quadrature(rudin_shapiro(k).p).value / std::sqrt(std::ldexp(1.0, k));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 2.0);
}

TEST_CASE("m4 ratio from integer autocorrelations") {
  CHECK(m4_ratio(1) == 1.125);
  CHECK(m4_ratio(2) == 0.9375);
  CHECK(m4_fourth_power(1) == 6);
  CHECK(m4_fourth_power(2) == 20);
  // closed form (4^{k+1} - (-2)^k) / 3
  for (int k = 0; k <= 20; ++k) {
    const std::int64_t want = ((std::int64_t{1} << (2 * k + 2)) - (k % 2 ? -(std::int64_t{1} << k) : (std::int64_t{1} << k))) / 3;
    CHECK(m4_fourth_power(k) == want);
  }
  for (int k = 1; k <= 6; ++k) {
    const double quad = std::pow(mq_norm(rudin_shapiro(k).p, 4.0).value, 4.0);
    CHECK(std::llround(quad) == m4_fourth_power(k));
  }
  CHECK_THROWS_AS(m4_ratio(21), DomainError);
}
