#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rslab/audit_suite.hpp"
#include "rslab/errors.hpp"
#include "rslab/zeros.hpp"

using namespace rslab;

namespace {

std::string param(const AuditReport& r, const std::string& key) {
  for (const auto& [k, v] : r.params) {
    if (k == key) return v;
  }
  return {};
}

}  // namespace

TEST_CASE("settle derives status from the margin") {
  AuditReport r;
  r.settle(1.0, 2.0);
  CHECK(r.margin == 1.0);
  CHECK(r.passed());
  r.settle(2.0, 2.0);
  CHECK(r.passed());
  r.settle(3.0, 2.0);
  CHECK(r.status == AuditStatus::fail);
  r.settle(1.0, 2.0, false);
  CHECK(r.status == AuditStatus::inconclusive);
}

TEST_CASE("nearest zero: P_1 at c = 1/2") {
  const auto f = rudin_shapiro(1).p;
  const auto rep = nearest_zero_audit(f, modulus_squared(f), 0.5, find_roots(f, 1e-12));
  CHECK(param(rep, "qualifying") == "1");
  CHECK(rep.lhs == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(1600.0 * std::numbers::e * std::numbers::e));
  CHECK(rep.passed());
  CHECK(param(rep, "satisfies_literal") == "no");
  CHECK(nearest_zero_c4_bound(2.0) == doctest::Approx(100.0 * std::numbers::e * std::numbers::e));
}

TEST_CASE("nearest zero: vacuous when no angle qualifies") {
  const auto f = rudin_shapiro(1).p;
  const auto rep = nearest_zero_audit(f, modulus_squared(f), 0.6, find_roots(f, 1e-12));
  CHECK(param(rep, "qualifying") == "0");
  CHECK(rep.lhs == 0.0);
  CHECK(rep.passed());
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("bernstein on 2 + 2 cos t") {
  const CosinePoly s({2.0, 1.0});
  const auto alg = s.algebraic_coeffs();
  REQUIRE(alg.size() == 3);
  const auto roots = find_roots(std::span<const cplx>(alg), RootOptions{});
  const auto far = bernstein_audit(s, 0.0, 1.0, roots);
  CHECK(far.passed());
  CHECK(far.lhs == doctest::Approx(0.0));
  CHECK(far.rhs == doctest::Approx(5.0 * std::numbers::e * std::sqrt(2.0) * 4.0));
  const auto slope = bernstein_audit(s, std::numbers::pi / 2, 1.0, roots);
  CHECK(slope.lhs == doctest::Approx(2.0));
  CHECK(slope.passed());
  const auto near = bernstein_audit(s, std::numbers::pi - 0.5, 1.0, roots);
  CHECK(near.status == AuditStatus::inconclusive);
  CHECK_THROWS_AS(bernstein_audit(s, 0.0, 3.0, roots), DomainError);
}

TEST_CASE("root of unity floor") {
  const auto k1 = root_of_unity_floor(1);
  CHECK(k1.rhs == doctest::Approx(4.0));
  CHECK(k1.lhs == doctest::Approx(4.0 * rs_gamma()));
  for (int k = 1; k <= 12; ++k) CHECK_MESSAGE(root_of_unity_floor(k).passed(), "k = " << k);
  CHECK_THROWS_AS(root_of_unity_floor(0), DomainError);
  CHECK_THROWS_AS(root_of_unity_floor(19), DomainError);
}

TEST_CASE("zero density and sublevel audits") {
  const auto f = rudin_shapiro(8).p;
  const auto zd = zero_density_audit(f, Part::re, 1.0, 0.3);
  CHECK(zd.passed());
  CHECK(zd.lhs >= 0.0);
  CHECK_THROWS_AS(zero_density_audit(f, Part::re, 1.0, 4.0), DomainError);

  const auto sl = sublevel_audit(rudin_shapiro(1).p, 0.5, 1, 64);
  CHECK(std::stod(param(sl, "measure_radians")) == doctest::Approx(std::numbers::pi));
  CHECK(sl.lhs == doctest::Approx(std::sqrt(0.5) / std::numbers::e));
  CHECK(sl.passed());
  CHECK(param(sl, "readings_satisfied") == "both");
}

TEST_CASE("suite bookkeeping") {
  AuditSuite suite(RunConfig{}, Calibration{});
  for (const auto& name : AuditSuite::names()) {
    const auto [lo, hi] = AuditSuite::k_limits(name);
    CHECK(lo <= hi);
    CHECK(suite.run(name, hi + 1).empty());
  }
  CHECK_THROWS_AS(suite.run("no_such_audit", 3), Error);
  const auto eq = suite.run("eq11", 10);
  REQUIRE_FALSE(eq.empty());
  for (const auto& r : eq) {
    CHECK(r.passed());
    CHECK(std::abs(r.margin) <= 1e-6 * 2048);
    CHECK_FALSE(r.anchor.empty());
  }
  // without a frozen threshold the discrepancy audit falls back to sup_dev <= 1
  for (const auto& r : suite.run("saffari", 4)) {
    CHECK(param(r, "threshold_source") == "invariant");
    CHECK(r.rhs == 1.0);
  }
  CHECK(&suite.roots('p', 5) == &suite.roots('p', 5));
}
