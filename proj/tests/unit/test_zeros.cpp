#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rslab/errors.hpp"
#include "rslab/zeros.hpp"

using namespace rslab;
constexpr double kPi = std::numbers::pi;

TEST_CASE("classification anchors") {
  const auto c1 = classify(find_roots(rudin_shapiro(1).p, 1e-12), 2.0);
  CHECK(c1.on_circle == 1);
  CHECK(c1.real_zeros == 1);
  const auto f5 = classify(find_roots(fekete(5).poly, RootOptions{}), 4.0);
  CHECK(f5.on_circle == 3);
  CHECK(f5.inside == 1);  // the deflated zero at the origin
  CHECK(f5.on_circle + f5.inside + f5.outside == 4);
  RootSet bad;
  CHECK_THROWS_AS(classify(bad, 1.0), DomainError);
}

TEST_CASE("argument principle anchors") {
  CHECK(argument_principle_count(SignedPoly{1, 1}, 2.0, 64) == 1);
  CHECK(argument_principle_count(SignedPoly{1, 1}, 0.5, 64) == 0);
  CHECK(argument_principle_count(fekete(7).poly, 0.5, 64) == 1);
  CHECK_THROWS_AS(argument_principle_count(SignedPoly{1, 1}, 1.0, 64), ContourError);
  try {
    argument_principle_count(SignedPoly{1, 1}, 1.0, 64);
  } catch (const ContourError& e) {
    CHECK(e.arc_begin() <= kPi);
    CHECK(e.arc_end() >= kPi);
  }
}

TEST_CASE("argument principle agrees with root counts") {
  for (int k = 2; k <= 8; ++k) {
    const auto f = rudin_shapiro(k).p;
    const auto rs = find_roots(f, RootOptions{});
    for (double rho : {0.75, 0.9, 1.1, 1.25}) {
      int inside = 0;
      for (const auto& z : rs.roots) inside += std::abs(z) < rho;
      CHECK(argument_principle_count(f, rho, 4 * f.size()) == inside);
    }
  }
}

TEST_CASE("fekete unimodular counts") {
  CHECK(unimodular_count_reciprocal(fekete(3), 16).sign_changes == 1);
  const auto u5 = unimodular_count_reciprocal(fekete(5), 64);
  CHECK(u5.sign_changes == 1);
  REQUIRE(u5.tangencies.size() == 1);
  CHECK(std::abs(std::remainder(u5.tangencies[0], 2 * kPi)) < 1e-6);
  REQUIRE(u5.locations.size() == 1);
  CHECK(u5.locations[0] == doctest::Approx(kPi).epsilon(1e-12));
  CHECK_THROWS_AS(unimodular_count_reciprocal(fekete(5), 16), DomainError);
}

TEST_CASE("fekete sign changes equal the simple unimodular roots") {
  for (std::uint64_t p : {11u, 13u, 101u, 103u, 409u}) {
    const auto f = fekete(p);
    const auto rs = find_roots(f.poly, RootOptions{});
    std::size_t simple = 0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      if (std::abs(std::abs(rs.roots[i]) - 1.0) < 1e-8 && rs.multiplicity(i) % 2 == 1) ++simple;
    }
    CHECK_MESSAGE(unimodular_count_reciprocal(f, 8 * 1024).sign_changes == simple, "p = " << p);
  }
}

TEST_CASE("level crossings anchors") {
  const auto r = modulus_squared(rudin_shapiro(1).p);
  const auto c = level_crossings(r, 1.0, 2.0, 64);
  CHECK(c.count == 2);
  REQUIRE(c.locations.size() == 2);
  CHECK(c.locations[0] == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(c.locations[1] == doctest::Approx(3 * kPi / 2).epsilon(1e-12));
  const auto t = level_crossings(r, 2.0 - 1e-13, 2.0, 64);
  CHECK(t.count_transversal == 0);
  CHECK(t.count_tangent == 1);
  CHECK(t.count_with_multiplicity() == 2);
  CHECK_THROWS_AS(level_crossings(r, 1.0, 2.0, 16), DomainError);
}

TEST_CASE("level crossings agree with a fine brute-force scan") {
  const auto pair = rudin_shapiro(6);
  const auto r = modulus_squared(pair.p);
  const auto c = oracle::rs_p(6);
  for (double eta : {0.2, 0.9, 1.4}) {
    const double level = eta * 64;
    std::size_t changes = 0;
    const int steps = 1 << 20;
    auto val = [&](int i) { return std::norm(oracle::eval(c, 2 * M_PIl * i / steps)) - level; };
    long double prev = val(0);
    for (int i = 1; i <= steps; ++i) {
      const long double cur = val(i);
      changes += (prev < 0) != (cur < 0);
      prev = cur;
    }
    const auto rep = level_crossings(r, eta, 64.0, 1024);
    CHECK(rep.count_transversal == changes);
    CHECK(rep.count_with_multiplicity() <= 2 * 63);
  }
}

TEST_CASE("sublevel measure anchors") {
  const auto r = modulus_squared(rudin_shapiro(1).p);
  CHECK(sublevel_measure(r, 0.5, 64).measure == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(sublevel_measure(r, 1.0, 64).measure == doctest::Approx(2 * kPi));
  CHECK(sublevel_measure(r, 0.999999, 64).measure > 2 * kPi - 0.01);
  // cos^2(t/2) <= alpha  on a set of measure 2 pi - 4 arccos(sqrt(alpha))
  for (double a : {0.1, 0.25, 0.8}) {
    CHECK(sublevel_measure(r, a, 64).measure ==
          doctest::Approx(2 * kPi - 4 * std::acos(std::sqrt(a))).epsilon(1e-10));
  }
}

TEST_CASE("real and imaginary part zero counts") {
  const auto re = realpart_zero_count(SignedPoly{1, 1}, Part::re, 32);
  CHECK(re.count == 0);
  CHECK(re.tangencies == 1);
  CHECK(realpart_zero_count(SignedPoly{1, 1}, Part::im, 32).count == 2);
  CHECK_THROWS_AS(realpart_zero_count(rudin_shapiro(3).p, Part::re, 64), DomainError);
  for (int k = 8; k <= 12; ++k) {
    const auto z = realpart_zero_count(rudin_shapiro(k).p, Part::re, 16u << k);
    CHECK(z.ratio() > 0.25);
    CHECK(z.count <= 2 * std::size_t(rudin_shapiro(k).p.degree()));
  }
}
