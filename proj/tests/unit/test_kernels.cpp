#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rslab/errors.hpp"
#include "rslab/kernels.hpp"
#include "rslab/poly.hpp"
#include "rslab/rng.hpp"

using namespace rslab;
using kernels::cplx;

namespace {

std::vector<cplx> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

}  // namespace

TEST_CASE("power of two helpers") {
  CHECK(kernels::is_power_of_two(1));
  CHECK(kernels::is_power_of_two(1024));
  CHECK_FALSE(kernels::is_power_of_two(0));
  CHECK_FALSE(kernels::is_power_of_two(12));
  CHECK(kernels::next_power_of_two(1000) == 1024);
  CHECK(kernels::next_power_of_two(1024) == 1024);
}

TEST_CASE("fft agrees with the direct DFT") {
  for (std::size_t n : {1u, 2u, 8u, 64u}) {
    auto a = random_vector(n, 7);
    auto b = a;
    kernels::fft(b, kernels::Direction::forward);
    for (std::size_t m = 0; m < n; ++m) {
      oracle::lcplx s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        s += oracle::lcplx(a[j]) * std::polar(oracle::ld(1), -2 * oracle::ld(M_PI) * oracle::ld(j * m) / oracle::ld(n));
      }
      CHECK(std::abs(oracle::lcplx(b[m]) - s) < 1e-12 * (1 + n));
    }
  }
  std::vector<cplx> bad(6);
  CHECK_THROWS_AS(kernels::fft(bad, kernels::Direction::forward), DomainError);
}

TEST_CASE("parallel kernels are bitwise identical to the serial references") {
  for (std::size_t n : {std::size_t{1} << 10, std::size_t{1} << 15}) {
    auto a = random_vector(n, 3);
    auto b = a;
    kernels::fft(a, kernels::Direction::backward);
    kernels::serial::fft(b, kernels::Direction::backward);
    CHECK(a == b);
  }
  std::vector<double> x(100000);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(double(i));
  CHECK(kernels::blocked_sum(x) == kernels::serial::blocked_sum(x));

  const auto p = rudin_shapiro(10).p;
  CHECK(kernels::autocorrelation_direct(p.coeffs()) == kernels::serial::autocorrelation_direct(p.coeffs()));

  const auto prob = kernels::make_aberth_problem(random_vector(200, 9));
  auto z = random_vector(199, 11);
  std::vector<cplx> z1(199), z2(199);
  std::vector<std::uint8_t> d1(199, 0), d2(199, 0);
  CHECK(kernels::aberth_sweep(prob, z, z1, d1) == kernels::serial::aberth_sweep(prob, z, z2, d2));
  CHECK(z1 == z2);
  CHECK(d1 == d2);
}

TEST_CASE("direct autocorrelation matches the oracle") {
  const auto p = rudin_shapiro(6).p;
  CHECK(kernels::autocorrelation_direct(p.coeffs()) == oracle::autocorr(oracle::rs_p(6)));
}

TEST_CASE("philox known-answer vectors") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate(B{0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate(B{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
}
