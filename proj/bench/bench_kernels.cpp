// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "rslab/eval.hpp"
#include "rslab/kernels.hpp"
#include "rslab/poly.hpp"

namespace {

using rslab::kernels::cplx;

std::vector<cplx> signal(std::size_t n) {
  const auto pair = rslab::rudin_shapiro(20);
  std::vector<cplx> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = static_cast<double>(pair.p[j % pair.p.size()]);
  return a;
}

void BM_fft_serial(benchmark::State& st) {
  const auto base = signal(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto a = base;
    rslab::kernels::serial::fft(a, rslab::kernels::Direction::backward);
    benchmark::DoNotOptimize(a.data());
  }
}

void BM_fft_parallel(benchmark::State& st) {
  const auto base = signal(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto a = base;
    rslab::kernels::fft(a, rslab::kernels::Direction::backward);
    benchmark::DoNotOptimize(a.data());
  }
}

void BM_autocorr_serial(benchmark::State& st) {
  const auto p = rslab::rudin_shapiro(static_cast<int>(st.range(0))).p;
  for (auto _ : st) benchmark::DoNotOptimize(rslab::kernels::serial::autocorrelation_direct(p.coeffs()));
}

void BM_autocorr_parallel(benchmark::State& st) {
  const auto p = rslab::rudin_shapiro(static_cast<int>(st.range(0))).p;
  for (auto _ : st) benchmark::DoNotOptimize(rslab::kernels::autocorrelation_direct(p.coeffs()));
}

template <bool Parallel>
void BM_aberth_sweep(benchmark::State& st) {
  const auto p = rslab::rudin_shapiro(static_cast<int>(st.range(0))).p;
  const auto prob = rslab::kernels::make_aberth_problem(rslab::to_complex(p));
  const std::size_t d = p.size() - 1;
  std::vector<cplx> z(d), out(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = std::polar(1.05, 6.283185307179586 * (i + 0.25) / d);
  for (auto _ : st) {
    std::vector<std::uint8_t> done(d, 0);
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(rslab::kernels::aberth_sweep(prob, z, out, done));
    } else {
      benchmark::DoNotOptimize(rslab::kernels::serial::aberth_sweep(prob, z, out, done));
    }
  }
}

}  // namespace

BENCHMARK(BM_fft_serial)->RangeMultiplier(4)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_fft_parallel)->RangeMultiplier(4)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_autocorr_serial)->DenseRange(8, 12, 2);
BENCHMARK(BM_autocorr_parallel)->DenseRange(8, 12, 2);
BENCHMARK(BM_aberth_sweep<false>)->DenseRange(8, 12, 2);
BENCHMARK(BM_aberth_sweep<true>)->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
