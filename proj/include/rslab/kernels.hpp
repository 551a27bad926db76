#pragma once

// Data-parallel kernels. Each kernel has an OpenMP implementation (top-level
// namespace) and a serial reference in kernels::serial. The two perform the
// same floating-point operations in the same order per output element, so the
// results are bitwise identical regardless of the thread count.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rslab::kernels {

using cplx = std::complex<double>;

// forward:  A_m = sum_j a_j exp(-2 pi i j m / N)
// backward: A_m = sum_j a_j exp(+2 pi i j m / N)   (no 1/N scaling)
enum class Direction { forward, backward };

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

// In-place iterative radix-2 transform. Throws DomainError unless the size
// is a power of two.
void fft(std::span<cplx> a, Direction dir);

// Sum with a fixed blocking (independent of the thread count).
double blocked_sum(std::span<const double> x);

// a_j = sum_m c_m c_{m+j}, j = 0..n-1, by the O(n^2) definition.
std::vector<std::int64_t> autocorrelation_direct(std::span<const std::int8_t> c);

// One Jacobi sweep of the Aberth-Ehrlich iteration for a polynomial of degree
// d = coeffs.size() - 1 with nonzero constant and leading terms.
struct AberthProblem {
  std::vector<cplx> coeffs;     // c_0..c_d
  std::vector<cplx> reversed;   // c_d..c_0, used for |z| > 1
  std::vector<double> abs_coeffs;
  std::vector<double> abs_reversed;
  double stop_factor = 0.0;     // stop when |f(z)| <= stop_factor * sum |c_j||z|^j
};

AberthProblem make_aberth_problem(std::span<const cplx> coeffs);

// Reads z_old, writes z_new. done[i] is set once root i satisfies the
// stopping rule; finished roots are copied unchanged. Returns the number of
// roots still active after the sweep.
std::size_t aberth_sweep(const AberthProblem& problem, std::span<const cplx> z_old,
                         std::span<cplx> z_new, std::span<std::uint8_t> done);

namespace serial {
void fft(std::span<cplx> a, Direction dir);
double blocked_sum(std::span<const double> x);
std::vector<std::int64_t> autocorrelation_direct(std::span<const std::int8_t> c);
std::size_t aberth_sweep(const AberthProblem& problem, std::span<const cplx> z_old,
                         std::span<cplx> z_new, std::span<std::uint8_t> done);
}  // namespace serial

}  // namespace rslab::kernels
