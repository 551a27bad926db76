#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rslab/errors.hpp"
#include "rslab/poly.hpp"

namespace rslab {

using cplx = std::complex<double>;

inline constexpr int kRootDegreeCap = 1 << 14;

// Complete root set of a polynomial. Exact zeros at the origin are deflated
// before iteration and appear first in `roots` as 0.
struct RootSet {
  std::vector<cplx> roots;
  // |f(z)| / max(1,|z|)^deg, evaluated with compensated Horner.
  std::vector<double> residuals;
  // |f(z) / f'(z)|; infinite at a multiple root.
  std::vector<double> newton_steps;
  // Roots sharing an id were merged into one cluster (a multiple root).
  std::vector<int> cluster;
  int degree = 0;
  std::size_t origin_multiplicity = 0;
  int iterations = 0;
  double tol = 0.0;
  bool converged = false;

  double max_residual() const;
  // Multiplicity of the cluster root i belongs to.
  int multiplicity(std::size_t i) const;
};

struct RootOptions {
  double tol = -1.0;  // <= 0 selects default_root_tol
  int max_iterations = 800;
  double cluster_radius = 1e-6;
  std::uint64_t seed = 0x2545F4914F6CDD1DULL;
  int degree_cap = kRootDegreeCap;
};

// 1e-10 * ||c||_2 (= 1e-10 * 2^{k/2} for a Rudin-Shapiro polynomial).
double default_root_tol(std::span<const cplx> coeffs);

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, RootSet partial)
      : Error(what), partial_(std::move(partial)) {}
  const RootSet& partial() const noexcept { return partial_; }

 private:
  RootSet partial_;
};

// Simultaneous Aberth-Ehrlich iteration started on a jittered circle.
// Throws CapacityError above the degree cap, NonConvergenceError when the
// iteration cap is hit or a residual exceeds tol.
RootSet find_roots(std::span<const cplx> coeffs, const RootOptions& opts = {});
RootSet find_roots(const SignedPoly& f, const RootOptions& opts = {});
RootSet find_roots(const SignedPoly& f, double tol);

}  // namespace rslab
