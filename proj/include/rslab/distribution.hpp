#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rslab/poly.hpp"

namespace rslab {

inline constexpr std::size_t kAlphaGridPoints = 1024;
inline constexpr int kMaxCellsPerAxis = 64;

enum class Family { saffari_cdf, montgomery_cells };
std::string to_string(Family f);

struct DiscrepancyReport {
  int k = 0;
  std::size_t n_grid = 0;
  Family family = Family::saffari_cdf;
  std::string cells;      // test-set description
  double sup_dev = 0.0;   // max of the P and Q values
  double sup_dev_p = 0.0;
  double sup_dev_q = 0.0;
  // Saffari: empirical CDF of P_k on the alpha grid i / 1023.
  // Montgomery: cell fractions of P_k, radial-major (radial * angular entries).
  std::vector<double> detail;
  int radial = 0;
  int angular = 0;
};

// Empirical CDF of values in [0, 1] on alpha_i = i / (points - 1).
std::vector<double> empirical_cdf(std::span<const double> values,
                                  std::size_t points = kAlphaGridPoints);

// sup_alpha |F(alpha) - alpha| for |P_k|^2 / 2^{k+1} (and Q_k) on the grid.
// Throws DomainError unless N is a power of two >= 16 * 2^k.
DiscrepancyReport saffari_discrepancy(int k, std::size_t n_grid);

// Fractions of P_k / sqrt(2^{k+1}) in equal-area polar cells (radial index
// floor(|w|^2 radial), angular index floor((arg w + pi) / 2 pi * angular))
// against the uniform limit 1 / (radial * angular).
DiscrepancyReport montgomery_discrepancy(int k, std::size_t n_grid, int radial, int angular);

struct EnsembleEstimate {
  std::size_t n = 0;  // degree + 1
  double q = 0.0;     // 0 selects the Mahler variant M_0(f) / n^{1/2}
  std::size_t samples = 0;
  double mean = 0.0;
  double std_err = 0.0;
  std::uint64_t seed = 0;
  std::string rng = "philox4x32-10";
};

// Sign vector of sample `index` from the Philox stream keyed by seed.
SignedPoly ensemble_sample(std::size_t n, std::uint64_t seed, std::uint64_t index);

// Mean of M_q(f)^q / n^{q/2} over uniform random Littlewood polynomials.
// Throws DomainError for samples < 100, n < 1 or q < 0.
EnsembleEstimate ensemble_mean(std::size_t n, double q, std::size_t samples, std::uint64_t seed);

}  // namespace rslab
