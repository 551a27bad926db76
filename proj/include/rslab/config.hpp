#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace rslab {

using KeyValues = std::map<std::string, std::string>;

// Flat "key = value" lines; '#' starts a comment. Throws Error naming the
// source and line for malformed or duplicate entries.
KeyValues parse_key_values(std::istream& in, const std::string& source = "<input>");
KeyValues read_key_value_file(const std::string& path);

struct KRange {
  int lo = 1;
  int hi = 10;
};

// "8", "8..11" or "8-11".
KRange parse_k_range(const std::string& text);

struct RunConfig {
  KRange k_range{1, 10};
  std::vector<std::uint64_t> primes;
  std::vector<double> etas{1.0};
  std::vector<double> alphas{0.5};
  std::vector<double> qs{0.5, 1.0, 2.0, 4.0, 8.0};
  int grid_factor = 16;
  double delta_circle = 1e-8;
  double root_tol = 1e-10;        // relative to ||c||_2
  double quadrature_tol = 1e-6;
  double cluster_radius = 1e-6;
  int radial_cells = 16;
  int angular_cells = 16;
  std::size_t ensemble_n = 64;
  std::size_t samples = 2000;
  std::string calibration = "calibration/constants.cfg";
  std::uint64_t seed = 12345;
  int threads = 0;  // 0 keeps the OpenMP default
  std::string out_dir = ".";

  // Applies recognised keys; throws Error for unknown keys or bad values.
  void apply(const KeyValues& kv);
  // Throws DomainError when an invariant is violated.
  void validate() const;
  // Sorted key=value lines describing every field.
  std::string canonical() const;
  std::uint64_t hash() const;
  std::string hash_hex() const;
};

std::uint64_t fnv1a64(const std::string& bytes);

// Frozen empirical constants (key = number).
class Calibration {
 public:
  Calibration() = default;
  explicit Calibration(std::map<std::string, double> values) : values_(std::move(values)) {}
  static Calibration load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  // Throws Error for a missing key.
  double get(const std::string& key) const;
  double get_or(const std::string& key, double fallback) const;
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

}  // namespace rslab
