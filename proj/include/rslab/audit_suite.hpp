#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rslab/audit.hpp"
#include "rslab/config.hpp"
#include "rslab/roots.hpp"
#include "rslab/zeros.hpp"

namespace rslab {

// sin^2(pi/8)
double rs_gamma();

// Runs the named audits for one generation (or prime), caching root sets so
// that several audits of the same polynomial share one root computation.
class AuditSuite {
 public:
  AuditSuite(RunConfig cfg, Calibration cal);

  // Audit names in report order.
  static const std::vector<std::string>& names();
  // Generations for which `name` is defined.
  static std::pair<int, int> k_limits(const std::string& name);

  // Empty when k lies outside k_limits(name). Throws Error for an unknown name.
  std::vector<AuditReport> run(const std::string& name, int k);
  AuditReport run_fekete(std::uint64_t p);

  // Roots of P_k (family 'p') or Q_k (family 'q').
  const RootSet& roots(char family, int k);
  ZeroClassification classification(char family, int k, double delta_scale = 1.0);
  double c1() const;

 private:
  RunConfig cfg_;
  Calibration cal_;
  std::map<std::pair<char, int>, RootSet> cache_;
};

}  // namespace rslab
