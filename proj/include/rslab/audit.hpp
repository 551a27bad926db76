#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rslab {

enum class AuditStatus { pass, fail, inconclusive };
std::string to_string(AuditStatus s);

// Outcome of one quantitative check. margin = rhs - lhs and the audit passes
// iff margin >= 0 and its preconditions held.
struct AuditReport {
  std::string name;
  std::string anchor;  // the quoted formula the check targets
  std::vector<std::pair<std::string, std::string>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  AuditStatus status = AuditStatus::inconclusive;
  std::vector<double> witnesses;
  std::string note;

  void add_param(const std::string& key, double value);
  void add_param(const std::string& key, const std::string& value);
  // Sets lhs, rhs, margin and derives the status.
  void settle(double lhs_value, double rhs_value, bool preconditions_hold = true);
  bool passed() const noexcept { return status == AuditStatus::pass; }
  std::string params_string() const;
};

}  // namespace rslab
