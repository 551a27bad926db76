#include "rslab/audit.hpp"

#include <cstdio>

namespace rslab {

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::pass:
      return "pass";
    case AuditStatus::fail:
      return "fail";
    case AuditStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

void AuditReport::add_param(const std::string& key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  params.emplace_back(key, buf);
}

void AuditReport::add_param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void AuditReport::settle(double lhs_value, double rhs_value, bool preconditions_hold) {
  lhs = lhs_value;
  rhs = rhs_value;
  margin = rhs - lhs;
  if (!preconditions_hold) {
    status = AuditStatus::inconclusive;
  } else {
    status = margin >= 0.0 ? AuditStatus::pass : AuditStatus::fail;
  }
}

std::string AuditReport::params_string() const {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

}  // namespace rslab
