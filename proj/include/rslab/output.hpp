#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "rslab/audit.hpp"
#include "rslab/autocorr.hpp"
#include "rslab/distribution.hpp"
#include "rslab/zeros.hpp"

namespace rslab {

inline constexpr int kSchemaVersion = 1;

// %.17g, with "inf"/"-inf"/"nan" spelled out.
std::string format_number(double v);

// RFC-4180 quoting: fields containing ',', '"', CR or LF are quoted and
// embedded quotes doubled.
std::string csv_escape(const std::string& field);

// Writes a header row and then one row per call; a config_hash column is
// prepended to every row. Lines end in CRLF.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> columns, std::string config_hash);
  void row(const std::vector<std::string>& fields);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::size_t width_;
  std::string hash_;
  std::ofstream out_;
};

void write_audits_csv(const std::string& path, const std::vector<AuditReport>& reports,
                      const std::string& config_hash);

// Inputs of the figure data files; each member may be empty.
struct PlotSet {
  std::vector<DiscrepancyReport> discrepancy;
  std::vector<AutocorrProfile> autocorr;
  std::vector<std::pair<int, ZeroClassification>> annulus;
  std::vector<UnimodularCount> fekete;
};

// One whitespace-separated data file per nonempty figure plus plots.gp that
// references only those files. Returns the written paths; throws DomainError
// for an empty set.
std::vector<std::string> emit_plotdata(const PlotSet& set, const std::string& out_dir);

}  // namespace rslab
