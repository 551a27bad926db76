#include "rslab/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "rslab/errors.hpp"

namespace rslab {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string s = "\"";
  for (char c : field) {
    if (c == '"') s += '"';
    s += c;
  }
  s += '"';
  return s;
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> columns,
                     std::string config_hash)
    : path_(path), width_(columns.size()), hash_(std::move(config_hash)), out_(path, std::ios::binary) {
  if (!out_) throw Error("cannot open '" + path + "' for writing");
  columns.insert(columns.begin(), "config_hash");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << (i ? "," : "") << csv_escape(columns[i]);
  }
  out_ << "\r\n";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) {
    throw Error("csv row for '" + path_ + "' has " + std::to_string(fields.size()) +
                " fields, expected " + std::to_string(width_));
  }
  out_ << csv_escape(hash_);
  for (const auto& f : fields) out_ << ',' << csv_escape(f);
  out_ << "\r\n";
  if (!out_) throw Error("write to '" + path_ + "' failed");
}

void write_audits_csv(const std::string& path, const std::vector<AuditReport>& reports,
                      const std::string& config_hash) {
  CsvWriter w(path, {"name", "anchor", "params", "lhs", "rhs", "margin", "status", "note"},
              config_hash);
  for (const auto& r : reports) {
    w.row({r.name, r.anchor, r.params_string(), format_number(r.lhs), format_number(r.rhs),
           format_number(r.margin), to_string(r.status), r.note});
  }
}

std::vector<std::string> emit_plotdata(const PlotSet& set, const std::string& out_dir) {
  if (set.discrepancy.empty() && set.autocorr.empty() && set.annulus.empty() && set.fekete.empty()) {
    throw DomainError("emit_plotdata: empty report selection");
  }
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  std::string script = "set terminal pngcairo size 800,600\n";
  auto open = [&](const std::string& name) {
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    std::ofstream f(path);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    written.push_back(path);
    return f;
  };

  for (Family fam : {Family::saffari_cdf, Family::montgomery_cells}) {
    std::vector<const DiscrepancyReport*> rows;
    for (const auto& d : set.discrepancy) {
      if (d.family == fam) rows.push_back(&d);
    }
    if (rows.empty()) continue;
    const std::string name = "discrepancy_" + to_string(fam) + ".dat";
    auto f = open(name);
    f << "# k sup_dev\n";
    for (const auto* d : rows) f << d->k << ' ' << format_number(d->sup_dev) << '\n';
    script += "set output '" + name.substr(0, name.size() - 4) + ".png'\n"
              "set xlabel 'k'; set ylabel 'sup deviation'; unset logscale\n"
              "plot '" + name + "' using 1:2 with linespoints title '" + to_string(fam) + "'\n";
  }

  if (!set.autocorr.empty()) {
    auto f = open("autocorr_loglog.dat");
    f << "# log_n log_max_abs\n";
    if (set.autocorr.size() >= 2) {
      std::vector<double> x, y;
      for (const auto& p : set.autocorr) {
        if (p.max_abs <= 0) continue;
        x.push_back(static_cast<double>(p.n));
        y.push_back(static_cast<double>(p.max_abs));
      }
      if (x.size() >= 2) {
        const auto fit = fit_power_law(x, y);
        f << "# fitted slope " << format_number(fit.slope) << " intercept "
          << format_number(fit.intercept) << '\n';
      }
    }
    for (const auto& p : set.autocorr) {
      if (p.max_abs <= 0) continue;
      f << format_number(std::log(static_cast<double>(p.n))) << ' '
        << format_number(std::log(static_cast<double>(p.max_abs))) << '\n';
    }
    script += "set output 'autocorr_loglog.png'\n"
              "set xlabel 'log n'; set ylabel 'log max|a_j|'; unset logscale\n"
              "plot 'autocorr_loglog.dat' using 1:2 with linespoints title 'max|a_j|'\n";
  }

  if (!set.annulus.empty()) {
    auto f = open("annulus_fraction.dat");
    f << "# k annulus_fraction on_circle_fraction\n";
    for (const auto& [k, c] : set.annulus) {
      f << k << ' ' << format_number(c.annulus_fraction()) << ' '
        << format_number(c.on_circle_fraction()) << '\n';
    }
    script += "set output 'annulus_fraction.png'\n"
              "set xlabel 'k'; set ylabel 'fraction of n'; unset logscale\n"
              "plot 'annulus_fraction.dat' using 1:2 with linespoints title 'annulus', "
              "'annulus_fraction.dat' using 1:3 with linespoints title 'on circle'\n";
  }

  if (!set.fekete.empty()) {
    auto f = open("fekete_fraction.dat");
    f << "# p fraction\n";
    for (const auto& u : set.fekete) f << u.p << ' ' << format_number(u.fraction()) << '\n';
    script += "set output 'fekete_fraction.png'\n"
              "set xlabel 'p'; set ylabel 'sign changes / (p-1)'; unset logscale\n"
              "plot 'fekete_fraction.dat' using 1:2 with linespoints title 'Fekete'\n";
  }

  auto s = open("plots.gp");
  s << script;
  return written;
}

}  // namespace rslab
