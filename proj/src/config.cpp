#include "rslab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <type_traits>
#include <sstream>

#include "rslab/errors.hpp"

namespace rslab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  if (v == "inf" || v == "INFINITY") return std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) {
    throw Error("config: " + key + " = '" + v + "' is not a number");
  }
  return x;
}

long long to_int(const std::string& key, const std::string& v) {
  long long x = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) {
    throw Error("config: " + key + " = '" + v + "' is not an integer");
  }
  return x;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ',';
    if constexpr (std::is_floating_point_v<T>) {
      s += num(x);
    } else {
      s += std::to_string(x);
    }
  }
  return s;
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(source + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(source + ":" + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second) {
      throw Error(source + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  return kv;
}

KeyValues read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path + "'");
  return parse_key_values(in, path);
}

KRange parse_k_range(const std::string& text) {
  const std::string t = trim(text);
  std::size_t sep = t.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = t.find('-', 1);
    skip = 1;
  }
  KRange r;
  if (sep == std::string::npos) {
    r.lo = r.hi = static_cast<int>(to_int("k", t));
  } else {
    r.lo = static_cast<int>(to_int("k_range", trim(t.substr(0, sep))));
    r.hi = static_cast<int>(to_int("k_range", trim(t.substr(sep + skip))));
  }
  if (r.lo > r.hi) throw DomainError("k range '" + text + "' is empty");
  return r;
}

void RunConfig::apply(const KeyValues& kv) {
  for (const auto& [key, v] : kv) {
    if (key == "k") {
      k_range = parse_k_range(v);
    } else if (key == "k_range") {
      k_range = parse_k_range(v);
    } else if (key == "prime" || key == "primes") {
      primes.clear();
      for (const auto& s : split_list(v)) primes.push_back(static_cast<std::uint64_t>(to_int(key, s)));
    } else if (key == "eta") {
      etas.clear();
      for (const auto& s : split_list(v)) etas.push_back(to_double(key, s));
    } else if (key == "alpha") {
      alphas.clear();
      for (const auto& s : split_list(v)) alphas.push_back(to_double(key, s));
    } else if (key == "q") {
      qs.clear();
      for (const auto& s : split_list(v)) qs.push_back(to_double(key, s));
    } else if (key == "grid_factor") {
      grid_factor = static_cast<int>(to_int(key, v));
    } else if (key == "delta_circle") {
      delta_circle = to_double(key, v);
    } else if (key == "root_tol") {
      root_tol = to_double(key, v);
    } else if (key == "quadrature_tol") {
      quadrature_tol = to_double(key, v);
    } else if (key == "cluster_radius") {
      cluster_radius = to_double(key, v);
    } else if (key == "radial_cells") {
      radial_cells = static_cast<int>(to_int(key, v));
    } else if (key == "angular_cells") {
      angular_cells = static_cast<int>(to_int(key, v));
    } else if (key == "ensemble_n") {
      ensemble_n = static_cast<std::size_t>(to_int(key, v));
    } else if (key == "samples") {
      samples = static_cast<std::size_t>(to_int(key, v));
    } else if (key == "calibration") {
      calibration = v;
    } else if (key == "seed") {
      seed = static_cast<std::uint64_t>(to_int(key, v));
    } else if (key == "threads") {
      threads = static_cast<int>(to_int(key, v));
    } else if (key == "out") {
      out_dir = v;
    } else {
      throw Error("config: unknown key '" + key + "'");
    }
  }
}

void RunConfig::validate() const {
  if (k_range.lo < 0 || k_range.lo > k_range.hi) throw DomainError("config: invalid k range");
  if (grid_factor < 4) throw DomainError("config: grid_factor must be >= 4");
  if (!(delta_circle > 0.0) || !(root_tol > 0.0) || !(quadrature_tol > 0.0) || !(cluster_radius > 0.0)) {
    throw DomainError("config: tolerances must be positive");
  }
  if (threads < 0) throw DomainError("config: threads must be >= 0");
  if (ensemble_n < 1) throw DomainError("config: ensemble_n must be positive");
}

std::string RunConfig::canonical() const {
  std::map<std::string, std::string> kv{
      {"k_range", std::to_string(k_range.lo) + ".." + std::to_string(k_range.hi)},
      {"primes", join(primes)},
      {"eta", join(etas)},
      {"alpha", join(alphas)},
      {"q", join(qs)},
      {"grid_factor", std::to_string(grid_factor)},
      {"delta_circle", num(delta_circle)},
      {"root_tol", num(root_tol)},
      {"quadrature_tol", num(quadrature_tol)},
      {"cluster_radius", num(cluster_radius)},
      {"radial_cells", std::to_string(radial_cells)},
      {"angular_cells", std::to_string(angular_cells)},
      {"ensemble_n", std::to_string(ensemble_n)},
      {"samples", std::to_string(samples)},
      {"calibration", calibration},
      {"seed", std::to_string(seed)},
  };
  std::string s;
  for (const auto& [k, v] : kv) s += k + "=" + v + "\n";
  return s;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t RunConfig::hash() const { return fnv1a64(canonical()); }

std::string RunConfig::hash_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

Calibration Calibration::load(const std::string& path) {
  std::map<std::string, double> values;
  for (const auto& [k, v] : read_key_value_file(path)) values[k] = to_double(k, v);
  return Calibration(std::move(values));
}

double Calibration::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error("calibration: missing key '" + key + "'");
  return it->second;
}

double Calibration::get_or(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

}  // namespace rslab
