#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rslab/config.hpp"
#include "rslab/errors.hpp"
#include "rslab/output.hpp"

using namespace rslab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("rslab_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("key value parsing") {
  std::istringstream good("# comment\n k = 3..5 \nseed=7\n\neta = 0.1, 0.2 # trailing\n");
  const auto kv = parse_key_values(good);
  CHECK(kv.at("k") == "3..5");
  CHECK(kv.at("seed") == "7");
  CHECK(kv.at("eta") == "0.1, 0.2");

  std::istringstream no_eq("seed 7\n");
  CHECK_THROWS_AS(parse_key_values(no_eq), Error);
  std::istringstream empty_key(" = 3\n");
  CHECK_THROWS_AS(parse_key_values(empty_key), Error);
  std::istringstream dup("seed = 1\nseed = 2\n");
  CHECK_THROWS_AS(parse_key_values(dup), Error);
  CHECK_THROWS_AS(read_key_value_file("/nonexistent/rslab.cfg"), Error);
}

TEST_CASE("k ranges") {
  CHECK(parse_k_range("8").lo == 8);
  CHECK(parse_k_range("8").hi == 8);
  CHECK(parse_k_range("8..11").hi == 11);
  CHECK(parse_k_range("8-11").lo == 8);
  CHECK_THROWS_AS(parse_k_range("x"), Error);
}

TEST_CASE("run config apply, validate and hash") {
  RunConfig a;
  const auto h0 = a.hash();
  CHECK(a.hash_hex().size() == 16);
  RunConfig b;
  b.threads = 3;
  b.out_dir = "/tmp/elsewhere";
  CHECK(b.hash() == h0);
  b.apply({{"seed", "99"}});
  CHECK(b.seed == 99);
  CHECK(b.hash() != h0);
  CHECK_THROWS_AS(b.apply({{"bogus", "1"}}), Error);
  CHECK_THROWS_AS(b.apply({{"seed", "abc"}}), Error);
  RunConfig c;
  c.grid_factor = 1;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("calibration") {
  const auto dir = scratch("cal");
  std::ofstream(dir / "c.cfg") << "x = 1.5\n";
  const auto cal = Calibration::load((dir / "c.cfg").string());
  CHECK(cal.get("x") == 1.5);
  CHECK(cal.get_or("y", 2.0) == 2.0);
  CHECK_THROWS_AS(cal.get("y"), Error);
  std::ofstream(dir / "bad.cfg") << "x = one\n";
  CHECK_THROWS_AS(Calibration::load((dir / "bad.cfg").string()), Error);
}

TEST_CASE("number formatting and csv escaping") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0 / 0.0) == "inf");
  CHECK(format_number(-1.0 / 0.0) == "-inf");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("csv writer") {
  const auto dir = scratch("csv");
  {
    CsvWriter w((dir / "t.csv").string(), {"a", "b"}, "00ff");
    w.row({"1", "x,y"});
    CHECK_THROWS_AS(w.row({"1"}), Error);
  }
  CHECK(slurp(dir / "t.csv") == "config_hash,a,b\r\n00ff,1,\"x,y\"\r\n");

  AuditReport r;
  r.name = "demo";
  r.anchor = "a, b";
  r.add_param("k", 3.0);
  r.settle(1.0, 2.0);
  write_audits_csv((dir / "audits.csv").string(), {r}, "00ff");
  const auto text = slurp(dir / "audits.csv");
  CHECK(text.rfind("config_hash,", 0) == 0);
  CHECK(text.find("demo") != std::string::npos);
  CHECK(text.find("\"a, b\"") != std::string::npos);
}

TEST_CASE("plot data") {
  const auto dir = scratch("plots");
  CHECK_THROWS_AS(emit_plotdata(PlotSet{}, dir.string()), DomainError);
  PlotSet set;
  UnimodularCount u;
  u.p = 5;
  u.sign_changes = 1;
  set.fekete.push_back(u);
  const auto files = emit_plotdata(set, dir.string());
  CHECK(files.size() == 2);
  const auto gp = slurp(dir / "plots.gp");
  CHECK(gp.find("fekete") != std::string::npos);
  CHECK(gp.find("discrepancy") == std::string::npos);
}
