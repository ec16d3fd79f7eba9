// End-to-end tests of the command-line front end: exit codes, output formats,
// golden outputs, tolerance overrides, and one true subprocess round trip.
#include <clocale>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "geo3/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = geo3::cli::run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Value of column `col` in the first data row of a CSV document.
double csv_value(const std::string& csv, const std::string& col) {
  std::istringstream in(csv);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row));
  const auto names = split(header, ',');
  const auto cells = split(row, ',');
  REQUIRE(names.size() == cells.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == col) return std::strtod(cells[i].c_str(), nullptr);
  FAIL("no column named " + col);
  return 0.0;
}

fs::path golden_dir() {
  const char* dir = std::getenv("GEO3_GOLDEN_DIR");
  if (dir == nullptr) SKIP("GEO3_GOLDEN_DIR is not set (run through ctest)");
  return fs::path(dir);
}

}  // namespace

TEST_CASE("helix invariants through the CLI") {
  const auto r = run_cli({"curve", "info", "(cos t, sin t, t) on [0,6.3]", "--at", "0",
                          "--format", "csv"});
  REQUIRE(r.code == 0);
  REQUIRE(r.err.empty());
  CHECK_THAT(csv_value(r.out, "kappa"), Catch::Matchers::WithinAbs(0.5, 1e-9));
  CHECK_THAT(csv_value(r.out, "tau"), Catch::Matchers::WithinAbs(0.5, 1e-9));
  CHECK_THAT(csv_value(r.out, "speed"), Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-12));
}

TEST_CASE("exit codes: success, usage, math domain, check failure") {
  CHECK(run_cli({"surface", "check", "sphere", "--grid", "10x10"}).code == 0);
  CHECK(run_cli({"--help"}).code == 0);

  CHECK(run_cli({}).code == 1);                          // no subcommand
  CHECK(run_cli({"curve", "info"}).code == 1);           // missing model
  CHECK(run_cli({"curve", "info", "x", "--bogus"}).code == 1);
  const auto arity = run_cli({"curve", "info", "(t,t)"});
  CHECK(arity.code == 1);
  CHECK(arity.err.find("needs exactly 3 components") != std::string::npos);

  CHECK(run_cli({"catalog", "show", "no_such_model"}).code == 2);
  CHECK(run_cli({"eval", "ln(0 - 1)"}).code == 2);
  const auto kind = run_cli({"curve", "info", "sphere"});
  CHECK(kind.code == 2);
  CHECK(kind.err.find("is a surface, not a curve") != std::string::npos);

  const auto lat = run_cli({"geodesic", "check", "sphere", "--curve", "(0.3, t) on [0, 6.28]"});
  CHECK(lat.code == 3);  // a latitude circle is not a geodesic
}

TEST_CASE("tolerance can be loosened per run, on the flag or the environment") {
  const std::vector<std::string> check = {"geodesic", "check", "sphere", "--curve",
                                          "(0.3, t) on [0, 6.28]"};
  auto with_tol = check;
  with_tol.push_back("--tolerance");
  with_tol.push_back("1");
  CHECK(run_cli(with_tol).code == 0);

  ::setenv("GEO3_TOLERANCE", "1", 1);
  CHECK(run_cli(check).code == 0);
  ::setenv("GEO3_TOLERANCE", "not-a-number", 1);
  CHECK(run_cli(check).code == 1);
  ::unsetenv("GEO3_TOLERANCE");
  CHECK(run_cli(check).code == 3);
}

TEST_CASE("golden outputs stay put") {
  const fs::path dir = golden_dir();
  const std::vector<std::string> model = {"curve", "info", "(t, t^2, 0) on [0, 2]", "--at", "1"};

  auto json_args = model;
  json_args.push_back("--format");
  json_args.push_back("json");
  const auto rj = run_cli(json_args);
  REQUIRE(rj.code == 0);
  CHECK(rj.out == slurp(dir / "curve_info_parabola.json"));

  auto csv_args = model;
  csv_args.push_back("--format");
  csv_args.push_back("csv");
  const auto rc = run_cli(csv_args);
  REQUIRE(rc.code == 0);
  CHECK(rc.out == slurp(dir / "curve_info_parabola.csv"));

  const auto rl = run_cli({"catalog", "list"});
  REQUIRE(rl.code == 0);
  CHECK(rl.out == slurp(dir / "catalog_list.txt"));

  const auto re = run_cli({"eval", "2^10 / 4"});
  REQUIRE(re.code == 0);
  CHECK(re.out == slurp(dir / "eval_const.txt"));
}

TEST_CASE("JSON output carries name, params, and samples") {
  const auto r = run_cli({"surface", "curvatures", "torus", "--at", "0,0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.contains("name"));
  REQUIRE(doc.contains("params"));
  REQUIRE(doc.contains("samples"));
  REQUIRE(doc["samples"].is_array());
  REQUIRE(doc["samples"].size() == 1);
  const auto& row = doc["samples"][0];
  CHECK_THAT(row["K"].get<double>(), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-9));
  CHECK_THAT(row["H"].get<double>(), Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-9));
}

TEST_CASE("CSV has a header row and a fixed column order") {
  const auto r = run_cli({"surface", "forms", "sphere", "--at", "0.5,1", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "u,v,E,F,G,e,f,g");
}

TEST_CASE("--out writes the report to a file") {
  const fs::path tmp = fs::temp_directory_path() / "geo3_cli_out_test.csv";
  fs::remove(tmp);
  const auto r = run_cli({"curve", "info", "(t, t^2, 0) on [0, 2]", "--at", "1", "--format",
                          "csv", "--out", tmp.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const std::string body = slurp(tmp);
  CHECK(body.find("t,x,y,z,speed,kappa,tau") == 0);
  fs::remove(tmp);

  CHECK(run_cli({"curve", "info", "(t, t^2, 0) on [0, 2]", "--out",
                 "/no/such/directory/out.csv"})
            .code == 1);
}

TEST_CASE("numeric output is locale independent") {
  const char* loc = std::setlocale(LC_ALL, "de_DE.UTF-8");
  if (loc == nullptr) loc = std::setlocale(LC_ALL, "de_DE");
  const auto r = run_cli({"eval", "1/2"});
  std::setlocale(LC_ALL, "C");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.5") != std::string::npos);
  CHECK(r.out.find("0,5") == std::string::npos);
}

TEST_CASE("the installed binary round-trips through a real process") {
  const char* bin = std::getenv("GEO3_CLI");
  if (bin == nullptr) SKIP("GEO3_CLI is not set (run through ctest)");
  const fs::path tmp = fs::temp_directory_path() / "geo3_cli_subprocess.csv";
  fs::remove(tmp);
  const std::string cmd = std::string("\"") + bin +
                          "\" curve info \"(cos t, sin t, t) on [0,6.3]\" --at 0 --format csv > \"" +
                          tmp.string() + "\"";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK_THAT(csv_value(slurp(tmp), "kappa"), Catch::Matchers::WithinAbs(0.5, 1e-9));
  fs::remove(tmp);

  const int usage = std::system((std::string("\"") + bin + "\" curve info 2>/dev/null").c_str());
  REQUIRE(WIFEXITED(usage));
  CHECK(WEXITSTATUS(usage) == 1);
}
