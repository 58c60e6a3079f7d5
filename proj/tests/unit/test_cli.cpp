#include "morse/cli.hpp"
#include "morse/table.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace morse;
using namespace morse::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

std::string zeta_file() { return std::string(MORSE_TEST_DATA) + "/zeta_zeros.txt"; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("morse_cli_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("CSV round trip") {
  Table t{{"name", "value", "note"}, {}};
  t.add_row({std::string("a"), 0.1, std::string("has,comma")});
  t.add_row({std::string("b"), -1.2345678901234567e-300, std::string("quote \" inside")});
  t.add_row({std::string("c"), 1.0 / 3.0, std::string("")});
  std::stringstream ss;
  write_csv(ss, t, {"comment line"});
  Table back = read_csv(ss);
  CHECK(back == t);
  CHECK_THROWS(t.add_row({1.0}));
  CHECK(to_json(t, -1).find("\"value\":0.1") != std::string::npos);
}

TEST_CASE("eval") {
  Result r = invoke({"eval", "--kappa", "0", "--mu-re", "0.5", "--x", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.2231301601") != std::string::npos);
  std::istringstream is(r.out);
  Table t = read_csv(is);
  CHECK(t.columns.front() == "function");
  CHECK(t.rows.size() == 3);

  r = invoke({"eval", "--kappa", "0", "--mu-im", "5", "--x", "1"});
  CHECK(r.code == 0);
  std::istringstream is2(r.out);
  Table t2 = read_csv(is2);
  CHECK(std::get<std::string>(t2.rows[0][4]) == "true");  // is_real

  r = invoke({"eval", "--kappa", "0", "--mu-re", "0.5"});
  CHECK(r.code == kUsage);
  CHECK(r.err.find("--x") != std::string::npos);
  CHECK(invoke({"eval", "--kappa", "0", "--x", "-1"}).code == kUsage);
}

TEST_CASE("zeros") {
  Result r = invoke({"zeros", "--k", "1", "--u0", "0", "--T", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("real,") == std::string::npos);
  CHECK(r.out.find("imaginary,") != std::string::npos);
  r = invoke({"zeros", "--k", "-2", "--u0", "-2", "--T", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("real,") != std::string::npos);
}

TEST_CASE("count") {
  CHECK(invoke({"count", "--k", "0", "--T", "0"}).code == kUsage);
  Result r = invoke({"count", "--k", "0", "--u0", "1.386294", "--T", "10", "--checkpoints", "2"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  Table t = read_csv(is);
  CHECK(t.rows.size() == 2);
  CHECK(t.columns == std::vector<std::string>{"T", "observed", "main_term", "diff"});
}

TEST_CASE("weyl") {
  Result r = invoke({"weyl", "--k", "1", "--u0", "0", "--T-list", "1.25", "1e4"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  Table t = read_csv(is);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::get<double>(t.rows[0][1]) == 0);
  CHECK(invoke({"weyl", "--k", "1", "--T-list", "-5"}).code == kUsage);
}

TEST_CASE("mfunc") {
  Result r = invoke({"mfunc", "--k", "0", "--e-grid", "1", "2", "2", "1", "1", "1"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  Table t = read_csv(is);
  CHECK(t.rows.size() == 2);
  CHECK(invoke({"mfunc", "--k", "0", "--e-grid", "1", "2"}).code == kUsage);
}

TEST_CASE("debranges") {
  Result r = invoke({"debranges", "--u", "0", "--t-max", "6", "--samples", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("compare-zeta") {
  Result r = invoke({"compare-zeta", "--zeros-file", zeta_file(), "--T", "15", "--checkpoints", "1"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  Table t = read_csv(is);
  REQUIRE(t.rows.size() == 1);
  CHECK(std::get<double>(t.rows[0][2]) == 2);
  CHECK(r.out.find("0.318309886184") != std::string::npos);

  CHECK(invoke({"compare-zeta", "--zeros-file", zeta_file(), "--T", "100"}).code == kInsufficientData);
  auto empty = temp_file("empty.txt", "# nothing\n");
  CHECK(invoke({"compare-zeta", "--zeros-file", empty.string(), "--T", "10"}).code == kUsage);
  auto bad = temp_file("bad.txt", "14.1\nabc\n");
  CHECK(invoke({"compare-zeta", "--zeros-file", bad.string(), "--T", "10"}).code == kUsage);
  CHECK_THROWS(read_zeta_zero_file(empty.string()));
  CHECK(zeta_main_term(10) == doctest::Approx(10 * std::log(10.0) / M_PI + (-std::log(2 * M_PI) - 1) / M_PI * 10));
}

TEST_CASE("output routing") {
  auto path = std::filesystem::temp_directory_path() / "morse_cli_test_out.csv";
  Result r = invoke({"--out", path.string(), "eval", "--kappa", "0", "--mu-re", "0.5", "--x", "3"});
  CHECK(r.code == 0);
  std::ifstream f(path);
  Table t = read_csv(f);
  CHECK(t.rows.size() == 3);
  r = invoke({"--format", "json", "eval", "--kappa", "0", "--mu-re", "0.5", "--x", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.front() == '[');
  CHECK(invoke({"--format", "xml", "eval", "--kappa", "0", "--x", "3"}).code == kUsage);
  CHECK(invoke({}).code == kUsage);
}

}
