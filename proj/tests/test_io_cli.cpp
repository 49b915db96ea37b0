#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "momentbounds/io.hpp"
#include "momentbounds/momentbounds.hpp"

using namespace momentbounds;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using io::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(MOMENTBOUNDS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  res.code = WEXITSTATUS(status);
  return res;
}

std::string data_path(const std::string& name) {
  return std::string(MOMENTBOUNDS_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("sample JSON parsing") {
  const auto j = json::parse(R"({"points":[0,0.5,1],"weights":[0.25,0.5,0.25],"interval":[0,1]})");
  const Sample s = io::sample_from_json(j);
  CHECK(s.size() == 3);
  CHECK(s.weights()[1] == 0.5);
  CHECK(s.interval().hi == 1.0);

  const Sample defaults = io::sample_from_json(json::parse(R"({"points":[2,5]})"));
  CHECK(defaults.uniform_weights());
  CHECK(defaults.interval().lo == 2.0);

  CHECK_THROWS_AS(io::sample_from_json(json::parse("{}")), ParseError);
  CHECK_THROWS_AS(io::sample_from_json(json::parse(R"({"points":["x"]})")), ParseError);
  CHECK_THROWS_AS(io::sample_from_json(json::parse(R"({"points":[1],"interval":[2,3]})")),
                  ParseError);
  CHECK_THROWS_AS(
      io::sample_from_json(json::parse(R"({"points":[0,1],"weights":[0.9,0.9]})")),
      ParseError);
  CHECK_NOTHROW(io::sample_from_json(
      json::parse(R"({"points":[0,1],"weights":[0.9,0.9]})"), true));
}

TEST_CASE("sample CSV parsing") {
  std::istringstream in("x,weight\n0,0.5\n1,0.5\n");
  const Sample s = io::sample_from_csv(in);
  CHECK(s.size() == 2);
  CHECK(s.weights()[0] == 0.5);

  std::istringstream bare("# comment\n1\n2\n3\n");
  const Sample u = io::sample_from_csv(bare);
  CHECK(u.size() == 3);
  CHECK(u.uniform_weights());

  std::istringstream ragged("0,0.5\n1\n");
  CHECK_THROWS_AS(io::sample_from_csv(ragged), ParseError);
}

TEST_CASE("matrix parsing") {
  const auto j = json::parse(R"({"dim":2,"entries":[[1,[0,2]],[[0,-2],3]]})");
  const SquareMatrix m = io::matrix_from_json(j);
  CHECK(m.at(0, 1) == Complex{0.0, 2.0});
  CHECK(m.is_hermitian());

  const SquareMatrix r = io::matrix_from_inline("3,2,1;2,0,2;1,2,3");
  CHECK(r.dim() == 3);
  CHECK(r.at(1, 2).real() == 2.0);

  CHECK_THROWS_AS(io::matrix_from_inline("1,2;3"), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"entries":[[1,2],[3]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"dim":3,"entries":[[1]]})")),
                  ParseError);
}

TEST_CASE("polynomial parsing") {
  const Polynomial p = io::polynomial_from_inline("1,80,1500,5000,3750,0.2");
  CHECK(p.degree() == 5);
  CHECK(p.a(1) == 80.0);
  CHECK_THROWS_AS(io::polynomial_from_inline("1,abc"), ParseError);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"({"coefficients":[1]})")),
                  ParseError);
}

TEST_CASE("report serialization shape") {
  const Sample s({0.0, 1.0});
  const auto reports = run_suite(s);
  const json j = io::to_json(reports.front());
  CHECK(j.contains("name"));
  CHECK(j.contains("direction"));
  CHECK(j.contains("lhs"));
  CHECK(j.contains("rhs"));
  CHECK(j.contains("slack"));
  CHECK(j.contains("applicable"));
  CHECK(j.contains("note"));
  CHECK(j["direction"] == "upper");

  // inapplicable reports serialize with nulls, not NaNs
  const auto na = nagy_lower(compute_moments(s, 4), s.interval(), false);
  const json jn = io::to_json(na);
  CHECK(jn["lhs"].is_null());
  CHECK(jn["applicable"] == false);
}

TEST_CASE("cli spread reproduces the worked example and verifies") {
  const auto res = run_cli("spread --matrix " + data_path("example1.json") + " --verify");
  CHECK(res.code == 0);
  for (const char* needle :
       {"5.65685", "5.8259", "5.91608", "6.01815", "6.29469", "6.82522",
        "6.9282", "oracle spread"}) {
    INFO("missing: " << needle);
    CHECK(res.out.find(needle) != std::string::npos);
  }

  const auto inline_res = run_cli("spread --matrix \"3,2,1;2,0,2;1,2,3\" --json");
  CHECK(inline_res.code == 0);
  const json j = json::parse(inline_res.out);
  CHECK_THAT(j["best_lower"]["value"].get<double>(),
             WithinRel(4.0 * std::sqrt(3.0), 1e-9));
  CHECK_THAT(j["best_upper"]["value"].get<double>(),
             WithinRel(4.0 * std::sqrt(3.0), 1e-9));
}

TEST_CASE("cli span reproduces the worked quintic") {
  const auto res = run_cli("span --poly \"1,80,1500,5000,3750,0.2\" --verify");
  CHECK(res.code == 0);
  for (const char* needle : {"65.1153", "41.1825", "47.9158", "64.7438",
                             "48.4355", "exact span 53.8409"}) {
    INFO("missing: " << needle);
    CHECK(res.out.find(needle) != std::string::npos);
  }
  const auto file_res = run_cli("span --poly " + data_path("quintic.json") + " --json");
  CHECK(file_res.code == 0);
  const json j = json::parse(file_res.out);
  CHECK(j["bounds"].size() == 5);
  CHECK(j["exact"].is_null());
}

TEST_CASE("cli moments and check") {
  const auto res = run_cli("moments --sample " + data_path("sample_three_point.json"));
  CHECK(res.code == 0);
  CHECK(res.out.find("mean     0.5") != std::string::npos);

  const auto csv = run_cli("moments --sample " + data_path("sample_two_point.csv") + " --json");
  CHECK(csv.code == 0);
  const json jm = json::parse(csv.out);
  CHECK_THAT(jm["central"]["2"].get<double>(), WithinAbs(0.25, 1e-14));

  const auto chk = run_cli("check --sample " + data_path("sample_three_point.json") + " --json");
  CHECK(chk.code == 0);
  const json jr = json::parse(chk.out);
  REQUIRE(jr.is_array());
  CHECK(jr.size() >= 14);
  int applicable = 0;
  for (const auto& r : jr) {
    if (r["applicable"].get<bool>()) ++applicable;
  }
  CHECK(applicable >= 12);

  const auto ver = run_cli("verify --sample " + data_path("sample_weighted.json"));
  CHECK(ver.code == 0);
}

TEST_CASE("cli fuzz smoke run") {
  const auto res = run_cli("fuzz --count 200 --seed 3");
  CHECK(res.code == 0);
  CHECK(res.out.find("samples      200") != std::string::npos);
  CHECK(res.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("cli fuzz reports the first counterexample") {
  // a sub-roundoff tolerance turns exact-equality families into violations,
  // which exercises the counterexample listing end to end
  const auto res = run_cli("fuzz --count 2000 --seed 1 --tol 1e-18");
  CHECK(res.code == 1);
  CHECK(res.out.find("counterexample") != std::string::npos);
  CHECK(res.out.find("seed=1") != std::string::npos);
  CHECK(res.out.find("index=") != std::string::npos);
}

TEST_CASE("cli json output is byte-identical across runs") {
  const std::string cmd = "check --sample " + data_path("sample_weighted.json") + " --json";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto f1 = run_cli("fuzz --count 100 --seed 11 --json");
  const auto f2 = run_cli("fuzz --count 100 --seed 11 --json");
  CHECK(f1.code == 0);
  CHECK(f1.out == f2.out);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("moments --sample /nonexistent.json").code == 2);
  CHECK(run_cli("span --poly \"1,oops\"").code == 2);
  CHECK(run_cli("span --poly \"1,0,1\" --verify").code == 2);  // complex roots
  CHECK(run_cli("verify").code == 2);                          // no input source
  CHECK(run_cli("verify --sample a.json --poly b.json").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli full-precision json vs 6-digit tables") {
  const auto tbl = run_cli("moments --sample " + data_path("sample_three_point.json"));
  CHECK(tbl.out.find("0.166667") != std::string::npos);  // 6 significant digits
  const auto js = run_cli("moments --sample " + data_path("sample_three_point.json") + " --json");
  CHECK(js.out.find("0.1666666666666666") != std::string::npos);
}
