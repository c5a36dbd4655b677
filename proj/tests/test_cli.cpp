#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef DICKSONLAB_CLI_PATH
#error "DICKSONLAB_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool capture_stderr = false) {
  std::string cmd = std::string(DICKSONLAB_CLI_PATH) + " " + args +
                    (capture_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    r.output.append(buffer, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

TEST_CASE("field-info reports the field parameters") {
  auto r = run_cli("field-info --p 3 --e 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["p"] == 3);
  CHECK(j["e"] == 2);
  CHECK(j["q"] == 9);
  CHECK(j["modulus"] == nlohmann::json({1, 0, 1}));
  CHECK(j["v_size"] == 9);

  auto r5 = run_cli("field-info --p 5 --e 1");
  auto j5 = nlohmann::json::parse(r5.output);
  CHECK(j5["nu"] == nlohmann::json({2}));
  CHECK(j5["v_size"] == 5);
}

TEST_CASE("usage and configuration errors exit with 1") {
  auto bad_p = run_cli("field-info --p 4 --e 1", true);
  CHECK(bad_p.exit_code == 1);
  CHECK(bad_p.output.find("p must be prime") != std::string::npos);

  CHECK(run_cli("field-info", true).exit_code == 1);   // missing --p
  CHECK(run_cli("", true).exit_code == 1);             // missing subcommand
  CHECK(run_cli("no-such-command --p 3", true).exit_code == 1);
  CHECK(run_cli("sums --p 2 --e 3", true).exit_code == 1);  // odd p required
  CHECK(run_cli("field-info --p 3 --e 2 --modulus 2,0,1", true).exit_code == 1);
  // command guards without --force
  CHECK(run_cli("sums --p 67 --e 1", true).exit_code == 1);
  CHECK(run_cli("survey --p 131 --e 1 --n-max 5", true).exit_code == 1);
  CHECK(run_cli("field-info --p 65537 --e 1", true).exit_code == 1);
}

TEST_CASE("eval cross-checks all routes") {
  auto r = run_cli("eval --p 5 --e 1 --n 4 --x 1 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["agree"] == true);
  CHECK(j["values"]["direct"] == "4");  // E_4(1,1) = -1
  CHECK(j["values"]["recursive"] == "4");
  CHECK(j["values"]["functional"] == "4");
  CHECK(j["values"]["odd-binomial"] == "4");
  CHECK(j["values"]["series"] == "4");

  auto big = run_cli("eval --p 5 --e 1 --n 1099511627776 --x 2 --format json");
  CHECK(big.exit_code == 0);
  auto jb = nlohmann::json::parse(big.output);
  CHECK(jb["values"].contains("functional"));
  CHECK(!jb["values"].contains("direct"));  // beyond the direct cap
}

TEST_CASE("pp command reports all three verdicts") {
  auto r = run_cli("pp --p 5 --e 1 --n 4 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["is_pp"] == false);
  CHECK(j["agree"] == true);
  CHECK(j["methods"]["exhaustive"]["witness"]["type"] == "collision");
  CHECK(j["methods"]["two_to_one"]["is_pp"] == false);

  auto r2 = run_cli("pp --p 5 --e 1 --n 2 --format json");
  auto j2 = nlohmann::json::parse(r2.output);
  CHECK(j2["is_pp"] == true);
  CHECK(j2["methods"]["exhaustive"]["witness"].is_null());

  auto char2 = run_cli("pp --p 2 --e 3 --n 5 --format json");
  auto jc = nlohmann::json::parse(char2.output);
  CHECK(!jc["methods"].contains("two_to_one"));
}

TEST_CASE("survey output and schema") {
  auto r = run_cli("survey --p 3 --e 1 --n-max 8");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 10);  // header + n = 0..8
  CHECK(lines[0] ==
        "n,is_pp,agree_power_sum,agree_two_to_one,filter_overall,"
        "period6_applicable,period6_passed,odd_index_applicable,"
        "odd_index_passed,mod4_gcd_applicable,mod4_gcd_passed,reduced_index");
  auto row2 = split_csv(lines[3]);  // n = 2
  REQUIRE(row2.size() == 12);
  CHECK(row2[0] == "2");
  CHECK(row2[1] == "true");  // E_2(1,x) = 1-x permutes F_3

  auto r5 = run_cli("survey --p 5 --e 1 --n-max 24");
  auto lines5 = lines_of(r5.output);
  REQUIRE(lines5.size() == 26);
  auto row6 = split_csv(lines5[7]);  // n = 6
  CHECK(row6[0] == "6");
  CHECK(row6[4] == "false");  // filter_overall fails at n = 6
  for (std::size_t i = 1; i < lines5.size(); ++i) {
    auto row = split_csv(lines5[i]);
    CHECK(row[2] == "true");  // power sum always agrees with exhaustive
    CHECK(row[3] == "true");  // as does the 2-to-1 criterion (p odd)
  }

  // characteristic 2: the two-to-one column is blank
  auto r2 = run_cli("survey --p 2 --e 2 --n-max 5");
  for (std::size_t i = 1; i < lines_of(r2.output).size(); ++i)
    CHECK(split_csv(lines_of(r2.output)[i])[3] == "");
}

TEST_CASE("sums command") {
  auto r = run_cli("sums --p 3 --e 1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 9);  // header + 8 rows
  CHECK(lines[0] == "n,s_scheme,s_brute,match");
  auto row1 = split_csv(lines[1]);
  CHECK(row1[0] == "1");
  CHECK(row1[1] == "0");
  auto row4 = split_csv(lines[4]);
  CHECK(row4[0] == "4");
  CHECK(row4[1] == "2");
  CHECK(row4[3] == "true");
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(split_csv(lines[i])[3] == "true");

  CHECK(run_cli("sums --p 2 --e 3", true).exit_code == 1);

  auto scheme_only = run_cli("sums --p 3 --e 1 --method scheme");
  auto so_lines = lines_of(scheme_only.output);
  CHECK(so_lines[0] == "n,s,method");
  CHECK(split_csv(so_lines[4])[1] == "2");
}

TEST_CASE("filters command") {
  auto r = run_cli("filters --p 5 --e 1 --n-max 24 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j["rows"].size() == 24);
  CHECK(j["rows"][5]["n"] == 6);
  CHECK(j["rows"][5]["overall"] == false);
}

TEST_CASE("verify command") {
  auto one_suite = run_cli("verify --p 5 --e 1 --suite field_power_sums");
  CHECK(one_suite.exit_code == 0);
  auto lines = lines_of(one_suite.output);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("[PASS] field_power_sums") == 0);

  CHECK(run_cli("verify --p 5 --e 1 --suite no_such", true).exit_code == 1);

  auto js = run_cli(
      "verify --p 3 --e 2 --suite reflection_set --suite sum_tables "
      "--format json");
  CHECK(js.exit_code == 0);
  auto j = nlohmann::json::parse(js.output);
  REQUIRE(j["suites"].size() == 2);
  CHECK(j["suites"][0]["passed"] == true);
  CHECK(j["suites"][1]["passed"] == true);
}

TEST_CASE("output is byte-identical across runs and matches --out") {
  for (const std::string args :
       {std::string("survey --p 5 --e 1 --n-max 24"),
        std::string("sums --p 3 --e 1 --format json"),
        std::string("field-info --p 3 --e 2"),
        std::string("eval --p 5 --e 1 --n 9 --x 1 --format json"),
        std::string("filters --p 7 --e 1")}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());
  }

  const char* path = "cli_out_tmp.csv";
  auto direct = run_cli("survey --p 3 --e 1 --n-max 8");
  auto to_file = run_cli(std::string("survey --p 3 --e 1 --n-max 8 --out ") +
                         path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path);
}
