#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MAXMIN_CLI_PATH
#error "MAXMIN_CLI_PATH must point at the built binary"
#endif
#ifndef MAXMIN_TEST_DATA_DIR
#error "MAXMIN_TEST_DATA_DIR must point at tests/data"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(MAXMIN_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string model_path = std::string(MAXMIN_TEST_DATA_DIR) + "/affine2.txt";

}  // namespace

TEST_CASE("solve reports the known optimum as JSON") {
  const auto run = run_cli("solve --model " + model_path +
                           " --norm linf --budget 10 --weights 1,1");
  CHECK(run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(run.output);
  CHECK(parsed["c_star"].get<double>() == doctest::Approx(3.90388203).epsilon(1e-7));
  CHECK(parsed["converged"].get<bool>());
}

TEST_CASE("solve CSV output has one row per user") {
  const auto run = run_cli("solve --model " + model_path +
                           " --norm linf --budget 10 --out-format csv");
  CHECK(run.exit_code == 0);
  CHECK(run.output.rfind("k,p_star,utility,weight\n", 0) == 0);
  CHECK(std::count(run.output.begin(), run.output.end(), '\n') == 3);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string args = "boundary sample --model " + model_path +
                           " --norm linf --budget 10 --n 25 --seed 99";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.rfind("sample_id,k,p,utility\n", 0) == 0);

  const auto other = run_cli("boundary sample --model " + model_path +
                             " --norm linf --budget 10 --n 25 --seed 100");
  CHECK(other.output != first.output);
}

TEST_CASE("boundary verify emits a certificate with a dominator") {
  const auto run = run_cli("boundary verify --model " + model_path +
                           " --norm linf --budget 10 --p 5,5");
  CHECK(run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(run.output);
  CHECK_FALSE(parsed["on_boundary"].get<bool>());
  REQUIRE(parsed["dominator"].is_array());
  CHECK(parsed["dominator"][0].get<double>() == doctest::Approx(10.0));

  const auto on = run_cli("boundary verify --model " + model_path +
                          " --norm linf --budget 10 --p 10,0 --crosscheck");
  CHECK(on.exit_code == 0);
  const auto parsed_on = nlohmann::json::parse(on.output);
  CHECK(parsed_on["on_boundary"].get<bool>());
  CHECK(parsed_on["solver_crosscheck"]["c_star"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("si-check passes on the valid instance") {
  const auto run = run_cli("si-check --model " + model_path + " --trials 300 --seed 5");
  CHECK(run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(run.output);
  CHECK(parsed["passed"].get<bool>());
}

TEST_CASE("exit codes distinguish usage from domain failures") {
  // missing file -> usage
  CHECK(run_cli("solve --model /does/not/exist --budget 10").exit_code == 2);
  // unknown norm -> usage
  CHECK(run_cli("solve --model " + model_path + " --norm l7 --budget 10").exit_code == 2);
  // unknown flag -> usage
  CHECK(run_cli("solve --model " + model_path + " --budget 10 --frobnicate").exit_code == 2);
  // missing subcommand -> usage
  CHECK(run_cli("").exit_code == 2);
  // help -> success
  CHECK(run_cli("--help").exit_code == 0);
  // iteration cap too small -> flagged non-convergence, domain failure
  CHECK(run_cli("solve --model " + model_path +
                " --norm linf --budget 10 --max-iter 2").exit_code == 1);
  // infeasible point -> domain failure
  CHECK(run_cli("boundary verify --model " + model_path +
                " --norm linf --budget 10 --p 11,0").exit_code == 1);
}

TEST_CASE("cellless run emits one CSV row per policy and user") {
  const std::string cfg_path = std::string(MAXMIN_TEST_DATA_DIR) + "/net_tiny.cfg";
  const std::string args = "cellless run --config " + cfg_path +
                           " --policies full,random,fractional --policy-seed 5";
  const auto run = run_cli(args);
  CHECK(run.exit_code == 0);
  CHECK(run.output.rfind("policy,user,p_watts,sinr,rate_bits_per_hz\n", 0) == 0);
  // 3 policies x 3 users + header
  CHECK(std::count(run.output.begin(), run.output.end(), '\n') == 10);
  CHECK(run.output.find("full,0,") != std::string::npos);
  CHECK(run.output.find("fractional,2,") != std::string::npos);

  const auto again = run_cli(args);
  CHECK(again.output == run.output);
}

TEST_CASE("output lands in the requested file") {
  const std::string out_path = "/tmp/maxmin_cli_test_out.json";
  std::remove(out_path.c_str());
  const auto run = run_cli("solve --model " + model_path +
                           " --norm linf --budget 10 --out " + out_path);
  CHECK(run.exit_code == 0);
  CHECK(run.output.empty());
  std::ifstream in(out_path);
  REQUIRE(in.good());
  nlohmann::json parsed;
  in >> parsed;
  CHECK(parsed["converged"].get<bool>());
  std::remove(out_path.c_str());
}
