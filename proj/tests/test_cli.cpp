#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pentasolve/bench.hpp"
#include "pentasolve/vector_io.hpp"
#include "test_support.hpp"

using namespace pentasolve;
using namespace pentasolve::cli;

namespace {

std::vector<std::string> split_args(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> args;
  for (std::string tok; is >> tok;) args.push_back(tok);
  return args;
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::string& line) {
  std::ostringstream out, err;
  const int code = cli_main(split_args(line), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const char* tag) {
  return std::filesystem::temp_directory_path() /
         (std::string("pentasolve_cli_") + tag + ".txt");
}

}  // namespace

TEST_CASE("parse_args accepts explicit band values") {
  const CliConfig cfg = parse_args(split_args(
      "solve --n 128 --sigma 5 --lambda 2 --alpha 4 --beta 1 --gamma 3 "
      "--rhs-random 42"));
  CHECK(cfg.command == Command::solve);
  CHECK(cfg.n == 128);
  CHECK(cfg.sigma == 5.0);
  CHECK(cfg.lambda == 2.0);
  CHECK(cfg.alpha == 4.0);
  CHECK(cfg.beta == 1.0);
  CHECK(cfg.gamma == 3.0);
  CHECK(cfg.method == Method::fast);
  CHECK(cfg.source == VectorSource::random);
  CHECK(cfg.source_seed == 42);
  CHECK(cfg.format == OutputFormat::text);
}

TEST_CASE("parse_args accepts the full bench grid") {
  const CliConfig cfg = parse_args(split_args(
      "bench --tests 1,2,3 --sizes 128,256,512 --reps 10 --seed 7 "
      "--format markdown"));
  CHECK(cfg.command == Command::bench);
  CHECK(cfg.tests ==
        std::vector<TestId>{TestId::test1, TestId::test2, TestId::test3});
  CHECK(cfg.sizes == std::vector<std::size_t>{128, 256, 512});
  CHECK(cfg.reps == 10);
  CHECK(cfg.seed == 7);
  CHECK(cfg.format == OutputFormat::markdown);
  CHECK(cfg.methods == std::vector<Method>{Method::fast, Method::plu});
}

TEST_CASE("parse_args usage errors") {
  // n too small for the fast method
  CHECK_THROWS_AS(
      parse_args(split_args("solve --n 4 --test 1 --rhs-ones")), UsageError);
  try {
    parse_args(split_args("solve --n 4 --test 1 --rhs-ones"));
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
  // but fine for a baseline method
  CHECK_NOTHROW(parse_args(
      split_args("solve --n 4 --test 1 --rhs-ones --method banded_lu")));

  CHECK_THROWS_AS(parse_args(split_args("solve --n 8 --test 1 --rhs-ones "
                                        "--frobnicate")),
                  UsageError);
  // missing rhs source
  CHECK_THROWS_AS(parse_args(split_args("solve --n 8 --test 1")), UsageError);
  // two rhs sources
  CHECK_THROWS_AS(
      parse_args(split_args("solve --n 8 --test 1 --rhs-ones --rhs-random 1")),
      UsageError);
  // non-numeric value
  CHECK_THROWS_AS(parse_args(split_args("solve --n eight --test 1 --rhs-ones")),
                  UsageError);
  // preset and explicit bands conflict
  CHECK_THROWS_AS(
      parse_args(split_args("solve --n 8 --test 1 --sigma 5 --rhs-ones")),
      UsageError);
  // incomplete explicit bands
  try {
    parse_args(split_args("solve --n 8 --sigma 5 --lambda 2 --rhs-ones"));
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("--alpha") != std::string::npos);
  }
  // unknown subcommand
  CHECK_THROWS_AS(parse_args(split_args("frobnicate --n 8")), UsageError);
  CHECK_THROWS_AS(parse_args(split_args("bench --tests 1,9")), UsageError);
}

TEST_CASE("help is reported with exit code 0") {
  const CliResult r = invoke("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("solve") != std::string::npos);
  CHECK(r.out.find("bench") != std::string::npos);
  CHECK(r.out.find("gen") != std::string::npos);
}

TEST_CASE("solve with a synthesized all-ones solution") {
  const CliResult r = invoke("solve --n 7 --test 1 --rhs-ones");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.out);
  const std::vector<double> x = read_vector(is);  // '#' summary is skipped
  REQUIRE(x.size() == 7);
  for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.out.find("# fast, 7, ") != std::string::npos);
}

TEST_CASE("solve maps numerical failure to exit code 2") {
  const CliResult r = invoke(
      "solve --n 8 --sigma 0 --lambda 2 --alpha 4 --beta 1 --gamma 3 "
      "--rhs-ones");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("pivot breakdown") != std::string::npos);
}

TEST_CASE("usage failure maps to exit code 1") {
  const CliResult r = invoke("solve --n 4 --test 1 --rhs-ones");
  CHECK(r.exit_code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("missing input file maps to exit code 3") {
  const CliResult r =
      invoke("solve --n 8 --test 1 --rhs-file /nonexistent/b.txt");
  CHECK(r.exit_code == 3);
}

TEST_CASE("unwritable output path maps to exit code 3") {
  const CliResult r =
      invoke("solve --n 8 --test 1 --rhs-ones --out /nonexistent/dir/x.txt");
  CHECK(r.exit_code == 3);
}

TEST_CASE("gen then solve recovers the reference solution") {
  const auto b_path = temp_file("gen_b");
  const CliResult gen = invoke("gen --n 64 --test 1 --x-random 42 --out " +
                               b_path.string());
  REQUIRE(gen.exit_code == 0);

  const CliResult solve =
      invoke("solve --n 64 --test 1 --rhs-file " + b_path.string());
  REQUIRE(solve.exit_code == 0);
  std::istringstream is(solve.out);
  const std::vector<double> x = read_vector(is);
  const std::vector<double> expected = true_solution(64, 42);
  REQUIRE(x.size() == expected.size());
  CHECK(testsupport::rel_inf_diff(x, expected) <= 1e-10);
  std::filesystem::remove(b_path);
}

TEST_CASE("wrong-length rhs file is a usage error") {
  const auto b_path = temp_file("short_b");
  write_vector_file(b_path, std::vector<double>{1.0, 2.0, 3.0});
  const CliResult r =
      invoke("solve --n 8 --test 1 --rhs-file " + b_path.string());
  CHECK(r.exit_code == 1);
  std::filesystem::remove(b_path);
}

TEST_CASE("json solve output carries the full report") {
  const CliResult r = invoke("solve --n 8 --test 3 --rhs-random 5 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("method") == "fast");
  CHECK(j.at("n") == 8);
  CHECK(j.at("x").size() == 8);
  CHECK(j.at("relative_residual").get<double>() <= 1e-12);
  CHECK(j.at("unstable").get<bool>() == false);
  CHECK(j.at("elapsed_seconds").get<double>() >= 0.0);
}

TEST_CASE("the unstable regime prints a warning") {
  const CliResult r = invoke("solve --n 512 --test 2 --rhs-random 1");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("bench subcommand renders the requested format") {
  const CliResult csv =
      invoke("bench --tests 1 --sizes 16,32 --reps 1 --methods fast --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.rfind("test,n,method,relative_error,mean_time_seconds\n", 0) ==
        0);
  CHECK(csv.out.find("test1,16,fast,") != std::string::npos);
  CHECK(csv.out.find("test1,32,fast,") != std::string::npos);

  const CliResult md =
      invoke("bench --tests 3 --sizes 16 --reps 1 --methods fast,banded_lu");
  REQUIRE(md.exit_code == 0);
  CHECK(md.out.find("### Test 3") != std::string::npos);
  CHECK(md.out.find("banded_lu") != std::string::npos);

  const auto out_path = temp_file("bench_out");
  const CliResult to_file = invoke(
      "bench --tests 1 --sizes 16 --reps 1 --methods fast --format csv --out " +
      out_path.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f(out_path);
  std::string first_line;
  std::getline(f, first_line);
  CHECK(first_line == "test,n,method,relative_error,mean_time_seconds");
  f.close();
  std::filesystem::remove(out_path);
}
