#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentasolve/bench.hpp"
#include "pentasolve/solve_report.hpp"

namespace pentasolve::cli {

inline constexpr std::uint64_t kDefaultBenchSeed = 42;

enum class Command { solve, bench, gen };

/// Where the working vector comes from: the right-hand side b for `solve`
/// (file reads b literally; ones/random synthesize b = A x* from a known
/// x*), or x* itself for `gen`.
enum class VectorSource { file, ones, random };

enum class OutputFormat { text, csv, markdown, json };

struct CliConfig {
  Command command = Command::solve;

  // system description (solve, gen)
  std::size_t n = 0;
  double sigma = 0.0, lambda = 0.0, alpha = 0.0, beta = 0.0, gamma = 0.0;
  Method method = Method::fast;
  VectorSource source = VectorSource::ones;
  std::string source_path;
  std::uint64_t source_seed = 0;

  std::optional<std::string> out;
  OutputFormat format = OutputFormat::text;

  // bench grid
  std::vector<TestId> tests;
  std::vector<std::size_t> sizes;
  int reps = 10;
  std::uint64_t seed = kDefaultBenchSeed;
  std::vector<Method> methods;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for -h/--help; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

/// Parses and validates argv (program name excluded). Throws UsageError
/// naming the offending flag, or HelpRequested.
CliConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed command, writing to `out` unless the config carries an
/// output path; diagnostics go to `err`. Returns 0; failures are thrown.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// parse + run with failures mapped to exit codes: 0 success, 1 usage
/// error, 2 numerical failure, 3 I/O error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace pentasolve::cli
