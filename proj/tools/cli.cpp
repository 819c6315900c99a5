#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "pentasolve/baselines.hpp"
#include "pentasolve/errors.hpp"
#include "pentasolve/fast_solver.hpp"
#include "pentasolve/vector_io.hpp"

namespace pentasolve::cli {

namespace {

const std::map<std::string, Method> kMethodNames{
    {"fast", Method::fast},
    {"plu", Method::plu},
    {"banded_lu", Method::banded_lu}};

TestId test_from_int(int id) {
  switch (id) {
    case 1:
      return TestId::test1;
    case 2:
      return TestId::test2;
    case 3:
      return TestId::test3;
    default:
      throw UsageError("--tests entries must be 1, 2 or 3, got " +
                       std::to_string(id));
  }
}

struct SubcommandOptions {
  CLI::Option* preset = nullptr;
  std::array<CLI::Option*, 5> bands{};
  int preset_id = 0;
};

// --test N preset or all five explicit band values.
SubcommandOptions add_system_options(CLI::App* cmd, CliConfig& cfg) {
  SubcommandOptions opts;
  cmd->add_option("--n", cfg.n, "System dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  opts.preset = cmd->add_option("--test", opts.preset_id,
                                "Built-in band preset (1, 2 or 3)")
                    ->check(CLI::Range(1, 3));
  opts.bands[0] = cmd->add_option("--sigma", cfg.sigma, "Second subdiagonal");
  opts.bands[1] = cmd->add_option("--lambda", cfg.lambda, "First subdiagonal");
  opts.bands[2] = cmd->add_option("--alpha", cfg.alpha, "Main diagonal");
  opts.bands[3] = cmd->add_option("--beta", cfg.beta, "First superdiagonal");
  opts.bands[4] = cmd->add_option("--gamma", cfg.gamma, "Second superdiagonal");
  for (CLI::Option* band : opts.bands) opts.preset->excludes(band);
  return opts;
}

void resolve_bands(const SubcommandOptions& opts, CliConfig& cfg) {
  if (opts.preset->count() > 0) {
    const PentaToeplitz preset =
        test_matrix(test_from_int(opts.preset_id), std::max<std::size_t>(cfg.n, 1));
    cfg.sigma = preset.sigma();
    cfg.lambda = preset.lambda();
    cfg.alpha = preset.alpha();
    cfg.beta = preset.beta();
    cfg.gamma = preset.gamma();
    return;
  }
  static constexpr const char* kNames[5] = {"--sigma", "--lambda", "--alpha",
                                            "--beta", "--gamma"};
  for (std::size_t i = 0; i < 5; ++i)
    if (opts.bands[i]->count() == 0)
      throw UsageError(std::string("missing ") + kNames[i] +
                       " (pass all five band values or use --test)");
}

struct SourceOptions {
  CLI::Option* file = nullptr;
  CLI::Option* ones = nullptr;
  CLI::Option* random = nullptr;
};

SourceOptions add_source_options(CLI::App* cmd, CliConfig& cfg,
                                 const std::string& prefix,
                                 const std::string& what) {
  SourceOptions opts;
  auto* group = cmd->add_option_group("source", what);
  opts.file = group->add_option("--" + prefix + "-file", cfg.source_path,
                                what + ": read from a vector file");
  opts.ones = group->add_flag("--" + prefix + "-ones");
  opts.ones->description(what + ": all-ones vector");
  opts.random = group->add_option("--" + prefix + "-random", cfg.source_seed,
                                  what + ": uniform [0,1) from this seed");
  group->require_option(1);
  return opts;
}

void resolve_source(const SourceOptions& opts, CliConfig& cfg) {
  if (opts.file->count() > 0)
    cfg.source = VectorSource::file;
  else if (opts.ones->count() > 0)
    cfg.source = VectorSource::ones;
  else
    cfg.source = VectorSource::random;
}

void write_output(const CliConfig& cfg, const std::string& text,
                  std::ostream& fallback) {
  if (!cfg.out) {
    fallback << text;
    return;
  }
  std::ofstream file(*cfg.out);
  if (!file) throw IoError("cannot open for writing: " + *cfg.out);
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing: " + *cfg.out);
}

std::vector<double> load_vector(const CliConfig& cfg, const PentaToeplitz& a,
                                bool synthesize_rhs) {
  switch (cfg.source) {
    case VectorSource::file: {
      std::vector<double> v = read_vector_file(cfg.source_path);
      if (v.size() != cfg.n)
        throw UsageError("vector file " + cfg.source_path + " has " +
                         std::to_string(v.size()) + " entries, --n is " +
                         std::to_string(cfg.n));
      return v;
    }
    case VectorSource::ones: {
      std::vector<double> x(cfg.n, 1.0);
      return synthesize_rhs ? matvec(a, x) : x;
    }
    case VectorSource::random: {
      std::vector<double> x = true_solution(cfg.n, cfg.source_seed);
      return synthesize_rhs ? matvec(a, x) : x;
    }
  }
  throw UsageError("unknown vector source");
}

int run_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const PentaToeplitz a(cfg.n, cfg.sigma, cfg.lambda, cfg.alpha, cfg.beta,
                        cfg.gamma);
  const std::vector<double> b = load_vector(cfg, a, /*synthesize_rhs=*/true);

  SolveReport report;
  switch (cfg.method) {
    case Method::fast:
      report = solve_fast(a, b);
      break;
    case Method::plu:
      report = plu_solve(densify(a), b);
      break;
    case Method::banded_lu:
      report = banded_lu_solve(a, b);
      break;
  }

  if (report.unstable)
    err << "warning: relative residual "
        << format_scientific(report.relative_residual)
        << " exceeds " << format_scientific(kInstabilityThreshold)
        << "; solution may be unreliable\n";

  std::string text;
  if (cfg.format == OutputFormat::json) {
    nlohmann::json j{{"method", method_name(report.method)},
                     {"n", cfg.n},
                     {"relative_residual", report.relative_residual},
                     {"elapsed_seconds", report.elapsed_seconds},
                     {"unstable", report.unstable},
                     {"x", report.x}};
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    write_vector(os, report.x);
    os << "# " << method_name(report.method) << ", " << cfg.n << ", "
       << format_scientific(report.relative_residual) << ", "
       << format_scientific(report.elapsed_seconds) << "\n";
    text = os.str();
  }
  write_output(cfg, text, out);
  return 0;
}

int run_gen(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const PentaToeplitz a(cfg.n, cfg.sigma, cfg.lambda, cfg.alpha, cfg.beta,
                        cfg.gamma);
  const std::vector<double> xs =
      load_vector(cfg, a, /*synthesize_rhs=*/false);
  const std::vector<double> b = matvec(a, xs);
  std::ostringstream os;
  write_vector(os, b);
  write_output(cfg, os.str(), out);
  return 0;
}

int run_bench(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const BenchTable table =
      run_suite(cfg.tests, cfg.sizes, cfg.seed, cfg.reps, cfg.methods);
  const TableFormat fmt = cfg.format == OutputFormat::csv ? TableFormat::csv
                                                          : TableFormat::markdown;
  write_output(cfg, render_table(table, fmt), out);
  return 0;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  CLI::App app{"Direct solvers for pentadiagonal Toeplitz systems"};
  app.name("pentasolve");
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve A x = b for one system");
  const SubcommandOptions solve_system = add_system_options(solve, cfg);
  const SourceOptions solve_source =
      add_source_options(solve, cfg, "rhs", "right-hand side");
  solve->add_option("--method", cfg.method, "Solver")
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  std::string solve_format = "text";
  solve->add_option("--format", solve_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--out", cfg.out, "Write output to this path");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Run the accuracy/timing grid over the built-in presets");
  std::vector<int> test_ids{1, 2, 3};
  bench->add_option("--tests", test_ids, "Preset ids (comma separated)")
      ->delimiter(',');
  cfg.sizes = {128, 256, 512};
  bench->add_option("--sizes", cfg.sizes, "System sizes (comma separated)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--reps", cfg.reps, "Timed repetitions per case")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", cfg.seed, "Suite seed");
  cfg.methods = {Method::fast, Method::plu};
  bench->add_option("--methods", cfg.methods, "Solvers (comma separated)")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  std::string bench_format = "markdown";
  bench->add_option("--format", bench_format, "Output format")
      ->check(CLI::IsMember({"markdown", "csv"}));
  bench->add_option("--out", cfg.out, "Write the table to this path");

  // gen
  auto* gen = app.add_subcommand(
      "gen", "Generate b = A x* for a chosen x* and write it as a vector file");
  const SubcommandOptions gen_system = add_system_options(gen, cfg);
  const SourceOptions gen_source =
      add_source_options(gen, cfg, "x", "true solution x*");
  gen->add_option("--out", cfg.out, "Write b to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (solve->parsed()) {
    cfg.command = Command::solve;
    resolve_bands(solve_system, cfg);
    resolve_source(solve_source, cfg);
    cfg.format = solve_format == "json" ? OutputFormat::json
                                        : OutputFormat::text;
    if (cfg.method == Method::fast && cfg.n < 6)
      throw UsageError("--n must be at least 6 when --method is fast (got " +
                       std::to_string(cfg.n) + ")");
  } else if (bench->parsed()) {
    cfg.command = Command::bench;
    cfg.tests.clear();
    for (int id : test_ids) cfg.tests.push_back(test_from_int(id));
    cfg.format = bench_format == "csv" ? OutputFormat::csv
                                       : OutputFormat::markdown;
  } else {
    cfg.command = Command::gen;
    resolve_bands(gen_system, cfg);
    resolve_source(gen_source, cfg);
    cfg.format = OutputFormat::text;
  }
  return cfg;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::solve:
      return run_solve(cfg, out, err);
    case Command::bench:
      return run_bench(cfg, out, err);
    case Command::gen:
      return run_gen(cfg, out, err);
  }
  throw UsageError("unknown command");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const UsageError& e) {
    err << "pentasolve: " << e.what() << '\n';
    return 1;
  }
  try {
    return run(cfg, out, err);
  } catch (const UsageError& e) {
    err << "pentasolve: " << e.what() << '\n';
    return 1;
  } catch (const SolveError& e) {
    err << "pentasolve: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "pentasolve: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace pentasolve::cli
