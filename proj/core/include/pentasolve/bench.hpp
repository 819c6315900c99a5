#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pentasolve/penta_matrix.hpp"
#include "pentasolve/solve_report.hpp"

namespace pentasolve {

/// The three built-in band presets of the benchmark protocol.
enum class TestId { test1, test2, test3 };

std::string_view test_name(TestId t) noexcept;   // "test1", ...
std::string_view test_title(TestId t) noexcept;  // "Test 1", ...

PentaToeplitz test_matrix(TestId id, std::size_t n);

struct BenchCase {
  TestId test;
  std::size_t n;
  std::uint64_t seed;
  int reps = 10;
  std::vector<Method> methods;
};

struct BenchRecord {
  TestId test;
  std::size_t n;
  Method method;
  double relative_error = 0.0;
  double mean_time_seconds = 0.0;
  bool failed = false;
  std::string error;  // failure message when failed
};

struct BenchTable {
  std::vector<BenchRecord> records;
};

enum class TableFormat { markdown, csv };

/// Deterministic reference solution: n uniform [0, 1) draws from
/// xoshiro256++ seeded with `seed`.
std::vector<double> true_solution(std::size_t n, std::uint64_t seed);

/// Per-case seed: suite seed plus a stable hash of (test, n).
std::uint64_t case_seed(std::uint64_t suite_seed, TestId test,
                        std::size_t n) noexcept;

/// Runs one case: builds the preset matrix, draws x*, forms b = A x*, then
/// for each method runs one untimed warm-up and `reps` timed solves of the
/// same inputs. Records the mean wall time around the solve call and the
/// relative residual of the final repetition. Solver failures are recorded
/// in the record, not thrown.
std::vector<BenchRecord> run_case(const BenchCase& c);

/// Cartesian grid over tests and sizes, sequential by design so timings
/// stay unperturbed. Per-case seeds derive from `seed`.
BenchTable run_suite(const std::vector<TestId>& tests,
                     const std::vector<std::size_t>& sizes,
                     std::uint64_t seed, int reps,
                     const std::vector<Method>& methods);

/// Markdown renders one table per test with (relative error, time) rows per
/// method and one column per n. CSV emits the header
/// test,n,method,relative_error,mean_time_seconds and one row per record.
/// Failed records render as FAIL.
std::string render_table(const BenchTable& table, TableFormat format);

/// Scientific notation with 4 significant digits and no exponent zero
/// padding: 1e-16 -> "1.000e-16", 1.5e-4 -> "1.500e-4".
std::string format_scientific(double v);

}  // namespace pentasolve
