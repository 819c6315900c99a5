#include "pentasolve/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iterator>
#include <map>
#include <optional>
#include <utility>

#include "pentasolve/baselines.hpp"
#include "pentasolve/errors.hpp"
#include "pentasolve/fast_solver.hpp"
#include "pentasolve/rng.hpp"

namespace pentasolve {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::fast:
      return "fast";
    case Method::plu:
      return "plu";
    case Method::banded_lu:
      return "banded_lu";
  }
  return "unknown";
}

std::string_view test_name(TestId t) noexcept {
  switch (t) {
    case TestId::test1:
      return "test1";
    case TestId::test2:
      return "test2";
    case TestId::test3:
      return "test3";
  }
  return "unknown";
}

std::string_view test_title(TestId t) noexcept {
  switch (t) {
    case TestId::test1:
      return "Test 1";
    case TestId::test2:
      return "Test 2";
    case TestId::test3:
      return "Test 3";
  }
  return "unknown";
}

PentaToeplitz test_matrix(TestId id, std::size_t n) {
  switch (id) {
    case TestId::test1:
      return {n, 5.0, 2.0, 4.0, 1.0, 3.0};
    case TestId::test2:
      return {n, 1.0, 0.2, 0.1, 0.2, 0.5};
    case TestId::test3:
      return {n, 28.0, 19.0, 17.0, 21.0, 25.0};
  }
  throw SolveError(Errc::invalid_value, "unknown test id");
}

std::vector<double> true_solution(std::size_t n, std::uint64_t seed) {
  Xoshiro256pp rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform01();
  return x;
}

std::uint64_t case_seed(std::uint64_t suite_seed, TestId test,
                        std::size_t n) noexcept {
  std::uint64_t key = (static_cast<std::uint64_t>(test) << 32) ^
                      static_cast<std::uint64_t>(n);
  return suite_seed + splitmix64(key);
}

std::vector<BenchRecord> run_case(const BenchCase& c) {
  if (c.reps < 1)
    throw SolveError(Errc::invalid_value, "repetition count must be >= 1");
  const PentaToeplitz a = test_matrix(c.test, c.n);
  const std::vector<double> xs = true_solution(c.n, c.seed);
  const std::vector<double> b = matvec(a, xs);

  std::vector<BenchRecord> records;
  records.reserve(c.methods.size());
  for (Method m : c.methods) {
    BenchRecord rec;
    rec.test = c.test;
    rec.n = c.n;
    rec.method = m;
    try {
      std::optional<DenseMatrix> dense;
      if (m == Method::plu) dense = densify(a);
      const auto solve_once = [&]() -> SolveReport {
        switch (m) {
          case Method::fast:
            return solve_fast(a, b);
          case Method::plu:
            return plu_solve(*dense, b);
          case Method::banded_lu:
            return banded_lu_solve(a, b);
        }
        throw SolveError(Errc::invalid_value, "unknown method");
      };
      SolveReport report = solve_once();  // warm-up, untimed
      const auto t0 = std::chrono::steady_clock::now();
      for (int rep = 0; rep < c.reps; ++rep) report = solve_once();
      const auto t1 = std::chrono::steady_clock::now();
      rec.relative_error = report.relative_residual;
      rec.mean_time_seconds =
          std::chrono::duration<double>(t1 - t0).count() / c.reps;
    } catch (const SolveError& e) {
      rec.failed = true;
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

BenchTable run_suite(const std::vector<TestId>& tests,
                     const std::vector<std::size_t>& sizes,
                     std::uint64_t seed, int reps,
                     const std::vector<Method>& methods) {
  if (tests.empty() || sizes.empty() || methods.empty())
    throw SolveError(Errc::invalid_value,
                     "benchmark grid needs at least one test, size and method");
  if (reps < 1)
    throw SolveError(Errc::invalid_value, "repetition count must be >= 1");
  BenchTable table;
  for (TestId t : tests)
    for (std::size_t n : sizes) {
      BenchCase c{t, n, case_seed(seed, t, n), reps, methods};
      std::vector<BenchRecord> recs = run_case(c);
      table.records.insert(table.records.end(),
                           std::make_move_iterator(recs.begin()),
                           std::make_move_iterator(recs.end()));
    }
  return table;
}

std::string format_scientific(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  std::string s(buf);
  const std::size_t e = s.find('e');
  if (e == std::string::npos) return s;  // nan or inf
  std::size_t digits = e + 1;
  if (digits < s.size() && (s[digits] == '+' || s[digits] == '-')) ++digits;
  std::size_t first = digits;
  while (first + 1 < s.size() && s[first] == '0') ++first;
  return s.substr(0, digits) + s.substr(first);
}

namespace {

std::string render_csv(const BenchTable& table) {
  std::string out = "test,n,method,relative_error,mean_time_seconds\n";
  for (const BenchRecord& r : table.records) {
    out += std::string(test_name(r.test)) + ',' + std::to_string(r.n) + ',' +
           std::string(method_name(r.method)) + ',';
    if (r.failed)
      out += "FAIL,FAIL";
    else
      out += format_scientific(r.relative_error) + ',' +
             format_scientific(r.mean_time_seconds);
    out += '\n';
  }
  return out;
}

std::string render_markdown(const BenchTable& table) {
  // Preserve the caller's test and method ordering; columns sort by n.
  std::vector<TestId> tests;
  for (const BenchRecord& r : table.records)
    if (std::find(tests.begin(), tests.end(), r.test) == tests.end())
      tests.push_back(r.test);

  std::string out;
  for (TestId t : tests) {
    std::vector<std::size_t> sizes;
    std::vector<Method> methods;
    std::map<std::pair<std::size_t, Method>, const BenchRecord*> cells;
    for (const BenchRecord& r : table.records) {
      if (r.test != t) continue;
      if (std::find(sizes.begin(), sizes.end(), r.n) == sizes.end())
        sizes.push_back(r.n);
      if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
        methods.push_back(r.method);
      cells[{r.n, r.method}] = &r;
    }
    std::sort(sizes.begin(), sizes.end());

    if (!out.empty()) out += '\n';
    out += "### " + std::string(test_title(t)) + "\n\n";
    out += "| " + std::string(test_title(t)) + " | method |";
    for (std::size_t n : sizes) out += " n=" + std::to_string(n) + " |";
    out += "\n| --- | --- |";
    for (std::size_t i = 0; i < sizes.size(); ++i) out += " --- |";
    out += '\n';

    const auto emit_rows = [&](const std::string& label, bool time_row) {
      bool first = true;
      for (Method m : methods) {
        out += "| " + (first ? label : std::string()) + " | " +
               std::string(method_name(m)) + " |";
        first = false;
        for (std::size_t n : sizes) {
          const auto it = cells.find({n, m});
          if (it == cells.end()) {
            out += "  |";
          } else if (it->second->failed) {
            out += " FAIL |";
          } else {
            const double v = time_row ? it->second->mean_time_seconds
                                      : it->second->relative_error;
            out += ' ' + format_scientific(v) + " |";
          }
        }
        out += '\n';
      }
    };
    emit_rows("Relative error", false);
    emit_rows("Time (s)", true);
  }
  return out;
}

}  // namespace

std::string render_table(const BenchTable& table, TableFormat format) {
  return format == TableFormat::csv ? render_csv(table)
                                    : render_markdown(table);
}

}  // namespace pentasolve
