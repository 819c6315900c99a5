#include "pentasolve/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pentasolve/errors.hpp"

namespace pentasolve {

namespace {

constexpr double kPivotFactor = 64.0 * std::numeric_limits<double>::epsilon();
constexpr std::size_t kDenseLimit = 4096;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

double dense_relative_residual(const DenseMatrix& m,
                               std::span<const double> x,
                               std::span<const double> b) {
  const std::vector<double> ax = m.multiply(x);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double d = b[i] - ax[i];
    num += d * d;
    den += b[i] * b[i];
  }
  if (den == 0.0)
    throw SolveError(Errc::undefined_metric,
                     "relative residual undefined: right-hand side is zero");
  return std::sqrt(num) / std::sqrt(den);
}

}  // namespace

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_)
    throw SolveError(Errc::dimension_mismatch,
                     "multiply: vector length " + std::to_string(x.size()) +
                         " does not match dimension " + std::to_string(n_));
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    const double* row = entries_.data() + i * n_;
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

DenseMatrix densify(const PentaToeplitz& a) {
  const std::size_t n = a.n();
  if (n > kDenseLimit)
    throw SolveError(Errc::size_limit,
                     "dense path limited to n <= " +
                         std::to_string(kDenseLimit) + ", got n = " +
                         std::to_string(n));
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2) m.at(i, i - 2) = a.sigma();
    if (i >= 1) m.at(i, i - 1) = a.lambda();
    m.at(i, i) = a.alpha();
    if (i + 1 < n) m.at(i, i + 1) = a.beta();
    if (i + 2 < n) m.at(i, i + 2) = a.gamma();
  }
  return m;
}

SolveReport plu_solve(const DenseMatrix& m, std::span<const double> b) {
  const std::size_t n = m.n();
  if (b.size() != n)
    throw SolveError(Errc::dimension_mismatch,
                     "plu_solve: right-hand side length " +
                         std::to_string(b.size()) +
                         " does not match dimension " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();

  DenseMatrix lu = m;
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    // pick the largest remaining entry in column k
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu.at(i, k)) > std::abs(lu.at(piv, k))) piv = i;
    // With the column max as pivot, only a zero (or subnormal) column is
    // fatal; ill conditioning alone must not abort a backward-stable
    // elimination.
    if (!(std::abs(lu.at(piv, k)) >= std::numeric_limits<double>::min()))
      throw SolveError(Errc::singular_matrix,
                       "matrix is singular to working precision (column " +
                           std::to_string(k + 1) + ")");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(lu.at(k, j), lu.at(piv, j));
      std::swap(x[k], x[piv]);
    }
    const double inv = 1.0 / lu.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu.at(i, k) * inv;
      if (f == 0.0) continue;
      lu.at(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu.at(i, j) -= f * lu.at(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu.at(i, j) * x[j];
    x[i] = acc / lu.at(i, i);
  }

  SolveReport report;
  report.x = std::move(x);
  report.method = Method::plu;
  report.elapsed_seconds = seconds_since(start);
  report.relative_residual = dense_relative_residual(m, report.x, b);
  report.unstable = report.relative_residual > kInstabilityThreshold;
  return report;
}

SolveReport banded_lu_solve(const PentaToeplitz& a,
                            std::span<const double> b) {
  const std::size_t n = a.n();
  if (b.size() != n)
    throw SolveError(Errc::dimension_mismatch,
                     "banded_lu_solve: right-hand side length " +
                         std::to_string(b.size()) +
                         " does not match dimension " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();

  // Per-row copies of the bands; elimination fill stays inside them.
  std::vector<double> sub2(n, 0.0), sub1(n, 0.0), diag(n, a.alpha());
  std::vector<double> sup1(n, 0.0), sup2(n, 0.0);
  for (std::size_t i = 2; i < n; ++i) sub2[i] = a.sigma();
  for (std::size_t i = 1; i < n; ++i) sub1[i] = a.lambda();
  for (std::size_t i = 0; i + 1 < n; ++i) sup1[i] = a.beta();
  for (std::size_t i = 0; i + 2 < n; ++i) sup2[i] = a.gamma();
  std::vector<double> rhs(b.begin(), b.end());

  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = diag[k];
    const double rowmax =
        std::max({std::abs(pivot), std::abs(sup1[k]), std::abs(sup2[k]), 1.0});
    if (std::abs(pivot) <= kPivotFactor * rowmax)
      throw SolveError(Errc::breakdown,
                       "pivot breakdown at row " + std::to_string(k + 1) +
                           " in banded elimination");
    if (k + 1 < n) {
      const double f = sub1[k + 1] / pivot;
      diag[k + 1] -= f * sup1[k];
      sup1[k + 1] -= f * sup2[k];
      rhs[k + 1] -= f * rhs[k];
    }
    if (k + 2 < n) {
      const double f = sub2[k + 2] / pivot;
      sub1[k + 2] -= f * sup1[k];
      diag[k + 2] -= f * sup2[k];
      rhs[k + 2] -= f * rhs[k];
    }
  }

  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    if (i + 1 < n) acc -= sup1[i] * x[i + 1];
    if (i + 2 < n) acc -= sup2[i] * x[i + 2];
    x[i] = acc / diag[i];
  }

  SolveReport report;
  report.x = std::move(x);
  report.method = Method::banded_lu;
  report.elapsed_seconds = seconds_since(start);
  report.relative_residual = relative_residual(a, report.x, b);
  report.unstable = report.relative_residual > kInstabilityThreshold;
  return report;
}

}  // namespace pentasolve
