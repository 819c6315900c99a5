#include "pentasolve/fast_solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "pentasolve/errors.hpp"

namespace pentasolve {

namespace {
constexpr double kBreakdownFactor = 64.0 * std::numeric_limits<double>::epsilon();
}

UpperBandToeplitz::UpperBandToeplitz(std::size_t m, double sigma,
                                     double lambda, double alpha, double beta,
                                     double gamma)
    : m_(m),
      sigma_(sigma),
      lambda_(lambda),
      alpha_(alpha),
      beta_(beta),
      gamma_(gamma) {
  if (m == 0)
    throw SolveError(Errc::invalid_value, "block dimension must be positive");
  if (sigma == 0.0)
    throw SolveError(Errc::singular_block, "pivot breakdown at A11 diagonal");
  sigma1_ = 1.0 / sigma;
  lambda1_ = lambda / sigma;
  alpha1_ = alpha / sigma;
  beta1_ = beta / sigma;
  gamma1_ = gamma / sigma;
}

PartitionedSystem partition(const PentaToeplitz& a, std::span<const double> b) {
  const std::size_t n = a.n();
  if (b.size() != n)
    throw SolveError(Errc::dimension_mismatch,
                     "partition: right-hand side length " +
                         std::to_string(b.size()) +
                         " does not match dimension " + std::to_string(n));
  if (n < 6)
    throw SolveError(Errc::unsupported_size,
                     "fast solver requires n >= 6, got n = " +
                         std::to_string(n));
  const std::size_t m = n - 2;
  PartitionedSystem ps{
      UpperBandToeplitz(m, a.sigma(), a.lambda(), a.alpha(), a.beta(),
                        a.gamma()),
      std::vector<double>(m, 0.0),  // p
      std::vector<double>(m, 0.0),  // r
      std::vector<double>(m, 0.0),  // w
      std::vector<double>(m, 0.0),  // s
      std::vector<double>(b.begin() + 2, b.end()),
      b[0],
      b[1]};
  // Row i of the rotated matrix is row i+2 of A, so its band runs from
  // column i; the pieces crossing columns n-1, n form p and r.
  ps.p[m - 4] = a.gamma();
  ps.p[m - 3] = a.beta();
  ps.p[m - 2] = a.alpha();
  ps.p[m - 1] = a.lambda();
  ps.r[m - 3] = a.gamma();
  ps.r[m - 2] = a.beta();
  ps.r[m - 1] = a.alpha();
  // Rows 1 and 2 of A land at the bottom; n >= 6 keeps them clear of the
  // last two columns.
  ps.w[0] = a.alpha();
  ps.w[1] = a.beta();
  ps.w[2] = a.gamma();
  ps.s[0] = a.lambda();
  ps.s[1] = a.alpha();
  ps.s[2] = a.beta();
  ps.s[3] = a.gamma();
  return ps;
}

std::vector<double> tri_solve(const UpperBandToeplitz& block,
                              std::span<const double> c) {
  const std::size_t m = block.m();
  if (c.size() != m)
    throw SolveError(Errc::dimension_mismatch,
                     "tri_solve: right-hand side length " +
                         std::to_string(c.size()) +
                         " does not match block dimension " +
                         std::to_string(m));
  if (m < 4)
    throw SolveError(Errc::unsupported_size,
                     "back substitution requires block dimension >= 4, got " +
                         std::to_string(m));
  const double s1 = block.sigma1();
  const double l1 = block.lambda1();
  const double a1 = block.alpha1();
  const double b1 = block.beta1();
  const double g1 = block.gamma1();
  std::vector<double> y(m);
  y[m - 1] = s1 * c[m - 1];
  y[m - 2] = s1 * c[m - 2] - l1 * y[m - 1];
  y[m - 3] = s1 * c[m - 3] - l1 * y[m - 2] - a1 * y[m - 1];
  y[m - 4] = s1 * c[m - 4] - l1 * y[m - 3] - a1 * y[m - 2] - b1 * y[m - 1];
  for (std::size_t k = m - 4; k-- > 0;)
    y[k] = s1 * c[k] - l1 * y[k + 1] - a1 * y[k + 2] - b1 * y[k + 3] -
           g1 * y[k + 4];
  return y;
}

double prefix_dot(std::span<const double> a, std::span<const double> b,
                  std::size_t count) noexcept {
  assert(count <= a.size() && count <= b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += a[i] * b[i];
  return acc;
}

CornerSolution corner_solve(double wv, double wz, double sv, double sz,
                            double rhs1, double rhs2) {
  // Thresholds are relative to the largest entry: the border products decay
  // geometrically with n whenever the band recurrence is contractive, so an
  // absolute floor would reject systems that are merely small in scale. An
  // all-zero (or subnormal) corner still reports breakdown.
  double scale = std::max(std::max(std::abs(wv), std::abs(wz)),
                          std::max(std::abs(sv), std::abs(sz)));
  if (!(scale >= std::numeric_limits<double>::min())) scale = 1.0;
  if (std::abs(wv) <= kBreakdownFactor * scale)
    throw SolveError(Errc::breakdown,
                     "corner system breakdown: |w'v| negligible");
  const double t = sv / wv;
  const double denom = sz - t * wz;
  if (std::abs(denom) <= kBreakdownFactor * scale)
    throw SolveError(Errc::breakdown,
                     "corner system breakdown: Schur denominator negligible");
  const double x_n = (rhs2 - t * rhs1) / denom;
  const double x_nm1 = (rhs1 - wz * x_n) / wv;
  return {x_nm1, x_n};
}

std::vector<double> assemble(std::span<const double> u,
                             std::span<const double> v,
                             std::span<const double> z, double x_nm1,
                             double x_n) {
  const std::size_t m = u.size();
  if (v.size() != m || z.size() != m)
    throw SolveError(Errc::dimension_mismatch,
                     "assemble: u, v, z must have equal lengths");
  std::vector<double> x(m + 2);
  for (std::size_t i = 0; i < m; ++i)
    x[i] = u[i] - x_nm1 * v[i] - x_n * z[i];
  x[m] = x_nm1;
  x[m + 1] = x_n;
  return x;
}

SolveReport solve_fast(const PentaToeplitz& a, std::span<const double> b) {
  const auto start = std::chrono::steady_clock::now();
  const PartitionedSystem ps = partition(a, b);
  const std::vector<double> u = tri_solve(ps.block, ps.b3);
  const std::vector<double> v = tri_solve(ps.block, ps.p);
  const std::vector<double> z = tri_solve(ps.block, ps.r);
  // w and s keep their nonzeros in the first three and four slots, so each
  // border product is O(1).
  const double wu = prefix_dot(ps.w, u, 3);
  const double wv = prefix_dot(ps.w, v, 3);
  const double wz = prefix_dot(ps.w, z, 3);
  const double su = prefix_dot(ps.s, u, 4);
  const double sv = prefix_dot(ps.s, v, 4);
  const double sz = prefix_dot(ps.s, z, 4);
  const CornerSolution corner =
      corner_solve(wv, wz, sv, sz, wu - ps.b1, su - ps.b2);
  SolveReport report;
  report.x = assemble(u, v, z, corner.x_nm1, corner.x_n);
  report.method = Method::fast;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report.relative_residual = relative_residual(a, report.x, b);
  report.unstable = report.relative_residual > kInstabilityThreshold;
  return report;
}

}  // namespace pentasolve
