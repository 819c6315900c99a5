#include "pentasolve/penta_matrix.hpp"

#include <cmath>
#include <string>

#include "pentasolve/errors.hpp"

namespace pentasolve {

PentaToeplitz::PentaToeplitz(std::size_t n, double sigma, double lambda,
                             double alpha, double beta, double gamma)
    : n_(n),
      sigma_(sigma),
      lambda_(lambda),
      alpha_(alpha),
      beta_(beta),
      gamma_(gamma) {
  if (n == 0)
    throw SolveError(Errc::invalid_value, "matrix dimension must be positive");
  for (double v : {sigma, lambda, alpha, beta, gamma})
    if (!std::isfinite(v))
      throw SolveError(Errc::invalid_value, "band values must be finite");
}

std::vector<double> matvec(const PentaToeplitz& a, std::span<const double> x) {
  const std::size_t n = a.n();
  if (x.size() != n)
    throw SolveError(Errc::dimension_mismatch,
                     "matvec: vector length " + std::to_string(x.size()) +
                         " does not match dimension " + std::to_string(n));
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    if (i >= 2) acc += a.sigma() * x[i - 2];
    if (i >= 1) acc += a.lambda() * x[i - 1];
    acc += a.alpha() * x[i];
    if (i + 1 < n) acc += a.beta() * x[i + 1];
    if (i + 2 < n) acc += a.gamma() * x[i + 2];
    y[i] = acc;
  }
  return y;
}

double relative_residual(const PentaToeplitz& a, std::span<const double> x,
                         std::span<const double> b) {
  const std::size_t n = a.n();
  if (x.size() != n || b.size() != n)
    throw SolveError(Errc::dimension_mismatch,
                     "relative_residual: vector lengths must equal " +
                         std::to_string(n));
  const std::vector<double> ax = matvec(a, x);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = b[i] - ax[i];
    num += d * d;
    den += b[i] * b[i];
  }
  if (den == 0.0)
    throw SolveError(Errc::undefined_metric,
                     "relative residual undefined: right-hand side is zero");
  return std::sqrt(num) / std::sqrt(den);
}

}  // namespace pentasolve
