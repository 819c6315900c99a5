#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pentasolve {

/// Pentadiagonal Toeplitz matrix, stored as its five band values.
///
/// Entry (i, j) of the dense realization equals
///   sigma  for j = i-2,    lambda for j = i-1,    alpha for j = i,
///   beta   for j = i+1,    gamma  for j = i+2,    0 otherwise.
class PentaToeplitz {
 public:
  /// Rejects n = 0 and non-finite band values.
  PentaToeplitz(std::size_t n, double sigma, double lambda, double alpha,
                double beta, double gamma);

  std::size_t n() const noexcept { return n_; }
  double sigma() const noexcept { return sigma_; }
  double lambda() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

 private:
  std::size_t n_;
  double sigma_;   // second subdiagonal
  double lambda_;  // first subdiagonal
  double alpha_;   // main diagonal
  double beta_;    // first superdiagonal
  double gamma_;   // second superdiagonal
};

/// y = A x without forming A. Terms are accumulated in band order
/// sigma, lambda, alpha, beta, gamma with out-of-range ones dropped. O(n).
std::vector<double> matvec(const PentaToeplitz& a, std::span<const double> x);

/// ||b - A x||_2 / ||b||_2. Throws Errc::undefined_metric when b = 0.
double relative_residual(const PentaToeplitz& a, std::span<const double> x,
                         std::span<const double> b);

}  // namespace pentasolve
