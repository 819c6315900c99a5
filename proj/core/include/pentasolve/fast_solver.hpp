#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pentasolve/penta_matrix.hpp"
#include "pentasolve/solve_report.hpp"

namespace pentasolve {

/// Upper-triangular banded Toeplitz block: row j carries
/// (sigma, lambda, alpha, beta, gamma) in columns j..j+4, truncated at the
/// right edge. Construction divides every band by sigma once so back
/// substitution runs division-free.
class UpperBandToeplitz {
 public:
  /// Requires sigma != 0; throws Errc::singular_block otherwise.
  UpperBandToeplitz(std::size_t m, double sigma, double lambda, double alpha,
                    double beta, double gamma);

  std::size_t m() const noexcept { return m_; }
  double sigma() const noexcept { return sigma_; }
  double lambda() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

  // Normalized coefficients: sigma1 = 1/sigma, others are band/sigma.
  double sigma1() const noexcept { return sigma1_; }
  double lambda1() const noexcept { return lambda1_; }
  double alpha1() const noexcept { return alpha1_; }
  double beta1() const noexcept { return beta1_; }
  double gamma1() const noexcept { return gamma1_; }

 private:
  std::size_t m_;
  double sigma_, lambda_, alpha_, beta_, gamma_;
  double sigma1_, lambda1_, alpha1_, beta1_, gamma1_;
};

/// Row-rotated view of a pentadiagonal Toeplitz system. Moving rows 1 and 2
/// of A below rows 3..n yields
///
///   [ A11 | p  r ]      with A11 the (n-2)x(n-2) upper band block,
///   [ w'  | 0  0 ]      p, r the last two columns over the block rows,
///   [ s'  | 0  0 ]      w', s' the first two rows over the block columns,
///
/// and the right-hand side rotates into (b3, b1, b2). Requires n >= 6 so the
/// first two rows of A have no entries in columns n-1, n.
struct PartitionedSystem {
  UpperBandToeplitz block;
  std::vector<double> p;   // zero except (gamma, beta, alpha, lambda) at the tail
  std::vector<double> r;   // zero except (gamma, beta, alpha) at the tail
  std::vector<double> w;   // (alpha, beta, gamma) then zeros
  std::vector<double> s;   // (lambda, alpha, beta, gamma) then zeros
  std::vector<double> b3;  // entries 3..n of b
  double b1;               // entry 1 of b
  double b2;               // entry 2 of b
};

PartitionedSystem partition(const PentaToeplitz& a, std::span<const double> b);

/// Solutions of the three block systems A11 u = b3, A11 v = p, A11 z = r.
struct IntermediateSolves {
  std::vector<double> u, v, z;
};

/// Back substitution specialized to the Toeplitz band: an explicit four-term
/// prologue for y_m .. y_{m-3}, then
///   y_k = sigma1 c_k - lambda1 y_{k+1} - alpha1 y_{k+2}
///                    - beta1 y_{k+3} - gamma1 y_{k+4}
/// for k = m-4 .. 1. Requires m >= 4. O(m) time, O(1) space beyond output.
std::vector<double> tri_solve(const UpperBandToeplitz& block,
                              std::span<const double> c);

/// Dot product of the first `count` entries, summed in ascending index
/// order. The border vectors keep all nonzeros inside that prefix, so the
/// result matches a full-length ascending dot product exactly.
double prefix_dot(std::span<const double> a, std::span<const double> b,
                  std::size_t count) noexcept;

struct CornerSolution {
  double x_nm1;
  double x_n;
};

/// Solves the eliminated 2x2 corner system
///   [ wv  wz ] [x_{n-1}]   [rhs1]
///   [ sv  sz ] [x_n    ] = [rhs2]
/// with x_n first by Schur elimination of the first row, then
/// x_{n-1} = (rhs1 - wz x_n) / wv. Declares breakdown when |wv| or the
/// Schur denominator is negligible relative to the largest entry.
CornerSolution corner_solve(double wv, double wz, double sv, double sz,
                            double rhs1, double rhs2);

/// x = (u - x_{n-1} v - x_n z, x_{n-1}, x_n); inputs all length n-2.
std::vector<double> assemble(std::span<const double> u,
                             std::span<const double> v,
                             std::span<const double> z, double x_nm1,
                             double x_n);

/// O(n) direct solve of A x = b: partition, three banded back
/// substitutions for u, v, z, six O(1) border dot products, the 2x2 corner
/// solve, and assembly. Requires n >= 6 and sigma != 0; propagates
/// breakdown from the corner system. The report carries the recomputed
/// relative residual and the instability flag.
SolveReport solve_fast(const PentaToeplitz& a, std::span<const double> b);

}  // namespace pentasolve
