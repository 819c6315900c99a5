#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pentasolve/penta_matrix.hpp"
#include "pentasolve/solve_report.hpp"

namespace pentasolve {

/// Row-major dense square matrix; backs the pivoted reference solver.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

  std::size_t n() const noexcept { return n_; }

  double& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  std::span<const double> entries() const noexcept { return entries_; }

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Dense realization of the five bands. Refuses n > 4096 (Errc::size_limit).
DenseMatrix densify(const PentaToeplitz& a);

/// Gaussian elimination with partial (row) pivoting plus forward/back
/// substitution; O(n^3). Throws Errc::singular_matrix when a pivot column
/// is zero to working precision.
SolveReport plu_solve(const DenseMatrix& m, std::span<const double> b);

/// Unpivoted elimination confined to the five diagonals; fill never leaves
/// the band. O(n). Throws Errc::breakdown on a negligible pivot.
SolveReport banded_lu_solve(const PentaToeplitz& a, std::span<const double> b);

}  // namespace pentasolve
