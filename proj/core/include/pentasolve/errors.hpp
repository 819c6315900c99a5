#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentasolve {

/// Classifies numerical failures so callers can map them to exit codes or
/// fall back to another method.
enum class Errc {
  unsupported_size,    ///< system too small for the requested method
  singular_block,      ///< zero diagonal in the eliminated triangular block
  breakdown,           ///< negligible pivot or corner denominator
  singular_matrix,     ///< pivoted elimination found a zero column
  undefined_metric,    ///< residual metric undefined (zero right-hand side)
  dimension_mismatch,  ///< vector length does not match the matrix
  invalid_value,       ///< non-finite or out-of-range input
  size_limit,          ///< dense path refused the dimension
};

std::string_view errc_name(Errc code) noexcept;

/// Thrown by solver entry points on failure; a solver never returns a
/// partially filled report.
class SolveError : public std::runtime_error {
 public:
  SolveError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// File and stream failures from the vector I/O helpers.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pentasolve
