#pragma once

#include <string_view>
#include <vector>

namespace pentasolve {

enum class Method { fast, plu, banded_lu };

std::string_view method_name(Method m) noexcept;

/// Residual level above which a returned solution is flagged unreliable.
inline constexpr double kInstabilityThreshold = 1e-8;

struct SolveReport {
  std::vector<double> x;
  double relative_residual = 0.0;
  /// Wall time of the solve phase only; the residual check is excluded.
  double elapsed_seconds = 0.0;
  Method method = Method::fast;
  /// True iff relative_residual > kInstabilityThreshold.
  bool unstable = false;
};

}  // namespace pentasolve
