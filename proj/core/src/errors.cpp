#include "pentasolve/errors.hpp"

namespace pentasolve {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_size:
      return "unsupported_size";
    case Errc::singular_block:
      return "singular_block";
    case Errc::breakdown:
      return "breakdown";
    case Errc::singular_matrix:
      return "singular_matrix";
    case Errc::undefined_metric:
      return "undefined_metric";
    case Errc::dimension_mismatch:
      return "dimension_mismatch";
    case Errc::invalid_value:
      return "invalid_value";
    case Errc::size_limit:
      return "size_limit";
  }
  return "unknown";
}

}  // namespace pentasolve
