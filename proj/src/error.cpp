#include "ffl/error.hpp"

namespace ffl {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_in_an: return "NotInAn";
    case Errc::bad_size: return "BadSize";
    case Errc::bad_shape: return "BadShape";
    case Errc::singular_curve: return "SingularCurve";
    case Errc::curve_too_large: return "CurveTooLarge";
    case Errc::point_not_on_curve: return "PointNotOnCurve";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::oracle_bound_exceeded: return "OracleBoundExceeded";
    case Errc::cvp_bound_exceeded: return "CvpBoundExceeded";
    case Errc::no_point_in_radius: return "NoPointInRadius";
  }
  return "Unknown";
}

}  // namespace ffl
