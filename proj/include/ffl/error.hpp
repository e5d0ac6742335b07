#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffl {

enum class Errc {
  invalid_argument,
  length_mismatch,
  not_in_an,
  bad_size,
  bad_shape,
  singular_curve,
  curve_too_large,
  point_not_on_curve,
  internal_inconsistency,
  oracle_bound_exceeded,
  cvp_bound_exceeded,
  no_point_in_radius,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ffl
