#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ffl/abelian_group.hpp"

namespace ffl {

inline constexpr std::int64_t kDefaultMaxPrime = 10000;

/// Short Weierstrass curve y^2 = x^3 + a x + b over F_p, p > 3 prime.
struct Curve {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// Affine point, or the point at infinity when `infinity` is set.
struct CurvePoint {
  bool infinity = true;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static CurvePoint at_infinity() noexcept { return {}; }
  static CurvePoint affine(std::int64_t x, std::int64_t y) noexcept { return {false, x, y}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

/// Points of E(F_p) together with an isomorphism onto Z/n1 x Z/n2 (n1 | n2):
/// the point labelled (a, b) is a*g1 + b*g2.
struct CurveGroup {
  Curve curve;
  /// Ordered by label index, so points[structure.index(label)] has that label.
  std::vector<CurvePoint> points;
  AbelianGroup structure = make_group(1, 1);
  CurvePoint g1;
  CurvePoint g2;

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(points.size()); }
  /// Throws Errc::point_not_on_curve for points outside the group.
  GroupElement label(const CurvePoint& p) const;
  const CurvePoint& point(GroupElement label) const { return points[structure.index(label)]; }
};

/// Validates p (prime, > 3, <= max_prime) and nonsingularity. Throws
/// Errc::invalid_argument, Errc::curve_too_large or Errc::singular_curve.
Curve make_curve(std::int64_t p, std::int64_t a, std::int64_t b,
                 std::int64_t max_prime = kDefaultMaxPrime);

/// Parses "p,a,b".
Curve parse_curve_spec(std::string_view spec, std::int64_t max_prime = kDefaultMaxPrime);

bool is_prime(std::int64_t v) noexcept;
bool on_curve(const Curve& c, const CurvePoint& p) noexcept;
CurvePoint point_neg(const Curve& c, const CurvePoint& p) noexcept;
CurvePoint point_add(const Curve& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_mul(const Curve& c, std::int64_t k, const CurvePoint& p);

/// O followed by the affine points in (x, y) order.
std::vector<CurvePoint> curve_points(const Curve& c, std::int64_t max_prime = kDefaultMaxPrime);

/// Structure of a finite group of curve points (the full list or a subgroup).
/// n2 is the exponent, g2 a point of order n2, and g1 a point of order
/// n1 = |points| / n2 with <g1> and <g2> meeting only in O. Throws
/// Errc::internal_inconsistency if no such pair exists.
CurveGroup group_structure(const std::vector<CurvePoint>& points, const Curve& c);

/// Subgroup generated by gens, with its own structure and labelling.
CurveGroup subgroup(const CurveGroup& cg, const std::vector<CurvePoint>& gens);

}  // namespace ffl
