#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "ffl/abelian_group.hpp"
#include "ffl/lattice.hpp"

namespace ffl {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kDefaultCvpBound = 10;
/// Log-space slack when comparing a density against the Minkowski-Hlawka bound.
inline constexpr double kMhTolerance = 1e-9;

/// Point of the span of A_{N-1} with exact coordinates num[i] / den.
struct RationalPoint {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;

  std::size_t size() const noexcept { return num.size(); }
  Rational coord(std::size_t i) const { return Rational(num[i], den); }
  Rational sum() const;
};

struct DensityReport {
  std::int64_t N = 0;
  std::int64_t k = 0;
  double log_density = 0;
  double log_mh_bound = 0;
  bool satisfies_mh = false;
};

struct CoveringReport {
  std::int64_t N = 0;
  Rational mu_A_sq;
  double lower = 0;
  double upper_new = 0;
  double upper_old = 0;
  std::optional<double> upper_boettcher;
};

struct CvpResult {
  LatticeVector vector;
  Rational distance_sq;
};

struct SampledCoveringReport {
  std::int64_t N = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  Rational deep_hole_distance_sq;
  bool deep_hole_exact = false;
  Rational max_distance_sq;
  double max_distance = 0;
  double lower = 0;
  double upper_new = 0;
  bool all_within_upper = false;
  bool max_at_least_lower = false;
};

/// Riemann zeta at integer k >= 2 to absolute error below 1e-13.
double zeta(std::int64_t k);

/// log of the packing density of L_P for |P| = N >= 4 (d = 2, det = N^{3/2}).
double packing_density_log(std::int64_t N);

/// log(zeta(k) / 2^{k-1}) for k = N - 1.
double mh_bound_log(std::int64_t N);

DensityReport density_report(std::int64_t N);
std::vector<DensityReport> mh_window_scan(std::int64_t n_min, std::int64_t n_max);

/// mu(A_{N-1})^2: N/4 for even N, (N - 1/N)/4 for odd N.
Rational covering_radius_an_sq(std::int64_t N);

/// Standard deep hole of A_{N-1}: ceil(N/2) entries 1/2 then floor(N/2)
/// entries -1/2, all shifted by -1/(2N) when N is odd.
RationalPoint deep_hole_an(std::int64_t N);

/// v + e_0 - e_j where P_j is the group-weighted sum of v (v itself when that
/// sum is the identity). Throws Errc::not_in_an unless sum v_i = 0.
LatticeVector retract(const AbelianGroup& g, const LatticeVector& v);

/// Closest lattice vector to target within squared radius cap, ties broken by
/// lexicographic order. Throws Errc::cvp_bound_exceeded when N > max_dimension,
/// Errc::no_point_in_radius when nothing lies within the cap, and
/// Errc::not_in_an when the target leaves the span.
CvpResult cvp(const AbelianGroup& g, const RationalPoint& target, Rational radius_sq_cap,
              std::size_t max_dimension = kDefaultCvpBound);

/// Smallest integer cap that is guaranteed to contain a lattice point:
/// ceil((mu(A_{N-1}) + sqrt 2)^2).
Rational default_cvp_cap(std::int64_t N);

CoveringReport covering_bounds(std::int64_t N, bool cyclic);

/// Runs cvp on the deep hole of A_{N-1} (trial 0) and on trials - 1
/// pseudorandom points: integer vectors uniform in [-3N, 3N]^N drawn from
/// std::mt19937_64(seed) as lo + raw % span, projected to sum zero and
/// scaled by 1/(2N).
SampledCoveringReport sampled_covering_check(const AbelianGroup& g, std::int64_t trials,
                                             std::uint64_t seed,
                                             std::optional<Rational> radius_sq_cap = std::nullopt,
                                             std::size_t max_dimension = kDefaultCvpBound);

/// The pseudorandom targets used by sampled_covering_check, trial 1 onwards.
std::vector<RationalPoint> sample_targets(std::int64_t N, std::int64_t count, std::uint64_t seed);

double to_double(const Rational& r) noexcept;

}  // namespace ffl
