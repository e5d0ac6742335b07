#include "ffl/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "ffl/error.hpp"
#include "search.hpp"

namespace ffl {

Rational RationalPoint::sum() const {
  return Rational(std::accumulate(num.begin(), num.end(), std::int64_t{0}), den);
}

double to_double(const Rational& r) noexcept {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

double zeta(std::int64_t k) {
  if (k < 2) throw Error(Errc::invalid_argument, "zeta needs k >= 2");
  // sum_{j<M} j^-k, then the tail sum_{j>=M} j^-k by Euler-Maclaurin:
  // M^{1-k}/(k-1) + M^{-k}/2 + k M^{-k-1}/12 - k(k+1)(k+2) M^{-k-3}/720.
  constexpr int M = 64;
  const double kd = static_cast<double>(k);
  double head = 0;
  for (int j = M - 1; j >= 1; --j) head += std::pow(static_cast<double>(j), -kd);
  const double mk = std::pow(static_cast<double>(M), -kd);
  const double tail = mk * M / (kd - 1) + mk / 2 + kd * mk / M / 12 -
                      kd * (kd + 1) * (kd + 2) * mk / (static_cast<double>(M) * M * M) / 720;
  return head + tail;
}

double packing_density_log(std::int64_t N) {
  if (N < 4) throw Error(Errc::bad_size, "packing density formula needs N >= 4");
  // pi^{k/2} d^k / (2^k Gamma(k/2+1) det) with d = 2 and det = N^{3/2}.
  const double k = static_cast<double>(N - 1);
  return (k / 2) * std::log(std::numbers::pi) - std::lgamma(k / 2 + 1) -
         1.5 * std::log(static_cast<double>(N));
}

double mh_bound_log(std::int64_t N) {
  const std::int64_t k = N - 1;
  return std::log(zeta(k)) - static_cast<double>(k - 1) * std::numbers::ln2;
}

DensityReport density_report(std::int64_t N) {
  DensityReport r;
  r.N = N;
  r.k = N - 1;
  r.log_density = packing_density_log(N);
  r.log_mh_bound = mh_bound_log(N);
  r.satisfies_mh = r.log_density >= r.log_mh_bound - kMhTolerance;
  return r;
}

std::vector<DensityReport> mh_window_scan(std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 4 || n_max < n_min)
    throw Error(Errc::bad_size, "density scan needs 4 <= from <= to");
  std::vector<DensityReport> out;
  for (std::int64_t N = n_min; N <= n_max; ++N) out.push_back(density_report(N));
  return out;
}

Rational covering_radius_an_sq(std::int64_t N) {
  if (N < 2) throw Error(Errc::bad_size, "covering radius needs N >= 2");
  if (N % 2 == 0) return Rational(N, 4);
  return Rational(N * N - 1, 4 * N);
}

RationalPoint deep_hole_an(std::int64_t N) {
  if (N < 2) throw Error(Errc::bad_size, "deep hole needs N >= 2");
  const std::int64_t neg = N / 2;
  const std::int64_t pos = N - neg;
  RationalPoint w;
  if (N % 2 == 0) {
    w.den = 2;
    w.num.assign(static_cast<std::size_t>(pos), 1);
    w.num.resize(static_cast<std::size_t>(N), -1);
  } else {
    w.den = 2 * N;
    w.num.assign(static_cast<std::size_t>(pos), N - 1);
    w.num.resize(static_cast<std::size_t>(N), -N - 1);
  }
  return w;
}

LatticeVector retract(const AbelianGroup& g, const LatticeVector& v) {
  divisor_degree(v);  // throws unless in A_{N-1}
  const Lattice lattice(g);
  const GroupElement s = lattice.weighted_sum(v);
  if (s == g.identity()) return v;
  LatticeVector out = v;
  out[0] += 1;
  out[g.index(s)] -= 1;
  return out;
}

Rational default_cvp_cap(std::int64_t N) {
  const double r = std::sqrt(to_double(covering_radius_an_sq(N))) + std::numbers::sqrt2;
  return Rational(static_cast<std::int64_t>(std::ceil(r * r + 1e-9)));
}

CvpResult cvp(const AbelianGroup& g, const RationalPoint& target, Rational radius_sq_cap,
              std::size_t max_dimension) {
  const Lattice lattice(g);
  const std::size_t n = lattice.dimension();
  if (n > max_dimension)
    throw Error(Errc::cvp_bound_exceeded, "cvp limited to N <= " + std::to_string(max_dimension) +
                                              ", got " + std::to_string(n));
  if (target.size() != n) throw Error(Errc::length_mismatch, "target length != group order");
  if (target.den <= 0) throw Error(Errc::invalid_argument, "target denominator must be positive");
  if (target.sum().numerator() != 0) throw Error(Errc::not_in_an, "target coordinates must sum to zero");

  const std::int64_t den = target.den;
  // Scaled distance of a candidate: sum (den * x_i - num_i)^2 = den^2 |x - t|^2.
  auto scaled_distance = [&](const LatticeVector& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t d = den * x[i] - target.num[i];
      s += d * d;
    }
    return s;
  };
  const Rational cap_scaled = radius_sq_cap * Rational(den * den);
  detail::SearchBound bound{
      cap_scaled.numerator() / cap_scaled.denominator(), true};

  // Seed the bound with the retraction of a rounded point; the search still
  // visits everything at that distance, so the lexicographic tie-break holds.
  LatticeVector seed(n, 0);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    seed[i] = detail::floor_div(2 * target.num[i] + den, 2 * den);
    acc += seed[i];
  }
  seed[n - 1] = -acc;
  seed = retract(g, seed);
  bound.value = std::min(bound.value, scaled_distance(seed));

  std::optional<LatticeVector> best;
  std::int64_t best_d = 0;
  detail::search_sum_zero(target.num, den, bound,
                          [&](const std::vector<std::int64_t>& x, std::int64_t d) {
                            if (!lattice.contains(x)) return;
                            if (!best || d < best_d) {
                              best = x;
                              best_d = d;
                              bound = {d, false};
                            }
                          });
  if (!best)
    throw Error(Errc::no_point_in_radius, "no lattice point within the requested radius");
  return {*best, Rational(best_d, den * den)};
}

CoveringReport covering_bounds(std::int64_t N, bool cyclic) {
  CoveringReport r;
  r.N = N;
  r.mu_A_sq = covering_radius_an_sq(N);
  const double n = static_cast<double>(N);
  r.lower = std::sqrt(to_double(r.mu_A_sq));
  r.upper_new = r.lower + std::numbers::sqrt2;
  r.upper_old = 0.5 * (std::sqrt(n * n + 4 * n + 8) + std::sqrt(n));
  if (cyclic && N >= 3)
    r.upper_boettcher = 0.5 * std::sqrt(n + 4 * std::log(n - 2) + 6 - 4 * std::numbers::ln2 +
                                        10 / (n - 1));
  return r;
}

std::vector<RationalPoint> sample_targets(std::int64_t N, std::int64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t lo = -3 * N;
  const auto span = static_cast<std::uint64_t>(6 * N + 1);
  std::vector<RationalPoint> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t t = 0; t < count; ++t) {
    std::vector<std::int64_t> u(static_cast<std::size_t>(N));
    for (auto& x : u) x = lo + static_cast<std::int64_t>(rng() % span);
    const std::int64_t s = std::accumulate(u.begin(), u.end(), std::int64_t{0});
    // (u - s/N) / (2N) = (N u - s) / (2 N^2)
    RationalPoint p;
    p.den = 2 * N * N;
    p.num.reserve(u.size());
    for (auto x : u) p.num.push_back(N * x - s);
    out.push_back(std::move(p));
  }
  return out;
}

SampledCoveringReport sampled_covering_check(const AbelianGroup& g, std::int64_t trials,
                                             std::uint64_t seed,
                                             std::optional<Rational> radius_sq_cap,
                                             std::size_t max_dimension) {
  const std::int64_t N = g.order();
  if (static_cast<std::size_t>(N) > max_dimension)
    throw Error(Errc::cvp_bound_exceeded, "covering check limited to N <= " +
                                              std::to_string(max_dimension));
  if (trials < 1) throw Error(Errc::invalid_argument, "need at least one trial");
  const Rational cap = radius_sq_cap.value_or(default_cvp_cap(N));
  const CoveringReport bounds = covering_bounds(N, g.is_cyclic());

  SampledCoveringReport r;
  r.N = N;
  r.trials = trials;
  r.seed = seed;
  r.lower = bounds.lower;
  r.upper_new = bounds.upper_new;
  r.deep_hole_distance_sq = cvp(g, deep_hole_an(N), cap, max_dimension).distance_sq;
  r.deep_hole_exact = r.deep_hole_distance_sq == bounds.mu_A_sq;
  r.max_distance_sq = r.deep_hole_distance_sq;
  r.all_within_upper = std::sqrt(to_double(r.deep_hole_distance_sq)) <= r.upper_new + 1e-9;
  for (const auto& t : sample_targets(N, trials - 1, seed)) {
    const Rational d = cvp(g, t, cap, max_dimension).distance_sq;
    if (d > r.max_distance_sq) r.max_distance_sq = d;
    if (std::sqrt(to_double(d)) > r.upper_new + 1e-9) r.all_within_upper = false;
  }
  r.max_distance = std::sqrt(to_double(r.max_distance_sq));
  r.max_at_least_lower = r.max_distance >= r.lower - 1e-9;
  return r;
}

}  // namespace ffl
