#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ffl/geometry.hpp"
#include "oracle.hpp"

using namespace ffl;

namespace {

// Exact nearest lattice point by scanning a box; ties go to the
// lexicographically smallest vector.
CvpResult brute_cvp(const AbelianGroup& g, const RationalPoint& t, std::int64_t box) {
  auto vs = oracle::box_search(g, box, 1 << 30);
  vs.insert(vs.begin(), LatticeVector(t.size(), 0));
  std::sort(vs.begin(), vs.end());
  CvpResult best{{}, Rational(-1)};
  for (const auto& v : vs) {
    Rational d(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational e = Rational(v[i]) - t.coord(i);
      d += e * e;
    }
    if (best.distance_sq < Rational(0) || d < best.distance_sq) best = {v, d};
  }
  return best;
}

}  // namespace

TEST(Density, Zeta) {
  EXPECT_NEAR(zeta(2), std::numbers::pi * std::numbers::pi / 6, 1e-13);
  EXPECT_NEAR(zeta(3), 1.2020569031595942, 1e-13);
  EXPECT_NEAR(zeta(4), std::pow(std::numbers::pi, 4) / 90, 1e-13);
  EXPECT_NEAR(zeta(40), 1 + std::pow(2.0, -40), 1e-13);
  EXPECT_FFL_ERROR(zeta(1), Errc::invalid_argument);
}

TEST(Density, PackingDensityFormula) {
  // N = 4: k = 3, ball volume 4pi/3, radius 1, covolume 8.
  EXPECT_NEAR(std::exp(packing_density_log(4)), (4 * std::numbers::pi / 3) / 8, 1e-12);
  EXPECT_FFL_ERROR(packing_density_log(3), Errc::bad_size);
}

TEST(Density, DecreasingInN) {
  for (std::int64_t N = 4; N < 100; ++N)
    EXPECT_LT(packing_density_log(N + 1), packing_density_log(N)) << N;
}

TEST(Density, MinkowskiHlawkaWindow) {
  EXPECT_TRUE(density_report(10).satisfies_mh);
  const auto at47 = density_report(47);
  const auto at48 = density_report(48);
  EXPECT_TRUE(at47.satisfies_mh);
  EXPECT_FALSE(at48.satisfies_mh);
  EXPECT_GT(at47.log_density - at47.log_mh_bound, kMhTolerance);
  EXPECT_GT(at48.log_mh_bound - at48.log_density, kMhTolerance);
  EXPECT_NEAR(at47.log_density - at47.log_mh_bound, 0.1385, 1e-4);
  EXPECT_NEAR(at48.log_density - at48.log_mh_bound, -0.2114, 1e-4);
  const auto rows = mh_window_scan(4, 60);
  ASSERT_EQ(rows.size(), 57u);
  for (const auto& r : rows) EXPECT_EQ(r.satisfies_mh, r.N <= 47) << r.N;
  EXPECT_FFL_ERROR(mh_window_scan(3, 10), Errc::bad_size);
}

TEST(Covering, RadiusOfAn) {
  EXPECT_EQ(covering_radius_an_sq(4), Rational(1));
  EXPECT_EQ(covering_radius_an_sq(5), Rational(6, 5));
  EXPECT_EQ(covering_radius_an_sq(6), Rational(3, 2));
  EXPECT_EQ(covering_radius_an_sq(2), Rational(1, 2));
  EXPECT_FFL_ERROR(covering_radius_an_sq(1), Errc::bad_size);
}

TEST(Covering, DeepHoles) {
  for (std::int64_t N = 2; N <= 30; ++N) {
    const auto w = deep_hole_an(N);
    ASSERT_EQ(static_cast<std::int64_t>(w.size()), N);
    EXPECT_EQ(w.sum(), Rational(0));
    Rational norm(0);
    for (std::size_t i = 0; i < w.size(); ++i) norm += w.coord(i) * w.coord(i);
    EXPECT_EQ(norm, covering_radius_an_sq(N)) << N;
  }
  const auto w5 = deep_hole_an(5);
  EXPECT_EQ(w5.coord(0), Rational(2, 5));
  EXPECT_EQ(w5.coord(4), Rational(-3, 5));
}

TEST(Covering, Retract) {
  const auto g = make_group(1, 5);
  EXPECT_EQ(retract(g, {1, -1, 0, 0, 0}), (LatticeVector{2, -1, 0, 0, -1}));
  EXPECT_EQ(retract(g, {1, -1, -1, 1, 0}), (LatticeVector{1, -1, -1, 1, 0}));
  EXPECT_FFL_ERROR(retract(g, {1, 0, 0, 0, 0}), Errc::not_in_an);
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b) {
      const auto r = retract(make_group(2, 4), {a, b, 0, 0, 0, 0, 0, -a - b});
      EXPECT_TRUE(oracle::in_lattice(make_group(2, 4), r));
    }
}

TEST(Covering, CvpAtDeepHole) {
  EXPECT_EQ(cvp(make_group(1, 4), deep_hole_an(4), default_cvp_cap(4)).distance_sq, Rational(1));
  EXPECT_EQ(cvp(make_group(1, 5), deep_hole_an(5), default_cvp_cap(5)).distance_sq,
            Rational(6, 5));
}

TEST(Covering, CvpMatchesBruteForce) {
  for (auto [m, n] : {std::pair{1, 4}, {2, 2}, {1, 5}}) {
    const auto g = make_group(m, n);
    const std::int64_t N = g.order();
    auto targets = sample_targets(N, 25, 3);
    targets.push_back(deep_hole_an(N));
    for (const auto& t : targets) {
      const auto got = cvp(g, t, default_cvp_cap(N));
      const auto want = brute_cvp(g, t, 4);
      EXPECT_EQ(got.distance_sq, want.distance_sq) << g.spec();
      EXPECT_EQ(got.vector, want.vector) << g.spec();
    }
  }
}

TEST(Covering, CvpErrors) {
  const auto g = make_group(1, 5);
  EXPECT_FFL_ERROR(cvp(g, {{1, 0, 0, 0, 0}, 1}, Rational(4)), Errc::not_in_an);
  EXPECT_FFL_ERROR(cvp(g, {{1, -1}, 1}, Rational(4)), Errc::length_mismatch);
  EXPECT_FFL_ERROR(cvp(g, deep_hole_an(5), Rational(1, 2)), Errc::no_point_in_radius);
  EXPECT_FFL_ERROR(cvp(make_group(1, 11), deep_hole_an(11), Rational(10)),
                   Errc::cvp_bound_exceeded);
}

TEST(Covering, Bounds) {
  const auto b4 = covering_bounds(4, true);
  EXPECT_NEAR(b4.upper_new, 2.41421, 1e-5);
  EXPECT_NEAR(b4.upper_old, 4.16228, 1e-5);
  EXPECT_NEAR(b4.lower, 1.0, 1e-15);
  ASSERT_TRUE(b4.upper_boettcher.has_value());
  EXPECT_FALSE(covering_bounds(4, false).upper_boettcher.has_value());
  EXPECT_FALSE(covering_bounds(2, true).upper_boettcher.has_value());
  for (std::int64_t N = 2; N <= 100; ++N) {
    const auto b = covering_bounds(N, true);
    EXPECT_LE(b.lower, b.upper_new);
    EXPECT_LT(b.upper_new, b.upper_old);
    EXPECT_NEAR(b.upper_new - b.lower, std::numbers::sqrt2, 1e-12);
  }
}

TEST(Covering, SamplingIsDeterministic) {
  const auto a = sample_targets(6, 10, 42);
  const auto b = sample_targets(6, 10, 42);
  const auto c = sample_targets(6, 10, 43);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].num, b[i].num);
    EXPECT_EQ(a[i].den, 72);
    EXPECT_EQ(a[i].sum(), Rational(0));
  }
  EXPECT_NE(a[0].num, c[0].num);

  const auto g = make_group(1, 6);
  const auto r1 = sampled_covering_check(g, 40, 9);
  const auto r2 = sampled_covering_check(g, 40, 9);
  EXPECT_EQ(r1.max_distance_sq, r2.max_distance_sq);
  EXPECT_TRUE(r1.deep_hole_exact);
  EXPECT_TRUE(r1.all_within_upper);
  EXPECT_TRUE(r1.max_at_least_lower);
  EXPECT_FFL_ERROR(sampled_covering_check(g, 0, 1), Errc::invalid_argument);
}
