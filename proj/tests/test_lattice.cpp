#include <gtest/gtest.h>

#include <set>

#include "ffl/basis.hpp"
#include "ffl/lattice.hpp"
#include "oracle.hpp"

using namespace ffl;

namespace {

std::vector<AbelianGroup> small_groups(std::int64_t max_order) {
  std::vector<AbelianGroup> out;
  for (std::int64_t n = 2; n <= max_order; ++n)
    for (std::int64_t m = 1; m <= n && m * n <= max_order; ++m)
      if (n % m == 0) out.push_back(make_group(m, n));
  return out;
}

// e_P + e_Q - e_R - e_S over all distinct P, Q, R, S with P + Q = R + S.
std::set<LatticeVector> quadruple_vectors(const AbelianGroup& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::set<LatticeVector> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          if (std::set<std::size_t>{p, q, r, s}.size() != 4) continue;
          if (g.add(g.element_at(p), g.element_at(q)) != g.add(g.element_at(r), g.element_at(s)))
            continue;
          LatticeVector v(n, 0);
          v[p] += 1;
          v[q] += 1;
          v[r] -= 1;
          v[s] -= 1;
          out.insert(v);
        }
  return out;
}

}  // namespace

TEST(Lattice, Contains) {
  const Lattice l(make_group(1, 5));
  EXPECT_TRUE(l.contains(LatticeVector{1, -1, -1, 1, 0}));
  EXPECT_FALSE(l.contains(LatticeVector{1, 1, -1, -1, 0}));
  EXPECT_FALSE(l.contains(LatticeVector{1, 0, 0, 0, 0}));
  EXPECT_TRUE(l.contains(LatticeVector{5, 0, 0, 0, -5}) == oracle::in_lattice(l.group(), {5, 0, 0, 0, -5}));
  EXPECT_FFL_ERROR(l.contains(LatticeVector{1, -1}), Errc::length_mismatch);

  const Lattice k(make_group(2, 2));
  EXPECT_TRUE(k.contains(LatticeVector{1, 1, -1, -1}));
  EXPECT_TRUE(k.contains(LatticeVector{2, -2, 0, 0}));
}

TEST(Lattice, ContainsAgreesWithDefinition) {
  for (const auto& g : small_groups(8)) {
    const Lattice l(g);
    const auto n = static_cast<std::size_t>(g.order());
    LatticeVector v(n);
    for (int t = 0; t < 200; ++t) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        v[i] = (t * 7 + static_cast<std::int64_t>(i) * 13) % 5 - 2;
        s += v[i];
      }
      v[n - 1] = -s;
      EXPECT_EQ(l.contains(v), oracle::in_lattice(g, v));
    }
  }
}

TEST(Lattice, MinimalVectorsOfCyclicFive) {
  const Lattice l(make_group(1, 5));
  const auto mv = l.minimal_vectors();
  EXPECT_EQ(mv.size(), 10u);
  const auto quads = quadruple_vectors(l.group());
  EXPECT_EQ(std::set<LatticeVector>(mv.begin(), mv.end()), quads);
}

TEST(Lattice, MinimalVectorsMatchQuadruplesAndBoxSearch) {
  for (const auto& g : small_groups(8)) {
    if (g.order() < 4) continue;
    const Lattice l(g);
    const auto mv = l.minimal_vectors();
    EXPECT_TRUE(std::is_sorted(mv.begin(), mv.end()));
    const auto quads = quadruple_vectors(g);
    EXPECT_EQ(std::set<LatticeVector>(mv.begin(), mv.end()), quads) << g.spec();
    EXPECT_EQ(mv, oracle::box_search(g, 1, 4)) << g.spec();
    for (const auto& v : mv) {
      EXPECT_EQ(norm_sq(v), 4);
      LatticeVector neg = v;
      for (auto& x : neg) x = -x;
      EXPECT_TRUE(std::binary_search(mv.begin(), mv.end(), neg));
    }
  }
}

TEST(Lattice, MinimalDistance) {
  EXPECT_EQ(Lattice(make_group(1, 2)).minimal_distance_sq(), 8);
  EXPECT_EQ(Lattice(make_group(1, 3)).minimal_distance_sq(), 6);
  for (const auto& g : small_groups(7)) {
    const Lattice l(g);
    const auto d = l.minimal_distance_sq();
    EXPECT_EQ(d, g.order() >= 4 ? 4 : (g.order() == 3 ? 6 : 8));
    EXPECT_TRUE(oracle::box_search(g, 2, d - 1).empty()) << g.spec();
    EXPECT_FALSE(oracle::box_search(g, 2, d).empty()) << g.spec();
  }
  EXPECT_EQ(Lattice(make_group(1, 2)).minimal_vectors(),
            (std::vector<LatticeVector>{{-2, 2}, {2, -2}}));
  EXPECT_EQ(Lattice(make_group(1, 3)).minimal_vectors().size(), 6u);
  EXPECT_FFL_ERROR(Lattice(make_group(1, 1)).minimal_distance_sq(), Errc::bad_size);
}

TEST(Lattice, DeterminantAndIndex) {
  const Lattice l(make_group(3, 6));
  EXPECT_EQ(l.determinant_sq(), BigInt(5832));
  EXPECT_EQ(l.index_in_an(), 18);
  EXPECT_EQ(l.rank(), 17u);
  EXPECT_EQ(Lattice(make_group(8, 8)).determinant_sq(), BigInt(262144));
}

TEST(Lattice, KleinGramDeterminant) {
  const auto vs = klein_basis();
  const auto rep = gram_report(vs);
  EXPECT_EQ(rep.det, BigInt(64));
  EXPECT_EQ(oracle::leibniz_det(rep.gram), BigInt(64));
  for (const auto& v : vs) EXPECT_TRUE(Lattice(make_group(2, 2)).contains(v));
}

TEST(Lattice, SpanRank) {
  const Lattice c4(make_group(1, 4));
  EXPECT_EQ(c4.minimal_vectors().size(), 4u);
  EXPECT_EQ(span_rank(c4.minimal_vectors()), 2u);
  EXPECT_EQ(span_rank(cyclic_basis(7)), 6u);
  EXPECT_EQ(span_rank({{1, -1, 0}, {2, -2, 0}}), 1u);
  EXPECT_EQ(span_rank({}), 0u);
  EXPECT_FFL_ERROR(span_rank({{1, -1}, {1}}), Errc::length_mismatch);
}

TEST(Lattice, GeneratedIndex) {
  EXPECT_EQ(generated_index_in_an(cyclic_basis(6)), BigInt(6));
  EXPECT_EQ(generated_index_in_an(Lattice(make_group(1, 4)).minimal_vectors()), BigInt(0));
  EXPECT_EQ(generated_index_in_an({{1, -1, 0}, {0, 1, -1}}), BigInt(1));
  EXPECT_EQ(generated_index_in_an({{2, -2, 0}, {0, 1, -1}}), BigInt(2));
  EXPECT_FFL_ERROR(generated_index_in_an({{1, 0, 0}}), Errc::not_in_an);
}

TEST(Lattice, SvpOracle) {
  const Lattice l(make_group(1, 6));
  EXPECT_EQ(l.svp_oracle(4), l.minimal_vectors());
  EXPECT_TRUE(l.svp_oracle(3).empty());
  EXPECT_EQ(l.svp_oracle(6), oracle::box_search(l.group(), 2, 6));
  EXPECT_EQ(Lattice(make_group(1, 3)).svp_oracle(6), Lattice(make_group(1, 3)).minimal_vectors());
  EXPECT_FFL_ERROR(Lattice(make_group(1, 13)).svp_oracle(4), Errc::oracle_bound_exceeded);
  EXPECT_NO_THROW(Lattice(make_group(1, 13)).svp_oracle(4, 13));
}

TEST(Lattice, VectorHelpers) {
  EXPECT_EQ(divisor_degree(LatticeVector{1, 1, -1, -1}), 2);
  EXPECT_EQ(divisor_degree(LatticeVector{0, 0}), 0);
  EXPECT_FFL_ERROR(divisor_degree(LatticeVector{1, 0}), Errc::not_in_an);
  EXPECT_EQ(norm_sq(LatticeVector{2, -1, -1}), 6);
  EXPECT_EQ(dot(LatticeVector{1, 2}, LatticeVector{3, -1}), 1);
  EXPECT_FFL_ERROR(dot(LatticeVector{1}, LatticeVector{1, 2}), Errc::length_mismatch);
  EXPECT_EQ(format_vector(LatticeVector{1, 1, -1, -1}), "1,1,-1,-1");
  EXPECT_EQ(parse_vector(" 1, -2,1 "), (LatticeVector{1, -2, 1}));
  EXPECT_FFL_ERROR(parse_vector("1,x"), Errc::invalid_argument);
}

TEST(Exact, BareissMatchesLeibniz) {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((state >> 33) % 11) - 5;
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      IntMatrix a(n, std::vector<std::int64_t>(n));
      for (auto& row : a)
        for (auto& x : row) x = next();
      if (t % 5 == 0 && n > 1) a[n - 1] = a[0];
      EXPECT_EQ(bareiss_determinant(a), oracle::leibniz_det(a));
    }
  }
  EXPECT_EQ(bareiss_determinant({{0, 1}, {1, 0}}), BigInt(-1));
}

TEST(Exact, RankAndHnf) {
  EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), 2u);
  EXPECT_EQ(rank({}), 0u);
  const auto h = hermite_normal_form({{2, 4}, {3, 7}, {5, 11}});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0][0] * h[1][1], BigInt(2));
  EXPECT_EQ(h[1][0], BigInt(0));
  EXPECT_GT(h[0][0], 0);
  EXPECT_GT(h[1][1], 0);
  EXPECT_GE(h[0][1], 0);
  EXPECT_LT(h[0][1], h[1][1]);
}
