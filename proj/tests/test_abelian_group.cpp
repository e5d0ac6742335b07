#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "ffl/abelian_group.hpp"
#include "ffl/error.hpp"

using namespace ffl;

namespace {

std::int64_t order_by_addition(const AbelianGroup& g, GroupElement x) {
  GroupElement acc = x;
  std::int64_t k = 1;
  while (acc != g.identity()) {
    acc = g.add(acc, x);
    ++k;
  }
  return k;
}

}  // namespace

TEST(AbelianGroup, CanonicalForm) {
  const auto g = make_group(4, 6);
  EXPECT_EQ(g.m(), 2);
  EXPECT_EQ(g.n(), 12);
  EXPECT_EQ(make_group(6, 4), g);
  EXPECT_EQ(make_group(3, 5).m(), 1);
  EXPECT_EQ(make_group(3, 5).n(), 15);
  EXPECT_TRUE(make_group(3, 5).is_cyclic());
  EXPECT_EQ(make_group(1, 1).order(), 1);
  EXPECT_EQ(make_group(3, 3).spec(), "3 x 3");
}

TEST(AbelianGroup, RejectsNonPositiveFactors) {
  EXPECT_THROW(make_group(0, 4), Error);
  EXPECT_THROW(make_group(3, -1), Error);
  EXPECT_THROW(make_product_group(0, 1), Error);
  try {
    make_group(0, 4);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}

TEST(AbelianGroup, ProductGroupKeepsPresentation) {
  const auto g = make_product_group(2, 5);
  EXPECT_EQ(g.m(), 2);
  EXPECT_EQ(g.n(), 5);
  EXPECT_FALSE(g.is_canonical());
  EXPECT_FALSE(g.relabelling().has_value());
}

TEST(AbelianGroup, ParseSpec) {
  EXPECT_EQ(parse_group_spec("3x6"), make_group(3, 6));
  EXPECT_EQ(parse_group_spec(" 3 x 6 "), make_group(3, 6));
  EXPECT_EQ(parse_group_spec("4X6"), make_group(2, 12));
  EXPECT_THROW(parse_group_spec("3*6"), Error);
  EXPECT_THROW(parse_group_spec("x6"), Error);
  EXPECT_THROW(parse_group_spec("3xq"), Error);
}

TEST(AbelianGroup, RowMajorEnumeration) {
  const auto g = make_group(2, 4);
  const auto all = g.enumerate();
  ASSERT_EQ(all.size(), 8u);
  EXPECT_EQ(all[0], g.identity());
  EXPECT_EQ(all[1], (GroupElement{0, 1}));
  EXPECT_EQ(all[4], (GroupElement{1, 0}));
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(g.index(all[i]), i);
    EXPECT_EQ(g.element_at(i), all[i]);
  }
}

TEST(AbelianGroup, ArithmeticAxioms) {
  for (auto [m, n] : {std::pair{1, 7}, {2, 6}, {3, 9}, {4, 4}}) {
    const auto g = make_group(m, n);
    for (auto x : g.enumerate()) {
      EXPECT_EQ(g.add(x, g.neg(x)), g.identity());
      EXPECT_EQ(g.scale(g.element_order(x), x), g.identity());
      EXPECT_EQ(g.scale(-1, x), g.neg(x));
      for (auto y : g.enumerate()) EXPECT_EQ(g.add(x, y), g.add(y, x));
    }
    EXPECT_EQ(g.reduce(-1, -1), (GroupElement{m - 1, n - 1}));
  }
}

TEST(AbelianGroup, ElementOrderMatchesRepeatedAddition) {
  for (auto [m, n] : {std::pair{1, 12}, {2, 12}, {3, 6}, {5, 5}}) {
    const auto g = make_group(m, n);
    std::int64_t exponent = 1;
    for (auto x : g.enumerate()) {
      const auto k = order_by_addition(g, x);
      EXPECT_EQ(g.element_order(x), k);
      exponent = std::lcm(exponent, k);
    }
    EXPECT_EQ(g.exponent(), exponent);
  }
}

// The relabelling must be a bijective homomorphism from the requested
// presentation onto the canonical group; checked over every pair of elements.
TEST(AbelianGroup, RelabellingIsAnIsomorphism) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto g = make_group(m, n);
      ASSERT_TRUE(g.is_canonical());
      ASSERT_EQ(g.order(), m * n);
      ASSERT_EQ(g.m(), std::gcd(m, n));
      ASSERT_TRUE(g.relabelling().has_value());
      const auto& r = *g.relabelling();
      std::set<GroupElement> image;
      for (std::int64_t x = 0; x < m; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
          const GroupElement c = r.to_canonical(x, y);
          image.insert(c);
          EXPECT_EQ(r.from_canonical(c), std::pair(x, y));
          for (std::int64_t x2 = 0; x2 < m; x2 += 1 + m / 4) {
            for (std::int64_t y2 = 0; y2 < n; y2 += 1 + n / 4) {
              EXPECT_EQ(r.to_canonical((x + x2) % m, (y + y2) % n),
                        g.add(c, r.to_canonical(x2, y2)));
            }
          }
        }
      }
      EXPECT_EQ(static_cast<std::int64_t>(image.size()), m * n);
    }
  }
}

TEST(AbelianGroup, RelabellingExhaustiveFourBySix) {
  const auto g = make_group(4, 6);
  const auto& r = *g.relabelling();
  for (std::int64_t x = 0; x < 4; ++x)
    for (std::int64_t y = 0; y < 6; ++y)
      for (std::int64_t x2 = 0; x2 < 4; ++x2)
        for (std::int64_t y2 = 0; y2 < 6; ++y2)
          EXPECT_EQ(r.to_canonical((x + x2) % 4, (y + y2) % 6),
                    g.add(r.to_canonical(x, y), r.to_canonical(x2, y2)));
}
