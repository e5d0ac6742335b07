#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ffl {

/// Residue pair (a, b) in Z/m x Z/n, always reduced.
struct GroupElement {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

/// Explicit isomorphism between the presentation a group was requested in,
/// Z/in_m x Z/in_n, and its canonical form Z/m x Z/n.
///
/// Built from the primary decomposition in_m = m1*m2, in_n = n1*n2 where m1
/// (resp. n2) collects the prime powers on which in_m (resp. in_n) strictly
/// (resp. weakly) dominates. The canonical generators map to
///   (0,1) -> (m2, n1)   in the input presentation (order lcm)
///   (1,0) -> (m1, n2)   in the input presentation (order gcd)
struct Relabelling {
  std::int64_t in_m = 1;
  std::int64_t in_n = 1;
  std::int64_t m1 = 1, m2 = 1, n1 = 1, n2 = 1;

  /// Canonical element -> (x mod in_m, y mod in_n).
  std::pair<std::int64_t, std::int64_t> from_canonical(GroupElement x) const;
  /// (x, y) in the input presentation -> canonical element.
  GroupElement to_canonical(std::int64_t x, std::int64_t y) const;
};

/// Finite abelian group Z/m x Z/n. Elements are enumerated row-major,
/// (0,0),(0,1),...,(0,n-1),(1,0),..., so element (a,b) sits at index a*n+b and
/// the identity is always coordinate 0.
class AbelianGroup {
 public:
  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t order() const noexcept { return m_ * n_; }
  bool is_cyclic() const noexcept { return m_ == 1; }
  /// True when m | n. Always the case for groups from make_group.
  bool is_canonical() const noexcept { return n_ % m_ == 0; }
  const std::optional<Relabelling>& relabelling() const noexcept { return relabel_; }

  GroupElement identity() const noexcept { return {}; }
  GroupElement reduce(std::int64_t a, std::int64_t b) const noexcept;
  GroupElement add(GroupElement x, GroupElement y) const noexcept;
  GroupElement neg(GroupElement x) const noexcept;
  GroupElement scale(std::int64_t k, GroupElement x) const noexcept;

  std::size_t index(GroupElement x) const noexcept {
    return static_cast<std::size_t>(x.a * n_ + x.b);
  }
  GroupElement element_at(std::size_t i) const noexcept {
    const auto k = static_cast<std::int64_t>(i);
    return {k / n_, k % n_};
  }
  std::vector<GroupElement> enumerate() const;
  std::int64_t element_order(GroupElement x) const noexcept;
  /// lcm of all element orders.
  std::int64_t exponent() const noexcept;

  /// "m x n"
  std::string spec() const;

  friend bool operator==(const AbelianGroup& l, const AbelianGroup& r) noexcept {
    return l.m_ == r.m_ && l.n_ == r.n_;
  }

 private:
  AbelianGroup(std::int64_t m, std::int64_t n) : m_(m), n_(n) {}

  std::int64_t m_;
  std::int64_t n_;
  std::optional<Relabelling> relabel_;

  friend AbelianGroup make_group(std::int64_t, std::int64_t);
  friend AbelianGroup make_product_group(std::int64_t, std::int64_t);
};

/// Canonical group isomorphic to Z/m x Z/n: (gcd(m,n), lcm(m,n)). Throws
/// Errc::invalid_argument unless m, n >= 1.
AbelianGroup make_group(std::int64_t m, std::int64_t n);

/// Z/m x Z/n kept in the given presentation, without canonicalisation. Only
/// needed to build the rectangular bases on shapes where m does not divide n.
AbelianGroup make_product_group(std::int64_t m, std::int64_t n);

/// Parses "m x n", "mxn" or "MxN" (whitespace tolerated), canonicalising.
AbelianGroup parse_group_spec(std::string_view spec);

}  // namespace ffl
