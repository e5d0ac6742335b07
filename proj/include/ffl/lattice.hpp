#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffl/abelian_group.hpp"
#include "ffl/exact.hpp"

namespace ffl {

/// Integer vector indexed by AbelianGroup::index; read as the divisor
/// sum_i v_i * P_i supported on the group.
using LatticeVector = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultOracleBound = 12;
inline constexpr std::size_t kDefaultCrossCheckBound = 10;

struct GramReport {
  IntMatrix gram;
  BigInt det;
};

/// The lattice L_P of principal divisors supported on a finite abelian group:
/// vectors v in Z^N with sum v_i = 0 and sum v_i * P_i = identity.
class Lattice {
 public:
  explicit Lattice(AbelianGroup group) : group_(std::move(group)) {}

  const AbelianGroup& group() const noexcept { return group_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(group_.order()); }
  std::size_t rank() const noexcept { return dimension() - 1; }

  /// Throws Errc::length_mismatch when v has the wrong length.
  bool contains(std::span<const std::int64_t> v) const;

  /// Group-weighted sum sum_i v_i * P_i.
  GroupElement weighted_sum(std::span<const std::int64_t> v) const;

  /// Squared minimal norm: 4 for N >= 4, 6 for N = 3, 8 for N = 2. When
  /// N <= cross_check_bound the value is confirmed by svp_oracle and a
  /// disagreement raises Errc::internal_inconsistency.
  std::int64_t minimal_distance_sq(std::size_t cross_check_bound = kDefaultCrossCheckBound) const;

  /// All minimal vectors, sorted lexicographically and closed under negation.
  /// For N >= 4 these are e_P + e_Q - e_R - e_S with {P,Q} != {R,S} and
  /// P + Q = R + S.
  std::vector<LatticeVector> minimal_vectors() const;

  /// det(L)^2 = N^3.
  BigInt determinant_sq() const;

  /// [A_{N-1} : L] = N.
  std::int64_t index_in_an() const noexcept { return group_.order(); }

  /// Every lattice vector with 0 < |v|^2 <= norm_sq_bound, by exhaustive
  /// depth-first search over Z^N (independent of minimal_vectors). Sorted
  /// lexicographically. Throws Errc::oracle_bound_exceeded if N > max_dimension.
  std::vector<LatticeVector> svp_oracle(std::int64_t norm_sq_bound,
                                        std::size_t max_dimension = kDefaultOracleBound) const;

 private:
  AbelianGroup group_;
};

std::int64_t norm_sq(std::span<const std::int64_t> v) noexcept;
std::int64_t dot(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

/// Sum of the positive entries, i.e. half the l1 norm. Throws Errc::not_in_an
/// if the entries do not sum to zero.
std::int64_t divisor_degree(std::span<const std::int64_t> v);

/// Exact Gram matrix and its determinant. Throws Errc::length_mismatch on
/// ragged input.
GramReport gram_report(const std::vector<LatticeVector>& vectors);

/// Rank over Q.
std::size_t span_rank(const std::vector<LatticeVector>& vectors);

/// Index in A_{N-1} of the sublattice generated by `generators`, computed from
/// the Hermite normal form of their first N-1 coordinates (projection that is
/// an isomorphism A_{N-1} -> Z^{N-1}). Returns 0 when the generators do not
/// have full rank N-1. Throws Errc::not_in_an if a generator leaves A_{N-1}.
BigInt generated_index_in_an(const std::vector<LatticeVector>& generators);

/// Comma-separated integers, e.g. "1,1,-1,-1".
std::string format_vector(std::span<const std::int64_t> v);
LatticeVector parse_vector(std::string_view text);

}  // namespace ffl
