#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ffl/abelian_group.hpp"
#include "ffl/exact.hpp"
#include "ffl/lattice.hpp"

namespace ffl {

enum class BasisKind {
  cyclic_small_2,
  cyclic_small_3,
  cyclic_basis1,
  klein_2x2,
  explicit_2x4,
  explicit_3x3,
  explicit_4x4,
  rect_2xn,
  rect_3xn,
  rect_4xn,
  rect_mxn,
  exceptional_cyclic_4,
};

std::string_view to_string(BasisKind kind) noexcept;

struct CertificationReport {
  bool all_in_lattice = false;
  bool all_minimal = false;
  bool count_ok = false;
  bool gram_det_sq_ok = false;
  BigInt gram_det_sq = 0;

  bool certified() const noexcept {
    return all_in_lattice && all_minimal && count_ok && gram_det_sq_ok;
  }
};

struct BasisResult {
  BasisKind kind = BasisKind::exceptional_cyclic_4;
  /// N-1 minimal vectors; empty for exceptional_cyclic_4.
  std::vector<LatticeVector> vectors;
  /// Only for exceptional_cyclic_4: a basis that is not made of minimal vectors.
  std::vector<LatticeVector> fallback;
  CertificationReport report;
  bool certified = false;
};

/// Basis of the cyclic lattice of order n >= 5, all vectors of norm^2 4:
/// for 1 <= i <= n-3, v_i = e_0 + e_i - e_{i+1} - e_{n-1}; then
/// v_{n-2} = -e_0 + e_1 + e_{n-3} - e_{n-2} and
/// v_{n-1} = -e_0 + e_1 + e_{n-2} - e_{n-1}.
std::vector<LatticeVector> cyclic_basis(std::int64_t n);

/// n = 2: {(-2,2)}; n = 3: {(-2,1,1),(1,-2,1)}.
std::vector<LatticeVector> small_cyclic_basis(std::int64_t n);

/// Orthogonal basis of the Klein four-group lattice.
std::vector<LatticeVector> klein_basis();

/// Tabulated bases for Z/2 x Z/4, Z/3 x Z/3 and Z/4 x Z/4.
std::vector<LatticeVector> explicit_small_basis(std::int64_t m, std::int64_t n);

/// Basis of minimal vectors for Z/m x Z/n laid out in parts of n coordinates
/// (Part i holds the points (i,0),...,(i,n-1)). Accepts m in {2,3,4} with
/// n >= 5, or n >= m >= 5; m need not divide n.
std::vector<LatticeVector> rect_basis(std::int64_t m, std::int64_t n);

/// Non-minimal basis used for the cyclic group of order 4.
std::vector<LatticeVector> cyclic4_fallback_basis();

CertificationReport verify_basis(const AbelianGroup& g, const std::vector<LatticeVector>& vectors);

/// Dispatches on the shape of g and certifies the result. Throws
/// Errc::bad_shape for non-canonical shapes outside rect_basis's range.
BasisResult build_minimal_basis(const AbelianGroup& g);

}  // namespace ffl
