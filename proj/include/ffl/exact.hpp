#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffl {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt bareiss_determinant(const IntMatrix& square);

/// Rank over Q by fraction-free elimination. Rows may have any common length.
std::size_t rank(const IntMatrix& rows);

/// Row-style Hermite normal form of the lattice generated by `rows`: upper
/// triangular, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is a basis.
std::vector<std::vector<BigInt>> hermite_normal_form(const IntMatrix& rows);

}  // namespace ffl
