#include "ffl/basis.hpp"

#include <utility>

#include "ffl/error.hpp"

namespace ffl {
namespace {

using Entry = std::pair<GroupElement, std::int64_t>;

// Vector on Z/m x Z/n (row-major layout) with the given point coefficients.
LatticeVector at_points(std::int64_t m, std::int64_t n, std::initializer_list<Entry> entries) {
  LatticeVector v(static_cast<std::size_t>(m * n), 0);
  for (const auto& [p, c] : entries) v[static_cast<std::size_t>(p.a * n + p.b)] += c;
  return v;
}

// Copies a length-n vector into Part `part` of a length m*n vector.
LatticeVector in_part(std::int64_t m, std::int64_t n, std::int64_t part, const LatticeVector& local) {
  LatticeVector v(static_cast<std::size_t>(m * n), 0);
  for (std::int64_t j = 0; j < n; ++j) v[static_cast<std::size_t>(part * n + j)] = local[j];
  return v;
}

// Part 0 carries (0,1,-1,0,...), Part `part` carries (0,-1,1,0,...).
LatticeVector cross_vector(std::int64_t m, std::int64_t n, std::int64_t part) {
  return at_points(m, n, {{{0, 1}, 1}, {{0, 2}, -1}, {{part, 1}, -1}, {{part, 2}, 1}});
}

}  // namespace

std::string_view to_string(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::cyclic_small_2: return "cyclic_small_2";
    case BasisKind::cyclic_small_3: return "cyclic_small_3";
    case BasisKind::cyclic_basis1: return "cyclic_basis1";
    case BasisKind::klein_2x2: return "klein_2x2";
    case BasisKind::explicit_2x4: return "explicit_2x4";
    case BasisKind::explicit_3x3: return "explicit_3x3";
    case BasisKind::explicit_4x4: return "explicit_4x4";
    case BasisKind::rect_2xn: return "rect_2xn";
    case BasisKind::rect_3xn: return "rect_3xn";
    case BasisKind::rect_4xn: return "rect_4xn";
    case BasisKind::rect_mxn: return "rect_mxn";
    case BasisKind::exceptional_cyclic_4: return "exceptional_cyclic_4";
  }
  return "unknown";
}

std::vector<LatticeVector> cyclic_basis(std::int64_t n) {
  if (n < 5) throw Error(Errc::bad_size, "cyclic_basis needs n >= 5, got " + std::to_string(n));
  const auto sz = static_cast<std::size_t>(n);
  std::vector<LatticeVector> out;
  out.reserve(sz - 1);
  for (std::size_t i = 1; i + 3 <= sz; ++i) {
    LatticeVector v(sz, 0);
    v[0] += 1;
    v[i] += 1;
    v[i + 1] -= 1;
    v[sz - 1] -= 1;
    out.push_back(std::move(v));
  }
  LatticeVector a(sz, 0);
  a[0] = -1;
  a[1] += 1;
  a[sz - 3] += 1;
  a[sz - 2] -= 1;
  out.push_back(std::move(a));
  LatticeVector b(sz, 0);
  b[0] = -1;
  b[1] += 1;
  b[sz - 2] += 1;
  b[sz - 1] -= 1;
  out.push_back(std::move(b));
  return out;
}

std::vector<LatticeVector> small_cyclic_basis(std::int64_t n) {
  if (n == 2) return {{-2, 2}};
  if (n == 3) return {{-2, 1, 1}, {1, -2, 1}};
  throw Error(Errc::bad_size, "small_cyclic_basis needs n in {2,3}, got " + std::to_string(n));
}

std::vector<LatticeVector> klein_basis() {
  return {{-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}};
}

std::vector<LatticeVector> explicit_small_basis(std::int64_t m, std::int64_t n) {
  if (m == 2 && n == 4)
    return {
        {1, 1, -1, -1, 0, 0, 0, 0},  {0, 0, 0, 0, 1, -1, -1, 1}, {1, 1, 0, 0, -1, -1, 0, 0},
        {1, 0, 1, 0, -1, 0, -1, 0},  {1, 0, 0, 1, -1, 0, 0, -1}, {0, 1, 1, 0, 0, -1, -1, 0},
        {1, -1, 0, 0, 1, 0, 0, -1},
    };
  if (m == 3 && n == 3)
    return {
        {1, 1, 0, -1, 0, 0, 0, -1, 0}, {1, 1, 0, 0, -1, 0, -1, 0, 0},
        {1, 1, 0, 0, 0, -1, 0, 0, -1}, {1, 0, 1, -1, 0, 0, 0, 0, -1},
        {1, 0, 1, 0, -1, 0, 0, -1, 0}, {1, 0, 1, 0, 0, -1, -1, 0, 0},
        {0, 1, 1, -1, 0, 0, -1, 0, 0}, {1, 0, 0, -1, -1, 0, 0, 1, 0},
    };
  if (m == 4 && n == 4)
    return {
        {1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1},
        {1, 1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0},
        {1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0},
        {0, 1, 1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0},
        {0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1, 0, -1, 0},
        {1, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0},
        {1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {1, 0, 0, 0, -1, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    };
  throw Error(Errc::bad_shape, "no tabulated basis for " + std::to_string(m) + " x " +
                                   std::to_string(n));
}

std::vector<LatticeVector> rect_basis(std::int64_t m, std::int64_t n) {
  const bool small_m = (m >= 2 && m <= 4 && n >= 5);
  const bool large_m = (m >= 5 && n >= m);
  if (!small_m && !large_m)
    throw Error(Errc::bad_shape, "rect_basis does not cover " + std::to_string(m) + " x " +
                                     std::to_string(n));
  const auto cyc = cyclic_basis(n);
  std::vector<LatticeVector> out;
  out.reserve(static_cast<std::size_t>(m * n - 1));
  for (const auto& v : cyc) out.push_back(in_part(m, n, 0, v));
  for (std::int64_t part = 1; part < m; ++part)
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) out.push_back(in_part(m, n, part, cyc[k]));

  switch (m) {
    case 2:
      out.push_back(cross_vector(m, n, 1));
      out.push_back(at_points(m, n, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 1}, -1}, {{1, 2}, -1}}));
      break;
    case 3:
      out.push_back(cross_vector(m, n, 1));
      out.push_back(cross_vector(m, n, 2));
      out.push_back(at_points(m, n, {{{0, 0}, 1}, {{1, 3}, 1}, {{2, 1}, -1}, {{2, 2}, -1}}));
      out.push_back(at_points(m, n, {{{0, 0}, 1}, {{1, 0}, -1}, {{1, 1}, -1}, {{2, 1}, 1}}));
      break;
    case 4:
      for (std::int64_t part = 1; part < 4; ++part) out.push_back(cross_vector(m, n, part));
      out.push_back(at_points(m, n, {{{0, 0}, 1}, {{2, 3}, 1}, {{3, 1}, -1}, {{3, 2}, -1}}));
      out.push_back(at_points(m, n, {{{0, 0}, 1}, {{1, 1}, -1}, {{1, 2}, -1}, {{2, 3}, 1}}));
      out.push_back(at_points(m, n, {{{0, 0}, 1}, {{1, 0}, -1}, {{2, 0}, -1}, {{3, 0}, 1}}));
      break;
    default: {
      for (std::int64_t part = 1; part < m; ++part) out.push_back(cross_vector(m, n, part));
      // The cyclic basis of order m placed on the column (0,0),(1,0),...,(m-1,0).
      for (const auto& c : cyclic_basis(m)) {
        LatticeVector v(static_cast<std::size_t>(m * n), 0);
        for (std::int64_t a = 0; a < m; ++a) v[static_cast<std::size_t>(a * n)] = c[a];
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::vector<LatticeVector> cyclic4_fallback_basis() {
  return {{1, 1, -1, -1}, {1, -1, -1, 1}, {0, 1, -2, 1}};
}

CertificationReport verify_basis(const AbelianGroup& g, const std::vector<LatticeVector>& vectors) {
  const Lattice lattice(g);
  const auto n = static_cast<std::size_t>(g.order());
  CertificationReport r;
  r.count_ok = vectors.size() + 1 == n;
  for (const auto& v : vectors)
    if (v.size() != n) return r;
  r.all_in_lattice = true;
  for (const auto& v : vectors)
    if (!lattice.contains(v)) r.all_in_lattice = false;
  const std::int64_t min_sq = lattice.minimal_distance_sq();
  r.all_minimal = true;
  for (const auto& v : vectors)
    if (norm_sq(v) != min_sq) r.all_minimal = false;
  r.gram_det_sq = gram_report(vectors).det;
  r.gram_det_sq_ok = r.gram_det_sq == lattice.determinant_sq();
  return r;
}

BasisResult build_minimal_basis(const AbelianGroup& g) {
  const std::int64_t m = g.m();
  const std::int64_t n = g.n();
  if (g.order() < 2) throw Error(Errc::bad_size, "group order must be at least 2");
  BasisResult res;
  if (m == 1 && n == 4) {
    res.kind = BasisKind::exceptional_cyclic_4;
    res.fallback = cyclic4_fallback_basis();
    res.report = verify_basis(g, res.fallback);
    res.certified = false;
    return res;
  }
  if (m == 1) {
    res.kind = n == 2 ? BasisKind::cyclic_small_2
               : n == 3 ? BasisKind::cyclic_small_3
                        : BasisKind::cyclic_basis1;
    res.vectors = n <= 3 ? small_cyclic_basis(n) : cyclic_basis(n);
  } else if (m == 2 && n == 2) {
    res.kind = BasisKind::klein_2x2;
    res.vectors = klein_basis();
  } else if ((m == 2 && n == 4) || (m == 3 && n == 3) || (m == 4 && n == 4)) {
    res.kind = m == 2 ? BasisKind::explicit_2x4
               : m == 3 ? BasisKind::explicit_3x3
                        : BasisKind::explicit_4x4;
    res.vectors = explicit_small_basis(m, n);
  } else {
    res.kind = m == 2 ? BasisKind::rect_2xn
               : m == 3 ? BasisKind::rect_3xn
               : m == 4 ? BasisKind::rect_4xn
                        : BasisKind::rect_mxn;
    res.vectors = rect_basis(m, n);  // throws bad_shape for uncovered shapes
  }
  res.report = verify_basis(g, res.vectors);
  res.certified = res.report.certified();
  return res;
}

}  // namespace ffl
