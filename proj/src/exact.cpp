#include "ffl/exact.hpp"

#include <utility>

namespace ffl {
namespace {

std::vector<std::vector<BigInt>> to_big(const IntMatrix& rows) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Floor division for the reduction step.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

BigInt bareiss_determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  auto a = to_big(square);
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  auto a = to_big(rows);
  const std::size_t nr = a.size();
  const std::size_t nc = a.front().size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<BigInt>> hermite_normal_form(const IntMatrix& rows) {
  auto a = to_big(rows);
  if (a.empty()) return {};
  const std::size_t nc = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < a.size(); ++c) {
    // Euclid on column c across rows r.. until only row r is nonzero there.
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (piv == a.size() || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        const BigInt q = a[i][c] / a[r][c];
        for (std::size_t j = c; j < nc; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t j = c; j < nc; ++j) a[r][j] = -a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt q = floor_div(a[i][c], a[r][c]);
      if (q != 0)
        for (std::size_t j = c; j < nc; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

}  // namespace ffl
