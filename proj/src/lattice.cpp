#include "ffl/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ffl/error.hpp"
#include "search.hpp"

namespace ffl {

bool Lattice::contains(std::span<const std::int64_t> v) const {
  if (v.size() != dimension())
    throw Error(Errc::length_mismatch, "vector length " + std::to_string(v.size()) +
                                           " does not match group order " +
                                           std::to_string(dimension()));
  if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) != 0) return false;
  return weighted_sum(v) == group_.identity();
}

GroupElement Lattice::weighted_sum(std::span<const std::int64_t> v) const {
  if (v.size() != dimension())
    throw Error(Errc::length_mismatch, "vector length does not match group order");
  std::int64_t sa = 0, sb = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const GroupElement p = group_.element_at(i);
    sa = (sa + v[i] % group_.m() * p.a) % group_.m();
    sb = (sb + v[i] % group_.n() * p.b) % group_.n();
  }
  return group_.reduce(sa, sb);
}

std::int64_t Lattice::minimal_distance_sq(std::size_t cross_check_bound) const {
  const std::size_t n = dimension();
  if (n < 2) throw Error(Errc::bad_size, "lattice needs a group of order >= 2");
  const std::int64_t closed = n >= 4 ? 4 : (n == 3 ? 6 : 8);
  if (n <= cross_check_bound) {
    if (!svp_oracle(closed - 1, cross_check_bound).empty() ||
        svp_oracle(closed, cross_check_bound).empty())
      throw Error(Errc::internal_inconsistency,
                  "closed-form minimal norm disagrees with exhaustive search for " + group_.spec());
  }
  return closed;
}

std::vector<LatticeVector> Lattice::minimal_vectors() const {
  const std::size_t n = dimension();
  if (n < 2) throw Error(Errc::bad_size, "lattice needs a group of order >= 2");
  std::vector<LatticeVector> out;
  if (n == 2) {
    out = {{-2, 2}, {2, -2}};
  } else if (n == 3) {
    // +-(P+Q-2O), +-(P-2Q+O), +-(-2P+Q+O) in the order (O, P, Q).
    for (LatticeVector v : {LatticeVector{-2, 1, 1}, LatticeVector{1, 1, -2},
                            LatticeVector{1, -2, 1}}) {
      out.push_back(v);
      for (auto& x : v) x = -x;
      out.push_back(v);
    }
  } else {
    // Bucket unordered pairs {i, j} by the group sum P_i + P_j.
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto s = group_.add(group_.element_at(i), group_.element_at(j));
        by_sum[group_.index(s)].emplace_back(i, j);
      }
    // Distinct pairs with a common sum are automatically disjoint.
    for (const auto& [sum, pairs] : by_sum)
      for (const auto& [p, q] : pairs)
        for (const auto& [r, s] : pairs) {
          if (p == r && q == s) continue;
          LatticeVector v(n, 0);
          v[p] = 1;
          v[q] = 1;
          v[r] = -1;
          v[s] = -1;
          out.push_back(std::move(v));
        }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt Lattice::determinant_sq() const {
  const BigInt n = group_.order();
  return n * n * n;
}

std::vector<LatticeVector> Lattice::svp_oracle(std::int64_t norm_sq_bound,
                                               std::size_t max_dimension) const {
  if (dimension() > max_dimension)
    throw Error(Errc::oracle_bound_exceeded, "svp oracle limited to N <= " +
                                                 std::to_string(max_dimension) + ", got " +
                                                 std::to_string(dimension()));
  std::vector<LatticeVector> out;
  if (norm_sq_bound <= 0) return out;
  const std::vector<std::int64_t> origin(dimension(), 0);
  detail::SearchBound bound{norm_sq_bound, true};
  detail::search_sum_zero(origin, 1, bound, [&](const std::vector<std::int64_t>& x, std::int64_t d) {
    if (d > 0 && contains(x)) out.push_back(x);
  });
  return out;
}

std::int64_t norm_sq(std::span<const std::int64_t> v) noexcept {
  std::int64_t s = 0;
  for (auto x : v) s += x * x;
  return s;
}

std::int64_t dot(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  if (u.size() != v.size()) throw Error(Errc::length_mismatch, "dot product of unequal lengths");
  return std::inner_product(u.begin(), u.end(), v.begin(), std::int64_t{0});
}

std::int64_t divisor_degree(std::span<const std::int64_t> v) {
  std::int64_t sum = 0, pos = 0;
  for (auto x : v) {
    sum += x;
    if (x > 0) pos += x;
  }
  if (sum != 0) throw Error(Errc::not_in_an, "entries sum to " + std::to_string(sum));
  return pos;
}

GramReport gram_report(const std::vector<LatticeVector>& vectors) {
  GramReport r;
  const std::size_t k = vectors.size();
  r.gram.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) r.gram[i][j] = r.gram[j][i] = dot(vectors[i], vectors[j]);
  r.det = bareiss_determinant(r.gram);
  return r;
}

std::size_t span_rank(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return 0;
  for (const auto& v : vectors)
    if (v.size() != vectors.front().size())
      throw Error(Errc::length_mismatch, "span_rank on ragged vectors");
  return rank(vectors);
}

BigInt generated_index_in_an(const std::vector<LatticeVector>& generators) {
  if (generators.empty()) return 0;
  const std::size_t n = generators.front().size();
  IntMatrix projected;
  projected.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(Errc::length_mismatch, "generators of unequal length");
    divisor_degree(g);  // throws unless in A_{N-1}
    projected.emplace_back(g.begin(), g.end() - 1);
  }
  const auto hnf = hermite_normal_form(projected);
  if (hnf.size() != n - 1) return 0;
  BigInt index = 1;
  for (std::size_t i = 0; i < hnf.size(); ++i) index *= hnf[i][i];
  return index;
}

std::string format_vector(std::span<const std::int64_t> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

LatticeVector parse_vector(std::string_view text) {
  LatticeVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(Errc::invalid_argument, "bad vector entry '" + std::string(tok) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace ffl
