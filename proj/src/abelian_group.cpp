#include "ffl/abelian_group.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

#include "ffl/error.hpp"

namespace ffl {
namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Inverse of x modulo m for gcd(x, m) = 1; 0 when m = 1.
std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(x, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return mod(old_s, m);
}

// x = r1 mod m1, x = r2 mod m2 with gcd(m1, m2) = 1.
std::int64_t crt(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2) {
  const std::int64_t t = mod((r2 - r1) % m2 * inverse_mod(m1, m2), m2);
  return mod(r1 + m1 * t, m1 * m2);
}

// Part of x built from the prime powers p^e || x for which pred(p) holds.
template <class Pred>
std::int64_t prime_power_part(std::int64_t x, Pred pred) {
  std::int64_t part = 1;
  std::int64_t rest = x;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::int64_t pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    if (pred(p)) part *= pe;
  }
  if (rest > 1 && pred(rest)) part *= rest;
  return part;
}

std::int64_t valuation(std::int64_t x, std::int64_t p) {
  std::int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  return os << '(' << x.a << ',' << x.b << ')';
}

std::pair<std::int64_t, std::int64_t> Relabelling::from_canonical(GroupElement x) const {
  return {mod(x.a * m1 + x.b * m2, in_m), mod(x.a * n2 + x.b * n1, in_n)};
}

GroupElement Relabelling::to_canonical(std::int64_t x, std::int64_t y) const {
  x = mod(x, in_m);
  y = mod(y, in_n);
  const std::int64_t a_m2 = mod(x * inverse_mod(m1, m2), m2);
  const std::int64_t b_m1 = mod(x * inverse_mod(m2, m1), m1);
  const std::int64_t a_n1 = mod(y * inverse_mod(n2, n1), n1);
  const std::int64_t b_n2 = mod(y * inverse_mod(n1, n2), n2);
  return {crt(a_m2, m2, a_n1, n1), crt(b_m1, m1, b_n2, n2)};
}

GroupElement AbelianGroup::reduce(std::int64_t a, std::int64_t b) const noexcept {
  return {mod(a, m_), mod(b, n_)};
}

GroupElement AbelianGroup::add(GroupElement x, GroupElement y) const noexcept {
  return reduce(x.a + y.a, x.b + y.b);
}

GroupElement AbelianGroup::neg(GroupElement x) const noexcept { return reduce(-x.a, -x.b); }

GroupElement AbelianGroup::scale(std::int64_t k, GroupElement x) const noexcept {
  return reduce(mod(k, m_) * x.a, mod(k, n_) * x.b);
}

std::vector<GroupElement> AbelianGroup::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::int64_t a = 0; a < m_; ++a)
    for (std::int64_t b = 0; b < n_; ++b) out.push_back({a, b});
  return out;
}

std::int64_t AbelianGroup::element_order(GroupElement x) const noexcept {
  const std::int64_t oa = m_ / std::gcd(x.a, m_);
  const std::int64_t ob = n_ / std::gcd(x.b, n_);
  return std::lcm(oa, ob);
}

std::int64_t AbelianGroup::exponent() const noexcept { return std::lcm(m_, n_); }

std::string AbelianGroup::spec() const {
  std::ostringstream os;
  os << m_ << " x " << n_;
  return os.str();
}

AbelianGroup make_group(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "group factors must be positive");
  Relabelling r;
  r.in_m = m;
  r.in_n = n;
  r.m1 = prime_power_part(m, [&](std::int64_t p) { return valuation(m, p) > valuation(n, p); });
  r.m2 = m / r.m1;
  r.n2 = prime_power_part(n, [&](std::int64_t p) { return valuation(m, p) <= valuation(n, p); });
  r.n1 = n / r.n2;
  AbelianGroup g(r.m2 * r.n1, r.m1 * r.n2);
  g.relabel_ = r;
  return g;
}

AbelianGroup make_product_group(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "group factors must be positive");
  return AbelianGroup(m, n);
}

AbelianGroup parse_group_spec(std::string_view spec) {
  std::string compact;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  const auto x = compact.find_first_of("xX");
  if (x == std::string::npos)
    throw Error(Errc::invalid_argument, "group spec must look like 'm x n': " + std::string(spec));
  auto parse = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::invalid_argument, "bad group factor in '" + std::string(spec) + "'");
    return v;
  };
  const std::string_view c(compact);
  return make_group(parse(c.substr(0, x)), parse(c.substr(x + 1)));
}

}  // namespace ffl
