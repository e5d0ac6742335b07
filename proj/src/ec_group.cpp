#include "ffl/ec_group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ffl/error.hpp"

namespace ffl {
namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t x, std::int64_t p) { return pow_mod(x, p - 2, p); }

std::int64_t order_of(const Curve& c, const CurvePoint& p, std::int64_t bound) {
  CurvePoint acc = p;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (acc.infinity) return k;
    acc = point_add(c, acc, p);
  }
  throw Error(Errc::internal_inconsistency, "point order exceeds group size");
}

}  // namespace

bool is_prime(std::int64_t v) noexcept {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

Curve make_curve(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t max_prime) {
  if (p <= 3 || !is_prime(p))
    throw Error(Errc::invalid_argument, "field size must be a prime > 3, got " + std::to_string(p));
  if (p > max_prime)
    throw Error(Errc::curve_too_large,
                "p = " + std::to_string(p) + " exceeds bound " + std::to_string(max_prime));
  Curve c{p, mod(a, p), mod(b, p)};
  const std::int64_t disc = mod(4 * pow_mod(c.a, 3, p) + 27 * (c.b * c.b % p), p);
  if (disc == 0)
    throw Error(Errc::singular_curve, "4a^3 + 27b^2 = 0 mod " + std::to_string(p));
  return c;
}

Curve parse_curve_spec(std::string_view spec, std::int64_t max_prime) {
  std::int64_t vals[3] = {};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto end = i < 2 ? spec.find(',', pos) : spec.size();
    if (end == std::string_view::npos)
      throw Error(Errc::invalid_argument, "curve spec must be 'p,a,b': " + std::string(spec));
    auto tok = spec.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), vals[i]);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(Errc::invalid_argument, "bad number in curve spec: " + std::string(spec));
    pos = end + 1;
  }
  return make_curve(vals[0], vals[1], vals[2], max_prime);
}

bool on_curve(const Curve& c, const CurvePoint& p) noexcept {
  if (p.infinity) return true;
  if (p.x < 0 || p.x >= c.p || p.y < 0 || p.y >= c.p) return false;
  const std::int64_t rhs = mod(p.x * p.x % c.p * p.x + c.a * p.x + c.b, c.p);
  return p.y * p.y % c.p == rhs;
}

CurvePoint point_neg(const Curve& c, const CurvePoint& p) noexcept {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, mod(-p.y, c.p));
}

CurvePoint point_add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  std::int64_t slope = 0;
  if (p.x == q.x) {
    if (mod(p.y + q.y, c.p) == 0) return CurvePoint::at_infinity();
    slope = mod((3 * p.x % c.p * p.x + c.a) % c.p * inv_mod(2 * p.y, c.p), c.p);
  } else {
    slope = mod(mod(q.y - p.y, c.p) * inv_mod(mod(q.x - p.x, c.p), c.p), c.p);
  }
  const std::int64_t x = mod(slope * slope - p.x - q.x, c.p);
  const std::int64_t y = mod(slope * mod(p.x - x, c.p) - p.y, c.p);
  return CurvePoint::affine(x, y);
}

CurvePoint point_mul(const Curve& c, std::int64_t k, const CurvePoint& p) {
  CurvePoint base = k < 0 ? point_neg(c, p) : p;
  k = k < 0 ? -k : k;
  CurvePoint acc = CurvePoint::at_infinity();
  while (k > 0) {
    if (k & 1) acc = point_add(c, acc, base);
    base = point_add(c, base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<CurvePoint> curve_points(const Curve& c, std::int64_t max_prime) {
  if (c.p > max_prime)
    throw Error(Errc::curve_too_large,
                "p = " + std::to_string(c.p) + " exceeds bound " + std::to_string(max_prime));
  // Square roots by table: roots[r] lists y with y^2 = r.
  std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(c.p));
  for (std::int64_t y = 0; y < c.p; ++y) roots[static_cast<std::size_t>(y * y % c.p)].push_back(y);
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  for (std::int64_t x = 0; x < c.p; ++x) {
    const std::int64_t rhs = mod(x * x % c.p * x + c.a * x + c.b, c.p);
    for (auto y : roots[static_cast<std::size_t>(rhs)]) out.push_back(CurvePoint::affine(x, y));
  }
  return out;
}

GroupElement CurveGroup::label(const CurvePoint& p) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == p) return structure.element_at(i);
  throw Error(Errc::point_not_on_curve, "point is not in this group");
}

CurveGroup group_structure(const std::vector<CurvePoint>& points, const Curve& c) {
  const auto total = static_cast<std::int64_t>(points.size());
  if (total == 0) throw Error(Errc::invalid_argument, "empty point list");
  // Canonical scan order so the choice of generators does not depend on input order.
  std::vector<CurvePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const CurvePoint& l, const CurvePoint& r) {
    if (l.infinity != r.infinity) return l.infinity;
    return std::pair(l.x, l.y) < std::pair(r.x, r.y);
  });

  std::vector<std::int64_t> orders;
  orders.reserve(sorted.size());
  for (const auto& p : sorted) {
    if (!on_curve(c, p)) throw Error(Errc::point_not_on_curve, "point list contains an invalid point");
    orders.push_back(order_of(c, p, total));
  }
  const auto best = std::max_element(orders.begin(), orders.end());
  const std::int64_t n2 = *best;
  const CurvePoint g2 = sorted[static_cast<std::size_t>(best - orders.begin())];
  if (total % n2 != 0) throw Error(Errc::internal_inconsistency, "exponent does not divide order");
  const std::int64_t n1 = total / n2;

  std::set<CurvePoint> span2;
  {
    CurvePoint acc = CurvePoint::at_infinity();
    for (std::int64_t k = 0; k < n2; ++k, acc = point_add(c, acc, g2)) span2.insert(acc);
  }
  std::optional<CurvePoint> g1;
  for (std::size_t i = 0; i < sorted.size() && !g1; ++i) {
    if (orders[i] != n1) continue;
    bool trivial = true;
    CurvePoint acc = sorted[i];
    for (std::int64_t k = 1; k < n1 && trivial; ++k, acc = point_add(c, acc, sorted[i]))
      if (span2.contains(acc)) trivial = false;
    if (trivial) g1 = sorted[i];
  }
  if (!g1) throw Error(Errc::internal_inconsistency, "no complementary generator found");

  CurveGroup cg;
  cg.curve = c;
  cg.structure = make_group(n1, n2);
  cg.g1 = *g1;
  cg.g2 = g2;
  cg.points.resize(static_cast<std::size_t>(total));
  std::set<CurvePoint> members(sorted.begin(), sorted.end());
  CurvePoint row = CurvePoint::at_infinity();
  for (std::int64_t a = 0; a < n1; ++a, row = point_add(c, row, *g1)) {
    CurvePoint pt = row;
    for (std::int64_t b = 0; b < n2; ++b, pt = point_add(c, pt, g2)) {
      if (!members.contains(pt))
        throw Error(Errc::internal_inconsistency, "point list is not closed under addition");
      cg.points[static_cast<std::size_t>(a * n2 + b)] = pt;
    }
  }
  if (std::set<CurvePoint>(cg.points.begin(), cg.points.end()).size() != cg.points.size())
    throw Error(Errc::internal_inconsistency, "generator pair does not span the group");
  return cg;
}

CurveGroup subgroup(const CurveGroup& cg, const std::vector<CurvePoint>& gens) {
  std::set<CurvePoint> all(cg.points.begin(), cg.points.end());
  for (const auto& g : gens)
    if (!all.contains(g)) throw Error(Errc::point_not_on_curve, "generator is not in the group");
  std::set<CurvePoint> closure{CurvePoint::at_infinity()};
  std::vector<CurvePoint> frontier{CurvePoint::at_infinity()};
  while (!frontier.empty()) {
    const CurvePoint p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const CurvePoint q = point_add(cg.curve, p, g);
      if (closure.insert(q).second) frontier.push_back(q);
    }
  }
  return group_structure(std::vector<CurvePoint>(closure.begin(), closure.end()), cg.curve);
}

}  // namespace ffl
