#pragma once

// Depth-first enumeration of integer points x in A_{N-1} near a scaled target.
// Used by the SVP oracle and by the closest-vector search.

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace ffl::detail {

inline std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Scaled squared distances: dist(x) = sum_i (den * x_i - num_i)^2 with
/// sum num_i = 0. Points are visited in lexicographic order of x. A node is
/// pruned when its lower bound exceeds `bound` (or reaches it, when
/// `inclusive` is false); the visitor may tighten both between calls.
struct SearchBound {
  std::int64_t value = 0;
  bool inclusive = true;

  bool rejects(std::int64_t lower) const noexcept {
    return inclusive ? lower > value : lower >= value;
  }
};

template <class Visitor>
class SumZeroSearch {
 public:
  SumZeroSearch(const std::vector<std::int64_t>& num, std::int64_t den, SearchBound& bound,
                Visitor& visit)
      : num_(num), den_(den), bound_(bound), visit_(visit), x_(num.size(), 0) {}

  void run() {
    if (num_.empty()) return;
    if (num_.size() == 1) {
      x_[0] = 0;
      const std::int64_t d = num_[0];
      if (!bound_.rejects(d * d)) visit_(x_, d * d);
      return;
    }
    descend(0, 0, 0, 0);
  }

 private:
  void descend(std::size_t depth, std::int64_t partial, std::int64_t dsum, std::int64_t xsum) {
    const std::size_t n = num_.size();
    if (depth + 1 == n) {
      // Last coordinate is forced by sum x = 0; its scaled offset is -dsum.
      x_[depth] = -xsum;
      const std::int64_t total = partial + dsum * dsum;
      if (!bound_.rejects(total)) visit_(x_, total);
      return;
    }
    const std::int64_t remaining = static_cast<std::int64_t>(n - depth - 1);
    const std::int64_t radius = isqrt(bound_.value - partial);
    const std::int64_t lo = ceil_div(num_[depth] - radius, den_);
    const std::int64_t hi = floor_div(num_[depth] + radius, den_);
    for (std::int64_t v = lo; v <= hi; ++v) {
      const std::int64_t d = den_ * v - num_[depth];
      const std::int64_t p = partial + d * d;
      const std::int64_t s = dsum + d;
      // The remaining offsets must sum to -s, so they contribute >= s^2 / remaining.
      if (bound_.inclusive ? p * remaining + s * s > bound_.value * remaining
                           : p * remaining + s * s >= bound_.value * remaining)
        continue;
      x_[depth] = v;
      descend(depth + 1, p, s, xsum + v);
    }
  }

  const std::vector<std::int64_t>& num_;
  std::int64_t den_;
  SearchBound& bound_;
  Visitor& visit_;
  std::vector<std::int64_t> x_;
};

template <class Visitor>
void search_sum_zero(const std::vector<std::int64_t>& num, std::int64_t den, SearchBound& bound,
                     Visitor&& visit) {
  SumZeroSearch<std::remove_reference_t<Visitor>> s(num, den, bound, visit);
  s.run();
}

}  // namespace ffl::detail
