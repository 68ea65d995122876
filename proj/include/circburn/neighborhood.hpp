#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circulant.hpp"
#include "error.hpp"
#include "integer_math.hpp"
#include "vertex_set.hpp"

namespace circburn {

// Closed integer interval [lo, hi] read cyclically mod n. Empty when hi < lo;
// the whole vertex set once its length reaches n.
struct CyclicInterval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  std::int64_t length() const noexcept { return hi < lo ? 0 : hi - lo + 1; }
  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

// Interval decomposition of N_radius[x] in C(n;1,m).
//   m = n/2, 1 <= radius <= n/4:  [x-l, x+l] u [x-l+n/2+1, x+l+n/2-1]
//   m < n/2, radius <= m/2:       u_j [x+(j-l)m-j, x+(j-l)m+j] u [x+(l-j)m-j, x+(l-j)m+j]
//   m < n/2, radius > m/2:        the first floor(m/2) pairs above plus one central
//                                 interval of half-width (l - floor(m/2))m + floor(m/2)
inline std::vector<CyclicInterval> one_m_intervals(const CirculantSpec& spec, std::int64_t x,
                                                   std::int64_t radius) {
  if (!spec.is_one_m()) throw Error(ErrorCode::UnsupportedSpec, spec.to_string() + " is not C(n;1,m)");
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  const std::int64_t n = spec.order();
  const std::int64_t m = spec.distances()[1];
  if (radius == 0) return {{x, x}};

  if (2 * m == n) {
    if (4 * radius > n)
      throw Error(ErrorCode::HypothesisViolated, "radius " + std::to_string(radius) + " exceeds n/4 in " + spec.to_string());
    const std::int64_t half = n / 2;
    return {{x - radius, x + radius}, {x - radius + half + 1, x + radius + half - 1}};
  }

  std::vector<CyclicInterval> out;
  const auto push_pair = [&](std::int64_t j) {
    out.push_back({x + (j - radius) * m - j, x + (j - radius) * m + j});
    out.push_back({x + (radius - j) * m - j, x + (radius - j) * m + j});
  };
  if (2 * radius <= m) {
    for (std::int64_t j = 0; j <= radius; ++j) push_pair(j);
    return out;
  }
  const std::int64_t h = m / 2;
  for (std::int64_t j = 0; j < h; ++j) push_pair(j);
  const std::int64_t reach = (radius - h) * m + h;
  out.push_back({x - reach, x + reach});
  return out;
}

// N_radius[x] in C(n;1,2,...,m) is the single interval [x - radius*m, x + radius*m].
inline std::vector<CyclicInterval> interval_family_intervals(const CirculantSpec& spec, std::int64_t x,
                                                             std::int64_t radius) {
  if (!spec.is_consecutive()) throw Error(ErrorCode::UnsupportedSpec, spec.to_string() + " is not C(n;1,...,m)");
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  const std::int64_t m = spec.distances().back();
  return {{x - radius * m, x + radius * m}};
}

// Whichever closed form applies to (spec, radius), or nothing when none does.
inline std::optional<std::vector<CyclicInterval>> closed_form_intervals(const CirculantSpec& spec, std::int64_t x,
                                                                        std::int64_t radius) {
  if (spec.is_one_m()) {
    if (spec.is_three_regular() && 4 * radius > spec.order()) return std::nullopt;
    return one_m_intervals(spec, x, radius);
  }
  if (spec.is_consecutive()) return interval_family_intervals(spec, x, radius);
  return std::nullopt;
}

inline VertexSet materialize(const std::vector<CyclicInterval>& intervals, std::int64_t n) {
  VertexSet out(static_cast<std::size_t>(n));
  for (const auto& iv : intervals) {
    const std::int64_t len = iv.length();
    if (len == 0) continue;
    if (len >= n) return VertexSet::full(static_cast<std::size_t>(n));
    const std::int64_t start = mod(iv.lo, n);
    const std::int64_t first_end = std::min(start + len, n);
    out.insert_range(static_cast<std::size_t>(start), static_cast<std::size_t>(first_end));
    if (start + len > n) out.insert_range(0, static_cast<std::size_t>(start + len - n));
  }
  return out;
}

inline VertexSet ball_closed_form(const CirculantSpec& spec, std::int64_t x, std::int64_t radius) {
  return materialize(one_m_intervals(spec, mod(x, spec.order()), radius), spec.order());
}

// Upper bound on |N_radius[x]| in any C(n;1,m); both parities use floor(m/2).
inline std::int64_t ball_size_bound(std::int64_t m, std::int64_t radius) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "ball_size_bound needs m >= 2");
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  if (2 * radius <= m) return 2 * radius * radius + 2 * radius + 1;
  const std::int64_t h = m / 2;
  return 2 * h * h + 2 * radius * m - 2 * h * m + 2 * h + 1;
}

}  // namespace circburn
