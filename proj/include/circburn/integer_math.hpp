#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace circburn {

// Floor of the square root, exact for every nonnegative 64-bit input.
constexpr std::int64_t isqrt(std::int64_t value) {
  if (value < 0) throw std::domain_error("isqrt of negative value");
  if (value < 2) return value;
  // Newton iteration from an upper start; monotone decreasing to the floor.
  std::uint64_t v = static_cast<std::uint64_t>(value);
  std::uint64_t x = v;
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return static_cast<std::int64_t>(x);
}

constexpr std::int64_t ceil_sqrt(std::int64_t value) {
  const std::int64_t r = isqrt(value);
  return r * r == value ? r : r + 1;
}

constexpr bool is_perfect_square(std::int64_t value) {
  if (value < 0) return false;
  const std::int64_t r = isqrt(value);
  return r * r == value;
}

// Floor division for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

// Canonical residue in [0, n).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Smallest k >= start with pred(k). pred must be monotone (false...false true...).
// Gallops then bisects, so it is cheap even when the answer is large.
template <class Pred>
constexpr std::int64_t min_k_satisfying(Pred&& pred, std::int64_t start = 1) {
  if (pred(start)) return start;
  std::int64_t lo = start;  // pred(lo) false
  std::int64_t step = 1;
  std::int64_t hi = start + step;
  while (!pred(hi)) {
    lo = hi;
    if (step > std::numeric_limits<std::int64_t>::max() / 4)
      throw std::overflow_error("min_k_satisfying: no solution in range");
    step *= 2;
    hi = start + step;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace circburn
