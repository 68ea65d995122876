#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <utility>
#include <vector>

#include "burn.hpp"
#include "circulant.hpp"
#include "error.hpp"
#include "integer_math.hpp"
#include "solver.hpp"

namespace circburn {

struct FormulaResult {
  std::int64_t value = 0;
  std::optional<BurnSequence> sequence;
  bool verified = false;
  // Sources that collided mod n and were replaced by the smallest unused vertex.
  std::size_t substitutions = 0;
};

// Order up to which a failed construction is replaced by the exact solver's witness.
inline constexpr std::int64_t kWitnessFallbackOrder = 40;

namespace detail {

// Reduces raw positions mod n, replaces later duplicates, and runs verify_cover.
inline FormulaResult finalize(const CirculantSpec& spec, std::int64_t value, const std::vector<std::int64_t>& raw) {
  const std::int64_t n = spec.order();
  FormulaResult out;
  out.value = value;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> reduced;
  reduced.reserve(raw.size());
  std::vector<std::size_t> collided;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::int64_t v = mod(raw[i], n);
    if (used[static_cast<std::size_t>(v)]) {
      collided.push_back(i);
      reduced.push_back(-1);
    } else {
      used[static_cast<std::size_t>(v)] = 1;
      reduced.push_back(v);
    }
  }
  std::int64_t next_free = 0;
  for (std::size_t i : collided) {
    while (used[static_cast<std::size_t>(next_free)]) ++next_free;
    used[static_cast<std::size_t>(next_free)] = 1;
    reduced[i] = next_free;
  }
  out.substitutions = collided.size();
  std::vector<Vertex> sources(reduced.begin(), reduced.end());
  BurnSequence seq(std::move(sources));
  if (static_cast<std::int64_t>(seq.length()) == value && verify_cover_closed_form(spec, seq)) {
    out.sequence = std::move(seq);
    out.verified = true;
    return out;
  }
  std::clog << "circburn: generated sequence failed verification for " << spec.to_string() << " at k=" << value
            << '\n';
  if (n <= kWitnessFallbackOrder) out.sequence = exact_burning_number(build_graph(spec)).witness;
  return out;
}

}  // namespace detail

// b(C(n;1,n/2)) = ceil((1 + sqrt(2n+1)) / 2), i.e. the least k with 2k^2 - 2k >= n.
inline FormulaResult thm_3regular(std::int64_t n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::BadOrder, "3-regular family needs even n >= 4");
  const std::int64_t k = min_k_satisfying([n](std::int64_t k) { return 2 * k * k - 2 * k >= n; });
  const std::int64_t half = n / 2;
  std::vector<std::int64_t> raw;
  for (std::int64_t j = 1; j <= k; ++j) {
    // Centers of the balls whose intervals telescope around 0 and n/2.
    const std::int64_t base = -2 * k * j + 2 * k + j * j - 1;
    if (j % 2 == 0)
      raw.push_back(half + base);
    else if (j == k - 1)
      raw.push_back(half + k);
    else
      raw.push_back(base);
  }
  return detail::finalize(normalize_spec(n, {1, half}), k, raw);
}

// Least k with (2/3)k^3 + (1/3)k >= n. Equivalent closed form:
// k = ceil((A^(2/3) - 6) / (6 A^(1/3))) with A = 162n + 6 sqrt(729n^2 + 6).
inline std::int64_t lb_cubic(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "lb_cubic needs n >= 1");
  return min_k_satisfying([n](std::int64_t k) { return 2 * k * k * k + k >= 3 * n; });
}

// Quadratic lower bound for C(n;1,m), defined when m^3/12 + m^2/2 + 7m/6 + 1 < n.
// All comparisons are scaled by 12 so they stay in integers.
inline std::optional<std::int64_t> lb_quadratic(std::int64_t n, std::int64_t m) {
  if (m < 2 || 2 * m >= n) return std::nullopt;
  if (!(m * m * m + 6 * m * m + 14 * m + 12 < 12 * n)) return std::nullopt;
  const bool even = m % 2 == 0;
  const std::int64_t linear = even ? 12 - 6 * m * m : 6 - 6 * m * m;
  const std::int64_t constant = even ? m * m * m - 4 * m : m * m * m - m;
  // The polynomial is below 12n on its decreasing branch (its value at 0 is),
  // so the predicate is monotone over k >= 1.
  return min_k_satisfying(
      [=](std::int64_t k) { return 12 * m * k * k + linear * k + constant >= 12 * n; });
}

// Stripe construction: burn H_0 = {0, m, ..., (q-1)m} as a path, let the fire
// spread floor(m/2) more steps, then burn the residual interval as a path.
inline std::optional<FormulaResult> ub_stripe(std::int64_t n, std::int64_t m) {
  if (m < 4 || n < 2 * m) return std::nullopt;
  const std::int64_t q = n / m;
  const std::int64_t r = n % m;
  const std::int64_t h = m / 2;
  const PathBurn stripe = optimal_path_cycle_burn(q);
  const std::int64_t k = stripe.k + h;

  std::vector<std::int64_t> raw;
  for (Vertex j : stripe.sequence.sources()) raw.push_back(static_cast<std::int64_t>(j) * m);
  const std::int64_t lo = q * m - (m + 1) / 2 + 1;
  const std::int64_t hi = q * m + r - h - 1;
  if (hi >= lo) {
    const PathBurn rest = optimal_path_cycle_burn(hi - lo + 1);
    for (Vertex y : rest.sequence.sources()) raw.push_back(lo + y);
  }
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (auto v : raw) used[static_cast<std::size_t>(mod(v, n))] = 1;
  for (std::int64_t v = 0; static_cast<std::int64_t>(raw.size()) < k && v < n; ++v)
    if (!used[static_cast<std::size_t>(v)]) raw.push_back(v);
  return detail::finalize(normalize_spec(n, {1, m}), k, raw);
}

// ceil(sqrt q) <= b(C(mq;1,m)) <= ceil(sqrt q) + floor(m/2).
inline std::pair<std::int64_t, std::int64_t> divisible_bounds(std::int64_t q, std::int64_t m) {
  if (q < 3 || m < 2) throw Error(ErrorCode::InvalidArgument, "divisible_bounds needs q >= 3 and m >= 2");
  const std::int64_t lower = ceil_sqrt(q);
  return {lower, lower + m / 2};
}

// b(C(n;1,2)) = ceil((1 + sqrt(1+8n)) / 4); x_{k-i} = 2i^2 + i.
inline FormulaResult thm_m2(std::int64_t n) {
  if (n < 5) throw Error(ErrorCode::BadOrder, "C(n;1,2) family needs n >= 5");
  const std::int64_t k = min_k_satisfying([n](std::int64_t k) { return 2 * k * k - k >= n; });
  std::vector<std::int64_t> raw;
  for (std::int64_t j = 1; j <= k; ++j) {
    const std::int64_t i = k - j;
    raw.push_back(2 * i * i + i);
  }
  return detail::finalize(normalize_spec(n, {1, 2}), k, raw);
}

// b(C(n;1,3)) = floor((2 + sqrt(3n-2)) / 3) + 1, the +1 applying even when 3n-2
// is a perfect square; x_{k-i} = 3i^2 - i.
inline FormulaResult thm_m3(std::int64_t n) {
  if (n < 7) throw Error(ErrorCode::BadOrder, "C(n;1,3) family needs n >= 7");
  const std::int64_t k = (2 + isqrt(3 * n - 2)) / 3 + 1;
  std::vector<std::int64_t> raw;
  for (std::int64_t j = 1; j <= k; ++j) {
    const std::int64_t i = k - j;
    raw.push_back(3 * i * i - i);
  }
  return detail::finalize(normalize_spec(n, {1, 3}), k, raw);
}

// b(C(n;1,...,m)) = ceil(((m-1) + sqrt(4mn + (m-1)^2)) / 2m), the least k with
// mk^2 - (m-1)k >= n; x_{k-i} = i^2 m + i.
inline FormulaResult thm_interval(std::int64_t n, std::int64_t m) {
  if (m < 2 || n <= 2 * m) throw Error(ErrorCode::BadOrder, "C(n;1..m) family needs m >= 2 and n > 2m");
  const std::int64_t k = min_k_satisfying([=](std::int64_t k) { return m * k * k - (m - 1) * k >= n; });
  std::vector<std::int64_t> raw;
  for (std::int64_t j = 1; j <= k; ++j) {
    const std::int64_t i = k - j;
    raw.push_back(i * i * m + i);
  }
  return detail::finalize(consecutive_spec(n, m), k, raw);
}

// b(G) <= b(G.H) <= b(G) + 2.
inline std::pair<std::int64_t, std::int64_t> product_bounds(std::int64_t b_g) {
  if (b_g < 1) throw Error(ErrorCode::InvalidArgument, "burning numbers are >= 1");
  return {b_g, b_g + 2};
}

}  // namespace circburn
