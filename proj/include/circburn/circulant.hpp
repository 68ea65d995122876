#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer_math.hpp"

namespace circburn {

// C(n; d_1, ..., d_t) with canonical distances 1 <= d <= floor(n/2), sorted ascending.
// Only constructible through normalize_spec, so every instance is connected.
class CirculantSpec {
 public:
  std::int64_t order() const noexcept { return n_; }
  const std::vector<std::int64_t>& distances() const noexcept { return distances_; }

  bool has_distance(std::int64_t d) const {
    for (auto x : distances_)
      if (x == d) return true;
    return false;
  }

  // Second distance m when the spec is C(n;1,m) with m >= 2.
  std::int64_t one_m_distance() const {
    return is_one_m() ? distances_[1] : 0;
  }
  bool is_one_m() const noexcept { return distances_.size() == 2 && distances_[0] == 1; }
  bool is_three_regular() const noexcept {
    return is_one_m() && n_ % 2 == 0 && 2 * distances_[1] == n_;
  }
  // C(n;1,2,...,m) for some m >= 2.
  bool is_consecutive() const noexcept {
    if (distances_.size() < 2) return false;
    for (std::size_t i = 0; i < distances_.size(); ++i)
      if (distances_[i] != static_cast<std::int64_t>(i) + 1) return false;
    return true;
  }

  std::int64_t degree() const noexcept {
    std::int64_t deg = 0;
    for (auto d : distances_) deg += (2 * d == n_) ? 1 : 2;
    return deg;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "C(" << n_ << ';';
    for (std::size_t i = 0; i < distances_.size(); ++i) os << (i ? "," : "") << distances_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  friend CirculantSpec normalize_spec(std::int64_t n, const std::vector<std::int64_t>& raw);
  CirculantSpec(std::int64_t n, std::vector<std::int64_t> d) : n_(n), distances_(std::move(d)) {}

  std::int64_t n_ = 0;
  std::vector<std::int64_t> distances_;
};

inline CirculantSpec normalize_spec(std::int64_t n, const std::vector<std::int64_t>& raw) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "circulant order must be >= 2");
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "distance set must be nonempty");
  std::set<std::int64_t> canon;
  for (auto r : raw) {
    const std::int64_t res = mod(r, n);
    if (res == 0) throw Error(ErrorCode::ZeroDistance, "residue " + std::to_string(r) + " is 0 mod " + std::to_string(n));
    canon.insert(std::min(res, n - res));
  }
  std::int64_t g = n;
  for (auto d : canon) g = gcd(g, d);
  if (g != 1) throw Error(ErrorCode::Disconnected, "gcd(n, S) = " + std::to_string(g));
  return CirculantSpec(n, std::vector<std::int64_t>(canon.begin(), canon.end()));
}

inline CirculantSpec one_m_spec(std::int64_t n, std::int64_t m) { return normalize_spec(n, {1, m}); }

inline CirculantSpec consecutive_spec(std::int64_t n, std::int64_t m) {
  std::vector<std::int64_t> d;
  for (std::int64_t i = 1; i <= m; ++i) d.push_back(i);
  return normalize_spec(n, d);
}

}  // namespace circburn
