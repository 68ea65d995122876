#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circulant.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "lex_product.hpp"
#include "solver.hpp"

namespace circburn {

inline constexpr std::int64_t kDefaultExactCap = 40;
inline constexpr std::int64_t kIdentityCheckOrder = 4096;

struct BoundsReport {
  explicit BoundsReport(CirculantSpec s) : spec(std::move(s)) {}

  CirculantSpec spec;
  std::optional<std::int64_t> lb_cubic;
  std::optional<std::int64_t> lb_quad;
  std::optional<FormulaResult> ub_stripe;
  std::optional<std::pair<std::int64_t, std::int64_t>> divisible;
  std::optional<FormulaResult> closed_form;
  std::optional<SolverResult> exact;

  std::vector<std::int64_t> lower_bounds() const {
    std::vector<std::int64_t> out;
    if (lb_cubic) out.push_back(*lb_cubic);
    if (lb_quad) out.push_back(*lb_quad);
    if (divisible) out.push_back(divisible->first);
    return out;
  }

  std::vector<std::int64_t> upper_bounds() const {
    std::vector<std::int64_t> out;
    if (ub_stripe) out.push_back(ub_stripe->value);
    if (divisible) out.push_back(divisible->second);
    return out;
  }

  std::optional<std::int64_t> best_upper() const {
    const auto ubs = upper_bounds();
    if (ubs.empty()) return std::nullopt;
    return *std::min_element(ubs.begin(), ubs.end());
  }

  std::optional<std::int64_t> exact_value() const {
    if (!exact) return std::nullopt;
    return static_cast<std::int64_t>(exact->burning_number);
  }

  // Human-readable list of broken report invariants; empty when consistent.
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    const auto lows = lower_bounds();
    const auto ups = upper_bounds();
    const auto check_between = [&](std::int64_t v, const char* what) {
      for (auto lb : lows)
        if (lb > v) out.push_back(std::string(what) + " " + std::to_string(v) + " below lower bound " + std::to_string(lb));
      for (auto ub : ups)
        if (v > ub) out.push_back(std::string(what) + " " + std::to_string(v) + " above upper bound " + std::to_string(ub));
    };
    for (auto lb : lows)
      for (auto ub : ups)
        if (lb > ub) out.push_back("lower bound " + std::to_string(lb) + " exceeds upper bound " + std::to_string(ub));
    if (closed_form) {
      check_between(closed_form->value, "closed form");
      if (!closed_form->verified) out.push_back("closed-form sequence failed verification");
    }
    if (ub_stripe && !ub_stripe->verified) out.push_back("stripe sequence failed verification");
    if (exact) {
      const auto e = static_cast<std::int64_t>(exact->burning_number);
      check_between(e, "exact");
      if (closed_form && closed_form->value != e)
        out.push_back("closed form " + std::to_string(closed_form->value) + " != exact " + std::to_string(e));
    }
    return out;
  }
};

// The closed form that applies to spec, if any. C(n;1,n/2) wins over the other
// families, so C(4;1,2) is handled as 3-regular.
inline std::optional<FormulaResult> closed_form_for(const CirculantSpec& spec) {
  const std::int64_t n = spec.order();
  if (spec.is_three_regular()) return thm_3regular(n);
  if (spec.is_one_m() && spec.distances()[1] == 2 && n >= 5) return thm_m2(n);
  if (spec.is_one_m() && spec.distances()[1] == 3 && n >= 7) return thm_m3(n);
  if (spec.is_consecutive()) {
    const std::int64_t m = spec.distances().back();
    if (n > 2 * m) return thm_interval(n, m);
  }
  return std::nullopt;
}

inline SolverResult exact_for(const CirculantSpec& spec, std::int64_t cap) {
  if (spec.order() > cap)
    throw Error(ErrorCode::ExactCapExceeded,
                "order " + std::to_string(spec.order()) + " above exact cap " + std::to_string(cap));
  return exact_burning_number(build_graph(spec));
}

inline BoundsReport bounds_report(const CirculantSpec& spec, bool compute_exact, std::int64_t exact_cap = kDefaultExactCap) {
  BoundsReport report(spec);
  const std::int64_t n = spec.order();
  if (compute_exact && n > exact_cap)
    throw Error(ErrorCode::ExactCapExceeded, "order " + std::to_string(n) + " above exact cap " + std::to_string(exact_cap));
  // |N_l| <= 2l^2 + 2l + 1 needs degree <= 4.
  if (spec.distances().size() <= 2) report.lb_cubic = lb_cubic(n);
  if (spec.is_one_m() && !spec.is_three_regular()) {
    const std::int64_t m = spec.distances()[1];
    report.lb_quad = lb_quadratic(n, m);
    report.ub_stripe = ub_stripe(n, m);
    if (n % m == 0 && n / m >= 3) report.divisible = divisible_bounds(n / m, m);
  }
  report.closed_form = closed_form_for(spec);
  if (compute_exact) report.exact = exact_for(spec, exact_cap);
  return report;
}

struct ProductReport {
  ProductReport(CirculantSpec g_spec, CirculantSpec h_spec)
      : g(std::move(g_spec)), h(std::move(h_spec)), product(lex_product_spec(g, h)) {}

  CirculantSpec g;
  CirculantSpec h;
  CirculantSpec product;
  ProductIdentity identity = ProductIdentity::NotChecked;
  std::int64_t b_g = 0;
  std::pair<std::int64_t, std::int64_t> bounds{0, 0};
  std::optional<SolverResult> exact;

  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    if (identity == ProductIdentity::Mismatch) out.push_back("product spec and generic product differ");
    if (exact) {
      const auto e = static_cast<std::int64_t>(exact->burning_number);
      if (e < bounds.first || e > bounds.second)
        out.push_back("exact " + std::to_string(e) + " outside [" + std::to_string(bounds.first) + ", " +
                      std::to_string(bounds.second) + "]");
    }
    return out;
  }
};

// b(G) comes from the exact solver when |G| <= cap, else from G's closed form.
inline ProductReport product_report(const CirculantSpec& g, const CirculantSpec& h, bool compute_exact,
                                    std::int64_t exact_cap = kDefaultExactCap) {
  ProductReport report(g, h);
  if (compute_exact && report.product.order() > exact_cap)
    throw Error(ErrorCode::ExactCapExceeded, "product order " + std::to_string(report.product.order()) +
                                                 " above exact cap " + std::to_string(exact_cap));
  // Materializing both graphs is quadratic in the order for dense products.
  if (report.product.order() <= kIdentityCheckOrder) report.identity = check_product_identity(g, h);
  if (g.order() <= exact_cap) {
    report.b_g = static_cast<std::int64_t>(exact_burning_number(build_graph(g)).burning_number);
  } else if (auto cf = closed_form_for(g)) {
    report.b_g = cf->value;
  } else {
    throw Error(ErrorCode::ExactCapExceeded, "b(G) has no closed form and |G| exceeds the exact cap");
  }
  report.bounds = product_bounds(report.b_g);
  if (compute_exact) report.exact = exact_burning_number(build_graph(report.product));
  return report;
}

}  // namespace circburn
