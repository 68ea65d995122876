#include <gtest/gtest.h>

#include "circburn/report.hpp"

using namespace circburn;

TEST(BoundsReport, OneTwoTwelve) {
  const auto r = bounds_report(one_m_spec(12, 2), true);
  EXPECT_EQ(r.lb_cubic, 3);
  EXPECT_EQ(r.lb_quad, 3);
  ASSERT_TRUE(r.closed_form);
  EXPECT_EQ(r.closed_form->value, 3);
  EXPECT_EQ(r.exact_value(), 3);
  EXPECT_FALSE(r.ub_stripe.has_value());
  EXPECT_TRUE(r.violations().empty());
}

TEST(BoundsReport, GeneralWithStripe) {
  const auto r = bounds_report(one_m_spec(20, 4), true);
  EXPECT_EQ(r.lb_quad, 4);
  ASSERT_TRUE(r.ub_stripe);
  EXPECT_EQ(r.ub_stripe->value, 5);
  EXPECT_FALSE(r.closed_form.has_value());
  ASSERT_TRUE(r.exact_value());
  EXPECT_GE(*r.exact_value(), 4);
  EXPECT_LE(*r.exact_value(), 5);
  ASSERT_TRUE(r.divisible);
  EXPECT_EQ(r.divisible->first, 3);
  EXPECT_EQ(r.divisible->second, 5);
  EXPECT_EQ(r.best_upper(), 5);
  EXPECT_TRUE(r.violations().empty());
}

TEST(BoundsReport, SmallestThreeRegularIsComplete) {
  const auto r = bounds_report(normalize_spec(4, {1, 2}), true);
  ASSERT_TRUE(r.closed_form);
  EXPECT_EQ(r.closed_form->value, 2);
  EXPECT_EQ(r.exact_value(), 2);
  EXPECT_FALSE(r.lb_quad.has_value());
  EXPECT_TRUE(r.violations().empty());
}

TEST(BoundsReport, DenseSpecHasNoCubicBound) {
  const auto r = bounds_report(consecutive_spec(20, 3), false);
  EXPECT_FALSE(r.lb_cubic.has_value());
  ASSERT_TRUE(r.closed_form);
  EXPECT_EQ(r.closed_form->value, thm_interval(20, 3).value);
}

TEST(BoundsReport, ViolationsAreReported) {
  auto r = bounds_report(one_m_spec(20, 4), false);
  r.closed_form = FormulaResult{9, std::nullopt, false, 0};
  const auto v = r.violations();
  EXPECT_GE(v.size(), 2u);
}

TEST(BoundsReport, ExactCap) {
  try {
    bounds_report(one_m_spec(50, 2), true);
    FAIL() << "expected cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExactCapExceeded);
  }
  EXPECT_NO_THROW(bounds_report(one_m_spec(50, 2), false));
  EXPECT_NO_THROW(bounds_report(one_m_spec(50, 2), true, 50));
}

TEST(ProductReport, ThreeRegularTimesEdge) {
  const auto r = product_report(one_m_spec(12, 6), normalize_spec(2, {1}), true);
  EXPECT_EQ(r.product.order(), 24);
  EXPECT_EQ(r.identity, ProductIdentity::LiteralEquality);
  EXPECT_EQ(r.b_g, 3);
  EXPECT_EQ(r.bounds, (std::pair<std::int64_t, std::int64_t>{3, 5}));
  ASSERT_TRUE(r.exact);
  EXPECT_TRUE(r.violations().empty());
}

TEST(ProductReport, CompleteSquareHitsLowerEnd) {
  const auto r = product_report(normalize_spec(2, {1}), normalize_spec(2, {1}), true);
  EXPECT_EQ(r.product.order(), 4);
  EXPECT_EQ(r.b_g, 2);
  EXPECT_EQ(r.exact->burning_number, 2u);
}

TEST(ProductReport, LargeFactorUsesClosedForm) {
  const auto r = product_report(one_m_spec(500, 2), normalize_spec(9, {1}), false);
  EXPECT_EQ(r.b_g, thm_m2(500).value);
  EXPECT_EQ(r.identity, ProductIdentity::NotChecked);
  EXPECT_FALSE(r.exact.has_value());
}
