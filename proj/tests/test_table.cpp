#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "circburn/table.hpp"

using namespace circburn;

namespace {

std::optional<std::int64_t> maybe(std::mt19937& rng) {
  if (rng() % 3 == 0) return std::nullopt;
  return static_cast<std::int64_t>(rng() % 1000);
}

TableRow random_row(std::mt19937& rng) {
  static const char* families[] = {"3reg", "m2", "m3", "general", "interval", "product"};
  TableRow row;
  row.family = families[rng() % 6];
  row.n = static_cast<std::int64_t>(rng() % 100000);
  row.params = row.family == "product" ? "G=12:1/6|H=2:1|bG=3" : "m=" + std::to_string(rng() % 50);
  row.lb_cubic = maybe(rng);
  row.lb_quad = maybe(rng);
  row.ub = maybe(rng);
  row.closed_form = maybe(rng);
  row.exact = maybe(rng);
  if (rng() % 4) {
    std::vector<Vertex> w(1 + rng() % 8);
    for (auto& v : w) v = rng() % 1000;
    row.witness = w;
  }
  row.verified = rng() % 2;
  return row;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(TableRow, CsvRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto row = random_row(rng);
    ASSERT_EQ(parse_csv(to_csv(row)), row) << to_csv(row);
  }
}

TEST(TableRow, JsonlRoundTrip) {
  std::mt19937 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto row = random_row(rng);
    ASSERT_EQ(parse_jsonl(to_jsonl(row)), row) << to_jsonl(row);
  }
}

TEST(TableRow, CsvLayout) {
  TableRow row;
  row.family = "m2";
  row.n = 12;
  row.params = "m=2";
  row.lb_cubic = 3;
  row.lb_quad = 3;
  row.closed_form = 3;
  row.exact = 3;
  row.witness = std::vector<Vertex>{10, 3, 0};
  EXPECT_EQ(to_csv(row), "m2,12,m=2,3,3,,3,3,10;3;0,true");
  EXPECT_THROW(parse_csv("m2,12,m=2"), std::exception);
}

TEST(SpecToken, RoundTrip) {
  const auto s = parse_spec_token("12:1/6");
  EXPECT_EQ(s, one_m_spec(12, 6));
  EXPECT_EQ(spec_token(s), "12:1/6");
  EXPECT_THROW(parse_spec_token("12"), Error);
  EXPECT_THROW(parse_spec_token("12:0"), Error);
}

TEST(Families, TagsAndAdmission) {
  for (auto f : {Family::ThreeRegular, Family::M2, Family::M3, Family::General, Family::Interval, Family::Product})
    EXPECT_EQ(parse_family(family_tag(f)), f);
  EXPECT_FALSE(parse_family("nope"));
  EXPECT_TRUE(family_admits(Family::ThreeRegular, 4, 0));
  EXPECT_FALSE(family_admits(Family::ThreeRegular, 5, 0));
  EXPECT_TRUE(family_admits(Family::General, 9, 4));
  EXPECT_FALSE(family_admits(Family::General, 8, 4));
  EXPECT_TRUE(family_admits(Family::Interval, 9, 4));
  EXPECT_FALSE(family_admits(Family::Interval, 8, 4));
}

TEST(RunInstance, Examples) {
  InstanceRequest req;
  req.family = Family::M2;
  req.n = 12;
  req.mode = Mode::Exact;
  const auto a = run_instance(req);
  // ub comes from the divisible bracket, since 12 = 2 * 6.
  EXPECT_EQ(to_csv(a.row), "m2,12,m=2,3,3,4,3,3,10;3;0,true");
  EXPECT_TRUE(a.problems.empty());

  req.family = Family::ThreeRegular;
  req.n = 4;
  req.mode = Mode::Formula;
  EXPECT_EQ(run_instance(req).row.closed_form, 2);

  req.family = Family::General;
  req.n = 20;
  req.m = 4;
  req.mode = Mode::Bounds;
  const auto c = run_instance(req);
  EXPECT_EQ(c.row.lb_quad, 4);
  EXPECT_EQ(c.row.ub, 5);
  EXPECT_FALSE(c.row.exact);
  EXPECT_TRUE(c.row.verified);

  req.family = Family::Product;
  req.g = one_m_spec(12, 6);
  req.h = normalize_spec(2, {1});
  req.mode = Mode::Exact;
  const auto d = run_instance(req);
  EXPECT_EQ(d.row.params, "G=12:1/6|H=2:1|bG=3");
  EXPECT_EQ(d.row.ub, 5);
  EXPECT_TRUE(d.problems.empty());
}

TEST(RunCampaign, OneTwoSweepAgreesWithSolver) {
  CampaignRequest req;
  req.family = Family::M2;
  req.n_lo = 5;
  req.n_hi = 40;
  req.exact = true;
  std::ostringstream out, err;
  const auto s = run_campaign(req, out, err);
  EXPECT_EQ(s.exit, ExitCode::Ok) << err.str();
  EXPECT_EQ(s.instances, 36u);
  EXPECT_EQ(count_lines(out.str()), 37u);
  EXPECT_NE(err.str().find("instances=36 mismatches=0 unverified=0"), std::string::npos);
}

TEST(RunCampaign, DeterministicOutput) {
  CampaignRequest req;
  req.family = Family::General;
  req.n_lo = 9;
  req.n_hi = 30;
  req.m_lo = 2;
  req.m_hi = 6;
  req.exact = true;
  req.format = OutputFormat::Jsonl;
  std::ostringstream a, b, err;
  EXPECT_EQ(run_campaign(req, a, err).exit, ExitCode::Ok) << err.str();
  EXPECT_EQ(run_campaign(req, b, err).exit, ExitCode::Ok);
  EXPECT_EQ(a.str(), b.str());
  // Rows come ordered by n, then m.
  std::istringstream in(a.str());
  std::string line;
  std::pair<std::int64_t, std::string> prev{0, ""};
  while (std::getline(in, line)) {
    const auto row = parse_jsonl(line);
    const std::pair<std::int64_t, std::string> key{row.n, row.params};
    if (row.n == prev.first) ASSERT_LT(std::stoi(prev.second.substr(2)), std::stoi(row.params.substr(2)));
    else ASSERT_GT(row.n, prev.first);
    prev = key;
  }
}

TEST(RunCampaign, ExitCodes) {
  std::ostringstream out, err;
  CampaignRequest cap;
  cap.family = Family::M2;
  cap.n_lo = 5;
  cap.n_hi = 60;
  cap.exact = true;
  EXPECT_EQ(run_campaign(cap, out, err).exit, ExitCode::CapExceeded);

  CampaignRequest usage;
  usage.family = Family::Interval;
  usage.n_lo = 5;
  usage.n_hi = 10;
  EXPECT_EQ(run_campaign(usage, out, err).exit, ExitCode::Usage);
  usage.family = Family::Product;
  EXPECT_EQ(run_campaign(usage, out, err).exit, ExitCode::Usage);
}
