#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "burn.hpp"
#include "circulant.hpp"
#include "error.hpp"
#include "report.hpp"

namespace circburn {

enum class ExitCode : int { Ok = 0, Usage = 1, Mismatch = 2, CapExceeded = 3 };

enum class Family { ThreeRegular, M2, M3, General, Interval, Product };

inline std::string_view family_tag(Family f) {
  switch (f) {
    case Family::ThreeRegular: return "3reg";
    case Family::M2: return "m2";
    case Family::M3: return "m3";
    case Family::General: return "general";
    case Family::Interval: return "interval";
    case Family::Product: return "product";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view tag) {
  for (Family f : {Family::ThreeRegular, Family::M2, Family::M3, Family::General, Family::Interval, Family::Product})
    if (family_tag(f) == tag) return f;
  return std::nullopt;
}

inline bool family_needs_m(Family f) { return f == Family::General || f == Family::Interval; }

// Whether (n, m) lies in the family's domain; campaigns skip instances outside it.
inline bool family_admits(Family f, std::int64_t n, std::int64_t m) {
  switch (f) {
    case Family::ThreeRegular: return n >= 4 && n % 2 == 0;
    case Family::M2: return n >= 5;
    case Family::M3: return n >= 7;
    case Family::General: return m >= 2 && 2 * m < n;
    case Family::Interval: return m >= 2 && n > 2 * m;
    case Family::Product: return false;
  }
  return false;
}

inline CirculantSpec family_spec(Family f, std::int64_t n, std::optional<std::int64_t> m) {
  if (family_needs_m(f) && !m) throw Error(ErrorCode::InvalidArgument, std::string(family_tag(f)) + " needs --m");
  const std::int64_t mv = m.value_or(0);
  if (!family_admits(f, n, mv))
    throw Error(ErrorCode::BadOrder, "n=" + std::to_string(n) + (m ? " m=" + std::to_string(mv) : "") +
                                         " outside family " + std::string(family_tag(f)));
  switch (f) {
    case Family::ThreeRegular: return one_m_spec(n, n / 2);
    case Family::M2: return one_m_spec(n, 2);
    case Family::M3: return one_m_spec(n, 3);
    case Family::General: return one_m_spec(n, mv);
    case Family::Interval: return consecutive_spec(n, mv);
    case Family::Product: break;
  }
  throw Error(ErrorCode::InvalidArgument, "product family needs two sub-specs");
}

// "12:1/6" <-> C(12;1,6).
inline CirculantSpec parse_spec_token(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "spec must look like N:d1/d2");
  const auto to_int = [](std::string_view s) {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer in spec");
    std::size_t used = 0;
    const auto v = std::stoll(std::string(s), &used);
    if (used != s.size()) throw Error(ErrorCode::InvalidArgument, "bad integer '" + std::string(s) + "'");
    return static_cast<std::int64_t>(v);
  };
  const std::int64_t n = to_int(token.substr(0, colon));
  std::vector<std::int64_t> d;
  std::string_view rest = token.substr(colon + 1);
  while (true) {
    const auto slash = rest.find('/');
    d.push_back(to_int(rest.substr(0, slash)));
    if (slash == std::string_view::npos) break;
    rest = rest.substr(slash + 1);
  }
  return normalize_spec(n, d);
}

inline std::string spec_token(const CirculantSpec& spec) {
  std::string out = std::to_string(spec.order()) + ":";
  for (std::size_t i = 0; i < spec.distances().size(); ++i)
    out += (i ? "/" : "") + std::to_string(spec.distances()[i]);
  return out;
}

struct TableRow {
  std::string family;
  std::int64_t n = 0;
  std::string params;
  std::optional<std::int64_t> lb_cubic;
  std::optional<std::int64_t> lb_quad;
  std::optional<std::int64_t> ub;
  std::optional<std::int64_t> closed_form;
  std::optional<std::int64_t> exact;
  std::optional<std::vector<Vertex>> witness;
  bool verified = true;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "family,n,params,lb_cubic,lb_quad,ub,closed_form,exact,witness,verified";

namespace detail {

inline std::string opt_field(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string{}; }

inline std::optional<std::int64_t> parse_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const auto v = std::stoll(s, &used);
  if (used != s.size()) throw Error(ErrorCode::InvalidArgument, "bad integer field '" + s + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline nlohmann::json opt_json(const std::optional<std::int64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

inline std::optional<std::int64_t> json_opt(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

}  // namespace detail

inline std::string to_csv(const TableRow& row) {
  std::string witness;
  if (row.witness)
    for (std::size_t i = 0; i < row.witness->size(); ++i) witness += (i ? ";" : "") + std::to_string((*row.witness)[i]);
  std::ostringstream os;
  os << row.family << ',' << row.n << ',' << row.params << ',' << detail::opt_field(row.lb_cubic) << ','
     << detail::opt_field(row.lb_quad) << ',' << detail::opt_field(row.ub) << ',' << detail::opt_field(row.closed_form)
     << ',' << detail::opt_field(row.exact) << ',' << witness << ',' << (row.verified ? "true" : "false");
  return os.str();
}

inline TableRow parse_csv(const std::string& line) {
  const auto f = detail::split(line, ',');
  if (f.size() != 10) throw Error(ErrorCode::InvalidArgument, "expected 10 CSV fields, got " + std::to_string(f.size()));
  TableRow row;
  row.family = f[0];
  row.n = detail::parse_opt(f[1]).value_or(0);
  row.params = f[2];
  row.lb_cubic = detail::parse_opt(f[3]);
  row.lb_quad = detail::parse_opt(f[4]);
  row.ub = detail::parse_opt(f[5]);
  row.closed_form = detail::parse_opt(f[6]);
  row.exact = detail::parse_opt(f[7]);
  if (!f[8].empty()) {
    std::vector<Vertex> w;
    for (const auto& tok : detail::split(f[8], ';')) w.push_back(static_cast<Vertex>(std::stoul(tok)));
    row.witness = std::move(w);
  }
  if (f[9] != "true" && f[9] != "false") throw Error(ErrorCode::InvalidArgument, "verified must be true/false");
  row.verified = f[9] == "true";
  return row;
}

inline std::string to_jsonl(const TableRow& row) {
  nlohmann::json j;
  j["family"] = row.family;
  j["n"] = row.n;
  j["params"] = row.params;
  j["lb_cubic"] = detail::opt_json(row.lb_cubic);
  j["lb_quad"] = detail::opt_json(row.lb_quad);
  j["ub"] = detail::opt_json(row.ub);
  j["closed_form"] = detail::opt_json(row.closed_form);
  j["exact"] = detail::opt_json(row.exact);
  j["witness"] = row.witness ? nlohmann::json(*row.witness) : nlohmann::json(nullptr);
  j["verified"] = row.verified;
  return j.dump();
}

inline TableRow parse_jsonl(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  TableRow row;
  row.family = j.at("family").get<std::string>();
  row.n = j.at("n").get<std::int64_t>();
  row.params = j.at("params").get<std::string>();
  row.lb_cubic = detail::json_opt(j.at("lb_cubic"));
  row.lb_quad = detail::json_opt(j.at("lb_quad"));
  row.ub = detail::json_opt(j.at("ub"));
  row.closed_form = detail::json_opt(j.at("closed_form"));
  row.exact = detail::json_opt(j.at("exact"));
  if (!j.at("witness").is_null()) row.witness = j.at("witness").get<std::vector<Vertex>>();
  row.verified = j.at("verified").get<bool>();
  return row;
}

enum class OutputFormat { Csv, Jsonl };

inline std::string format_row(const TableRow& row, OutputFormat fmt) {
  return fmt == OutputFormat::Csv ? to_csv(row) : to_jsonl(row);
}

enum class Mode { Formula, Bounds, Exact };

struct InstanceRequest {
  Family family = Family::M2;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::optional<CirculantSpec> g;  // product family only
  std::optional<CirculantSpec> h;
  Mode mode = Mode::Bounds;
  bool exact = false;  // honoured in Bounds mode; Exact mode always solves
  std::int64_t exact_cap = kDefaultExactCap;
};

struct InstanceOutcome {
  TableRow row;
  std::vector<std::string> problems;
};

// The largest distance identifies the instance within every non-product family.
inline std::string family_params(const CirculantSpec& spec) { return "m=" + std::to_string(spec.distances().back()); }

inline InstanceOutcome row_from_report(Family family, const BoundsReport& report) {
  InstanceOutcome out;
  TableRow& row = out.row;
  row.family = std::string(family_tag(family));
  row.n = report.spec.order();
  row.params = family_params(report.spec);
  row.lb_cubic = report.lb_cubic;
  row.lb_quad = report.lb_quad;
  row.ub = report.best_upper();
  if (report.closed_form) row.closed_form = report.closed_form->value;
  row.exact = report.exact_value();

  const FormulaResult* generated = report.closed_form ? &*report.closed_form
                                   : report.ub_stripe ? &*report.ub_stripe
                                                      : nullptr;
  if (generated && generated->sequence) {
    row.witness = generated->sequence->sources();
    row.verified = generated->verified;
  } else if (generated) {
    row.verified = false;
  } else if (report.exact) {
    row.witness = report.exact->witness.sources();
    row.verified = verify_cover(build_graph(report.spec), report.exact->witness);
  }
  out.problems = report.violations();
  if (!row.verified && out.problems.empty()) out.problems.push_back("witness failed verification");
  return out;
}

inline InstanceOutcome row_from_product(const ProductReport& report) {
  InstanceOutcome out;
  TableRow& row = out.row;
  row.family = std::string(family_tag(Family::Product));
  row.n = report.product.order();
  row.params = "G=" + spec_token(report.g) + "|H=" + spec_token(report.h) + "|bG=" + std::to_string(report.b_g);
  row.ub = report.bounds.second;
  if (report.exact) {
    row.exact = static_cast<std::int64_t>(report.exact->burning_number);
    row.witness = report.exact->witness.sources();
    row.verified = verify_cover(build_graph(report.product), report.exact->witness);
    if (!row.verified) out.problems.push_back("product witness failed verification");
  }
  for (auto& p : report.violations()) out.problems.push_back(p);
  return out;
}

inline InstanceOutcome run_instance(const InstanceRequest& req) {
  const bool want_exact = req.mode == Mode::Exact || (req.mode == Mode::Bounds && req.exact);
  if (req.family == Family::Product) {
    if (!req.g || !req.h) throw Error(ErrorCode::InvalidArgument, "product family needs --g and --h");
    return row_from_product(product_report(*req.g, *req.h, want_exact, req.exact_cap));
  }
  const CirculantSpec spec = family_spec(req.family, req.n, req.m);
  return row_from_report(req.family, bounds_report(spec, want_exact, req.exact_cap));
}

struct CampaignRequest {
  Family family = Family::M2;
  std::int64_t n_lo = 0, n_hi = 0;
  std::optional<std::int64_t> m_lo, m_hi;
  bool exact = false;
  std::int64_t exact_cap = kDefaultExactCap;
  OutputFormat format = OutputFormat::Csv;
};

struct CampaignSummary {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t unverified = 0;
  double wall_seconds = 0;
  ExitCode exit = ExitCode::Ok;
};

// Streams one row per admissible (n, m), ordered by n then m.
inline CampaignSummary run_campaign(const CampaignRequest& req, std::ostream& out, std::ostream& err) {
  CampaignSummary summary;
  if (req.family == Family::Product || req.n_lo > req.n_hi ||
      (family_needs_m(req.family) && (!req.m_lo || !req.m_hi || *req.m_lo > *req.m_hi))) {
    err << "circburn: campaign needs a non-product family and nonempty ranges\n";
    summary.exit = ExitCode::Usage;
    return summary;
  }
  if (req.exact && req.n_hi > req.exact_cap) {
    err << "circburn: n up to " << req.n_hi << " exceeds exact cap " << req.exact_cap << '\n';
    summary.exit = ExitCode::CapExceeded;
    return summary;
  }
  const auto start = std::chrono::steady_clock::now();
  if (req.format == OutputFormat::Csv) out << kCsvHeader << '\n';
  const std::int64_t m_lo = family_needs_m(req.family) ? *req.m_lo : 0;
  const std::int64_t m_hi = family_needs_m(req.family) ? *req.m_hi : 0;
  for (std::int64_t n = req.n_lo; n <= req.n_hi; ++n)
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      if (!family_admits(req.family, n, m)) continue;
      InstanceRequest inst;
      inst.family = req.family;
      inst.n = n;
      if (family_needs_m(req.family)) inst.m = m;
      inst.mode = Mode::Bounds;
      inst.exact = req.exact;
      inst.exact_cap = req.exact_cap;
      const auto outcome = run_instance(inst);
      ++summary.instances;
      if (!outcome.row.verified) ++summary.unverified;
      if (!outcome.problems.empty()) {
        ++summary.mismatches;
        for (const auto& p : outcome.problems) err << "mismatch n=" << n << ' ' << outcome.row.params << ": " << p << '\n';
      }
      out << format_row(outcome.row, req.format) << '\n';
    }
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "instances=" << summary.instances << " mismatches=" << summary.mismatches
      << " unverified=" << summary.unverified << " wall=" << std::fixed << std::setprecision(3)
      << summary.wall_seconds << "s\n";
  summary.exit = (summary.mismatches == 0 && summary.unverified == 0) ? ExitCode::Ok : ExitCode::Mismatch;
  return summary;
}

}  // namespace circburn
