// circburn: burning numbers of circulant graphs from the command line.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "circburn/circburn.hpp"

namespace {

using namespace circburn;

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "range must look like A..B, got '" + text + "'");
  }
}

struct Options {
  std::string family;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  bool exact = false;
  std::int64_t exact_cap = kDefaultExactCap;
  std::string format = "csv";
  std::string out;
  std::string n_range;
  std::string m_range;
  std::string seq;
  std::string g;
  std::string h;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

OutputFormat output_format(const Options& o) { return o.format == "jsonl" ? OutputFormat::Jsonl : OutputFormat::Csv; }

Family require_family(const Options& o) {
  const auto f = parse_family(o.family);
  if (!f) throw Error(ErrorCode::InvalidArgument, "unknown family '" + o.family + "'");
  return *f;
}

InstanceRequest instance_request(const Options& o, Mode mode) {
  InstanceRequest req;
  req.family = require_family(o);
  req.n = o.n;
  req.m = o.m;
  req.mode = mode;
  req.exact = o.exact;
  req.exact_cap = o.exact_cap;
  if (!o.g.empty()) req.g = parse_spec_token(o.g);
  if (!o.h.empty()) req.h = parse_spec_token(o.h);
  return req;
}

int emit_instance(const Options& o, const InstanceOutcome& outcome) {
  Output out(o.out);
  const auto fmt = output_format(o);
  if (fmt == OutputFormat::Csv) out.stream() << kCsvHeader << '\n';
  out.stream() << format_row(outcome.row, fmt) << '\n';
  for (const auto& p : outcome.problems) std::cerr << "mismatch: " << p << '\n';
  return static_cast<int>(outcome.problems.empty() ? ExitCode::Ok : ExitCode::Mismatch);
}

int run_verify(const Options& o) {
  const Family family = require_family(o);
  const CirculantSpec spec = family_spec(family, o.n, o.m);
  const GenericGraph graph = build_graph(spec);
  BurnSequence seq;
  if (!o.seq.empty()) {
    std::vector<Vertex> sources;
    for (const auto& tok : detail::split(o.seq, ',')) sources.push_back(static_cast<Vertex>(std::stoul(tok)));
    seq = BurnSequence(std::move(sources));
  } else {
    auto generated = closed_form_for(spec);
    if (!generated && spec.is_one_m()) generated = ub_stripe(spec.order(), spec.distances()[1]);
    if (!generated || !generated->sequence) {
      std::cerr << "circburn: no generated sequence for " << spec.to_string() << "; pass --seq\n";
      return static_cast<int>(ExitCode::Usage);
    }
    seq = *generated->sequence;
  }
  const bool ok = verify_cover(graph, seq);
  Output out(o.out);
  out.stream() << spec.to_string() << " k=" << seq.length() << " sequence=" << seq.to_string()
               << " verified=" << (ok ? "true" : "false") << '\n';
  return static_cast<int>(ok ? ExitCode::Ok : ExitCode::Mismatch);
}

int run_table(const Options& o) {
  CampaignRequest req;
  req.family = require_family(o);
  if (o.n_range.empty()) throw Error(ErrorCode::InvalidArgument, "table needs --n-range");
  std::tie(req.n_lo, req.n_hi) = parse_range(o.n_range);
  if (!o.m_range.empty()) {
    const auto [lo, hi] = parse_range(o.m_range);
    req.m_lo = lo;
    req.m_hi = hi;
  } else if (o.m) {
    req.m_lo = req.m_hi = *o.m;
  }
  req.exact = o.exact;
  req.exact_cap = o.exact_cap;
  req.format = output_format(o);
  Output out(o.out);
  return static_cast<int>(run_campaign(req, out.stream(), std::cerr).exit);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burning numbers of circulant graphs: exact search, closed forms, and bounds"};
  app.require_subcommand(1);
  // -h would collide with the --h product factor.
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;

  const auto add_instance_flags = [&o](CLI::App* sub, bool with_exact_flag) {
    sub->add_option("--family", o.family, "3reg | m2 | m3 | general | interval | product")->required();
    sub->add_option("--n", o.n, "Number of vertices");
    sub->add_option("--m", o.m, "Second distance (general) or largest distance (interval)");
    sub->add_option("--g", o.g, "Product factor G as N:d1/d2/...");
    sub->add_option("--h", o.h, "Product factor H as N:d1/d2/...");
    if (with_exact_flag) sub->add_flag("--exact", o.exact, "Also run the exact solver");
    sub->add_option("--exact-cap", o.exact_cap, "Largest order handed to the exact solver")->capture_default_str();
    sub->add_option("--format", o.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
    sub->add_option("--out", o.out, "Write rows to PATH instead of stdout");
  };

  auto* exact = app.add_subcommand("exact", "Exact burning number of one instance");
  add_instance_flags(exact, false);
  auto* formula = app.add_subcommand("formula", "Closed form and generated sequence of one instance");
  add_instance_flags(formula, false);
  auto* bounds = app.add_subcommand("bounds", "All applicable bounds for one instance");
  add_instance_flags(bounds, true);
  auto* product = app.add_subcommand("product", "Lexicographic product G.H of two circulants");
  add_instance_flags(product, true);
  product->get_option("--family")->required(false)->default_val("product");
  auto* verify = app.add_subcommand("verify", "Check a burning sequence with verify_cover");
  add_instance_flags(verify, false);
  verify->add_option("--seq", o.seq, "Comma-separated sources; defaults to the generated sequence");
  auto* table = app.add_subcommand("table", "Campaign over parameter ranges");
  add_instance_flags(table, true);
  table->add_option("--n-range", o.n_range, "A..B");
  table->add_option("--m-range", o.m_range, "A..B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  try {
    if (*exact) return emit_instance(o, run_instance(instance_request(o, Mode::Exact)));
    if (*formula) return emit_instance(o, run_instance(instance_request(o, Mode::Formula)));
    if (*bounds) return emit_instance(o, run_instance(instance_request(o, Mode::Bounds)));
    if (*product) {
      o.family = "product";
      return emit_instance(o, run_instance(instance_request(o, Mode::Bounds)));
    }
    if (*verify) return run_verify(o);
    if (*table) return run_table(o);
  } catch (const Error& e) {
    std::cerr << "circburn: " << e.what() << '\n';
    return static_cast<int>(e.code() == ErrorCode::ExactCapExceeded ? ExitCode::CapExceeded : ExitCode::Usage);
  } catch (const std::exception& e) {
    std::cerr << "circburn: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }
  return static_cast<int>(ExitCode::Usage);
}
