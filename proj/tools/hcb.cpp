// hcb: harmonic chain barcodes from the command line.
//
// Exit codes: 0 success, 1 unreadable or invalid input, 2 internal invariant
// violation (or harmonic/ordinary endpoint mismatch in `compare`), 3 a
// verification reported FAIL.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcb/barcode_io.hpp"
#include "hcb/errors.hpp"
#include "hcb/filtration.hpp"
#include "hcb/fuzz.hpp"
#include "hcb/harmonic_engine.hpp"
#include "hcb/ordinary_persistence.hpp"
#include "hcb/oracle.hpp"
#include "hcb/stability.hpp"

namespace {

using nlohmann::json;
using namespace hcb;

constexpr int kParseError = 1;
constexpr int kInternalError = 2;
constexpr int kVerifyFailed = 3;

struct Output {
  std::string format = "text";
  std::optional<int> degree;

  bool json() const { return format == "json"; }
  bool keep(int p) const { return !degree || *degree == p; }
};

void add_output_options(CLI::App* command, Output& out) {
  command->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  command->add_option("--degree", out.degree, "Only report bars of this degree");
}

Filtration load_filtration(const std::string& path) {
  if (path == "-") return parse_filtration(std::cin);
  return parse_filtration_file(path);
}

Barcode filtered(const Barcode& barcode, const Output& out) {
  Barcode result{barcode.m, {}};
  for (const auto& bar : barcode.bars) {
    if (out.keep(bar.degree)) result.bars.push_back(bar);
  }
  return result;
}

std::vector<OrdinaryBar> filtered(const std::vector<OrdinaryBar>& bars, const Output& out) {
  std::vector<OrdinaryBar> result;
  for (const auto& bar : bars) {
    if (out.keep(bar.degree)) result.push_back(bar);
  }
  return result;
}

json failures_json(const oracle::Report& report) {
  json out = json::array();
  for (const auto& f : report.failures) {
    out.push_back({{"condition", std::string(1, f.condition)},
                   {"bar", f.bar ? json(*f.bar) : json(nullptr)},
                   {"prefix", f.prefix},
                   {"degree", f.degree},
                   {"detail", f.detail}});
  }
  return out;
}

json report_json(const oracle::Report& report, std::size_t m, std::size_t bars) {
  return {{"status", report.pass() ? "PASS" : "FAIL"},
          {"m", m},
          {"bars", bars},
          {"failures", failures_json(report)}};
}

void print_failures_text(const oracle::Report& report) {
  for (const auto& f : report.failures) {
    std::cout << "  (" << f.condition << ") degree " << f.degree << " prefix " << f.prefix;
    if (f.bar) std::cout << " bar " << *f.bar;
    std::cout << ": " << f.detail << '\n';
  }
}

std::string interval_text(std::size_t birth, std::size_t death) {
  return "[" + std::to_string(birth) + "," + std::to_string(death) + "]";
}

struct ComputeArgs {
  std::string input;
  Output out;
  bool with_representatives = false;
  bool verify = false;
  std::uint64_t seed = 1;
  std::size_t norm_trials = 20;
};

int run_compute(const ComputeArgs& args) {
  const Filtration filtration = load_filtration(args.input);
  const Barcode barcode = compute_harmonic_barcode(filtration);
  const TimestampMap tau = filtration.timestamps();
  const Barcode shown = filtered(barcode, args.out);

  std::optional<oracle::Report> report;
  if (args.verify) {
    std::mt19937_64 rng(args.seed);
    report = verify_barcode(filtration, barcode, args.norm_trials, rng);
  }

  if (args.out.json()) {
    json doc = barcode_to_json(shown, tau);
    if (report) doc["verification"] = report_json(*report, barcode.m, barcode.bars.size());
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& bar : shown.bars) {
      std::cout << bar_to_text(bar, tau, args.with_representatives) << '\n';
    }
    if (report) {
      std::cout << "# verification " << (report->pass() ? "PASS" : "FAIL") << '\n';
      print_failures_text(*report);
    }
  }
  return report && !report->pass() ? kVerifyFailed : 0;
}

struct OrdinaryArgs {
  std::string input;
  Output out;
};

int run_ordinary(const OrdinaryArgs& args) {
  const Filtration filtration = load_filtration(args.input);
  const TimestampMap tau = filtration.timestamps();
  const auto bars = filtered(compute_ordinary_barcode(filtration), args.out);
  if (args.out.json()) {
    std::cout << ordinary_to_json(bars, filtration.size(), tau).dump(2) << '\n';
  } else {
    for (const auto& bar : bars) std::cout << ordinary_bar_to_text(bar, tau) << '\n';
  }
  return 0;
}

int run_compare(const OrdinaryArgs& args) {
  const Filtration filtration = load_filtration(args.input);
  const TimestampMap tau = filtration.timestamps();
  const Barcode harmonic = filtered(compute_harmonic_barcode(filtration), args.out);
  const auto ordinary = filtered(compute_ordinary_barcode(filtration), args.out);
  const oracle::Report law = oracle::check_endpoint_law(harmonic, ordinary);

  if (args.out.json()) {
    json doc = {{"m", filtration.size()},
                {"harmonic", barcode_to_json(harmonic, tau)["bars"]},
                {"ordinary", ordinary_to_json(ordinary, filtration.size(), tau)["bars"]},
                {"endpoints_agree", law.pass()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::set<int> degrees;
    for (const auto& bar : harmonic.bars) degrees.insert(bar.degree);
    for (const auto& bar : ordinary) degrees.insert(bar.degree);
    for (int p : degrees) {
      std::cout << "degree " << p << '\n' << "  harmonic:";
      for (const auto& bar : harmonic.bars) {
        if (bar.degree == p) std::cout << ' ' << interval_text(bar.birth, bar.death);
      }
      std::cout << "\n  ordinary:";
      for (const auto& bar : ordinary) {
        if (bar.degree == p) std::cout << ' ' << interval_text(bar.birth, bar.death);
      }
      std::cout << '\n';
    }
    std::cout << "endpoints " << (law.pass() ? "agree" : "DIFFER") << '\n';
  }
  return law.pass() ? 0 : kInternalError;
}

struct VerifyArgs {
  std::string input;
  std::string barcode;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::size_t max_m = 40;
  std::size_t count = 1;
  int max_dim = 3;
  std::size_t vertices = 7;
  std::size_t norm_trials = 20;
};

int print_fuzz(const std::vector<FuzzCase>& cases, const FuzzOptions& options,
               const std::string& format) {
  std::size_t failed = 0;
  for (const auto& c : cases) failed += c.pass() ? 0 : 1;
  if (format == "json") {
    json list = json::array();
    for (const auto& c : cases) {
      json item = {{"seed", c.seed},
                   {"m", c.m},
                   {"bars", c.bars},
                   {"status", c.pass() ? "PASS" : "FAIL"},
                   {"failures", failures_json(c.report)}};
      if (!c.error.empty()) item["error"] = c.error;
      list.push_back(std::move(item));
    }
    json doc = {{"status", failed == 0 ? "PASS" : "FAIL"},
                {"seed", options.seed},
                {"count", options.count},
                {"max_m", options.max_m},
                {"passed", cases.size() - failed},
                {"failed", failed},
                {"cases", std::move(list)}};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& c : cases) {
      std::cout << "seed " << c.seed << " m=" << c.m << " bars=" << c.bars << ' '
                << (c.pass() ? "PASS" : "FAIL") << '\n';
      if (!c.error.empty()) std::cout << "  error: " << c.error << '\n';
      print_failures_text(c.report);
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << ' ' << cases.size() - failed << '/'
              << cases.size() << '\n';
  }
  return failed == 0 ? 0 : kVerifyFailed;
}

int run_verify(const VerifyArgs& args) {
  if (args.input.empty()) {
    if (!args.seed) throw CLI::ValidationError("verify", "give a filtration file or --seed");
    FuzzOptions options;
    options.seed = *args.seed;
    options.count = args.count;
    options.max_m = args.max_m;
    options.max_dim = args.max_dim;
    options.vertices = args.vertices;
    options.norm_trials = args.norm_trials;
    return print_fuzz(run_fuzz(options, thread_limit()), options, args.format);
  }

  const Filtration filtration = load_filtration(args.input);
  Barcode barcode;
  if (args.barcode.empty()) {
    barcode = compute_harmonic_barcode(filtration);
  } else {
    std::ifstream in(args.barcode);
    if (!in) throw ParseError("cannot open '" + args.barcode + "'");
    try {
      barcode = barcode_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }
  std::mt19937_64 rng(args.seed.value_or(1));
  oracle::Report report;
  if (barcode.m != filtration.size()) {
    report.failures.push_back({'b', std::nullopt, barcode.m, 0,
                               "barcode was computed for m = " + std::to_string(barcode.m) +
                                   ", filtration has m = " + std::to_string(filtration.size())});
  }
  report.merge(verify_barcode(filtration, barcode, args.norm_trials, rng));
  if (args.format == "json") {
    std::cout << report_json(report, filtration.size(), barcode.bars.size()).dump(2) << '\n';
  } else {
    std::cout << (report.pass() ? "PASS" : "FAIL") << '\n';
    print_failures_text(report);
  }
  return report.pass() ? 0 : kVerifyFailed;
}

struct BottleneckArgs {
  std::string first;
  std::string second;
  Output out;
};

int run_bottleneck(const BottleneckArgs& args) {
  const auto a = parse_diagram_file(args.first);
  const auto b = parse_diagram_file(args.second);
  std::set<int> degrees;
  for (const auto& d : {&a, &b}) {
    for (const auto& interval : *d) degrees.insert(interval.degree);
  }
  if (args.out.degree) degrees = {*args.out.degree};

  json per_degree = json::object();
  ExtendedRational worst = Rational(0);
  for (int p : degrees) {
    std::vector<RealInterval> da;
    std::vector<RealInterval> db;
    for (const auto& x : a) {
      if (x.degree == p) da.push_back(x);
    }
    for (const auto& x : b) {
      if (x.degree == p) db.push_back(x);
    }
    const ExtendedRational d = bottleneck_distance(da, db);
    worst = std::max(worst, d);
    per_degree[std::to_string(p)] = to_fraction_string(d);
    if (!args.out.json()) std::cout << "degree " << p << ": " << to_fraction_string(d) << '\n';
  }
  if (args.out.json()) {
    std::cout << json{{"per_degree", per_degree}, {"max", to_fraction_string(worst)}}.dump(2)
              << '\n';
  } else {
    std::cout << "max: " << to_fraction_string(worst) << '\n';
  }
  return 0;
}

struct StabilityArgs {
  std::string complex;
  std::string f;
  std::string g;
};

int run_stability(const StabilityArgs& args) {
  const auto complex = parse_complex_file(args.complex);
  const auto f = parse_vertex_function_file(args.f);
  const auto g = parse_vertex_function_file(args.g);
  const StabilityReport report = stability_experiment(complex, f, g);
  json per_degree = json::object();
  for (const auto& [p, d] : report.per_degree) per_degree[std::to_string(p)] = to_fraction_string(d);
  json doc = {{"per_degree", per_degree},
              {"max_distance", to_fraction_string(report.max_distance)},
              {"sup_norm", to_fraction_string(report.sup_norm)},
              {"bound_holds", report.bound_holds}};
  std::cout << doc.dump(2) << '\n';
  return report.bound_holds ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic chain barcodes of simplex-wise filtrations"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Harmonic chain barcode with representatives");
  cmd_compute->add_option("filtration", compute.input, "Filtration file ('-' for stdin)")->required();
  add_output_options(cmd_compute, compute.out);
  cmd_compute->add_flag("--with-representatives", compute.with_representatives,
                        "Append representatives in text mode");
  cmd_compute->add_flag("--verify", compute.verify, "Certify the result against the oracle");
  cmd_compute->add_option("--seed", compute.seed, "Seed for the norm perturbations")
      ->capture_default_str();
  cmd_compute->add_option("--norm-trials", compute.norm_trials, "Perturbations per representative")
      ->capture_default_str();

  OrdinaryArgs ordinary;
  auto* cmd_ordinary = app.add_subcommand("ordinary", "Ordinary persistence barcode");
  cmd_ordinary->add_option("filtration", ordinary.input, "Filtration file ('-' for stdin)")
      ->required();
  add_output_options(cmd_ordinary, ordinary.out);

  OrdinaryArgs compare;
  auto* cmd_compare =
      app.add_subcommand("compare", "Harmonic and ordinary barcodes side by side");
  cmd_compare->add_option("filtration", compare.input, "Filtration file ('-' for stdin)")
      ->required();
  add_output_options(cmd_compare, compare.out);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Certify a barcode, or random filtrations when only --seed is given");
  cmd_verify->add_option("filtration", verify.input, "Filtration file ('-' for stdin)");
  cmd_verify->add_option("--barcode", verify.barcode, "Barcode JSON to certify instead of computing");
  cmd_verify->add_option("--format", verify.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd_verify->add_option("--seed", verify.seed, "Seed (random mode, and norm perturbations)");
  cmd_verify->add_option("--max-m", verify.max_m, "Random mode: insertions per filtration")
      ->capture_default_str();
  cmd_verify->add_option("--count", verify.count, "Random mode: number of filtrations")
      ->capture_default_str();
  cmd_verify->add_option("--max-dim", verify.max_dim, "Random mode: top dimension")
      ->capture_default_str();
  cmd_verify->add_option("--vertices", verify.vertices, "Random mode: vertex budget")
      ->capture_default_str();
  cmd_verify->add_option("--norm-trials", verify.norm_trials, "Perturbations per representative")
      ->capture_default_str();

  VerifyArgs fuzz;
  fuzz.count = 200;
  fuzz.format = "text";
  auto* cmd_fuzz = app.add_subcommand("fuzz", "Verify many seeded random filtrations");
  cmd_fuzz->add_option("--seed", fuzz.seed, "First seed; instance k uses seed + k");
  cmd_fuzz->add_option("--count", fuzz.count, "Number of filtrations")->capture_default_str();
  cmd_fuzz->add_option("--max-m", fuzz.max_m, "Insertions per filtration")->capture_default_str();
  cmd_fuzz->add_option("--max-dim", fuzz.max_dim, "Top dimension")->capture_default_str();
  cmd_fuzz->add_option("--vertices", fuzz.vertices, "Vertex budget")->capture_default_str();
  cmd_fuzz->add_option("--norm-trials", fuzz.norm_trials, "Perturbations per representative")
      ->capture_default_str();
  cmd_fuzz->add_option("--format", fuzz.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  BottleneckArgs bottleneck;
  auto* cmd_bottleneck = app.add_subcommand(
      "bottleneck", "Per-degree bottleneck distance of two diagrams or barcode JSON files");
  cmd_bottleneck->add_option("first", bottleneck.first, "Diagram file")->required();
  cmd_bottleneck->add_option("second", bottleneck.second, "Diagram file")->required();
  add_output_options(cmd_bottleneck, bottleneck.out);

  StabilityArgs stability;
  auto* cmd_stability = app.add_subcommand(
      "stability", "Bottleneck distance of lower-star harmonic barcodes against ||f - g||");
  cmd_stability->add_option("complex", stability.complex, "Complex file")->required();
  cmd_stability->add_option("f", stability.f, "Vertex function file")->required();
  cmd_stability->add_option("g", stability.g, "Vertex function file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseError;
  }

  try {
    if (cmd_compute->parsed()) return run_compute(compute);
    if (cmd_ordinary->parsed()) return run_ordinary(ordinary);
    if (cmd_compare->parsed()) return run_compare(compare);
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_fuzz->parsed()) {
      if (!fuzz.seed) fuzz.seed = 1;
      return run_verify(fuzz);
    }
    if (cmd_bottleneck->parsed()) return run_bottleneck(bottleneck);
    if (cmd_stability->parsed()) return run_stability(stability);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const MissingFaceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DegreeMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return 0;
}
