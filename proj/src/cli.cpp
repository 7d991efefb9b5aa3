#include "emlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "emlab/report.hpp"
#include "emlab/tighten.hpp"
#include "emlab/verify.hpp"

namespace emlab::cli {

namespace {

enum class Command { Verify, Tighten, Identities, Catalog, Fixture };
enum class OutputFormat { Json, Csv, Both };

struct RunConfig {
  Command command = Command::Verify;
  SamplerConfig sampler;
  std::vector<InequalityId> ids;  // defaults to the whole catalog
  std::string out_path;
  OutputFormat format = OutputFormat::Json;
  int starts = 16;
  int iters = 2000;
  unsigned threads = 0;  // 0 = auto
};

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

// Mutable mirror of the flag set; merged with config-file values after the
// parse (flags win over file, file wins over defaults).
struct FlagValues {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::vector<std::string> ids;
  std::string shape = "uniform";
  double weight_std = 0.5;
  double tol = 1e-9;
  int starts = 16;
  int iters = 2000;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
  std::string config_path;
};

ShapeMode parse_shape(const std::string& name) {
  if (name == "uniform") return ShapeMode::UniformAngles;
  if (name == "near-degenerate") return ShapeMode::NearDegenerate;
  if (name == "near-equilateral") return ShapeMode::NearEquilateral;
  throw CLI::ValidationError("--shape",
                             "expected uniform, near-degenerate, or near-equilateral");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "both") return OutputFormat::Both;
  throw CLI::ValidationError("--format", "expected json, csv, or both");
}

// Overlays config-file values onto flags the user did not set explicitly.
void apply_config_file(const std::string& path, FlagValues& flags,
                       const CLI::App& cmd) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_object()) throw std::runtime_error("config file must hold a JSON object");

  const auto flag_given = [&](const std::string& flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "samples" && !flag_given("--samples")) {
      flags.samples = value.get<std::uint64_t>();
    } else if (key == "seed" && !flag_given("--seed")) {
      flags.seed = value.get<std::uint64_t>();
    } else if (key == "ids" && !flag_given("--ids")) {
      flags.ids = value.get<std::vector<std::string>>();
    } else if (key == "shape" && !flag_given("--shape")) {
      flags.shape = value.get<std::string>();
    } else if (key == "weight_std" && !flag_given("--weight-std")) {
      flags.weight_std = value.get<double>();
    } else if (key == "tol" && !flag_given("--tol")) {
      flags.tol = value.get<double>();
    } else if (key == "starts" && !flag_given("--starts")) {
      flags.starts = value.get<int>();
    } else if (key == "iters" && !flag_given("--iters")) {
      flags.iters = value.get<int>();
    } else if (key == "threads" && !flag_given("--threads")) {
      flags.threads = value.get<unsigned>();
    } else if (key == "out" && !flag_given("--out")) {
      flags.out = value.get<std::string>();
    } else if (key == "format" && !flag_given("--format")) {
      flags.format = value.get<std::string>();
    } else if (key == "samples" || key == "seed" || key == "ids" || key == "shape" ||
               key == "weight_std" || key == "tol" || key == "starts" ||
               key == "iters" || key == "threads" || key == "out" ||
               key == "format") {
      // present but overridden by an explicit flag
    } else {
      throw std::runtime_error("config file: unknown key '" + key + "'");
    }
  }
}

RunConfig finalize(Command command, const FlagValues& flags) {
  RunConfig cfg;
  cfg.command = command;
  cfg.sampler.seed = flags.seed;
  cfg.sampler.n_samples = flags.samples;
  cfg.sampler.weight_log_std = flags.weight_std;
  cfg.sampler.shape_mode = parse_shape(flags.shape);
  cfg.sampler.tolerance_rel = flags.tol;
  cfg.sampler.validate();
  if (flags.ids.empty()) {
    cfg.ids = all_ids();
  } else {
    for (const std::string& name : flags.ids) {
      const auto id = parse_id(name);
      if (!id) throw std::runtime_error("unknown inequality id: " + name);
      cfg.ids.push_back(*id);
    }
  }
  cfg.out_path = flags.out;
  cfg.format = parse_format(flags.format);
  cfg.starts = flags.starts;
  cfg.iters = flags.iters;
  cfg.threads = flags.threads;
  if (cfg.starts < 0 || cfg.iters < 1) {
    throw std::runtime_error("--starts must be >= 0 and --iters >= 1");
  }
  return cfg;
}

std::string swap_extension(const std::string& path, const std::string& ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + ext;
  }
  return path.substr(0, dot) + ext;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << bytes;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// Routes the serialized report to --out / stdout per --format. The csv
// sibling of a json path (and vice versa) gets a swapped extension.
void emit(const RunConfig& cfg, const std::string& json, const std::string& csv,
          std::ostream& out) {
  if (cfg.out_path.empty()) {
    if (cfg.format == OutputFormat::Csv) {
      out << csv;
    } else {
      out << json;
    }
    if (cfg.format == OutputFormat::Both) out << csv;
    return;
  }
  switch (cfg.format) {
    case OutputFormat::Json:
      write_file(cfg.out_path, json);
      break;
    case OutputFormat::Csv:
      write_file(cfg.out_path, csv);
      break;
    case OutputFormat::Both:
      write_file(swap_extension(cfg.out_path, ".json"), json);
      write_file(swap_extension(cfg.out_path, ".csv"), csv);
      break;
  }
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SuiteReport report = run_suite(cfg.sampler, cfg.ids, cfg.threads);
  emit(cfg, suite_report_json(report), suite_report_csv(report), out);
  if (report.has_violations()) {
    err << "violations found; see report\n";
    return kExitViolations;
  }
  return kExitOk;
}

int run_identities(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const IdentityReport report = check_identities(cfg.sampler, cfg.threads);
  emit(cfg, identity_report_json(report), identity_report_csv(report), out);
  if (!report.all_pass()) {
    err << "identity disagreement above tolerance; see report\n";
    return kExitViolations;
  }
  return kExitOk;
}

int run_tighten(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<TightnessResult> results;
  std::vector<EqualityReport> equality;
  bool failed = false;
  for (InequalityId id : cfg.ids) {
    results.push_back(
        minimize_slack(id, cfg.starts, cfg.iters, cfg.sampler.seed, {}, nullptr,
                       cfg.threads));
    equality.push_back(verify_equality_locus(id, 1e-2, 200, cfg.sampler.seed));
    if (results.back().min_slack < -cfg.sampler.tolerance_rel) {
      err << "negative slack for " << info(id).name << "\n";
      failed = true;
    }
    if (std::abs(equality.back().slack_at_canonical) > 1e-12) {
      err << "equality configuration for " << info(id).name
          << " missed zero slack\n";
      failed = true;
    }
  }
  emit(cfg, tightness_report_json(cfg.sampler, cfg.iters, results, equality),
       tightness_report_csv(results), out);
  return failed ? kExitViolations : kExitOk;
}

int run_catalog(const RunConfig& cfg, std::ostream& out) {
  for (const InequalityInfo& entry : catalog()) {
    out << entry.name << "\n  claim:     " << entry.lhs << " >= " << entry.rhs
        << "\n  source:    " << entry.reference << "\n  weights:   ";
    switch (entry.arity) {
      case WeightArity::None:
        out << "none";
        break;
      case WeightArity::XYZ:
        out << "x, y, z (xyz = 1)";
        break;
      case WeightArity::UVW:
        out << "u, v, w (uvw = 1)";
        break;
      case WeightArity::Both:
        out << "x, y, z, u, v, w (xyz = uvw = 1)";
        break;
    }
    out << "\n";
    if (!entry.note.empty()) out << "  note:      " << entry.note << "\n";
  }
  if (!cfg.out_path.empty()) write_file(cfg.out_path, catalog_json());
  return kExitOk;
}

void print_quantity_table(std::ostream& out, const char* title, const Triangle& tri,
                          const BarycentricPoint& bary) {
  const Point2 p = barycentric_to_cartesian(tri, bary);
  const SideLengths s = tri.sides();
  const PointQuantities q = quantities(tri, bary);
  const CircumCircle cc = circumcircle(tri);
  const auto fmt = format_double;
  out << title << "\n"
      << "  A = (" << fmt(tri.A().x) << ", " << fmt(tri.A().y) << ")"
      << "  B = (" << fmt(tri.B().x) << ", " << fmt(tri.B().y) << ")"
      << "  C = (" << fmt(tri.C().x) << ", " << fmt(tri.C().y) << ")\n"
      << "  P = (" << fmt(p.x) << ", " << fmt(p.y) << ")\n"
      << "  a = " << fmt(s.a) << "  b = " << fmt(s.b) << "  c = " << fmt(s.c) << "\n"
      << "  PA = " << fmt(q.pa) << "  PB = " << fmt(q.pb) << "  PC = " << fmt(q.pc)
      << "\n"
      << "  d_a = " << fmt(q.d_a) << "  d_b = " << fmt(q.d_b)
      << "  d_c = " << fmt(q.d_c) << "\n"
      << "  l_a = " << fmt(q.l_a) << "  l_b = " << fmt(q.l_b)
      << "  l_c = " << fmt(q.l_c) << "\n"
      << "  R_A = " << fmt(q.r_a) << "  R_B = " << fmt(q.r_b)
      << "  R_C = " << fmt(q.r_c) << "\n"
      << "  alpha = " << fmt(q.alpha) << "  beta = " << fmt(q.beta)
      << "  gamma = " << fmt(q.gamma) << "\n"
      << "  circumcenter = (" << fmt(cc.center.x) << ", " << fmt(cc.center.y)
      << ")  circumradius = " << fmt(cc.radius) << "\n";
}

int run_fixture(std::ostream& out) {
  const Triangle equilateral{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
  print_quantity_table(out, "unit equilateral triangle, P at the centroid",
                       equilateral, BarycentricPoint{1.0 / 3, 1.0 / 3, 1.0 / 3});
  const Triangle right{{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}};
  const auto bc = cartesian_to_barycentric(right, {1.0, 1.0});
  print_quantity_table(out, "right triangle (0,0) (4,0) (0,3), P = (1,1)", right,
                       BarycentricPoint{bc[0], bc[1], bc[2]});
  return kExitOk;
}

void add_common_flags(CLI::App* cmd, FlagValues& flags, bool sampling, bool search) {
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--ids", flags.ids,
                  "comma-separated inequality ids (default: whole catalog)")
      ->delimiter(',');
  cmd->add_option("--tol", flags.tol, "relative slack tolerance");
  cmd->add_option("--out", flags.out, "output path (stdout when omitted)");
  cmd->add_option("--format", flags.format, "json, csv, or both");
  cmd->add_option("--config", flags.config_path,
                  "JSON config file; explicit flags take precedence");
  if (sampling) {
    cmd->add_option("--samples", flags.samples, "number of sampled configurations");
    cmd->add_option("--shape", flags.shape,
                    "uniform, near-degenerate, or near-equilateral");
    cmd->add_option("--weight-std", flags.weight_std,
                    "stddev of the log-weight draws");
    cmd->add_option("--threads", flags.threads, "worker cap (0 = auto)");
  }
  if (search) {
    cmd->add_option("--starts", flags.starts, "random multistart count");
    cmd->add_option("--iters", flags.iters, "max iterations per local search");
    cmd->add_option("--threads", flags.threads, "worker cap (0 = auto)");
  }
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"numerical laboratory for interior-point triangle inequalities"};
  app.name("emlab");
  app.require_subcommand(1);
  FlagValues flags;

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "sample configurations and evaluate catalog entries");
  add_common_flags(verify_cmd, flags, /*sampling=*/true, /*search=*/false);
  CLI::App* tighten_cmd = app.add_subcommand(
      "tighten", "minimize slack to confirm equality configurations");
  add_common_flags(tighten_cmd, flags, /*sampling=*/false, /*search=*/true);
  CLI::App* identities_cmd = app.add_subcommand(
      "identities", "cross-check the dual-route computations");
  add_common_flags(identities_cmd, flags, /*sampling=*/true, /*search=*/false);
  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "list the inequality catalog");
  catalog_cmd->add_option("--out", flags.out, "write machine-readable JSON here");
  app.add_subcommand("fixture", "print the reference quantity tables");

  std::vector<std::string> cli_args(args.begin() + 1, args.end());
  std::reverse(cli_args.begin(), cli_args.end());  // CLI11 wants reversed argv
  try {
    app.parse(cli_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const CLI::App* active = app.get_subcommands().front();
    Command command = Command::Fixture;
    if (active == verify_cmd) command = Command::Verify;
    else if (active == tighten_cmd) command = Command::Tighten;
    else if (active == identities_cmd) command = Command::Identities;
    else if (active == catalog_cmd) command = Command::Catalog;

    if (!flags.config_path.empty()) {
      apply_config_file(flags.config_path, flags, *active);
    }
    const RunConfig cfg = finalize(command, flags);
    switch (cfg.command) {
      case Command::Verify:
        return run_verify(cfg, out, err);
      case Command::Tighten:
        return run_tighten(cfg, out, err);
      case Command::Identities:
        return run_identities(cfg, out, err);
      case Command::Catalog:
        return run_catalog(cfg, out);
      case Command::Fixture:
        return run_fixture(out);
    }
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return parse_and_dispatch(args, std::cout, std::cerr);
}

}  // namespace emlab::cli
