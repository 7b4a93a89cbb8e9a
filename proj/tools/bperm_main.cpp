#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bperm/counting.hpp"
#include "bperm/draconian.hpp"
#include "bperm/errors.hpp"
#include "bperm/expression.hpp"
#include "bperm/io.hpp"
#include "bperm/limits.hpp"
#include "bperm/numeric.hpp"
#include "bperm/oracle.hpp"
#include "bperm/svg.hpp"
#include "bperm/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonArgs {
  std::string instance_path;
  std::string format = "json";
  int max_n = 0;      // 0: keep defaults
  int max_terms = 0;  // 0: keep defaults
};

bperm::Limits make_limits(const CommonArgs& args) {
  bperm::Limits limits;
  if (args.max_n > 0) {
    limits.max_formula_dim = args.max_n;
    limits.max_oracle_dim = std::min(limits.max_oracle_dim, args.max_n);
  }
  if (args.max_terms > 0) limits.max_terms = args.max_terms;
  return limits;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_format = true) {
  cmd->add_option("instance", args.instance_path, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  if (with_format)
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  cmd->add_option("--max-n", args.max_n, "override the dimension guard");
  cmd->add_option("--max-terms", args.max_terms, "override the term-count guard");
}

ordered_json make_report(const std::string& command, const bperm::MinkowskiExpression& p) {
  ordered_json report;
  report["command"] = command;
  report["digest"] = bperm::instance_digest(p);
  report["result"] = ordered_json::object();
  return report;
}

void emit(const ordered_json& report, const std::string& format,
          const std::string& csv_body) {
  if (format == "csv")
    std::cout << csv_body;
  else
    std::cout << report.dump(2) << "\n";
}

ordered_json octant_json(const bperm::OctantLabel& t) { return ordered_json(t.entries()); }

int cmd_count(const CommonArgs& args, bool shifted) {
  const bperm::Limits limits = make_limits(args);
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  ordered_json report = make_report("count", p);
  std::string csv;
  if (shifted) {
    const bperm::ShiftedCount count = bperm::count_shifted_type_b(p, limits);
    report["result"]["shifted"] = true;
    report["result"]["count"] = bperm::to_decimal(count.total);
    report["octants"] = ordered_json::array();
    csv = "total," + bperm::to_decimal(count.total) + "\n";
    for (const auto& [octant, value] : count.octants) {
      ordered_json entry;
      entry["octant"] = octant_json(octant);
      entry["count"] = bperm::to_decimal(value);
      report["octants"].push_back(std::move(entry));
      csv += "octant," + bperm::octant_token(octant) + "," + bperm::to_decimal(value) + "\n";
    }
  } else {
    const bperm::Int count = bperm::count_type_b(p, limits);
    report["result"]["shifted"] = false;
    report["result"]["count"] = bperm::to_decimal(count);
    csv = "total," + bperm::to_decimal(count) + "\n";
  }
  emit(report, args.format, csv);
  return 0;
}

int cmd_ehrhart(const CommonArgs& args) {
  const bperm::Limits limits = make_limits(args);
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  const bperm::EhrhartPolynomial poly = bperm::ehrhart(p, limits);
  ordered_json report = make_report("ehrhart", p);
  report["result"]["coefficients"] = ordered_json::array();
  for (const bperm::Rational& c : poly.coeffs)
    report["result"]["coefficients"].push_back(bperm::to_fraction(c));
  emit(report, args.format, poly.str() + "\n");
  return 0;
}

int cmd_volume(const CommonArgs& args, bool normalized) {
  const bperm::Limits limits = make_limits(args);
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  const bperm::Rational vol = bperm::volume(p, limits);
  ordered_json report = make_report("volume", p);
  std::string csv;
  if (normalized) {
    const bperm::Rational nvol = bperm::Rational(bperm::factorial(p.n())) * vol;
    report["result"]["normalized_volume"] = bperm::to_fraction(nvol);
    csv = bperm::to_fraction(nvol) + "\n";
  } else {
    report["result"]["volume"] = bperm::to_fraction(vol);
    csv = bperm::to_fraction(vol) + "\n";
  }
  emit(report, args.format, csv);
  return 0;
}

int cmd_draconian(const CommonArgs& args, const std::string& octant_arg, bool cap1) {
  const bperm::Limits limits = make_limits(args);
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  // Capped sequences are in bijection with shifted lattice points only at
  // unit coefficients, so --cap1 expands y_i-fold repetitions first; each
  // column then stands for one unit summand.
  const bperm::MinkowskiExpression q = cap1 ? p.unit_expanded() : p;
  ordered_json report = make_report("draconian", p);
  report["result"]["capped"] = cap1;
  report["result"]["columns"] = ordered_json::array();
  for (const bperm::Term& term : q.terms())
    report["result"]["columns"].push_back(term.set.entries());
  std::string csv;

  auto sequences_for = [&](const bperm::OctantLabel& t) {
    bperm::GroundFamily family(bperm::restrict(q, t).carriers(),
                               bperm::ground_range(1, q.n()), limits);
    return cap1 ? bperm::draconian_capped(family, q.n(), 0, limits)
                : bperm::enumerate_draconian(family, q.n(), 0, limits);
  };
  auto csv_row = [](const bperm::DraconianSequence& a) {
    std::string row;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) row += ",";
      row += std::to_string(a[i]);
    }
    return row;
  };

  if (!octant_arg.empty()) {
    const bperm::OctantLabel t = bperm::parse_octant_arg(octant_arg, q.n());
    report["result"]["octant"] = octant_json(t);
    report["result"]["sequences"] = ordered_json::array();
    for (const auto& a : sequences_for(t)) {
      report["result"]["sequences"].push_back(a);
      csv += csv_row(a) + "\n";
    }
  } else {
    report["result"]["octants"] = ordered_json::array();
    for (const bperm::OctantLabel& t : bperm::all_octants(q.n(), limits)) {
      ordered_json entry;
      entry["octant"] = octant_json(t);
      entry["sequences"] = ordered_json::array();
      for (const auto& a : sequences_for(t)) {
        entry["sequences"].push_back(a);
        csv += bperm::octant_token(t) + "," + csv_row(a) + "\n";
      }
      report["result"]["octants"].push_back(std::move(entry));
    }
  }
  emit(report, args.format, csv);
  return 0;
}

int cmd_transversals(const CommonArgs& args) {
  const bperm::Limits limits = make_limits(args);
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  const bperm::Int count = bperm::transversal_count_shifted(p, limits);
  const bperm::Int nvol = bperm::transversal_nvol(p, limits);
  ordered_json report = make_report("transversals", p);
  report["result"]["shifted_count"] = bperm::to_decimal(count);
  report["result"]["normalized_volume"] = bperm::to_decimal(nvol);
  emit(report, args.format,
       "shifted_count," + bperm::to_decimal(count) + "\nnormalized_volume," +
           bperm::to_decimal(nvol) + "\n");
  return 0;
}

int cmd_verify(const CommonArgs& args, unsigned trials, std::uint64_t seed) {
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  bperm::VerifyOptions options;
  options.trials = trials;
  options.seed = seed;
  options.limits = make_limits(args);
  const std::vector<bperm::CheckResult> checks = bperm::run_verification(p, options);

  ordered_json report = make_report("verify", p);
  std::string csv;
  int failed = 0;
  report["result"]["checks"] = ordered_json::array();
  for (const bperm::CheckResult& r : checks) {
    ordered_json entry;
    entry["name"] = r.name;
    entry["pass"] = r.pass;
    if (!r.pass) {
      entry["detail"] = r.detail;
      ++failed;
    }
    report["result"]["checks"].push_back(std::move(entry));
    csv += r.name + "," + (r.pass ? "pass" : "FAIL") + (r.pass ? "" : "," + r.detail) + "\n";
  }
  report["result"]["passed"] = static_cast<int>(checks.size()) - failed;
  report["result"]["failed"] = failed;
  emit(report, args.format, csv);
  return failed == 0 ? 0 : 3;
}

int cmd_render(const CommonArgs& args, const std::string& output_path) {
  const bperm::Limits limits = make_limits(args);
  const bperm::MinkowskiExpression p = bperm::load_instance(args.instance_path);
  const std::string svg = bperm::render_svg(p, limits);
  std::ofstream out(output_path, std::ios::binary);
  if (!out) bperm::fail(bperm::Errc::parse_error, "cannot write " + output_path);
  out << svg;
  out.close();
  ordered_json report = make_report("render", p);
  report["result"]["output"] = output_path;
  emit(report, args.format, "output," + output_path + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice-point counts, Ehrhart polynomials and volumes of signed "
               "Minkowski sums of coordinate simplices"};
  app.require_subcommand(1);

  CommonArgs args;
  bool shifted = false, cap1 = false, normalized = false;
  std::string octant_arg, output_path;
  unsigned trials = 0;
  std::uint64_t seed = 42;

  CLI::App* count = app.add_subcommand("count", "lattice points of P (or of P minus the unit cube)");
  add_common(count, args);
  count->add_flag("--shifted", shifted, "count P minus the unit cube, with octant breakdown");

  CLI::App* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of P");
  add_common(ehr, args);

  CLI::App* vol = app.add_subcommand("volume", "volume of P");
  add_common(vol, args);
  vol->add_flag("--normalized", normalized, "report n! times the volume");

  CLI::App* dra = app.add_subcommand("draconian", "per-octant sequence enumeration");
  add_common(dra, args);
  dra->add_option("--octant", octant_arg, "restrict to one octant, e.g. \"1,-2\"");
  dra->add_flag("--cap1", cap1, "only sequences with every entry at most 1");

  CLI::App* tra = app.add_subcommand("transversals", "transversal-sum count and normalized volume");
  add_common(tra, args);

  CLI::App* ver = app.add_subcommand("verify", "cross-check formulas against the oracle");
  add_common(ver, args);
  ver->add_option("--trials", trials, "additional random instances")->capture_default_str();
  ver->add_option("--seed", seed, "random seed")->capture_default_str();

  CLI::App* ren = app.add_subcommand("render", "SVG picture of a planar instance");
  add_common(ren, args, /*with_format=*/false);
  ren->add_option("-o,--output", output_path, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 covers --help; all usage errors map to 1
  }

  const auto started = std::chrono::steady_clock::now();
  int status = 0;
  std::string command;
  try {
    if (count->parsed()) command = "count", status = cmd_count(args, shifted);
    else if (ehr->parsed()) command = "ehrhart", status = cmd_ehrhart(args);
    else if (vol->parsed()) command = "volume", status = cmd_volume(args, normalized);
    else if (dra->parsed()) command = "draconian", status = cmd_draconian(args, octant_arg, cap1);
    else if (tra->parsed()) command = "transversals", status = cmd_transversals(args);
    else if (ver->parsed()) command = "verify", status = cmd_verify(args, trials, seed);
    else if (ren->parsed()) command = "render", status = cmd_render(args, output_path);
  } catch (const bperm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bperm::is_guard_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  // Timing goes to stderr so reports stay byte-identical across runs.
  std::cerr << "bperm: " << command << " finished in " << elapsed.count() << " ms\n";
  return status;
}
