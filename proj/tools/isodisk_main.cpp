// isodisk command line: run scenario files, list presets, or run the
// built-in selftest anchor suite.
//
// Exit codes: 0 all checks pass, 1 an inequality failed beyond tolerance
// (report still written), 2 scenario schema violation, 3 checker
// precondition failure, 4 I/O failure.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "isodisk/runner.hpp"
#include "isodisk/version.hpp"

namespace {

struct CommonOpts {
  std::string out = "-";
  std::string format = "json";
  isodisk::Overrides overrides;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_grid) {
  cmd->add_option("--out", opts.out, "Report path ('-' for stdout)");
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  if (with_grid) {
    cmd->add_option_function<int>(
        "--grid-nr", [&opts](int v) { opts.overrides.nr = v; },
        "Radial quadrature nodes");
    cmd->add_option_function<int>(
        "--grid-ntheta", [&opts](int v) { opts.overrides.ntheta = v; },
        "Angular quadrature nodes");
    cmd->add_option_function<int>(
        "--levels", [&opts](int v) { opts.overrides.nlevels = v; },
        "Level-set ladder size");
    cmd->add_option_function<double>(
        "--tol", [&opts](double v) { opts.overrides.tolerance = v; },
        "Check tolerance override");
  }
  cmd->add_option_function<unsigned long>(
      "--seed", [&opts](unsigned long v) { opts.overrides.seed = v; },
      "Seed for randomized anchors");
}

int emit_and_code(const isodisk::ReportDocument& doc, const CommonOpts& opts) {
  isodisk::emit(doc, opts.format, opts.out);
  for (const isodisk::CheckEntry& e : doc.checks)
    std::cerr << (e.report.pass ? "pass " : "FAIL ") << e.report.name
              << "  slack=" << isodisk::fmt_double(e.report.slack) << "\n";
  return doc.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isodisk: numerical checks for isoperimetric inequalities on "
               "the unit disk"};
  app.set_version_flag("--version", isodisk::kVersion);
  app.require_subcommand(1);

  CommonOpts check_opts, self_opts;
  std::string scenario_path;

  CLI::App* check = app.add_subcommand("check", "Run a scenario file");
  check->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  add_common(check, check_opts, true);

  CLI::App* presets = app.add_subcommand("presets", "Preset utilities");
  CLI::App* presets_list =
      presets->add_subcommand("list", "List boundary/metric presets");
  presets->require_subcommand(1);

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the equality-anchor suite");
  add_common(selftest, self_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return emit_and_code(
          isodisk::run_scenario_file(scenario_path, check_opts.overrides),
          check_opts);
    }
    if (presets_list->parsed()) {
      for (const auto& [name, blurb] : isodisk::preset_list())
        std::cout << name << "\t" << blurb << "\n";
      return 0;
    }
    if (selftest->parsed()) {
      const unsigned long seed = self_opts.overrides.seed.value_or(20240601ul);
      return emit_and_code(isodisk::run_selftest(seed), self_opts);
    }
  } catch (const isodisk::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const isodisk::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const isodisk::InvalidInput& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
