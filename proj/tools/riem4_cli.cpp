#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "builtin_scenarios.hpp"
#include "riem4/scenario.hpp"
#include "riem4/toml_lite.hpp"

namespace fs = std::filesystem;
using riem4::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw riem4::ConfigError("cannot open scenario file '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_scenario_document(const std::string& spec) {
  std::string text;
  bool is_toml = false;
  if (fs::exists(spec)) {
    text = read_file(spec);
    is_toml = fs::path(spec).extension() == ".toml";
  } else {
    const auto& builtins = riem4::builtin_scenarios();
    auto it = builtins.find(spec);
    if (it == builtins.end())
      throw riem4::ConfigError("'" + spec + "' is neither a file nor a bundled scenario (see 'list')");
    text = it->second;
  }
  try {
    if (is_toml) return riem4::toml_lite::parse(text);
    return json::parse(text);
  } catch (const riem4::toml_lite::ParseError& e) {
    throw riem4::ConfigError(std::string("TOML parse error: ") + e.what());
  } catch (const json::parse_error& e) {
    throw riem4::ConfigError(std::string("JSON parse error: ") + e.what());
  }
}

void write_csv_tables(const json& report, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& check : report["checks"]) {
    if (!check.contains("convergence")) continue;
    fs::path file = dir / (report["scenario"].get<std::string>() + "_" +
                           check["name"].get<std::string>() + ".csv");
    std::ofstream out(file);
    out << "resolution,residual\n";
    for (const auto& row : check["convergence"])
      out << row["resolution"].get<int>() << "," << row["residual"].get<double>() << "\n";
  }
}

int run_command(const std::string& spec, int resolution, double tol_scale, bool deterministic,
                const std::string& out_path, const std::string& csv_dir) {
  riem4::Scenario scenario = riem4::parse_scenario(load_scenario_document(spec));
  riem4::RunOptions opt;
  opt.resolution = resolution;
  opt.tolerance_scale = tol_scale;
  opt.deterministic = deterministic;
  riem4::ScenarioReport report = riem4::run_scenario(scenario, opt);
  std::cout << report.document.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw riem4::ConfigError("cannot write report to '" + out_path + "'");
    out << report.document.dump(2) << "\n";
  }
  if (!csv_dir.empty()) write_csv_tables(report.document, csv_dir);
  return report.pass ? kExitPass : kExitCheckFailed;
}

int list_command(const std::string& filter) {
  for (const auto& [name, text] : riem4::builtin_scenarios()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    std::string desc;
    try {
      desc = json::parse(text).value("description", std::string());
    } catch (const json::parse_error&) {
    }
    std::cout << name << "\n";
    if (!desc.empty()) std::cout << "    " << desc << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for 4-dimensional Riemannian curvature identities"};
  app.require_subcommand(1);

  std::string scenario_spec, out_path, csv_dir, filter;
  int resolution = 0;
  double tol_scale = 1.0;
  bool deterministic = false;

  auto* run = app.add_subcommand("run", "run a scenario file or bundled scenario");
  run->add_option("scenario", scenario_spec, "path to a .json/.toml scenario, or a bundled name")
      ->required();
  run->add_option("--resolution", resolution, "override quadrature resolution per axis");
  run->add_option("--tolerance-scale", tol_scale, "multiply all check tolerances");
  run->add_flag("--deterministic", deterministic, "record the deterministic-reduction flag");
  run->add_option("--out", out_path, "write the JSON report here as well as stdout");
  run->add_option("--csv", csv_dir, "write convergence tables as CSV files into this directory");

  auto* list = app.add_subcommand("list", "list bundled scenarios");
  list->add_option("--filter", filter, "substring filter on scenario names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return run_command(scenario_spec, resolution, tol_scale, deterministic, out_path, csv_dir);
    return list_command(filter);
  } catch (const riem4::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitConfigError;
  }
}
