// symcheck verify: run the verification suites and print or save the report.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcheck/report.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<std::string> split_suites(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and sampled checks of discrete symmetries of the Maxwell and Dirac equations"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  std::string lambda = "-i";
  std::string rule = "both";
  std::string json_path;
  verify->add_option("--suite", suites, "group, maxwell, photon, electron, kinematics or all (repeatable, comma-separated)");
  verify->add_option("--samples", samples, "random draws per sampled check")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--tolerance", tolerance, "relative tolerance of floating-point spot checks")->capture_default_str();
  verify->add_option("--lambda", lambda, "conjugation phase: 1, -1, i or -i")->capture_default_str();
  verify->add_option("--potential-rule", rule, "charged-equation potential rule: unchanged, signflip or both")
      ->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report to this path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  symcheck::RunConfig config;
  if (!suites.empty()) config.suites = split_suites(suites);
  config.samples = samples;
  config.seed = seed;
  config.tolerance = tolerance;
  const auto lam = symcheck::parse_lambda(lambda);
  if (!lam) {
    std::cerr << "error: lambda: expected one of 1, -1, i, -i, got '" << lambda << "'\n";
    return kExitUsage;
  }
  config.lambda = *lam;
  const auto pr = symcheck::parse_potential_rule(rule);
  if (!pr) {
    std::cerr << "error: potential-rule: expected unchanged, signflip or both, got '" << rule << "'\n";
    return kExitUsage;
  }
  config.potential_rule = *pr;

  symcheck::VerificationReport report;
  try {
    report = symcheck::run(config);
  } catch (const symcheck::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (json_path == "-") {
      symcheck::emit(report, symcheck::ReportFormat::Json, "-");
    } else {
      symcheck::emit(report, symcheck::ReportFormat::Text, "-");
      if (!json_path.empty()) symcheck::emit(report, symcheck::ReportFormat::Json, json_path);
    }
  } catch (const symcheck::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return report.all_passed() ? 0 : kExitFailures;
}
