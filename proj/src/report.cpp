#include "symcheck/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "suites.hpp"

namespace symcheck {

namespace detail {

void CheckList::add(const std::string& name, std::string description, std::string paper_ref,
                    const std::function<Outcome()>& fn) {
  CheckResult r;
  r.id = suite_ + "." + name;
  r.suite = suite_;
  r.description = std::move(description);
  r.paper_ref = std::move(paper_ref);
  try {
    Outcome o = fn();
    r.status = o.pass ? Status::Pass : Status::Fail;
    r.details = std::move(o.details);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.details = std::string("exception: ") + e.what();
  }
  if (r.status == Status::Fail && r.details.empty()) r.details = "check failed";
  results_.push_back(std::move(r));
}

std::uint64_t suite_seed(std::uint64_t seed, std::string_view suite) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : suite) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  // splitmix64 finalizer
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

}  // namespace detail

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites{"group", "maxwell", "photon", "electron", "kinematics"};
  return suites;
}

void RunConfig::validate() const {
  if (suites.empty()) throw ConfigError("suites: at least one suite is required");
  for (const auto& s : suites) {
    if (s != "all" && std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end()) {
      throw ConfigError("suites: unknown suite '" + s + "'");
    }
  }
  if (samples == 0) throw ConfigError("samples: must be positive");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance: must be positive");
  if (!(lambda.norm() == 1 && (lambda.is_real() || sgn(lambda.re()) == 0))) {
    throw ConfigError("lambda: must be one of 1, -1, i, -i");
  }
  if (tamper && tamper->dim != 4 && tamper->dim != 8) throw ConfigError("tamper: dimension must be 4 or 8");
}

std::vector<std::string> RunConfig::resolved_suites() const {
  const bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
  std::vector<std::string> out;
  for (const auto& s : known_suites()) {
    if (all || std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
  }
  return out;
}

std::optional<ExactComplex> parse_lambda(std::string_view text) {
  if (text == "1" || text == "+1") return ExactComplex(1);
  if (text == "-1") return ExactComplex(-1);
  if (text == "i" || text == "+i") return ExactComplex::i();
  if (text == "-i") return -ExactComplex::i();
  return std::nullopt;
}

std::string lambda_string(const ExactComplex& lambda) { return lambda.str(); }

std::optional<PotentialRuleChoice> parse_potential_rule(std::string_view text) {
  if (text == "unchanged") return PotentialRuleChoice::Unchanged;
  if (text == "signflip") return PotentialRuleChoice::SignFlip;
  if (text == "both") return PotentialRuleChoice::Both;
  return std::nullopt;
}

std::string to_string(PotentialRuleChoice r) {
  switch (r) {
    case PotentialRuleChoice::Unchanged:
      return "unchanged";
    case PotentialRuleChoice::SignFlip:
      return "signflip";
    case PotentialRuleChoice::Both:
      return "both";
  }
  return "?";
}

Summary VerificationReport::summary() const {
  Summary s;
  s.total = checks.size();
  s.passed = static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Pass; }));
  s.failed = s.total - s.passed;
  return s;
}

VerificationReport run(const RunConfig& config) {
  config.validate();
  using SuiteFn = std::vector<CheckResult> (*)(const RunConfig&);
  auto runner = [](const std::string& name) -> SuiteFn {
    if (name == "group") return detail::run_group_suite;
    if (name == "maxwell") return detail::run_maxwell_suite;
    if (name == "photon") return detail::run_photon_suite;
    if (name == "electron") return detail::run_electron_suite;
    return detail::run_kinematics_suite;
  };

  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& name : config.resolved_suites()) {
    jobs.push_back(std::async(std::launch::async, runner(name), std::cref(config)));
  }
  VerificationReport report;
  report.config = config;
  for (auto& j : jobs) {
    auto part = j.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

std::string to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  const RunConfig& c = report.config;
  ordered_json cfg;
  cfg["suites"] = c.resolved_suites();
  cfg["samples"] = c.samples;
  cfg["seed"] = c.seed;
  cfg["tolerance"] = c.tolerance;
  cfg["lambda"] = lambda_string(c.lambda);
  cfg["potential_rule"] = to_string(c.potential_rule);

  ordered_json checks = ordered_json::array();
  for (const auto& r : report.checks) {
    ordered_json j;
    j["id"] = r.id;
    j["suite"] = r.suite;
    j["description"] = r.description;
    j["paper_ref"] = r.paper_ref;
    j["status"] = r.status == Status::Pass ? "pass" : "fail";
    j["details"] = r.details;
    checks.push_back(std::move(j));
  }
  const Summary s = report.summary();
  ordered_json out;
  out["version"] = std::string(kReportVersion);
  out["config"] = std::move(cfg);
  out["checks"] = std::move(checks);
  out["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  return out.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& r : report.checks) {
    os << (r.status == Status::Pass ? "PASS " : "FAIL ") << r.id << "  " << r.description;
    if (!r.details.empty()) os << "  [" << r.details << ']';
    os << '\n';
  }
  const Summary s = report.summary();
  os << "\ntotal:  " << s.total << "\npassed: " << s.passed << "\nfailed: " << s.failed << '\n';
  return os.str();
}

void emit(const VerificationReport& report, ReportFormat format, const std::string& path) {
  const std::string body = format == ReportFormat::Json ? to_json(report) : to_text(report);
  if (path.empty() || path == "-") {
    std::cout << body << std::flush;
    if (!std::cout) throw IoError("cannot write report to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << body;
  f.close();
  if (!f) throw IoError("error writing " + path);
}

}  // namespace symcheck
