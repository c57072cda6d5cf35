#pragma once

// Suite runner and report serialization.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symcheck/exact.hpp"
#include "symcheck/gamma.hpp"

namespace symcheck {

enum class Status { Pass, Fail };

struct CheckResult {
  std::string id;  // "<suite>.<short-name>"
  std::string suite;
  std::string description;
  std::string paper_ref;
  Status status = Status::Fail;
  std::string details;
};

enum class PotentialRuleChoice { Unchanged, SignFlip, Both };

/// Test hook: replace one gamma matrix before the identities are checked.
struct GammaTamper {
  std::size_t dim = 4;  // 4 or 8
  GammaOverride override;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> suites{"all"};
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  ExactComplex lambda{0, -1};
  PotentialRuleChoice potential_rule = PotentialRuleChoice::Both;
  std::optional<GammaTamper> tamper;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  /// Suite names to run, in canonical order, with "all" expanded.
  std::vector<std::string> resolved_suites() const;
};

/// group, maxwell, photon, electron, kinematics.
const std::vector<std::string>& known_suites();

std::optional<ExactComplex> parse_lambda(std::string_view text);
std::string lambda_string(const ExactComplex& lambda);
std::optional<PotentialRuleChoice> parse_potential_rule(std::string_view text);
std::string to_string(PotentialRuleChoice r);

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;  // sorted by id

  Summary summary() const;
  bool all_passed() const { return summary().failed == 0; }
};

inline constexpr std::string_view kReportVersion = "1.0";

/// Runs the selected suites concurrently; the result is deterministic for a config.
VerificationReport run(const RunConfig& config);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

enum class ReportFormat { Text, Json };

/// Writes to path, or to stdout when path is empty or "-". Throws IoError.
void emit(const VerificationReport& report, ReportFormat format, const std::string& path = "-");

}  // namespace symcheck
