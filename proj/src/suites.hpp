#pragma once

// Internal: per-suite check builders used by run().

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symcheck/gamma.hpp"
#include "symcheck/numeric.hpp"
#include "symcheck/report.hpp"

namespace symcheck::detail {

struct Outcome {
  bool pass = false;
  std::string details;
};

class CheckList {
 public:
  explicit CheckList(std::string suite) : suite_(std::move(suite)) {}

  /// Evaluates fn; an exception becomes a failure carrying its message.
  void add(const std::string& name, std::string description, std::string paper_ref,
           const std::function<Outcome()>& fn);

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::uint64_t suite_seed(std::uint64_t seed, std::string_view suite);

/// Fixed-precision formatting so reports are byte-stable.
std::string fmt(double v);

inline Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v{g(rng), g(rng), g(rng)};
  return scale(v, 1.0 / norm(v));
}

/// Unit vector orthogonal to the unit vector n.
inline Vec3 random_transverse(std::mt19937_64& rng, const Vec3& n) {
  Vec3 v = random_unit(rng);
  v = v - scale(n, dot(v, n));
  return scale(v, 1.0 / norm(v));
}

inline Point4 random_point(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  return {u(rng), u(rng), u(rng), u(rng)};
}

inline Outcome pass(std::string details = {}) { return {true, std::move(details)}; }
inline Outcome fail(std::string details) { return {false, std::move(details)}; }
inline Outcome verdict(bool ok, std::string details) { return {ok, std::move(details)}; }

/// Adds one check per gamma identity ("gamma<dim>-<key>") and a construction
/// check. Returns the set, or nullopt when construction failed.
std::optional<GammaSet> checked_gamma_set(CheckList& out, std::size_t dim, const RunConfig& config);

std::vector<CheckResult> run_group_suite(const RunConfig& config);
std::vector<CheckResult> run_maxwell_suite(const RunConfig& config);
std::vector<CheckResult> run_photon_suite(const RunConfig& config);
std::vector<CheckResult> run_electron_suite(const RunConfig& config);
std::vector<CheckResult> run_kinematics_suite(const RunConfig& config);

}  // namespace symcheck::detail
