#include <algorithm>
#include <cmath>
#include <sstream>

#include "suites.hpp"
#include "symcheck/kinematics.hpp"

namespace symcheck::detail {

std::vector<CheckResult> run_kinematics_suite(const RunConfig& config) {
  CheckList out("kinematics");
  const double tol = config.tolerance;
  const std::uint64_t seed = suite_seed(config.seed, "kinematics");

  out.add("invariant-mass-examples", "s = 0 for one photon and 36 for a back-to-back pair of energy 3",
          "kinematics/invariant-mass", [&] {
            const std::array<FourMomentum, 1> photon{{{2.0, {0, 0, 2.0}}}};
            const std::array<FourMomentum, 2> pair{{{3.0, {0, 0, 3.0}}, {3.0, {0, 0, -3.0}}}};
            const double a = invariant_mass_sq(photon);
            const double b = invariant_mass_sq(pair);
            return verdict(a == 0.0 && b == 36.0, "s = " + fmt(a) + ", " + fmt(b));
          });

  const ScanResult scan = scan_vacuum_transitions(seed, 100 * config.samples);
  out.add("vacuum-infeasible-scan", "no vacuum photon pair reaches the pair threshold for m > 0",
          "kinematics/vacuum-infeasible", [&] {
            std::ostringstream os;
            os << scan.infeasible << " of " << scan.draws << " draws infeasible";
            return verdict(scan.draws == 100 * config.samples && scan.infeasible == scan.draws, os.str());
          });
  out.add("closed-form", "s = 2 hbar^2 w w' (n.n' - 1) <= 0 matches the direct evaluation", "kinematics/closed-form",
          [&] {
            return verdict(scan.max_relative_error <= tol && scan.max_s <= 0.0,
                           "max relative error " + fmt(scan.max_relative_error) + ", max s " + fmt(scan.max_s));
          });
  out.add("marginal-collinear", "collinear photons with m = 0 sit exactly at the threshold",
          "kinematics/marginal", [&] {
            const TransitionCertificate c = vacuum_transition_feasible(1.0, 3.0, {0, 0, 1}, {0, 0, 1}, 0.0);
            return verdict(c.verdict == Verdict::Marginal, c.str());
          });

  auto table = [](HbarConvention conv, const std::vector<std::pair<std::string, Sign>>& expected) {
    const auto got = scalar_invariants(conv);
    std::ostringstream os;
    bool ok = got.size() == expected.size();
    for (const auto& [name, sign] : expected) {
      const auto it = std::find_if(got.begin(), got.end(), [&](const ScalarInvariant& s) { return s.name == name; });
      if (it == got.end()) {
        ok = false;
        os << name << " missing; ";
        continue;
      }
      os << name << ' ' << to_string(it->sign) << "; ";
      ok = ok && it->sign == sign;
    }
    return verdict(ok, os.str());
  };
  out.add("scalar-invariants-hbar-fixed", "with hbar fixed, e^2/(hbar c), hbar c and hbar/c flip while m does not",
          "kinematics/scalar-signs-hbar-fixed", [&] {
            return table(HbarConvention::HbarFixed,
                         {{"e^2/(hbar c)", Sign::Minus}, {"hbar c", Sign::Minus}, {"hbar/c", Sign::Minus}, {"m", Sign::Plus}});
          });
  out.add("scalar-invariants-hbar-flips", "with hbar flipping, every listed scalar keeps its sign",
          "kinematics/scalar-signs-hbar-flips", [&] {
            return table(HbarConvention::HbarFlips,
                         {{"e^2/(hbar c)", Sign::Plus}, {"hbar c", Sign::Plus}, {"hbar/c", Sign::Plus}, {"m", Sign::Plus}});
          });
  return out.take();
}

}  // namespace symcheck::detail
