#include <doctest.h>

#include <algorithm>
#include <random>

#include "symcheck/kinematics.hpp"

using namespace symcheck;

namespace {

constexpr Vec3 kZ{0, 0, 1};
constexpr Vec3 kX{1, 0, 0};

Sign sign_of(const std::vector<ScalarInvariant>& v, const std::string& name) {
  for (const auto& s : v) {
    if (s.name == name) return s.sign;
  }
  FAIL("missing " << name);
  return Sign::Plus;
}

}  // namespace

TEST_CASE("invariant mass of simple systems") {
  const std::array<FourMomentum, 1> photon{{{2.0, {0, 0, 2.0}}}};
  CHECK(invariant_mass_sq(photon) == 0.0);
  const std::array<FourMomentum, 2> back_to_back{{{3.0, {0, 0, 3.0}}, {3.0, {0, 0, -3.0}}}};
  CHECK(invariant_mass_sq(back_to_back) == 36.0);
  CHECK_THROWS_AS(invariant_mass_sq(std::span<const FourMomentum>{}), std::invalid_argument);
}

TEST_CASE("vacuum transition closed form and verdicts") {
  const TransitionCertificate c = vacuum_transition_feasible(1.0, 2.0, kZ, kX, 0.511);
  CHECK(c.verdict == Verdict::Infeasible);
  CHECK(c.s == doctest::Approx(-4.0));
  CHECK(c.s_closed == doctest::Approx(-4.0));
  CHECK(c.relative_error <= 1e-12);

  const TransitionCertificate marginal = vacuum_transition_feasible(1.0, 3.0, kZ, kZ, 0.0);
  CHECK(marginal.verdict == Verdict::Marginal);
  CHECK(marginal.s == 0.0);
  CHECK(marginal.threshold == 0.0);

  CHECK(vacuum_transition_feasible(1.0, 3.0, kZ, kZ, 1e-3).verdict == Verdict::Infeasible);

  CHECK_THROWS_WITH_AS(vacuum_transition_feasible(2.0, 1.0, kZ, kZ, 1.0), doctest::Contains("omega'"),
                       std::invalid_argument);
  CHECK_THROWS_AS(vacuum_transition_feasible(0.0, 1.0, kZ, kZ, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(vacuum_transition_feasible(1.0, 2.0, {0, 0, 2}, kZ, 1.0), std::invalid_argument);
}

TEST_CASE("property: invariant mass is permutation invariant") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 100; ++i) {
    std::vector<FourMomentum> q;
    for (int k = 0; k < 4; ++k) q.push_back({u(rng), {u(rng), u(rng), u(rng)}});
    const double s = invariant_mass_sq(q);
    std::shuffle(q.begin(), q.end(), rng);
    CHECK(invariant_mass_sq(q) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("property: every random vacuum transition with m > 0 is infeasible") {
  const ScanResult r = scan_vacuum_transitions(0, 10000);
  CHECK(r.draws == 10000);
  CHECK(r.infeasible == r.draws);
  CHECK(r.max_relative_error <= 1e-12);
  CHECK(r.max_s <= 0.0);
  const ScanResult again = scan_vacuum_transitions(0, 10000);
  CHECK(again.max_s == r.max_s);
}

TEST_CASE("scalar invariant sign table") {
  const auto fixed = scalar_invariants(HbarConvention::HbarFixed);
  CHECK(sign_of(fixed, "e^2/(hbar c)") == Sign::Minus);
  CHECK(sign_of(fixed, "hbar c") == Sign::Minus);
  CHECK(sign_of(fixed, "hbar/c") == Sign::Minus);
  CHECK(sign_of(fixed, "m") == Sign::Plus);
  const auto flips = scalar_invariants(HbarConvention::HbarFlips);
  CHECK(sign_of(flips, "e^2/(hbar c)") == Sign::Plus);
  CHECK(sign_of(flips, "hbar c") == Sign::Plus);
  CHECK(sign_of(flips, "hbar/c") == Sign::Plus);
  CHECK(sign_of(flips, "m") == Sign::Plus);
}
