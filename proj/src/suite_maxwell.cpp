#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "suites.hpp"
#include "symcheck/maxwell.hpp"

namespace symcheck::detail {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::vector<CheckResult> run_maxwell_suite(const RunConfig& config) {
  CheckList out("maxwell");
  std::mt19937_64 rng(suite_seed(config.seed, "maxwell"));
  const double tol = config.tolerance;
  const LinearFieldSystem sys = build_maxwell_system();
  const FieldOperatorSet ops = build_field_operators();

  out.add("system-shape", "14 independent equations in 16 components and their derivatives",
          "maxwell-system/shape", [&] {
            const std::size_t r = rank(sys.rows);
            std::ostringstream os;
            os << sys.equation_count() << " rows, " << sys.rows.cols() << " columns, rank " << r;
            return verdict(sys.equation_count() == 14 && sys.rows.cols() == kSystemWidth && r == 14, os.str());
          });

  for (const auto& op : canonical_symmetries(ops)) {
    out.add("invariance-" + lower(op.name()), op.name() + " maps the system onto its own row space",
            "maxwell-symmetry/invariance", [&] {
              const InvarianceResult r = check_invariance(sys, op);
              return verdict(r.invariant, r.summary);
            });
  }

  out.add("mutation-control", "flipping only E with the P1 arguments breaks invariance",
          "maxwell-symmetry/mutation-control", [&] {
            ComponentSigns signs;
            signs.e = Sign::Minus;
            const FieldOperator bad("P1*", {Sign::Plus, Sign::Minus, Sign::Plus}, signs, false);
            const InvarianceResult r = check_invariance(sys, bad);
            return verdict(!r.invariant, r.invariant ? "mutated operator was accepted" : "rejected: " + r.summary);
          });

  out.add("plane-wave-residual", "random transverse plane waves solve the free equations",
          "maxwell-plane-wave/solution", [&] {
            std::uniform_real_distribution<double> k(0.1, 10.0);
            double worst = 0.0;
            for (std::size_t i = 0; i < config.samples; ++i) {
              const Vec3 n = random_unit(rng);
              const Vec3 l = scale(random_transverse(rng, n), k(rng));
              const PlaneWaveEM w = PlaneWaveEM::make(l, n, k(rng), i % 2 ? Sign::Plus : Sign::Minus);
              worst = std::max(worst, plane_wave_residual(w, sys) / (norm(l) * w.k0()));
            }
            return verdict(worst <= tol, "max relative residual " + fmt(worst));
          });

  out.add("wrong-m-control", "a wave with m = -(n x l) violates the equations", "maxwell-plane-wave/control", [&] {
    const PlaneWaveEM wrong({1, 0, 0}, {0, -1, 0}, {0, 0, 1}, 1.0, Sign::Plus);
    const double r = plane_wave_residual(wrong, sys);
    return verdict(r > 1.0, "residual " + fmt(r));
  });

  out.add("transversality-rejected", "a longitudinal polarization is rejected", "maxwell-plane-wave/transversality",
          [&] {
            try {
              PlaneWaveEM::make({0, 0, 1}, {0, 0, 1}, 1.0, Sign::Plus);
            } catch (const std::invalid_argument& e) {
              return pass(e.what());
            }
            return fail("n.l != 0 accepted");
          });

  const FieldOperator ce = classical_charge_conjugation(ops);
  out.add("ce-components", "C_e negates every component of random field vectors", "classical-conjugation/negation",
          [&] {
            std::normal_distribution<double> g;
            for (std::size_t i = 0; i < config.samples; ++i) {
              std::array<Complex, kFieldComponents> phi{};
              for (std::size_t k = 0; k < kFieldComponents; ++k) {
                if (k != slot::kZero0 && k != slot::kZero1) phi[k] = Complex(g(rng), g(rng));
              }
              const auto t = apply_component_signs(ce, phi);
              for (std::size_t k = 0; k < kFieldComponents; ++k) {
                if (t[k] != -phi[k]) return fail("component " + std::to_string(k) + " not negated");
              }
            }
            return pass();
          });
  out.add("ce-involution", "C_e applied twice is the identity", "classical-conjugation/involution",
          [&] { return verdict(ce.compose(ce).is_identity(), "C_e^2"); });
  out.add("ce-commutes", "C_e commutes with all 16 symmetries", "classical-conjugation/commutes", [&] {
    for (const auto& op : canonical_symmetries(ops)) {
      if (!(ce.compose(op) == op.compose(ce))) return fail("C_e does not commute with " + op.name());
    }
    return pass();
  });

  out.add("energy-poynting-invariant", "W and S are unchanged by C_e on sampled plane waves",
          "classical-conjugation/energy-flux", [&] {
            std::uniform_real_distribution<double> k(0.1, 10.0);
            double worst = 0.0;
            for (std::size_t i = 0; i < config.samples; ++i) {
              const Vec3 n = random_unit(rng);
              const PlaneWaveEM w = PlaneWaveEM::make(scale(random_transverse(rng, n), k(rng)), n, k(rng),
                                                      i % 2 ? Sign::Plus : Sign::Minus);
              const PlaneWaveEM cw = classical_conjugate(w);
              for (int j = 0; j < 10; ++j) {
                const Point4 x = random_point(rng, 10.0);
                const EnergyFlux a = energy_poynting(w, x);
                const EnergyFlux b = energy_poynting(cw, x);
                const double scale_w = std::max(a.w, 1e-300);
                worst = std::max(worst, std::abs(a.w - b.w) / scale_w);
                worst = std::max(worst, norm(a.s - b.s) / std::max(norm(a.s), 1e-300));
              }
            }
            return verdict(worst <= tol, "max relative change " + fmt(worst));
          });

  out.add("unit-wave-energy", "W = 1/4pi for a unit wave at zero phase", "classical-conjugation/energy-value", [&] {
    const EnergyFlux f = energy_poynting(PlaneWaveEM::make({1, 0, 0}, {0, 0, 1}, 1.0, Sign::Plus), {0, 0, 0, 0});
    const double expected = 1.0 / (4.0 * std::numbers::pi);
    const double err = std::abs(f.w - expected) / expected;
    return verdict(err <= tol && f.s[2] > 0.0, "W = " + fmt(f.w) + ", S_z = " + fmt(f.s[2]));
  });
  return out.take();
}

}  // namespace symcheck::detail
