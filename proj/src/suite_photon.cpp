#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "suites.hpp"
#include "symcheck/photon.hpp"

namespace symcheck::detail {

namespace {

using Exact3 = std::array<ExactComplex, 3>;

Exact3 exact_cross(const Exact3& a, const Exact3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Orthonormal rational (l, n) pairs.
std::vector<std::pair<Exact3, Exact3>> rational_frames() {
  const auto q = [](long a, long b) { return ExactComplex::rational(a, b); };
  return {
      {{1, 0, 0}, {0, 0, 1}},
      {{0, 1, 0}, {1, 0, 0}},
      {{q(-4, 5), q(3, 5), 0}, {q(3, 5), q(4, 5), 0}},
      {{q(2, 3), q(-2, 3), q(1, 3)}, {q(1, 3), q(2, 3), q(2, 3)}},
      {{q(12, 13), 0, q(-5, 13)}, {q(5, 13), 0, q(12, 13)}},
  };
}

}  // namespace

std::vector<CheckResult> run_photon_suite(const RunConfig& config) {
  CheckList out("photon");
  const auto maybe_gs = checked_gamma_set(out, 8, config);
  if (!maybe_gs) return out.take();
  const GammaSet& gs = *maybe_gs;

  std::mt19937_64 rng(suite_seed(config.seed, "photon"));
  const double tol = config.tolerance;
  const ExactComplex& lambda = config.lambda;
  std::uniform_real_distribution<double> p0_dist(0.1, 5.0);
  auto random_state = [&](std::size_t i) {
    const Vec3 n = random_unit(rng);
    return photon_plane_wave(n, random_transverse(rng, n), p0_dist(rng), i % 2 ? Sign::Minus : Sign::Plus);
  };

  out.add("uc-nullspace", "U gamma^aT = gamma^a U has a 4-dim solution space containing lambda gamma^0",
          "photon-conjugation/matrix", [&] {
            const ConjugationSolution s = solve_conjugation(gs, {1, 1, 1, 1});
            const ExactMatrix u = lambda * gs.g[0];
            std::ostringstream os;
            os << "nullity " << s.nullspace.nullity() << ", lambda g0 " << (s.in_span(u) ? "in" : "not in") << " span";
            return verdict(s.nullspace.nullity() == 4 && s.satisfies(u) && s.in_span(u), os.str());
          });

  out.add("residual", "transverse plane waves solve the 8-component equation", "photon-dirac-form/solution", [&] {
    for (const auto& [l, n] : rational_frames()) {
      if (!photon_dirac_residual_exact(gs, l, n).is_zero()) return fail("exact residual nonzero for n = " + n[0].str());
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const PhotonState s = random_state(i);
      worst = std::max(worst, photon_dirac_residual(gs, s) / s.p0);
    }
    return verdict(worst <= tol, "exact frames zero; sampled max relative residual " + fmt(worst));
  });

  out.add("normalization", "the amplitude (0, l, 0, m)/sqrt2 has unit norm", "photon-dirac-form/normalization", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const PhotonState s = random_state(i);
      worst = std::max(worst, std::abs(l2_norm(s.eval(random_point(rng, 10.0))) - 1.0));
    }
    return verdict(worst <= tol, "max deviation " + fmt(worst));
  });

  out.add("cq-symbolic", "C and Q give the same function record", "photon-cq/symbolic", [&] {
    for (std::size_t i = 0; i < config.samples; ++i) {
      const PhotonState s = random_state(i);
      const PhotonState c = apply_C_photon(s, lambda);
      const PhotonState q = apply_Q_photon(s, lambda);
      if (!same_function(c, q)) return fail("records differ: C " + c.str() + " vs Q " + q.str());
    }
    return pass(std::to_string(config.samples) + " states");
  });

  out.add("cq-pointwise", "C psi = Q psi and both equal lambda psi* at sampled points", "photon-cq/pointwise", [&] {
    const Complex lam = lambda.to_complex();
    double worst = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const PhotonState s = random_state(i);
      const PhotonState c = apply_C_photon(s, lambda);
      const PhotonState q = apply_Q_photon(s, lambda);
      for (std::size_t k = 0; k < config.samples; ++k) {
        const Point4 x = random_point(rng, 10.0);
        Spinor8 literal = conj(s.eval(x));
        for (auto& z : literal) z *= lam;
        const Spinor8 qx = q.eval(x);
        worst = std::max({worst, relative_difference(c.eval(x), qx), relative_difference(literal, qx)});
      }
    }
    std::ostringstream os;
    os << config.samples << " states x " << config.samples << " points, max relative difference " << fmt(worst);
    return verdict(worst <= tol, os.str());
  });

  out.add("displaced-phase-form", "for lambda = -i, Q psi equals -(0, l, 0, m) with the phase displaced by pi/2",
          "photon-cq/phase-form", [&] {
            double worst = 0.0;
            for (std::size_t i = 0; i < config.samples; ++i) {
              const PhotonState s = random_state(i);
              const PhotonState q = apply_Q_photon(s, -ExactComplex::i());
              for (int k = 0; k < 10; ++k) {
                const Point4 x = random_point(rng, 10.0);
                worst = std::max(worst, relative_difference(displaced_phase_form(s, x), q.eval(x)));
              }
            }
            return verdict(worst <= tol, "max relative difference " + fmt(worst));
          });

  out.add("cc-involution", "C applied twice returns the original function", "photon-cq/c-involution", [&] {
    const PhotonState s = photon_plane_wave({0, 0, 1}, {1, 0, 0}, 2.0);
    const PhotonState cc = apply_C_photon(apply_C_photon(s, lambda), lambda);
    return verdict(same_function(cc, s), "phase " + cc.lambda.str());
  });

  out.add("qq-phase", "Q applied twice returns the original function times |lambda|^2 = 1", "photon-cq/q-involution",
          [&] {
            const PhotonState s = photon_plane_wave({0, 0, 1}, {1, 0, 0}, 2.0);
            const PhotonState qq = apply_Q_photon(apply_Q_photon(s, lambda), lambda);
            const bool ok = qq.lambda == ExactComplex(lambda.norm()) && qq.c_sign == s.c_sign &&
                            qq.hbar_sign == s.hbar_sign && same_function(qq, s);
            return verdict(ok, "phase " + qq.lambda.str());
          });

  out.add("currents-exact", "j = (1, n) for original and conjugated amplitudes, exact", "photon-currents/exact", [&] {
    for (const auto& [l, n] : rational_frames()) {
      const Exact3 m = exact_cross(n, l);
      for (const ExactComplex& lam : {ExactComplex(1), lambda}) {
        const auto j = photon_currents_exact(gs, l, m, lam);
        const std::array<ExactComplex, 4> expected{1, n[0], n[1], n[2]};
        if (j != expected) return fail("j = (" + j[0].str() + ", " + j[1].str() + ", " + j[2].str() + ", " + j[3].str() + ")");
      }
    }
    return pass(std::to_string(rational_frames().size()) + " rational frames");
  });

  out.add("currents-sampled", "j = (1, n) for psi, C psi and Q psi at sampled points", "photon-currents/sampled", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const PhotonState s = random_state(i);
      for (const PhotonState& t : {s, apply_C_photon(s, lambda), apply_Q_photon(s, lambda)}) {
        const auto j = photon_currents(gs, t, random_point(rng, 10.0));
        worst = std::max(worst, std::abs(j[0] - 1.0));
        for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(j[k + 1] - s.n[k]));
      }
    }
    return verdict(worst <= tol, "max deviation " + fmt(worst));
  });

  out.add("conjugate-energy-density", "(E.E + H.H)/8pi on the conjugated amplitudes equals lambda^2 / 4pi",
          "photon-energy/conjugated", [&] {
            const PhotonState s = photon_plane_wave({0, 0, 1}, {1, 0, 0}, 1.0);
            const Complex w = amplitude_energy_density(apply_C_photon(s, lambda));
            const Complex lam = lambda.to_complex();
            const Complex expected = lam * lam / (4.0 * std::numbers::pi);
            const double err = std::abs(w - expected) / std::abs(expected);
            std::ostringstream os;
            os << "W = " << fmt(w.real());
            if (w.imag() != 0.0) os << " + " << fmt(w.imag()) << "i";
            os << (w.real() < 0.0 ? " (negative)" : " (non-negative)");
            return verdict(err <= tol, os.str());
          });
  return out.take();
}

}  // namespace symcheck::detail
