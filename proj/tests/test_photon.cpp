#include <doctest.h>

#include <numbers>
#include <random>

#include "symcheck/photon.hpp"

using namespace symcheck;

namespace {

constexpr Vec3 kX{1, 0, 0};
constexpr Vec3 kY{0, 1, 0};
constexpr Vec3 kZ{0, 0, 1};
const ExactComplex kI = ExactComplex::i();

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v{g(rng), g(rng), g(rng)};
  return scale(v, 1.0 / norm(v));
}

Point4 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10, 10);
  return {u(rng), u(rng), u(rng), u(rng)};
}

std::array<ExactComplex, 3> ex(int a, int b, int c) { return {a, b, c}; }

}  // namespace

TEST_CASE("plane wave construction and normalization") {
  const PhotonState s = photon_plane_wave(kZ, scale(kX, 3.0), 2.0);
  CHECK(s.l == kX);
  CHECK(s.m == kY);
  CHECK(s.p == Vec3{0, 0, 2});
  CHECK(l2_norm(s.eval({1, 2, 3, 4})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(photon_plane_wave(kZ, kZ, 1.0), doctest::Contains("transversality"), std::invalid_argument);
  CHECK_THROWS_AS(photon_plane_wave(kZ, {0, 0, 0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(photon_plane_wave(kZ, kX, -1.0), std::invalid_argument);
}

TEST_CASE("Dirac-form residual vanishes") {
  const GammaSet gs = build_gamma8();
  CHECK(photon_dirac_residual(gs, photon_plane_wave(kZ, kX, 1.5)) == 0.0);
  CHECK(photon_dirac_residual(gs, photon_plane_wave(kZ, kX, 1.5, Sign::Plus, Sign::Minus)) == 0.0);
  CHECK(photon_dirac_residual_exact(gs, ex(1, 0, 0), ex(0, 0, 1)).is_zero());
  // n = (3/5, 4/5, 0), l = (-4/5, 3/5, 0)
  const std::array<ExactComplex, 3> n{ExactComplex::rational(3, 5), ExactComplex::rational(4, 5), 0};
  const std::array<ExactComplex, 3> l{ExactComplex::rational(-4, 5), ExactComplex::rational(3, 5), 0};
  CHECK(photon_dirac_residual_exact(gs, l, n).is_zero());
  // Not transverse: residual nonzero.
  CHECK_FALSE(photon_dirac_residual_exact(gs, ex(0, 0, 1), ex(0, 0, 1)).is_zero());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Vec3 nn = random_unit(rng);
    Vec3 ll = random_unit(rng);
    ll = ll - scale(nn, dot(ll, nn));
    const PhotonState s = photon_plane_wave(nn, ll, 0.5 + i * 0.1, i % 2 ? Sign::Plus : Sign::Minus);
    CHECK(photon_dirac_residual(gs, s) <= 1e-12 * s.p0);
  }
}

TEST_CASE("C conjugation flips the momentum labels and is an involution") {
  const PhotonState s = photon_plane_wave(kZ, kX, 2.0);
  const PhotonState c = apply_C_photon(s, -kI);
  CHECK(c.lambda == -kI);
  CHECK(c.p0 == -2.0);
  CHECK(c.p == Vec3{0, 0, -2});
  CHECK_FALSE(c.conjugated);
  const Point4 x{0.7, 0.1, -0.4, 1.3};
  // Expected: (lambda/sqrt2)(0, l, 0, m) exp[+i(p0 x0 - p.x)]
  const Complex f = std::exp(Complex(0.0, 2.0 * (x[0] - x[3])));
  const Spinor8 expected = s.base_amplitude();
  Spinor8 e = expected;
  for (auto& z : e) z *= Complex(0, -1) * f;
  CHECK(relative_difference(c.eval(x), e) < 1e-15);

  const PhotonState cc = apply_C_photon(c, -kI);
  CHECK(same_function(cc, s));
  CHECK(cc.p0 == s.p0);
}

TEST_CASE("Q equals C for every lambda") {
  const PhotonState s = photon_plane_wave(kZ, kX, 2.0);
  for (const ExactComplex& lam : {ExactComplex(1), ExactComplex(-1), kI, -kI}) {
    const PhotonState c = apply_C_photon(s, lam);
    const PhotonState q = apply_Q_photon(s, lam);
    CHECK(q.c_sign == Sign::Minus);
    CHECK(q.hbar_sign == Sign::Minus);
    CHECK(q.p0 == -2.0);
    CHECK(same_function(c, q));
  }
  // Different lambda: different function.
  CHECK_FALSE(same_function(apply_C_photon(s, kI), apply_Q_photon(s, -kI)));
}

TEST_CASE("property: C and Q agree pointwise") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pr(0.1, 5.0);
  for (int i = 0; i < 50; ++i) {
    const Vec3 n = random_unit(rng);
    Vec3 l = random_unit(rng);
    l = l - scale(n, dot(l, n));
    const PhotonState s = photon_plane_wave(n, l, pr(rng));
    const PhotonState c = apply_C_photon(s, -kI);
    const PhotonState q = apply_Q_photon(s, -kI);
    CHECK(same_function(c, q));
    for (int k = 0; k < 20; ++k) {
      const Point4 x = random_point(rng);
      const Spinor8 literal_c = [&] {
        Spinor8 v = conj(s.eval(x));
        for (auto& z : v) z *= Complex(0, -1);
        return v;
      }();
      CHECK(relative_difference(c.eval(x), q.eval(x)) <= 1e-12);
      CHECK(relative_difference(literal_c, q.eval(x)) <= 1e-12);
      CHECK(relative_difference(displaced_phase_form(s, x), q.eval(x)) <= 1e-12);
    }
  }
}

TEST_CASE("Q twice returns the original function with phase |lambda|^2") {
  const PhotonState s = photon_plane_wave(kZ, kX, 2.0);
  for (const ExactComplex& lam : {ExactComplex(1), ExactComplex(-1), kI, -kI}) {
    const PhotonState qq = apply_Q_photon(apply_Q_photon(s, lam), lam);
    CHECK(qq.lambda == ExactComplex(lam.norm()) * s.lambda);
    CHECK(qq.hbar_sign == s.hbar_sign);
    CHECK(qq.c_sign == s.c_sign);
    CHECK_FALSE(qq.conjugated);
    CHECK(same_function(qq, s));
  }
}

TEST_CASE("currents") {
  const GammaSet gs = build_gamma8();
  const auto jz = photon_currents_exact(gs, ex(1, 0, 0), ex(0, 1, 0), 1);
  CHECK(jz == std::array<ExactComplex, 4>{1, 0, 0, 1});
  // n = x: l = y, m = x cross y = z
  const auto jx = photon_currents_exact(gs, ex(0, 1, 0), ex(0, 0, 1), -kI);
  CHECK(jx == std::array<ExactComplex, 4>{1, 1, 0, 0});

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Vec3 n = random_unit(rng);
    Vec3 l = random_unit(rng);
    l = l - scale(n, dot(l, n));
    const PhotonState s = photon_plane_wave(n, l, 1.0);
    const Point4 x = random_point(rng);
    for (const PhotonState& t : {s, apply_C_photon(s, -kI), apply_Q_photon(s, -kI)}) {
      const auto j = photon_currents(gs, t, x);
      CHECK(j[0] == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t k = 0; k < 3; ++k) CHECK(j[k + 1] == doctest::Approx(n[k]).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("energy density of conjugated amplitudes is negative for lambda = -i") {
  const PhotonState s = photon_plane_wave(kZ, kX, 1.0);
  const Complex w = amplitude_energy_density(apply_C_photon(s, -kI));
  CHECK(w.imag() == 0.0);
  CHECK(w.real() == doctest::Approx(-2.0 / (8.0 * std::numbers::pi)));
  CHECK(amplitude_energy_density(s).real() > 0.0);
}
