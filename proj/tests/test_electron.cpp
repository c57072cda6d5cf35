#include <doctest.h>

#include <random>

#include "symcheck/electron.hpp"

using namespace symcheck;

namespace {

const ExactComplex kI = ExactComplex::i();

Spinor2 random_w(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Spinor2 w{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
  const double n = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
  return {w[0] / n, w[1] / n};
}

Vec3 random_p(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> mag(-3, 3);
  Vec3 v{g(rng), g(rng), g(rng)};
  return scale(v, std::pow(10.0, mag(rng)) / norm(v));
}

Point4 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("table entries match the listed matrices") {
  const GammaSet gs = build_gamma4();
  const auto table = build_transform_table(gs);
  REQUIRE(table.size() == 7);
  CHECK(find_transform(table, "P").matrix == kI * gs.g[0]);
  CHECK_FALSE(find_transform(table, "P").conj);
  CHECK(find_transform(table, "Q").matrix == gs.g[2]);
  CHECK(find_transform(table, "Q").conj);
  CHECK(find_transform(table, "Q").params.sigma == Sign::Minus);
  CHECK(find_transform(table, "QPT").matrix == kI * gs.g5);
  CHECK(find_transform(table, "QPT").time == Sign::Minus);
  CHECK(find_transform(table, "QPT").space == Sign::Minus);
  CHECK_THROWS_AS(find_transform(table, "X"), std::out_of_range);
}

TEST_CASE("every table entry is a symmetry of the free equation") {
  const GammaSet gs = build_gamma4();
  for (const auto& t : build_transform_table(gs)) {
    const SymmetryCertificate c = verify_symmetry(gs, t);
    INFO(c.detail);
    CHECK(c.holds);
    CHECK(c.invertible);
  }
  for (const auto& t : build_c_column(gs)) {
    const SymmetryCertificate c = verify_symmetry(gs, t);
    INFO(c.detail);
    CHECK(c.holds);
  }
}

TEST_CASE("Q with hbar held fixed is not a symmetry") {
  const GammaSet gs = build_gamma4();
  for (const char* name : {"QPT", "QT", "QP", "Q"}) {
    DiracTransform t = find_transform(build_transform_table(gs), name);
    t.params.hbar = Sign::Plus;
    CHECK_FALSE(verify_symmetry(gs, t).holds);
  }
}

TEST_CASE("corrupted Q entry fails") {
  const GammaSet gs = build_gamma4();
  DiracTransform t = find_transform(build_transform_table(gs), "Q");
  t.matrix = gs.g[1];
  const SymmetryCertificate c = verify_symmetry(gs, t);
  CHECK_FALSE(c.holds);
  CHECK(c.detail.find("fails") != std::string::npos);
}

TEST_CASE("C column pairs with the Q column") {
  const GammaSet gs = build_gamma4();
  const auto q = build_transform_table(gs);
  const auto c = build_c_column(gs);
  const std::array<std::pair<const char*, const char*>, 4> pairs{
      {{"C", "Q"}, {"CP", "QP"}, {"CT", "QT"}, {"CPT", "QPT"}}};
  for (const auto& [cn, qn] : pairs) {
    const auto& a = find_transform(c, cn);
    const auto& b = find_transform(q, qn);
    CHECK(a.matrix == b.matrix);
    CHECK(a.conj == b.conj);
    CHECK(a.time == b.time);
    CHECK(a.space == b.space);
    CHECK(a.params.c == Sign::Plus);
    CHECK(b.params.c == Sign::Minus);
  }
}

TEST_CASE("spot check: transformed spinors solve the mapped equation") {
  const GammaSet gs = build_gamma4();
  std::mt19937_64 rng(17);
  for (const auto& t : build_transform_table(gs)) {
    for (int i = 0; i < 20; ++i) {
      const SpinorState s = build_spinor(random_p(rng), random_w(rng), 0.5 + i * 0.2);
      CHECK(transformed_residual(gs, t, s, random_point(rng)) <= 1e-12);
    }
  }
  DiracTransform bad = find_transform(build_transform_table(gs), "Q");
  bad.matrix = gs.g[1];
  const SpinorState s = build_spinor({0.3, 0.4, 1.2}, {1.0, 0.0}, 1.0);
  CHECK(transformed_residual(gs, bad, s, {0.1, 0.2, 0.3, 0.4}) > 1e-3);
}

TEST_CASE("spinor construction and normalization") {
  const GammaSet gs = build_gamma4();
  CHECK_THROWS_WITH_AS(build_spinor({0, 0, 1}, {1.0, 1.0}, 1.0), doctest::Contains("normalized"),
                       std::invalid_argument);
  CHECK_THROWS_AS(build_spinor({0, 0, 1}, {1.0, 0.0}, 0.0), std::invalid_argument);

  const SpinorState rest = build_spinor({0, 0, 0}, {Complex(0.6, 0), Complex(0, 0.8)}, 2.0);
  const Spinor4 u = rest.bispinor();
  CHECK(u[0] == Complex(0.6 * 2.0, 0));
  CHECK(u[2] == Complex(0.0));
  CHECK(u[3] == Complex(0.0));
  CHECK(spinor_norm(gs, rest) == doctest::Approx(4.0));

  const SpinorState s = build_spinor({0.3, -1.2, 2.0}, {Complex(0.6, 0), Complex(0, 0.8)}, 1.5);
  CHECK(spinor_norm(gs, s) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(spinor_norm(gs, apply_C_spinor(s)) == doctest::Approx(-3.0).epsilon(1e-13));
  CHECK(spinor_residual(gs, s) < 1e-14);
  CHECK(spinor_residual(gs, apply_C_spinor(s)) < 1e-14);
}

TEST_CASE("exact normalization and residual") {
  const GammaSet gs = build_gamma4();
  // a = 3, b = 1: p0 = 5, mc = 4, |p| = 3; n = (3/5, 0, 4/5); w = (3/5, 4i/5)
  ExactSpinorData d{3, 1, {ExactComplex::rational(3, 5), 0, ExactComplex::rational(4, 5)},
                    {ExactComplex::rational(3, 5), ExactComplex::rational(4, 5) * kI}, Branch::Positive};
  CHECK(d.p0() == ExactComplex(5));
  CHECK(d.mc() == ExactComplex(4));
  CHECK(exact_norm_defect(gs, d).is_zero());
  CHECK(exact_spinor_residual(gs, d).is_zero());
  d.branch = Branch::Negative;
  CHECK(exact_norm_defect(gs, d).is_zero());
  CHECK(exact_spinor_residual(gs, d).is_zero());
  // A non-unit direction breaks the equation ((n.sigma)^2 != 1).
  d.n = {1, 0, 1};
  CHECK_FALSE(exact_spinor_residual(gs, d).is_zero());
}

TEST_CASE("negative c: principal square roots and sigma sign") {
  const GammaSet gs = build_gamma4();
  const SpinorState s = build_spinor({0.5, 0.1, -0.7}, {Complex(0.6, 0), Complex(0, 0.8)}, 1.0, Branch::Positive,
                                     Sign::Minus, Sign::Minus);
  CHECK(s.sigma_sign == Sign::Minus);
  CHECK(s.p0() < 0.0);
  CHECK(spinor_residual(gs, s) < 1e-14);
  SpinorState wrong = s;
  wrong.sigma_sign = Sign::Plus;
  CHECK(spinor_residual(gs, wrong) > 1e-3);
  // flip realizes the same function
  const Point4 x{0.3, 0.2, -0.1, 0.5};
  CHECK(relative_difference(flip_labels(s).eval(x), s.eval(x)) < 1e-14);
}

TEST_CASE("C and Q records") {
  const SpinorState s = build_spinor({0.3, -1.2, 2.0}, {Complex(0.6, 0), Complex(0, 0.8)}, 1.5);
  const SpinorState c = apply_C_spinor(s);
  const SpinorState q = apply_Q_spinor(s);
  CHECK(c.branch == Branch::Negative);
  CHECK(c.energy_label() == -1);
  CHECK(c.c_sign == Sign::Plus);
  CHECK(q.energy_label() == 1);
  CHECK(q.c_sign == Sign::Minus);
  CHECK(q.hbar_sign == Sign::Minus);
  CHECK(q.sigma_sign == Sign::Minus);
  CHECK(q.p == -s.p);
  CHECK(same_spinor_function(c, q));
  CHECK(same_spinor_function(apply_C_spinor(c), s));
  CHECK(same_spinor_function(apply_C_spinor(q), apply_Q_spinor(c)));
  CHECK_FALSE(same_spinor_function(c, s));
}

TEST_CASE("property: C psi = Q psi pointwise over a wide mass and momentum range") {
  const GammaSet gs = build_gamma4();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> mexp(-3, 3);
  for (int i = 0; i < 300; ++i) {
    const SpinorState s = build_spinor(random_p(rng), random_w(rng), std::pow(10.0, mexp(rng)));
    const SpinorState c = apply_C_spinor(s);
    const SpinorState q = apply_Q_spinor(s);
    CHECK(spinor_residual(gs, q) <= 1e-12);
    for (int k = 0; k < 3; ++k) {
      const Point4 x = random_point(rng);
      const Spinor4 lc = literal_C(gs, s, x);
      CHECK(relative_difference(lc, c.eval(x)) <= 1e-12);
      CHECK(relative_difference(lc, literal_Q(gs, s, x)) <= 1e-12);
      CHECK(relative_difference(lc, q.eval(x)) <= 1e-12);
      CHECK(relative_difference(apply_C_spinor(q).eval(x), apply_Q_spinor(c).eval(x)) <= 1e-12);
    }
  }
}

TEST_CASE("charged equation under Q") {
  const GammaSet gs = build_gamma4();
  const ChargedEquation eq{};
  const ChargedTransformResult r_unchanged = transform_charged_equation(gs, eq, PotentialRule::Unchanged);
  CHECK(r_unchanged.mu == std::array<int, 4>{-1, -1, -1, -1});
  ChargedEquation expected = eq;
  expected.charge = Sign::Minus;
  CHECK(r_unchanged.equation == expected);
  CHECK_FALSE(r_unchanged.steps.empty());

  const ChargedTransformResult rsf = transform_charged_equation(gs, eq, PotentialRule::SignFlip);
  CHECK(rsf.equation == eq);

  ChargedEquation free_eq;
  free_eq.potential_zero = true;
  CHECK(transform_charged_equation(gs, free_eq, PotentialRule::Unchanged).equation ==
        transform_charged_equation(gs, free_eq, PotentialRule::SignFlip).equation);
  CHECK(transform_charged_equation(gs, free_eq, PotentialRule::Unchanged).equation == free_eq);
}

TEST_CASE("property: charged Q transform is an involution for every record") {
  const GammaSet gs = build_gamma4();
  for (unsigned mask = 0; mask < 64; ++mask) {
    ChargedEquation eq;
    auto bit = [mask](unsigned k) { return (mask >> k) & 1U ? Sign::Minus : Sign::Plus; };
    eq.charge = bit(0);
    eq.a0 = bit(1);
    eq.a = bit(2);
    eq.c_sign = bit(3);
    eq.hbar_sign = bit(4);
    eq.potential_zero = (mask >> 5) & 1U;
    for (PotentialRule rule : {PotentialRule::Unchanged, PotentialRule::SignFlip}) {
      const ChargedEquation once = transform_charged_equation(gs, eq, rule).equation;
      CHECK(transform_charged_equation(gs, once, rule).equation == eq);
    }
  }
}
