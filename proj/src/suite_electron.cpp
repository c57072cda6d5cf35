#include <algorithm>
#include <cmath>
#include <sstream>

#include "suites.hpp"
#include "symcheck/electron.hpp"

namespace symcheck::detail {

namespace {

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

Spinor2 random_w(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Spinor2 w{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
  const double n = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
  return {w[0] / n, w[1] / n};
}

// |p| and m log-uniform over six decades each.
SpinorState random_spinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dec(-3, 3);
  const Vec3 p = scale(random_unit(rng), std::pow(10.0, dec(rng)));
  const Spinor2 w = random_w(rng);
  return build_spinor(p, w, std::pow(10.0, dec(rng)));
}

std::vector<ExactSpinorData> rational_spinors() {
  const auto q = [](long a, long b) { return ExactComplex::rational(a, b); };
  const ExactComplex i = ExactComplex::i();
  const std::vector<std::array<ExactComplex, 3>> dirs{
      {0, 0, 1}, {q(3, 5), 0, q(4, 5)}, {q(2, 3), q(1, 3), q(-2, 3)}, {0, q(-12, 13), q(5, 13)}};
  const std::vector<std::array<ExactComplex, 2>> ws{{1, 0}, {q(3, 5), q(4, 5) * i}, {q(5, 13) * i, q(-12, 13)}};
  const std::vector<std::pair<long, long>> ab{{1, 0}, {2, 1}, {3, 1}, {7, 3}};
  std::vector<ExactSpinorData> out;
  for (const auto& [a, b] : ab) {
    for (const auto& n : dirs) {
      for (const auto& w : ws) {
        for (Branch br : {Branch::Positive, Branch::Negative}) out.push_back({a, b, n, w, br});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_electron_suite(const RunConfig& config) {
  CheckList out("electron");
  const auto maybe_gs = checked_gamma_set(out, 4, config);
  if (!maybe_gs) return out.take();
  const GammaSet& gs = *maybe_gs;

  std::mt19937_64 rng(suite_seed(config.seed, "electron"));
  const double tol = config.tolerance;
  const auto table = build_transform_table(gs);
  const auto c_column = build_c_column(gs);

  out.add("uq-nullspace", "U gamma^aT = -gamma^a U has a 1-dim solution space spanned by -gamma^0 gamma^2",
          "electron-conjugation/matrix", [&] {
            const ConjugationSolution s = solve_conjugation(gs, {-1, -1, -1, -1});
            const ExactMatrix uq = -(gs.g[0] * gs.g[2]);
            std::ostringstream os;
            os << "nullity " << s.nullspace.nullity();
            return verdict(s.nullspace.nullity() == 1 && s.satisfies(uq) && s.in_span(uq), os.str());
          });

  out.add("uq-equals-uc", "Q and C require the same conjugation matrix and the same eta", "electron-conjugation/uq-uc",
          [&] {
            const SymmetryCertificate cq = verify_symmetry(gs, find_transform(table, "Q"));
            const SymmetryCertificate cc = verify_symmetry(gs, find_transform(c_column, "C"));
            const bool same_matrix = find_transform(table, "Q").matrix == find_transform(c_column, "C").matrix;
            std::ostringstream os;
            os << "eta_Q = (" << cq.eta[0] << ',' << cq.eta[1] << ',' << cq.eta[2] << ',' << cq.eta[3] << "), eta_C = ("
               << cc.eta[0] << ',' << cc.eta[1] << ',' << cc.eta[2] << ',' << cc.eta[3] << ')';
            return verdict(same_matrix && cq.eta == cc.eta && cq.holds && cc.holds, os.str());
          });

  for (const auto& entry : table) {
    out.add("table-" + lower(entry.name), entry.name + " maps free solutions to free solutions",
            "electron-transforms/" + lower(entry.name), [&] {
              const SymmetryCertificate c = verify_symmetry(gs, entry);
              if (!c.holds || !c.invertible) return fail(c.detail);
              double worst = 0.0;
              for (std::size_t i = 0; i < config.samples; ++i) {
                worst = std::max(worst, transformed_residual(gs, entry, random_spinor(rng), random_point(rng, 1.0)));
              }
              return verdict(worst <= tol, c.detail + "; spinor spot check max residual " + fmt(worst));
            });
  }

  out.add("c-column-correspondence", "C, CP, CT, CPT use the Q-column matrices with c and hbar fixed",
          "electron-transforms/c-column", [&] {
            const std::array<std::pair<const char*, const char*>, 4> pairs{
                {{"C", "Q"}, {"CP", "QP"}, {"CT", "QT"}, {"CPT", "QPT"}}};
            for (const auto& [cn, qn] : pairs) {
              const auto& a = find_transform(c_column, cn);
              const auto& b = find_transform(table, qn);
              if (!(a.matrix == b.matrix) || a.conj != b.conj || a.time != b.time || a.space != b.space) {
                return fail(std::string(cn) + " does not match " + qn);
              }
              const SymmetryCertificate cert = verify_symmetry(gs, a);
              if (!cert.holds) return fail(std::string(cn) + ": " + cert.detail);
            }
            return pass();
          });

  out.add("corrupted-entry-control", "Q with gamma^1 in place of gamma^2 is rejected", "electron-transforms/control",
          [&] {
            DiracTransform bad = find_transform(table, "Q");
            bad.matrix = gs.g[1];
            const SymmetryCertificate c = verify_symmetry(gs, bad);
            return verdict(!c.holds, c.holds ? "corrupted entry accepted" : "rejected: " + c.detail);
          });

  out.add("hbar-fixed-control", "Q entries with hbar held fixed are not symmetries", "electron-transforms/hbar-control",
          [&] {
            for (const char* name : {"QPT", "QT", "QP", "Q"}) {
              DiracTransform t = find_transform(table, name);
              t.params.hbar = Sign::Plus;
              if (verify_symmetry(gs, t).holds) return fail(std::string(name) + " accepted with hbar fixed");
            }
            return pass();
          });

  out.add("spinor-norm-exact", "u-bar u = 2mc and u-bar_- u_- = -2mc on rational spinors", "electron-spinor/norm-exact",
          [&] {
            const auto data = rational_spinors();
            for (const auto& d : data) {
              if (!exact_norm_defect(gs, d).is_zero()) return fail("defect " + exact_norm_defect(gs, d).str());
              if (!exact_spinor_residual(gs, d).is_zero()) return fail("bispinor does not solve the equation");
            }
            return pass(std::to_string(data.size()) + " rational spinors");
          });

  // u-bar u is a difference of two terms of size u^+ u = 2|p0|, so the error is
  // measured against u^+ u; the exact check above covers the identity itself.
  out.add("spinor-norm-sampled", "u-bar u = +-2m|c| on sampled spinors", "electron-spinor/norm-sampled", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const SpinorState s = random_spinor(rng);
      const double target = 2.0 * s.m * s.constants.c;
      for (const SpinorState& t : {s, apply_C_spinor(s)}) {
        const double expected = t.branch == Branch::Positive ? target : -target;
        const double scale = std::pow(l2_norm(t.bispinor()), 2);
        worst = std::max(worst, std::abs(spinor_norm(gs, t) - expected) / scale);
      }
    }
    return verdict(worst <= tol, "max error relative to u^+ u " + fmt(worst));
  });

  out.add("spinor-residual", "sampled positive and negative branch spinors solve the free equation",
          "electron-spinor/residual", [&] {
            double worst = 0.0;
            for (std::size_t i = 0; i < config.samples; ++i) {
              const SpinorState s = random_spinor(rng);
              worst = std::max({worst, spinor_residual(gs, s), spinor_residual(gs, apply_C_spinor(s)),
                                spinor_residual(gs, apply_Q_spinor(s))});
            }
            return verdict(worst <= tol, "max relative residual " + fmt(worst));
          });

  out.add("cq-equality", "C psi = Q psi pointwise for random momentum, spin and mass", "electron-cq/equality", [&] {
    const std::size_t draws = 10 * config.samples;
    double worst = 0.0;
    for (std::size_t i = 0; i < draws; ++i) {
      const SpinorState s = random_spinor(rng);
      const SpinorState c = apply_C_spinor(s);
      const SpinorState q = apply_Q_spinor(s);
      if (!same_spinor_function(c, q)) return fail("records differ: " + c.str() + " vs " + q.str());
      const Point4 x = random_point(rng, 1.0);
      const Spinor4 lc = literal_C(gs, s, x);
      worst = std::max({worst, relative_difference(lc, literal_Q(gs, s, x)), relative_difference(lc, c.eval(x)),
                        relative_difference(lc, q.eval(x))});
    }
    return verdict(worst <= tol, std::to_string(draws) + " draws, max relative difference " + fmt(worst));
  });

  out.add("cq-commutator", "[C, Q] psi = 0", "electron-cq/commutator", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < config.samples; ++i) {
      const SpinorState s = random_spinor(rng);
      const SpinorState cq = apply_C_spinor(apply_Q_spinor(s));
      const SpinorState qc = apply_Q_spinor(apply_C_spinor(s));
      if (!same_spinor_function(cq, qc)) return fail("CQ and QC records differ");
      const Point4 x = random_point(rng, 1.0);
      worst = std::max(worst, relative_difference(cq.eval(x), qc.eval(x)));
    }
    return verdict(worst <= tol, "max relative difference " + fmt(worst));
  });

  out.add("c-involution", "C applied twice returns the original spinor", "electron-cq/c-involution", [&] {
    for (std::size_t i = 0; i < config.samples; ++i) {
      const SpinorState s = random_spinor(rng);
      if (!same_spinor_function(apply_C_spinor(apply_C_spinor(s)), s)) return fail("C^2 psi != psi for " + s.str());
    }
    return pass();
  });

  const ChargedEquation base{};
  auto charged = [&](PotentialRule rule, const ChargedEquation& expected) {
    const ChargedTransformResult r = transform_charged_equation(gs, base, rule);
    std::ostringstream os;
    os << base.str() << " -> " << r.equation.str() << "; mu = (" << r.mu[0] << ',' << r.mu[1] << ',' << r.mu[2] << ','
       << r.mu[3] << ')';
    return verdict(r.equation == expected, os.str());
  };
  if (config.potential_rule != PotentialRuleChoice::SignFlip) {
    out.add("charged-unchanged", "Q with the potential left as is maps e to -e", "electron-charged/unchanged-potential",
            [&] {
              ChargedEquation expected = base;
              expected.charge = Sign::Minus;
              return charged(PotentialRule::Unchanged, expected);
            });
  }
  if (config.potential_rule != PotentialRuleChoice::Unchanged) {
    out.add("charged-signflip", "Q with (A0, A) -> (-A0, -A) leaves the charged equation unchanged",
            "electron-charged/sign-flip", [&] { return charged(PotentialRule::SignFlip, base); });
  }

  out.add("charged-zero-potential", "with zero potential both rules give the free equation",
          "electron-charged/zero-potential", [&] {
            ChargedEquation free_eq;
            free_eq.potential_zero = true;
            const auto a = transform_charged_equation(gs, free_eq, PotentialRule::Unchanged).equation;
            const auto b = transform_charged_equation(gs, free_eq, PotentialRule::SignFlip).equation;
            return verdict(a == free_eq && b == free_eq, a.str() + " / " + b.str());
          });

  out.add("charged-involution", "the charged Q transform is an involution on every sign record",
          "electron-charged/involution", [&] {
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
                if (!(transform_charged_equation(gs, once, rule).equation == eq)) {
                  return fail(to_string(rule) + ": " + eq.str() + " not restored");
                }
              }
            }
            return pass("64 records x 2 rules");
          });
  return out.take();
}

}  // namespace symcheck::detail
