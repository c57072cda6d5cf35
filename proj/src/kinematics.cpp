#include "symcheck/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace symcheck {

double invariant_mass_sq(std::span<const FourMomentum> momenta, const PhysicalConstants& k) {
  if (momenta.empty()) throw std::invalid_argument("invariant_mass_sq: no momenta");
  double e = 0.0;
  Vec3 p{};
  for (const auto& q : momenta) {
    e += q.e;
    p = p + q.p;
  }
  return e * e - k.c * k.c * dot(p, p);
}

double vacuum_closed_form(double omega, double omega_prime, const Vec3& n, const Vec3& n_prime,
                          const PhysicalConstants& k) {
  return 2.0 * k.hbar * k.hbar * omega * omega_prime * (dot(n, n_prime) - 1.0);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Infeasible:
      return "infeasible";
    case Verdict::Marginal:
      return "marginal";
    case Verdict::Feasible:
      return "feasible";
  }
  return "?";
}

std::string TransitionCertificate::str() const {
  std::ostringstream os;
  os.precision(6);
  os << to_string(verdict) << ": s = " << s << " (closed form " << s_closed << ", rel. error " << relative_error
     << "), threshold " << threshold;
  return os.str();
}

TransitionCertificate vacuum_transition_feasible(double omega, double omega_prime, const Vec3& n,
                                                 const Vec3& n_prime, double m, const PhysicalConstants& k) {
  if (!(omega > 0.0)) throw std::invalid_argument("vacuum_transition_feasible: omega must be positive");
  if (!(omega_prime > omega)) throw std::invalid_argument("vacuum_transition_feasible: omega' must exceed omega");
  if (std::abs(norm(n) - 1.0) > 1e-12) throw std::invalid_argument("vacuum_transition_feasible: |n| != 1");
  if (std::abs(norm(n_prime) - 1.0) > 1e-12) throw std::invalid_argument("vacuum_transition_feasible: |n'| != 1");
  if (!(m >= 0.0)) throw std::invalid_argument("vacuum_transition_feasible: mass must be nonnegative");

  const double e1 = k.hbar * omega;
  const double e2 = k.hbar * omega_prime;
  const std::array<FourMomentum, 2> q{{{-e1, scale(n, -e1 / k.c)}, {e2, scale(n_prime, e2 / k.c)}}};
  TransitionCertificate cert;
  cert.s = invariant_mass_sq(q, k);
  cert.s_closed = vacuum_closed_form(omega, omega_prime, n, n_prime, k);
  const double rest = 2.0 * m * k.c * k.c;
  cert.threshold = rest * rest;
  const double denom = std::max(std::abs(cert.s), (e1 + e2) * (e1 + e2));
  cert.relative_error = std::abs(cert.s - cert.s_closed) / denom;
  const double gap = cert.s - cert.threshold;
  if (std::abs(gap) <= 1e-12 * std::max(denom, cert.threshold)) {
    cert.verdict = Verdict::Marginal;
  } else {
    cert.verdict = gap > 0.0 ? Verdict::Feasible : Verdict::Infeasible;
  }
  return cert;
}

ScanResult scan_vacuum_transitions(std::uint64_t seed, std::size_t draws, const PhysicalConstants& k) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> freq(1e-3, 1e3);
  std::uniform_real_distribution<double> mass_exp(-3.0, 1.0);
  std::normal_distribution<double> g;
  auto unit = [&] {
    Vec3 v{g(rng), g(rng), g(rng)};
    return scale(v, 1.0 / norm(v));
  };
  ScanResult r;
  r.max_s = -INFINITY;
  for (std::size_t i = 0; i < draws; ++i) {
    double w1 = freq(rng);
    double w2 = freq(rng);
    if (w1 == w2) w2 = std::nextafter(w2, INFINITY);
    if (w1 > w2) std::swap(w1, w2);
    const Vec3 n = unit();
    const Vec3 np = unit();
    const double m = std::pow(10.0, mass_exp(rng));
    const TransitionCertificate c = vacuum_transition_feasible(w1, w2, n, np, m, k);
    ++r.draws;
    if (c.verdict == Verdict::Infeasible) ++r.infeasible;
    r.max_relative_error = std::max(r.max_relative_error, c.relative_error);
    r.max_s = std::max(r.max_s, c.s);
  }
  return r;
}

std::string to_string(HbarConvention c) { return c == HbarConvention::HbarFixed ? "hbar_fixed" : "hbar_flips"; }

std::vector<ScalarInvariant> scalar_invariants(HbarConvention convention) {
  // Exponents of (e, hbar, c) in each monomial; m is the invariant rest energy
  // divided by c^2.
  struct Monomial {
    const char* name;
    int e, hbar, c;
  };
  constexpr Monomial monomials[] = {
      {"e^2/(hbar c)", 2, -1, -1},
      {"hbar c", 0, 1, 1},
      {"hbar/c", 0, 1, -1},
      {"m", 0, 0, -2},
  };
  const int eps_hbar = convention == HbarConvention::HbarFlips ? -1 : 1;
  const int eps_c = -1;
  const int eps_e = 1;
  auto power = [](int base, int exp) { return (exp % 2 == 0) ? 1 : base; };
  std::vector<ScalarInvariant> out;
  for (const auto& mono : monomials) {
    const int s = power(eps_e, mono.e) * power(eps_hbar, mono.hbar) * power(eps_c, mono.c);
    out.push_back({mono.name, s > 0 ? Sign::Plus : Sign::Minus});
  }
  return out;
}

}  // namespace symcheck
