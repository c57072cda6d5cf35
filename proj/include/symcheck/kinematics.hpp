#pragma once

// Four-momentum arithmetic for vacuum-photon transitions and sign bookkeeping
// of scalar combinations of c, hbar and e under c -> -c.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symcheck/numeric.hpp"
#include "symcheck/sign.hpp"

namespace symcheck {

struct FourMomentum {
  double e = 0.0;
  Vec3 p{};
};

/// s = (sum e)^2 - c^2 |sum p|^2. Throws std::invalid_argument on empty input.
double invariant_mass_sq(std::span<const FourMomentum> momenta, const PhysicalConstants& k = {});

/// 2 hbar^2 w w' (n.n' - 1) for the pair of vacuum photons (-hbar w, +hbar w').
double vacuum_closed_form(double omega, double omega_prime, const Vec3& n, const Vec3& n_prime,
                          const PhysicalConstants& k = {});

enum class Verdict { Infeasible, Marginal, Feasible };
std::string to_string(Verdict v);

struct TransitionCertificate {
  Verdict verdict = Verdict::Infeasible;
  double s = 0.0;          // direct four-vector evaluation
  double s_closed = 0.0;   // closed form
  double threshold = 0.0;  // (2 m c^2)^2
  double relative_error = 0.0;
  std::string str() const;
};

/// Can a vacuum photon pair (-hbar w, +hbar w') supply a pair of mass m? Requires
/// w' > w > 0, unit n and n', and m >= 0; throws std::invalid_argument naming the
/// violated condition.
TransitionCertificate vacuum_transition_feasible(double omega, double omega_prime, const Vec3& n,
                                                 const Vec3& n_prime, double m, const PhysicalConstants& k = {});

struct ScanResult {
  std::size_t draws = 0;
  std::size_t infeasible = 0;
  double max_relative_error = 0.0;
  double max_s = 0.0;  // largest (least negative) s seen
};

/// Uniform random frequencies, directions and masses; deterministic for a seed.
ScanResult scan_vacuum_transitions(std::uint64_t seed, std::size_t draws, const PhysicalConstants& k = {});

enum class HbarConvention { HbarFixed, HbarFlips };
std::string to_string(HbarConvention c);

/// Sign of a scalar under c -> -c (and hbar -> -hbar when it flips).
struct ScalarInvariant {
  std::string name;
  Sign sign = Sign::Plus;
};

/// e^2/(hbar c), hbar c, hbar/c and m = (m c^2)/c^2.
std::vector<ScalarInvariant> scalar_invariants(HbarConvention convention);

}  // namespace symcheck
