#pragma once

// Exact symbolic form of the one-charge Maxwell equations with potential links,
// its invariance under field operators, and classical plane waves.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symcheck/exact.hpp"
#include "symcheck/group.hpp"
#include "symcheck/numeric.hpp"
#include "symcheck/sign.hpp"

namespace symcheck {

/// Coefficient slots per component: the value itself and its four derivatives.
enum class Deriv : std::size_t { Value = 0, D0 = 1, D1 = 2, D2 = 3, D3 = 4 };
inline constexpr std::size_t kDerivSlots = 5;
inline constexpr std::size_t kSystemWidth = kFieldComponents * kDerivSlots;

constexpr std::size_t system_column(std::size_t component, Deriv d) {
  return component * kDerivSlots + static_cast<std::size_t>(d);
}

/// First-order linear PDE system in the 16 field components. Each row is one
/// equation "sum of coefficients times (component or derivative) = 0". Sources
/// are carried as the scaled symbols 4*pi*rho and 4*pi*J.
struct LinearFieldSystem {
  ExactMatrix rows;
  std::vector<std::string> labels;

  std::size_t equation_count() const noexcept { return rows.rows(); }
};

/// 8 field equations followed by 6 potential links.
LinearFieldSystem build_maxwell_system();

/// Number of leading rows that are field equations (the rest are potential links).
inline constexpr std::size_t kFieldEquations = 8;

LinearFieldSystem transform_system(const LinearFieldSystem& sys, const FieldOperator& op);

struct InvarianceResult {
  bool invariant = false;
  /// certificate[r] expresses transformed row r in the original rows; empty
  /// optional when the row is outside the original span.
  std::vector<std::optional<std::vector<ExactComplex>>> certificate;
  std::string summary;
};

InvarianceResult check_invariance(const LinearFieldSystem& sys, const FieldOperator& op);

/// Monochromatic free plane wave E = l exp[-i(k0 x0 - k.x)], H = m exp[...], k = k0 n.
class PlaneWaveEM {
 public:
  /// Validates |n| = 1, n.l = 0 and k0 > 0. m is taken as given so that
  /// deliberately wrong polarizations can be tested. Throws std::invalid_argument.
  PlaneWaveEM(Vec3 l, Vec3 m, Vec3 n, double k0, Sign c_sign);

  /// m = n x l.
  static PlaneWaveEM make(Vec3 l, Vec3 n, double k0, Sign c_sign);

  const Vec3& l() const noexcept { return l_; }
  const Vec3& m() const noexcept { return m_; }
  const Vec3& n() const noexcept { return n_; }
  double k0() const noexcept { return k0_; }
  Sign c_sign() const noexcept { return c_sign_; }

  /// k0 x0 - k.x
  double phase(const Point4& x) const;
  /// The 16-component field function at x (sources and potentials zero).
  std::array<Complex, kFieldComponents> field(const Point4& x) const;

 private:
  Vec3 l_, m_, n_;
  double k0_;
  Sign c_sign_;
};

inline constexpr double kUnitTolerance = 1e-12;

/// Largest absolute value of the 8 free field equations on the wave amplitudes,
/// with derivatives replaced by the phase-gradient factors.
double plane_wave_residual(const PlaneWaveEM& w, const LinearFieldSystem& sys = build_maxwell_system());

/// C_e on a plane wave: l -> -l, m -> -m, same phase.
PlaneWaveEM classical_conjugate(const PlaneWaveEM& w);

/// Applies the component signs of op to a field vector (arguments are not touched).
std::array<Complex, kFieldComponents> apply_component_signs(const FieldOperator& op,
                                                            const std::array<Complex, kFieldComponents>& phi);

struct EnergyFlux {
  double w = 0.0;
  Vec3 s{};
};

/// W = (E^2 + H^2)/8pi and S = c (E x H)/4pi from the real parts of the fields at x.
EnergyFlux energy_poynting(const PlaneWaveEM& w, const Point4& x, const PhysicalConstants& k = {});

}  // namespace symcheck
