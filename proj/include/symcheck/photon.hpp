#pragma once

// Photon plane waves in the 8-component Dirac form of the free Maxwell
// equations, their C and Q conjugates, and the associated 8-currents.

#include <array>
#include <string>

#include "symcheck/exact.hpp"
#include "symcheck/gamma.hpp"
#include "symcheck/numeric.hpp"
#include "symcheck/sign.hpp"

namespace symcheck {

using Spinor8 = std::array<Complex, 8>;

/// Realizes lambda * K[(0, l, 0, m)/sqrt2 * exp(-(i/(s_hbar hbar))(p0 x0 - p.x))]
/// where K is complex conjugation when `conjugated` is set.
struct PhotonState {
  Vec3 l{}, m{}, n{};
  double p0 = 0.0;
  Vec3 p{};
  Sign hbar_sign = Sign::Plus;
  Sign c_sign = Sign::Plus;
  ExactComplex lambda{1};
  bool conjugated = false;
  PhysicalConstants constants{};

  /// (0, l, 0, m)/sqrt2 without lambda or phase.
  Spinor8 base_amplitude() const;
  /// Value of the realized function at x.
  Spinor8 eval(const Point4& x) const;
  std::string str() const;
};

/// Normalized photon state with lambda = 1. l is rescaled to unit length and
/// m = n x l. Requires |n| = 1, n.l = 0, l != 0 and p0 > 0.
PhotonState photon_plane_wave(const Vec3& n, const Vec3& l, double p0, Sign hbar_sign = Sign::Plus,
                              Sign c_sign = Sign::Plus);

/// C psi = lambda psi*. The result is stored without the conjugation flag.
PhotonState apply_C_photon(const PhotonState& s, const ExactComplex& lambda);

/// Q psi = lambda psi*(x0, x, -c) with hbar -> -hbar, recorded literally:
/// p0, p, c and hbar signs negated and the conjugation flag toggled.
PhotonState apply_Q_photon(const PhotonState& s, const ExactComplex& lambda);

/// Record with the conjugation flag removed (momentum labels negated instead).
PhotonState canonical_form(const PhotonState& s);

/// Equality of the realized functions decided on the records: same lambda times
/// amplitude and the same phase wave vector (p0, p)/s_hbar after canonicalization.
bool same_function(const PhotonState& a, const PhotonState& b);

/// Largest |(i hbar g0 d0 + i hbar g.grad) psi| over the amplitude, derivatives
/// replaced by the phase gradient.
double photon_dirac_residual(const GammaSet& gs8, const PhotonState& s);

/// Exact residual (g0 - n.g)(0, l, 0, n x l) for rational l and n.
ExactMatrix photon_dirac_residual_exact(const GammaSet& gs8, const std::array<ExactComplex, 3>& l,
                                        const std::array<ExactComplex, 3>& n);

/// j^a = psi-bar g^a psi for a = 0..3, evaluated at x (the phase cancels).
std::array<double, 4> photon_currents(const GammaSet& gs8, const PhotonState& s, const Point4& x = {});

/// Exact currents of lambda (0, l, 0, m)/sqrt2 for rational l, m.
std::array<ExactComplex, 4> photon_currents_exact(const GammaSet& gs8, const std::array<ExactComplex, 3>& l,
                                                  const std::array<ExactComplex, 3>& m, const ExactComplex& lambda);

/// Field energy-density formula (E.E + H.H)/8pi applied to the complex
/// amplitudes lambda l, lambda m of the state, without complex conjugation.
Complex amplitude_energy_density(const PhotonState& s);

/// The displaced-phase form (1/sqrt2)(0, -l, 0, -m) exp[(i/hbar)(p0 x0 - p.x) + i pi/2]
/// built from the original state's labels.
Spinor8 displaced_phase_form(const PhotonState& original, const Point4& x);

}  // namespace symcheck
