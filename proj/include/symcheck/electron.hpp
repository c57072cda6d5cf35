#pragma once

// The 4-component Dirac equation: discrete transformation table, explicit
// plane-wave spinors, C and Q conjugation, and the charged equation under Q.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symcheck/exact.hpp"
#include "symcheck/gamma.hpp"
#include "symcheck/numeric.hpp"
#include "symcheck/sign.hpp"

namespace symcheck {

using Spinor2 = std::array<Complex, 2>;
using Spinor4 = std::array<Complex, 4>;

/// Signs applied to the parameters (c, hbar, e, A0, A, sigma).
struct ParamSignature {
  Sign c = Sign::Plus;
  Sign hbar = Sign::Plus;
  Sign e = Sign::Plus;
  Sign a0 = Sign::Plus;
  Sign a = Sign::Plus;
  Sign sigma = Sign::Plus;

  friend bool operator==(const ParamSignature&, const ParamSignature&) = default;
};

/// psi'(x0, x) = M K[psi](eps0 x0, epsx x) with the parameters relabeled by params.
struct DiracTransform {
  std::string name;
  ExactMatrix matrix{4, 4};
  bool conj = false;
  Sign time = Sign::Plus;
  Sign space = Sign::Plus;
  ParamSignature params{};

  Sign arg_sign(std::size_t a) const noexcept { return a == 0 ? time : space; }
};

/// P, T, PT, QPT, QT, QP, Q. Every Q-containing entry flips both c and hbar.
std::vector<DiracTransform> build_transform_table(const GammaSet& gs4);

/// C, CP, CT, CPT: the same matrices as Q, QP, QT, QPT with c and hbar fixed.
std::vector<DiracTransform> build_c_column(const GammaSet& gs4);

/// Looks an entry up by name; throws std::out_of_range.
const DiracTransform& find_transform(const std::vector<DiracTransform>& table, const std::string& name);

struct SymmetryCertificate {
  bool holds = false;
  bool invertible = false;
  /// eta_a = s_c s_conj s_hbar eps_a, the factor required in M G^a = eta_a g^a M.
  std::array<int, 4> eta{};
  /// Per a: whether M G^a = eta_a g^a M holds exactly (G^a = g^a or (g^a)*).
  std::array<bool, 4> relation{};
  std::string detail;
};

/// Operator-level proof that the entry maps free solutions with (c, hbar) to free
/// solutions with the entry's mapped (c, hbar).
SymmetryCertificate verify_symmetry(const GammaSet& gs4, const DiracTransform& entry);

// ---------------------------------------------------------------------------
// Plane-wave spinors

enum class Branch { Positive, Negative };

struct SpinorState {
  Vec3 p{};
  /// w for the positive branch, w' for the negative branch.
  Spinor2 w{};
  double m = 1.0;
  Sign c_sign = Sign::Plus;
  Sign hbar_sign = Sign::Plus;
  Sign sigma_sign = Sign::Plus;
  Branch branch = Branch::Positive;
  PhysicalConstants constants{};

  double energy() const;          // |c| sqrt(p^2 + m^2 c^2) > 0
  double p0() const;              // E / (s_c |c|)
  double mc() const;              // m s_c |c|
  Vec3 n() const;                 // p/|p|, z for p = 0
  Spinor4 bispinor() const;       // u per branch
  Complex prefactor() const;      // 1/sqrt(2 p0), principal branch
  Spinor4 eval(const Point4& x) const;
  /// branch sign times c sign: +1 for positive energy.
  int energy_label() const;
  std::string str() const;
};

/// Positive-branch state with sigma_sign = c_sign (required for a solution).
/// Throws std::invalid_argument unless w is normalized and m > 0.
SpinorState build_spinor(const Vec3& p, const Spinor2& w, double m, Branch branch = Branch::Positive,
                         Sign c_sign = Sign::Plus, Sign hbar_sign = Sign::Plus);

/// Relative residual of (g^a p_a -+ mc) u for the state's branch.
double spinor_residual(const GammaSet& gs4, const SpinorState& s);

/// u-bar u (real part); +-2m|c| per branch.
double spinor_norm(const GammaSet& gs4, const SpinorState& s);

/// Same function, labels (p, c, hbar, sigma) all negated.
SpinorState flip_labels(const SpinorState& s);

/// C psi = g2 psi*: flips the branch (w' = -sigma_y w*, w = sigma_y w'*).
SpinorState apply_C_spinor(const SpinorState& s);

/// Q psi = g2 psi*(x0, x, -c), hbar -> -hbar, sigma -> -sigma.
SpinorState apply_Q_spinor(const SpinorState& s);

/// g2 conj(psi(x)) evaluated directly; psi evaluated at flipped labels for Q.
Spinor4 literal_C(const GammaSet& gs4, const SpinorState& s, const Point4& x);
Spinor4 literal_Q(const GammaSet& gs4, const SpinorState& s, const Point4& x);

/// Record equality after moving both states to the c > 0 labeling.
bool same_spinor_function(const SpinorState& a, const SpinorState& b);

/// Relative residual of the transformed state against the free equation with
/// the entry's mapped parameters, at a sample point.
double transformed_residual(const GammaSet& gs4, const DiracTransform& entry, const SpinorState& s,
                            const Point4& x);

/// Exact bispinor for c > 0 from rational a = sqrt(p0 + mc) > b = sqrt(p0 - mc) >= 0,
/// so p0 = (a^2 + b^2)/2, mc = (a^2 - b^2)/2 and |p| = ab. n and w must be unit.
struct ExactSpinorData {
  ExactComplex a, b;
  std::array<ExactComplex, 3> n;
  std::array<ExactComplex, 2> w;
  Branch branch = Branch::Positive;

  ExactComplex p0() const;
  ExactComplex mc() const;
  ExactMatrix bispinor() const;
};

/// (g0 p0 - g.p -+ mc) u, exact.
ExactMatrix exact_spinor_residual(const GammaSet& gs4, const ExactSpinorData& d);

/// u-bar u minus (+-2mc), exact; zero when the normalization claim holds.
ExactComplex exact_norm_defect(const GammaSet& gs4, const ExactSpinorData& d);

// ---------------------------------------------------------------------------
// Charged equation (g^a p_a - mc - (e/c) g^a A_a) psi = 0

struct ChargedEquation {
  Sign charge = Sign::Plus;
  Sign a0 = Sign::Plus;
  Sign a = Sign::Plus;
  Sign c_sign = Sign::Plus;
  Sign hbar_sign = Sign::Plus;
  Sign mass = Sign::Plus;
  bool potential_zero = false;

  /// With zero potential the charge does not enter and is set to +.
  ChargedEquation canonical() const;
  friend bool operator==(const ChargedEquation& x, const ChargedEquation& y);
  std::string str() const;
};

enum class PotentialRule {
  Unchanged,  // potential left as is
  SignFlip    // (A0, A) -> (-A0, -A)
};

std::string to_string(PotentialRule r);

struct ChargedTransformResult {
  ChargedEquation equation;
  /// U_Q g^{aT} U_Q^-1 = mu_a g^a, computed from the matrices.
  std::array<int, 4> mu{};
  std::vector<std::string> steps;
};

/// Q applied to the charged equation: Dirac conjugate, flip c and hbar, apply the
/// potential rule, transpose and conjugate by U_Q, then renormalize. Throws
/// std::logic_error if the result is not of the charged-equation form.
ChargedTransformResult transform_charged_equation(const GammaSet& gs4, const ChargedEquation& eq,
                                                  PotentialRule rule);

}  // namespace symcheck
