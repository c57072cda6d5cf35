#pragma once

// Gamma-matrix sets for the 8-dimensional Maxwell-Dirac form and the
// 4-dimensional Dirac equation, with exact identity verification and the
// linear constraint systems that determine conjugation matrices.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcheck/exact.hpp"

namespace symcheck {

/// Metric diag(+, -, -, -).
constexpr int metric(std::size_t a, std::size_t b) noexcept { return a != b ? 0 : a == 0 ? 1 : -1; }

struct IdentityCheck {
  /// Short stable key, e.g. "clifford" or "g5-product".
  std::string key;
  std::string name;
  bool holds = false;
  /// Identities that are reported but not required for construction.
  bool enforced = true;
  std::string detail;
};

class GammaIdentityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replaces one matrix before verification; index 0..3 for gamma^a, 5 for gamma^5.
struct GammaOverride {
  std::size_t index = 0;
  ExactMatrix matrix;
};

struct GammaSet {
  std::size_t dim = 0;
  std::array<ExactMatrix, 4> g{ExactMatrix(1, 1), ExactMatrix(1, 1), ExactMatrix(1, 1), ExactMatrix(1, 1)};
  ExactMatrix g5{1, 1};
  std::vector<IdentityCheck> identities;

  bool all_identities_hold() const;
  ExactMatrix identity() const { return ExactMatrix::identity(dim); }
};

/// The 4x4 blocks alpha^1..alpha^3 used by the 8-dimensional set.
std::array<ExactMatrix, 3> alpha4();

/// Pauli matrices sigma_x, sigma_y, sigma_z.
std::array<ExactMatrix, 3> pauli();

/// 8-dimensional set. Every identity of the set is checked; construction throws
/// GammaIdentityError if an enforced identity fails. The product identity for
/// gamma^5 is reported only (it does not hold for these matrices).
GammaSet build_gamma8(const std::optional<GammaOverride>& override = std::nullopt);

/// 4-dimensional Dirac set; every identity is enforced.
GammaSet build_gamma4(const std::optional<GammaOverride>& override = std::nullopt);

/// Identity checks without construction, for reporting on arbitrary matrices.
std::vector<IdentityCheck> gamma8_identities(const std::array<ExactMatrix, 4>& g, const ExactMatrix& g5);
std::vector<IdentityCheck> gamma4_identities(const std::array<ExactMatrix, 4>& g, const ExactMatrix& g5);

/// Homogeneous system for U in U gamma^{aT} = eta_a gamma^a U (a = 0..3), in the
/// row-major entries of U: 4 n^2 equations, n^2 unknowns.
ExactMatrix conjugation_constraints(const GammaSet& gs, const std::array<int, 4>& eta);

struct ConjugationSolution {
  ExactMatrix constraints;
  NullspaceResult nullspace;

  /// Basis vectors reshaped to n x n matrices.
  std::vector<ExactMatrix> basis_matrices(std::size_t n) const;
  /// True iff u satisfies every constraint.
  bool satisfies(const ExactMatrix& u) const;
  /// True iff u is a combination of the basis.
  bool in_span(const ExactMatrix& u) const;
};

ConjugationSolution solve_conjugation(const GammaSet& gs, const std::array<int, 4>& eta);

}  // namespace symcheck
