#pragma once

// The order-8 group of sign reflections of (x0, x, c) and the algebra of
// field operators acting on the 16-component Maxwell function.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symcheck/exact.hpp"
#include "symcheck/sign.hpp"

namespace symcheck {

/// A 5x5 diagonal signature matrix acting on (x0, x1, x2, x3, c).
struct Alpha5 {
  std::string name;
  ExactMatrix matrix;
};

/// E, alpha^T, alpha^P, alpha^Q in that order.
std::array<Alpha5, 4> alpha_matrices();

/// Closure of a generating set under matrix product, with its Cayley table.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<ExactMatrix> elements;
  /// product[i][j] is the index of elements[i] * elements[j].
  std::vector<std::vector<std::size_t>> product;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t index_of(const ExactMatrix& m) const;  // throws std::out_of_range
};

/// Generates the group closure of the given square matrices. Elements are named
/// by the generator word that first reached them ("E" for the identity).
GroupTable generate_group(std::span<const Alpha5> generators);

/// The group generated by alpha^T, alpha^P, alpha^Q.
GroupTable generate_g8();

struct GroupStructure {
  std::size_t order = 0;
  /// element_orders[i] is the order of table.elements[i].
  std::vector<std::size_t> element_orders;
  std::size_t exponent = 0;
  bool axioms_hold = false;
  bool abelian = false;
  bool cyclic = false;
  /// Abelian with every non-identity element of the same prime order.
  bool elementary_abelian = false;

  std::string summary() const;
};

GroupStructure classify_group(const GroupTable& table);

// ---------------------------------------------------------------------------
// Field operators

inline constexpr std::size_t kFieldComponents = 16;

/// Component layout of the Maxwell function: (0, E1..E3, 0, H1..H3, rho, J1..J3, phi, A1..A3).
namespace slot {
inline constexpr std::size_t kZero0 = 0;
inline constexpr std::size_t kE = 1;
inline constexpr std::size_t kZero1 = 4;
inline constexpr std::size_t kH = 5;
inline constexpr std::size_t kRho = 8;
inline constexpr std::size_t kJ = 9;
inline constexpr std::size_t kPhi = 12;
inline constexpr std::size_t kA = 13;
}  // namespace slot

/// Signs applied to the arguments (x0, x, c).
struct ArgumentSignature {
  Sign time = Sign::Plus;
  Sign space = Sign::Plus;
  Sign light = Sign::Plus;

  friend bool operator==(const ArgumentSignature&, const ArgumentSignature&) = default;
  friend ArgumentSignature operator*(const ArgumentSignature& a, const ArgumentSignature& b) {
    return {a.time * b.time, a.space * b.space, a.light * b.light};
  }
};

/// Per-group component signs (E, H, rho, J, phi, A).
struct ComponentSigns {
  Sign e = Sign::Plus;
  Sign h = Sign::Plus;
  Sign rho = Sign::Plus;
  Sign j = Sign::Plus;
  Sign phi = Sign::Plus;
  Sign a = Sign::Plus;
};

class FieldOperator {
 public:
  FieldOperator(std::string name, ArgumentSignature args, const ComponentSigns& signs, bool charge_flip);
  FieldOperator(std::string name, ArgumentSignature args, std::array<Sign, kFieldComponents> comp_signs,
                bool charge_flip);

  const std::string& name() const noexcept { return name_; }
  const ArgumentSignature& args() const noexcept { return args_; }
  const std::array<Sign, kFieldComponents>& comp_signs() const noexcept { return signs_; }
  bool charge_flip() const noexcept { return charge_flip_; }

  /// this * other; the name is the concatenation (E is absorbed).
  FieldOperator compose(const FieldOperator& other) const;

  /// 16x16 diagonal sign matrix on the components.
  ExactMatrix component_matrix() const;
  /// 5x5 signature matrix on (x0, x1, x2, x3, c).
  ExactMatrix argument_matrix() const;

  bool is_identity() const noexcept;

  /// Equality of the action; names are ignored.
  friend bool operator==(const FieldOperator& a, const FieldOperator& b) {
    return a.args_ == b.args_ && a.signs_ == b.signs_ && a.charge_flip_ == b.charge_flip_;
  }

 private:
  std::string name_;
  ArgumentSignature args_;
  std::array<Sign, kFieldComponents> signs_;
  bool charge_flip_;
};

/// E, P1, P2, T1, T2, Q1, Q2.
struct FieldOperatorSet {
  FieldOperator e, p1, p2, t1, t2, q1, q2;

  /// The six non-identity generators in the order P1, P2, T1, T2, Q1, Q2.
  std::array<const FieldOperator*, 6> generators() const { return {&p1, &p2, &t1, &t2, &q1, &q2}; }
  const FieldOperator& by_name(std::string_view name) const;
};

FieldOperatorSet build_field_operators();

/// Classical charge conjugation C_e = Q1 Q2.
FieldOperator classical_charge_conjugation(const FieldOperatorSet& ops);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// Squares, product identities and vanishing commutators among the six operators.
std::vector<RelationCheck> verify_relations(const FieldOperatorSet& ops);

/// The sixteen canonical symmetries, in the listed order E, P1, P2, T1, T2, Q1,
/// Q2, P1T1, P1T2, P1Q1, P1Q2, T1Q1, T1Q2, Q1Q2, P1T1Q1, P1T1Q2.
std::vector<FieldOperator> canonical_symmetries(const FieldOperatorSet& ops);

/// Canonical name of op within the list above, or an empty string.
std::string canonical_name(const std::vector<FieldOperator>& canonical, const FieldOperator& op);

struct SymmetryEnumeration {
  std::vector<FieldOperator> distinct;
  /// Subset word (e.g. "P1Q1Q2", "E" for the empty product) -> canonical name.
  std::map<std::string, std::string> canonical_of;
  std::size_t products = 0;
  bool all_canonical = false;
};

/// All 2^6 subset products of {P1, P2, T1, T2, Q1, Q2}.
SymmetryEnumeration enumerate_distinct(const FieldOperatorSet& ops);

}  // namespace symcheck
