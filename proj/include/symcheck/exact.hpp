#pragma once

// Exact Gaussian-rational scalars and dense matrices.
//
// Every algebraic identity in this project is checked with zero tolerance, so
// entries are pairs of arbitrary-precision fractions (GMP mpq). Fractions are
// kept in lowest terms with positive denominators by mpq itself.

#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symcheck {

/// Thrown when operand shapes are incompatible. The message names both shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExactComplex {
 public:
  ExactComplex() = default;
  template <std::integral I>
  ExactComplex(I re) : re_(static_cast<long>(re)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(mpq_class re, mpq_class im);
  explicit ExactComplex(mpq_class re) : ExactComplex(std::move(re), 0) {}

  /// num/den, reduced to lowest terms. Throws on den == 0.
  static ExactComplex rational(long num, long den);
  static ExactComplex i() { return {0, 1}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.str(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  /// Zero matrix. rows and cols must be positive.
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactComplex> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const ExactComplex> diag);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<ExactComplex>> rows);
  static ExactMatrix column(std::span<const ExactComplex> values);
  static ExactMatrix row(std::span<const ExactComplex> values);
  /// [[a, b], [c, d]] from four equally sized square blocks.
  static ExactMatrix blocks(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                            const ExactMatrix& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::string shape() const;

  const ExactComplex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  ExactComplex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const ExactComplex> entries() const noexcept { return entries_; }
  std::span<const ExactComplex> row_view(std::size_t r) const {
    return std::span<const ExactComplex>(entries_).subspan(r * cols_, cols_);
  }

  bool is_zero() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }

  ExactMatrix transpose() const;
  ExactMatrix conj() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const;

  /// Rows of *this followed by rows of other.
  ExactMatrix stack(const ExactMatrix& other) const;

  std::vector<std::complex<double>> to_complex() const;
  std::string str() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactComplex& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator-(ExactMatrix a) { return a *= ExactComplex(-1); }
  friend ExactMatrix operator*(ExactMatrix a, const ExactComplex& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactComplex& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ExactComplex> entries_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);

/// Reduced row echelon form; pivot columns are appended to *pivots when given.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const ExactMatrix& m);

struct NullspaceResult {
  std::size_t rank = 0;
  /// Column vectors (cols x 1). For each free column f the basis vector has a
  /// 1 in slot f, zeros in the other free slots, and minus the RREF entries
  /// in the pivot slots.
  std::vector<ExactMatrix> basis;

  std::size_t nullity() const noexcept { return basis.size(); }
};

NullspaceResult linear_solve(const ExactMatrix& m);

/// True iff the row spans of a and b coincide. Throws DimensionError on
/// differing widths.
bool rowspace_equal(const ExactMatrix& a, const ExactMatrix& b);

/// Coefficients x with sum_i x_i * rows.row(i) == target, or nullopt if the
/// target is outside the row span. When several solutions exist the one with
/// zero free coefficients is returned.
std::optional<std::vector<ExactComplex>> row_combination(const ExactMatrix& rows,
                                                         std::span<const ExactComplex> target);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Row-major flattening of a matrix into a column (vec).
ExactMatrix vectorize(const ExactMatrix& m);
/// Inverse of vectorize for an n x n matrix.
ExactMatrix unvectorize(const ExactMatrix& column, std::size_t n);

}  // namespace symcheck
