#pragma once

// Small floating-point helpers for plane-wave evaluation and spot checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "symcheck/exact.hpp"

namespace symcheck {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
/// Spacetime point (x0, x1, x2, x3) with x0 = ct.
using Point4 = std::array<double, 4>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
inline Vec3 operator-(const Vec3& a) { return scale(a, -1.0); }
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

/// Principal square root of a real number: sqrt(x) for x >= 0, i*sqrt(|x|) otherwise.
inline Complex principal_sqrt(double x) {
  return x >= 0.0 ? Complex(std::sqrt(x), 0.0) : Complex(0.0, std::sqrt(-x));
}

/// Dense complex matrix, converted once from an exact matrix for evaluation.
class CMatrix {
 public:
  explicit CMatrix(const ExactMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(m.to_complex()) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  template <std::size_t N>
  std::array<Complex, N> apply(const std::array<Complex, N>& v) const {
    std::array<Complex, N> out{};
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

template <std::size_t N>
double max_abs(const std::array<Complex, N>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

template <std::size_t N>
double l2_norm(const std::array<Complex, N>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

/// |a - b| / max(|a|, |b|), with 0 when both vanish.
template <std::size_t N>
double relative_difference(const std::array<Complex, N>& a, const std::array<Complex, N>& b) {
  std::array<Complex, N> d{};
  for (std::size_t i = 0; i < N; ++i) d[i] = a[i] - b[i];
  const double scale = std::max(l2_norm(a), l2_norm(b));
  return scale == 0.0 ? 0.0 : l2_norm(d) / scale;
}

template <std::size_t N>
std::array<Complex, N> conj(const std::array<Complex, N>& v) {
  std::array<Complex, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = std::conj(v[i]);
  return out;
}

/// Fixed magnitudes of the speed of light and Planck's constant. Signs are
/// carried separately as labels; magnitudes are never negated.
struct PhysicalConstants {
  double c = 1.0;
  double hbar = 1.0;
};

}  // namespace symcheck
