#include "symcheck/photon.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace symcheck {

namespace {

Vec3 position(const Point4& x) { return {x[1], x[2], x[3]}; }

std::array<ExactComplex, 3> exact_cross(const std::array<ExactComplex, 3>& a, const std::array<ExactComplex, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ExactMatrix column8(const std::array<ExactComplex, 3>& l, const std::array<ExactComplex, 3>& m) {
  const std::array<ExactComplex, 8> v{0, l[0], l[1], l[2], 0, m[0], m[1], m[2]};
  return ExactMatrix::column(v);
}

}  // namespace

Spinor8 PhotonState::base_amplitude() const {
  const double r = 1.0 / std::sqrt(2.0);
  return {0.0, l[0] * r, l[1] * r, l[2] * r, 0.0, m[0] * r, m[1] * r, m[2] * r};
}

Spinor8 PhotonState::eval(const Point4& x) const {
  const double theta = (p0 * x[0] - dot(p, position(x))) / (to_double(hbar_sign) * constants.hbar);
  Complex f = std::exp(Complex(0.0, -theta));
  if (conjugated) f = std::conj(f);
  const Complex lam = lambda.to_complex();
  Spinor8 out = base_amplitude();
  for (auto& z : out) z *= lam * f;
  return out;
}

std::string PhotonState::str() const {
  std::ostringstream os;
  os << "lambda=" << lambda << " p0=" << p0 << " p=(" << p[0] << ',' << p[1] << ',' << p[2] << ") hbar"
     << (hbar_sign == Sign::Plus ? '+' : '-') << " c" << (c_sign == Sign::Plus ? '+' : '-')
     << (conjugated ? " conj" : "");
  return os.str();
}

PhotonState photon_plane_wave(const Vec3& n, const Vec3& l, double p0, Sign hbar_sign, Sign c_sign) {
  if (std::abs(norm(n) - 1.0) > 1e-12) throw std::invalid_argument("photon_plane_wave: |n| != 1");
  const double ln = norm(l);
  if (ln == 0.0) throw std::invalid_argument("photon_plane_wave: l = 0");
  if (std::abs(dot(n, l)) > 1e-12 * ln) throw std::invalid_argument("photon_plane_wave: transversality violated (n.l != 0)");
  if (!(p0 > 0.0)) throw std::invalid_argument("photon_plane_wave: p0 must be positive");
  PhotonState s;
  s.n = n;
  s.l = scale(l, 1.0 / ln);
  s.m = cross(n, s.l);
  s.p0 = p0;
  s.p = scale(n, p0);
  s.hbar_sign = hbar_sign;
  s.c_sign = c_sign;
  return s;
}

PhotonState canonical_form(const PhotonState& s) {
  if (!s.conjugated) return s;
  // The amplitude is real, so conjugation only reverses the phase.
  PhotonState out = s;
  out.conjugated = false;
  out.p0 = -s.p0;
  out.p = -s.p;
  return out;
}

PhotonState apply_C_photon(const PhotonState& s, const ExactComplex& lambda) {
  PhotonState out = s;
  out.lambda = lambda * s.lambda.conj();
  out.conjugated = !s.conjugated;
  return canonical_form(out);
}

PhotonState apply_Q_photon(const PhotonState& s, const ExactComplex& lambda) {
  PhotonState out = s;
  out.lambda = lambda * s.lambda.conj();
  out.conjugated = !s.conjugated;
  out.p0 = -s.p0;
  out.p = -s.p;
  out.hbar_sign = -s.hbar_sign;
  out.c_sign = -s.c_sign;
  return out;
}

bool same_function(const PhotonState& a, const PhotonState& b) {
  const PhotonState ca = canonical_form(a);
  const PhotonState cb = canonical_form(b);
  if (!(ca.lambda == cb.lambda && ca.l == cb.l && ca.m == cb.m)) return false;
  const double ha = to_double(ca.hbar_sign) * ca.constants.hbar;
  const double hb = to_double(cb.hbar_sign) * cb.constants.hbar;
  return ca.p0 / ha == cb.p0 / hb && scale(ca.p, 1.0 / ha) == scale(cb.p, 1.0 / hb);
}

double photon_dirac_residual(const GammaSet& gs8, const PhotonState& s) {
  // d_a acting on the canonical phase gives -i k_a with k = (p0, -p)/(s_hbar hbar);
  // the equation's own i hbar carries the same sign, so the operator reduces to
  // p0 g0 - p.g on the amplitude.
  const PhotonState c = canonical_form(s);
  Spinor8 amp = c.base_amplitude();
  Spinor8 out{};
  const auto g0 = CMatrix(gs8.g[0]).apply(amp);
  for (std::size_t i = 0; i < 8; ++i) out[i] = c.p0 * g0[i];
  for (std::size_t k = 0; k < 3; ++k) {
    const auto gk = CMatrix(gs8.g[k + 1]).apply(amp);
    for (std::size_t i = 0; i < 8; ++i) out[i] -= c.p[k] * gk[i];
  }
  return max_abs(out);
}

ExactMatrix photon_dirac_residual_exact(const GammaSet& gs8, const std::array<ExactComplex, 3>& l,
                                        const std::array<ExactComplex, 3>& n) {
  ExactMatrix op = gs8.g[0];
  for (std::size_t k = 0; k < 3; ++k) op -= n[k] * gs8.g[k + 1];
  return op * column8(l, exact_cross(n, l));
}

std::array<double, 4> photon_currents(const GammaSet& gs8, const PhotonState& s, const Point4& x) {
  const Spinor8 psi = s.eval(x);
  const CMatrix g0(gs8.g[0]);
  std::array<double, 4> j{};
  for (std::size_t a = 0; a < 4; ++a) {
    const Spinor8 v = g0.apply(CMatrix(gs8.g[a]).apply(psi));
    Complex acc = 0.0;
    for (std::size_t i = 0; i < 8; ++i) acc += std::conj(psi[i]) * v[i];
    j[a] = acc.real();
  }
  return j;
}

std::array<ExactComplex, 4> photon_currents_exact(const GammaSet& gs8, const std::array<ExactComplex, 3>& l,
                                                  const std::array<ExactComplex, 3>& m, const ExactComplex& lambda) {
  const ExactMatrix v = lambda * column8(l, m);
  const ExactMatrix bar = v.adjoint() * gs8.g[0];
  std::array<ExactComplex, 4> j;
  for (std::size_t a = 0; a < 4; ++a) j[a] = (bar * gs8.g[a] * v)(0, 0) * ExactComplex::rational(1, 2);
  return j;
}

Complex amplitude_energy_density(const PhotonState& s) {
  const Complex lam = s.lambda.to_complex();
  return lam * lam * (dot(s.l, s.l) + dot(s.m, s.m)) / (8.0 * std::numbers::pi);
}

Spinor8 displaced_phase_form(const PhotonState& original, const Point4& x) {
  const double theta = (original.p0 * x[0] - dot(original.p, position(x))) /
                       (to_double(original.hbar_sign) * original.constants.hbar);
  const Complex f = std::exp(Complex(0.0, theta + std::numbers::pi / 2));
  Spinor8 out = original.base_amplitude();
  for (auto& z : out) z *= -f;
  return out;
}

}  // namespace symcheck
