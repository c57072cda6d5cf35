#include "symcheck/maxwell.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace symcheck {

namespace {

constexpr Deriv kSpatial[3] = {Deriv::D1, Deriv::D2, Deriv::D3};

struct RowBuilder {
  std::vector<ExactComplex> coeffs = std::vector<ExactComplex>(kSystemWidth);
  RowBuilder& add(std::size_t comp, Deriv d, long v) {
    coeffs[system_column(comp, d)] += ExactComplex(v);
    return *this;
  }
};

// (curl F)_i = d_j F_k - d_k F_j for cyclic (i, j, k).
void add_curl(RowBuilder& r, std::size_t base, std::size_t i, long sign) {
  const std::size_t j = (i + 1) % 3;
  const std::size_t k = (i + 2) % 3;
  r.add(base + k, kSpatial[j], sign);
  r.add(base + j, kSpatial[k], -sign);
}

void add_div(RowBuilder& r, std::size_t base, long sign) {
  for (std::size_t i = 0; i < 3; ++i) r.add(base + i, kSpatial[i], sign);
}

}  // namespace

LinearFieldSystem build_maxwell_system() {
  std::vector<RowBuilder> rows;
  std::vector<std::string> labels;
  const char axis[3] = {'x', 'y', 'z'};

  for (std::size_t i = 0; i < 3; ++i) {
    RowBuilder r;
    add_curl(r, slot::kH, i, 1);
    r.add(slot::kE + i, Deriv::D0, -1).add(slot::kJ + i, Deriv::Value, -1);
    rows.push_back(r);
    labels.push_back(std::string("(curl H - d0 E - 4pi J)_") + axis[i]);
  }
  {
    RowBuilder r;
    add_div(r, slot::kH, 1);
    rows.push_back(r);
    labels.emplace_back("div H");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    RowBuilder r;
    add_curl(r, slot::kE, i, 1);
    r.add(slot::kH + i, Deriv::D0, 1);
    rows.push_back(r);
    labels.push_back(std::string("(curl E + d0 H)_") + axis[i]);
  }
  {
    RowBuilder r;
    add_div(r, slot::kE, 1);
    r.add(slot::kRho, Deriv::Value, -1);
    rows.push_back(r);
    labels.emplace_back("div E - 4pi rho");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    RowBuilder r;
    r.add(slot::kE + i, Deriv::Value, 1).add(slot::kA + i, Deriv::D0, 1).add(slot::kPhi, kSpatial[i], 1);
    rows.push_back(r);
    labels.push_back(std::string("(E + d0 A + grad phi)_") + axis[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    RowBuilder r;
    r.add(slot::kH + i, Deriv::Value, 1);
    add_curl(r, slot::kA, i, -1);
    rows.push_back(r);
    labels.push_back(std::string("(H - curl A)_") + axis[i]);
  }

  std::vector<ExactComplex> flat;
  flat.reserve(rows.size() * kSystemWidth);
  for (const auto& r : rows) flat.insert(flat.end(), r.coeffs.begin(), r.coeffs.end());
  return {ExactMatrix(rows.size(), kSystemWidth, std::move(flat)), std::move(labels)};
}

LinearFieldSystem transform_system(const LinearFieldSystem& sys, const FieldOperator& op) {
  LinearFieldSystem out = sys;
  const auto& signs = op.comp_signs();
  for (std::size_t comp = 0; comp < kFieldComponents; ++comp) {
    for (std::size_t d = 0; d < kDerivSlots; ++d) {
      Sign s = signs[comp];
      if (d == static_cast<std::size_t>(Deriv::D0)) s = s * op.args().time;
      if (d >= static_cast<std::size_t>(Deriv::D1)) s = s * op.args().space;
      if (s == Sign::Plus) continue;
      const std::size_t col = comp * kDerivSlots + d;
      for (std::size_t r = 0; r < out.rows.rows(); ++r) out.rows(r, col) = -out.rows(r, col);
    }
  }
  return out;
}

InvarianceResult check_invariance(const LinearFieldSystem& sys, const FieldOperator& op) {
  const LinearFieldSystem t = transform_system(sys, op);
  InvarianceResult res;
  res.invariant = rowspace_equal(sys.rows, t.rows);
  std::size_t outside = 0;
  std::size_t unchanged = 0;
  for (std::size_t r = 0; r < t.rows.rows(); ++r) {
    res.certificate.push_back(row_combination(sys.rows, t.rows.row_view(r)));
    if (!res.certificate.back()) {
      ++outside;
      continue;
    }
    const auto& x = *res.certificate.back();
    bool same = true;
    for (std::size_t k = 0; k < x.size(); ++k) same = same && x[k] == ExactComplex(k == r ? 1 : 0);
    bool negated = true;
    for (std::size_t k = 0; k < x.size(); ++k) negated = negated && x[k] == ExactComplex(k == r ? -1 : 0);
    if (same || negated) ++unchanged;
  }
  std::ostringstream os;
  os << op.name() << ": " << (res.invariant ? "row space preserved" : "row space changed") << "; "
     << t.rows.rows() - outside << '/' << t.rows.rows() << " transformed rows expressed in the original basis";
  if (res.invariant) os << " (" << unchanged << " map to +/- themselves)";
  res.summary = os.str();
  return res;
}

// ---------------------------------------------------------------------------

PlaneWaveEM::PlaneWaveEM(Vec3 l, Vec3 m, Vec3 n, double k0, Sign c_sign)
    : l_(l), m_(m), n_(n), k0_(k0), c_sign_(c_sign) {
  if (!(k0 > 0.0)) throw std::invalid_argument("PlaneWaveEM: k0 must be positive");
  if (std::abs(norm(n) - 1.0) > kUnitTolerance) throw std::invalid_argument("PlaneWaveEM: |n| != 1");
  if (std::abs(dot(n, l)) > kUnitTolerance * std::max(1.0, norm(l))) {
    throw std::invalid_argument("PlaneWaveEM: transversality violated (n.l != 0)");
  }
}

PlaneWaveEM PlaneWaveEM::make(Vec3 l, Vec3 n, double k0, Sign c_sign) {
  return {l, cross(n, l), n, k0, c_sign};
}

double PlaneWaveEM::phase(const Point4& x) const {
  return k0_ * (x[0] - dot(n_, {x[1], x[2], x[3]}));
}

std::array<Complex, kFieldComponents> PlaneWaveEM::field(const Point4& x) const {
  const Complex f = std::exp(Complex(0.0, -phase(x)));
  std::array<Complex, kFieldComponents> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[slot::kE + i] = l_[i] * f;
    out[slot::kH + i] = m_[i] * f;
  }
  return out;
}

double plane_wave_residual(const PlaneWaveEM& w, const LinearFieldSystem& sys) {
  // Amplitudes with the common phase factor divided out; d0 -> -i k0, dj -> +i k_j.
  std::array<Complex, kFieldComponents> amp{};
  for (std::size_t i = 0; i < 3; ++i) {
    amp[slot::kE + i] = w.l()[i];
    amp[slot::kH + i] = w.m()[i];
  }
  const std::array<Complex, kDerivSlots> factor{
      Complex(1.0, 0.0), Complex(0.0, -w.k0()), Complex(0.0, w.k0() * w.n()[0]), Complex(0.0, w.k0() * w.n()[1]),
      Complex(0.0, w.k0() * w.n()[2])};
  const auto coeffs = sys.rows.to_complex();
  double worst = 0.0;
  for (std::size_t r = 0; r < std::min(kFieldEquations, sys.rows.rows()); ++r) {
    Complex v = 0.0;
    for (std::size_t comp = 0; comp < kFieldComponents; ++comp) {
      if (amp[comp] == Complex(0.0)) continue;
      for (std::size_t d = 0; d < kDerivSlots; ++d) {
        v += coeffs[r * kSystemWidth + comp * kDerivSlots + d] * factor[d] * amp[comp];
      }
    }
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

PlaneWaveEM classical_conjugate(const PlaneWaveEM& w) {
  return {-w.l(), -w.m(), w.n(), w.k0(), w.c_sign()};
}

std::array<Complex, kFieldComponents> apply_component_signs(const FieldOperator& op,
                                                            const std::array<Complex, kFieldComponents>& phi) {
  std::array<Complex, kFieldComponents> out{};
  for (std::size_t k = 0; k < kFieldComponents; ++k) out[k] = to_double(op.comp_signs()[k]) * phi[k];
  return out;
}

EnergyFlux energy_poynting(const PlaneWaveEM& w, const Point4& x, const PhysicalConstants& k) {
  const double c = std::cos(w.phase(x));
  const Vec3 e = scale(w.l(), c);
  const Vec3 h = scale(w.m(), c);
  constexpr double pi = std::numbers::pi;
  EnergyFlux out;
  out.w = (dot(e, e) + dot(h, h)) / (8.0 * pi);
  out.s = scale(cross(e, h), to_double(w.c_sign()) * k.c / (4.0 * pi));
  return out;
}

}  // namespace symcheck
