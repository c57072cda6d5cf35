#include "symcheck/electron.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symcheck {

namespace {

const ExactComplex kI = ExactComplex::i();

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

Vec3 position(const Point4& x) { return {x[1], x[2], x[3]}; }

// (n.sigma) w
Spinor2 n_sigma(const Vec3& n, const Spinor2& w) {
  const Complex i(0.0, 1.0);
  return {n[2] * w[0] + (n[0] - i * n[1]) * w[1], (n[0] + i * n[1]) * w[0] - n[2] * w[1]};
}

// -sigma_y w*
Spinor2 minus_sigma_y_conj(const Spinor2& w) {
  const Complex i(0.0, 1.0);
  return {i * std::conj(w[1]), -i * std::conj(w[0])};
}

// sigma_y w*
Spinor2 sigma_y_conj(const Spinor2& w) {
  const Complex i(0.0, 1.0);
  return {-i * std::conj(w[1]), i * std::conj(w[0])};
}

ExactMatrix n_sigma_exact(const std::array<ExactComplex, 3>& n) {
  const auto s = pauli();
  return n[0] * s[0] + n[1] * s[1] + n[2] * s[2];
}

}  // namespace

// ---------------------------------------------------------------------------
// Transformation table

std::vector<DiracTransform> build_transform_table(const GammaSet& gs4) {
  const auto& g = gs4.g;
  constexpr Sign M = Sign::Minus;
  constexpr Sign P = Sign::Plus;
  const ParamSignature q{M, M, P, P, P, P};
  const ParamSignature q_sigma{M, M, P, P, P, M};
  return {
      {"P", kI * g[0], false, P, M, {}},
      {"T", -kI * (g[1] * g[3]), true, M, P, {}},
      {"PT", g[0] * g[1] * g[3], true, M, M, {}},
      {"QPT", kI * gs4.g5, false, M, M, q},
      {"QT", kI * (g[1] * g[2] * g[3]), false, M, P, q},
      {"QP", kI * (g[0] * g[2]), true, P, M, q},
      {"Q", g[2], true, P, P, q_sigma},
  };
}

std::vector<DiracTransform> build_c_column(const GammaSet& gs4) {
  const auto& g = gs4.g;
  constexpr Sign M = Sign::Minus;
  constexpr Sign P = Sign::Plus;
  return {
      {"C", g[2], true, P, P, {}},
      {"CP", kI * (g[0] * g[2]), true, P, M, {}},
      {"CT", kI * (g[1] * g[2] * g[3]), false, M, P, {}},
      {"CPT", kI * gs4.g5, false, M, M, {}},
  };
}

const DiracTransform& find_transform(const std::vector<DiracTransform>& table, const std::string& name) {
  for (const auto& t : table) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("no transform named " + name);
}

SymmetryCertificate verify_symmetry(const GammaSet& gs4, const DiracTransform& entry) {
  SymmetryCertificate cert;
  cert.invertible = inverse(entry.matrix).has_value();
  const int s = entry.conj ? -1 : 1;
  std::ostringstream os;
  bool all = true;
  for (std::size_t a = 0; a < 4; ++a) {
    cert.eta[a] = to_int(entry.params.c) * s * to_int(entry.params.hbar) * to_int(entry.arg_sign(a));
    const ExactMatrix ga = entry.conj ? gs4.g[a].conj() : gs4.g[a];
    cert.relation[a] = entry.matrix * ga == ExactComplex(cert.eta[a]) * (gs4.g[a] * entry.matrix);
    if (!cert.relation[a]) os << " a=" << a;
    all = all && cert.relation[a];
  }
  cert.holds = cert.invertible && all;
  std::ostringstream d;
  d << entry.name << ": M " << (entry.conj ? "(g^a)*" : "g^a") << " = eta_a g^a M with eta = (" << cert.eta[0] << ','
    << cert.eta[1] << ',' << cert.eta[2] << ',' << cert.eta[3] << ')';
  if (!all) d << " fails for" << os.str();
  if (!cert.invertible) d << "; matrix singular";
  cert.detail = d.str();
  return cert;
}

// ---------------------------------------------------------------------------
// Spinors

double SpinorState::energy() const {
  const double mc_abs = m * constants.c;
  return constants.c * std::sqrt(dot(p, p) + mc_abs * mc_abs);
}

double SpinorState::p0() const { return energy() / (to_double(c_sign) * constants.c); }

double SpinorState::mc() const { return m * to_double(c_sign) * constants.c; }

Vec3 SpinorState::n() const {
  const double pn = norm(p);
  return pn == 0.0 ? Vec3{0, 0, 1} : scale(p, 1.0 / pn);
}

Spinor4 SpinorState::bispinor() const {
  const double pp = dot(p, p);
  const double sum = p0() + mc();
  // p0 - mc = |p|^2 / (p0 + mc) avoids cancellation for small |p|.
  const double diff = pp / sum;
  const Complex a = principal_sqrt(sum);
  const Complex b = principal_sqrt(diff);
  const Spinor2 ns = n_sigma(n(), w);
  const double sg = to_double(sigma_sign);
  if (branch == Branch::Positive) return {a * w[0], a * w[1], b * sg * ns[0], b * sg * ns[1]};
  return {b * sg * ns[0], b * sg * ns[1], a * w[0], a * w[1]};
}

Complex SpinorState::prefactor() const { return 1.0 / principal_sqrt(2.0 * p0()); }

Spinor4 SpinorState::eval(const Point4& x) const {
  const double theta = (p0() * x[0] - dot(p, position(x))) / (to_double(hbar_sign) * constants.hbar);
  const double dir = branch == Branch::Positive ? -1.0 : 1.0;
  const Complex f = prefactor() * std::exp(Complex(0.0, dir * theta));
  Spinor4 u = bispinor();
  for (auto& z : u) z *= f;
  return u;
}

int SpinorState::energy_label() const { return (branch == Branch::Positive ? 1 : -1) * to_int(c_sign); }

std::string SpinorState::str() const {
  std::ostringstream os;
  os << (branch == Branch::Positive ? "u+" : "u-") << " p=(" << p[0] << ',' << p[1] << ',' << p[2] << ") m=" << m
     << " c" << sign_char(c_sign) << " hbar" << sign_char(hbar_sign) << " sigma" << sign_char(sigma_sign) << " E"
     << (energy_label() > 0 ? '+' : '-');
  return os.str();
}

SpinorState build_spinor(const Vec3& p, const Spinor2& w, double m, Branch branch, Sign c_sign, Sign hbar_sign) {
  if (!(m > 0.0)) throw std::invalid_argument("build_spinor: mass must be positive");
  const double ww = std::norm(w[0]) + std::norm(w[1]);
  if (std::abs(ww - 1.0) > 1e-12) throw std::invalid_argument("build_spinor: w is not normalized (w^+ w != 1)");
  SpinorState s;
  s.p = p;
  s.w = w;
  s.m = m;
  s.branch = branch;
  s.c_sign = c_sign;
  s.hbar_sign = hbar_sign;
  s.sigma_sign = c_sign;
  return s;
}

double spinor_residual(const GammaSet& gs4, const SpinorState& s) {
  const Spinor4 u = s.bispinor();
  const double p0 = s.p0();
  const double mass = s.branch == Branch::Positive ? -s.mc() : s.mc();
  Spinor4 r = CMatrix(gs4.g[0]).apply(u);
  for (auto& z : r) z *= p0;
  for (std::size_t k = 0; k < 3; ++k) {
    const Spinor4 gk = CMatrix(gs4.g[k + 1]).apply(u);
    for (std::size_t i = 0; i < 4; ++i) r[i] -= s.p[k] * gk[i];
  }
  for (std::size_t i = 0; i < 4; ++i) r[i] += mass * u[i];
  const double scale_ = (std::abs(p0) + norm(s.p) + s.m * s.constants.c) * std::max(l2_norm(u), 1e-300);
  return l2_norm(r) / scale_;
}

double spinor_norm(const GammaSet& gs4, const SpinorState& s) {
  const Spinor4 u = s.bispinor();
  const Spinor4 g0u = CMatrix(gs4.g[0]).apply(u);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(u[i]) * g0u[i];
  return acc.real();
}

SpinorState flip_labels(const SpinorState& s) {
  SpinorState out = s;
  out.p = -s.p;
  out.c_sign = -s.c_sign;
  out.hbar_sign = -s.hbar_sign;
  out.sigma_sign = -s.sigma_sign;
  return out;
}

SpinorState apply_C_spinor(const SpinorState& s) {
  SpinorState out = s;
  if (s.branch == Branch::Positive) {
    out.branch = Branch::Negative;
    out.w = minus_sigma_y_conj(s.w);
  } else {
    out.branch = Branch::Positive;
    out.w = sigma_y_conj(s.w);
  }
  return out;
}

SpinorState apply_Q_spinor(const SpinorState& s) { return apply_C_spinor(flip_labels(s)); }

Spinor4 literal_C(const GammaSet& gs4, const SpinorState& s, const Point4& x) {
  return CMatrix(gs4.g[2]).apply(conj(s.eval(x)));
}

Spinor4 literal_Q(const GammaSet& gs4, const SpinorState& s, const Point4& x) {
  return CMatrix(gs4.g[2]).apply(conj(flip_labels(s).eval(x)));
}

bool same_spinor_function(const SpinorState& a, const SpinorState& b) {
  const SpinorState x = a.c_sign == Sign::Plus ? a : flip_labels(a);
  const SpinorState y = b.c_sign == Sign::Plus ? b : flip_labels(b);
  return x.p == y.p && x.w == y.w && x.m == y.m && x.hbar_sign == y.hbar_sign && x.sigma_sign == y.sigma_sign &&
         x.branch == y.branch && x.constants.c == y.constants.c && x.constants.hbar == y.constants.hbar;
}

double transformed_residual(const GammaSet& gs4, const DiracTransform& entry, const SpinorState& s,
                            const Point4& x) {
  // psi'(x) = M K[psi](Lambda x) is again a plane wave; its derivatives are the
  // phase gradient of psi at Lambda x with the signs of Lambda and K applied.
  const Point4 lx{to_double(entry.time) * x[0], to_double(entry.space) * x[1], to_double(entry.space) * x[2],
                  to_double(entry.space) * x[3]};
  Spinor4 v = s.eval(lx);
  if (entry.conj) v = conj(v);
  const Spinor4 psi = CMatrix(entry.matrix).apply(v);

  const double sconj = entry.conj ? -1.0 : 1.0;
  const double beta = s.branch == Branch::Positive ? 1.0 : -1.0;
  const double k = to_double(entry.params.hbar) * sconj * beta;
  const double q0 = k * to_double(entry.time) * s.p0();
  const Vec3 q = scale(s.p, k * to_double(entry.space));
  const double mass = s.m * to_double(entry.params.c) * to_double(s.c_sign) * s.constants.c;

  Spinor4 r = CMatrix(gs4.g[0]).apply(psi);
  for (auto& z : r) z *= q0;
  for (std::size_t j = 0; j < 3; ++j) {
    const Spinor4 gj = CMatrix(gs4.g[j + 1]).apply(psi);
    for (std::size_t i = 0; i < 4; ++i) r[i] -= q[j] * gj[i];
  }
  for (std::size_t i = 0; i < 4; ++i) r[i] -= mass * psi[i];
  const double scale_ = (std::abs(s.p0()) + norm(s.p) + s.m * s.constants.c) * std::max(l2_norm(psi), 1e-300);
  return l2_norm(r) / scale_;
}

ExactComplex ExactSpinorData::p0() const { return (a * a + b * b) * ExactComplex::rational(1, 2); }
ExactComplex ExactSpinorData::mc() const { return (a * a - b * b) * ExactComplex::rational(1, 2); }

ExactMatrix ExactSpinorData::bispinor() const {
  const ExactMatrix wc = ExactMatrix::column(w);
  const ExactMatrix nw = n_sigma_exact(n) * wc;
  if (branch == Branch::Positive) return {4, 1, {a * wc(0, 0), a * wc(1, 0), b * nw(0, 0), b * nw(1, 0)}};
  return {4, 1, {b * nw(0, 0), b * nw(1, 0), a * wc(0, 0), a * wc(1, 0)}};
}

ExactMatrix exact_spinor_residual(const GammaSet& gs4, const ExactSpinorData& d) {
  const ExactComplex pmag = d.a * d.b;
  ExactMatrix op = d.p0() * gs4.g[0];
  for (std::size_t k = 0; k < 3; ++k) op -= (pmag * d.n[k]) * gs4.g[k + 1];
  const ExactComplex mass = d.branch == Branch::Positive ? -d.mc() : d.mc();
  op += mass * gs4.identity();
  return op * d.bispinor();
}

ExactComplex exact_norm_defect(const GammaSet& gs4, const ExactSpinorData& d) {
  const ExactMatrix u = d.bispinor();
  const ExactComplex ubar_u = (u.adjoint() * gs4.g[0] * u)(0, 0);
  const ExactComplex expected = (d.branch == Branch::Positive ? ExactComplex(2) : ExactComplex(-2)) * d.mc();
  return ubar_u - expected;
}

// ---------------------------------------------------------------------------
// Charged equation

ChargedEquation ChargedEquation::canonical() const {
  ChargedEquation c = *this;
  if (c.potential_zero) {
    c.charge = Sign::Plus;
    c.a0 = Sign::Plus;
    c.a = Sign::Plus;
  }
  return c;
}

bool operator==(const ChargedEquation& x, const ChargedEquation& y) {
  const ChargedEquation a = x.canonical();
  const ChargedEquation b = y.canonical();
  return a.charge == b.charge && a.a0 == b.a0 && a.a == b.a && a.c_sign == b.c_sign && a.hbar_sign == b.hbar_sign &&
         a.mass == b.mass && a.potential_zero == b.potential_zero;
}

std::string ChargedEquation::str() const {
  std::ostringstream os;
  os << "e" << sign_char(charge) << " A0" << sign_char(a0) << " A" << sign_char(a) << " c" << sign_char(c_sign)
     << " hbar" << sign_char(hbar_sign) << " m" << sign_char(mass) << (potential_zero ? " A=0" : "");
  return os.str();
}

std::string to_string(PotentialRule r) { return r == PotentialRule::Unchanged ? "unchanged" : "signflip"; }

ChargedTransformResult transform_charged_equation(const GammaSet& gs4, const ChargedEquation& eq,
                                                  PotentialRule rule) {
  ChargedTransformResult res;
  auto record = [&res](const std::string& what, const std::array<int, 4>& kin, int mass,
                       const std::array<int, 4>& pot) {
    std::ostringstream os;
    os << what << ": kinetic (" << kin[0] << ',' << kin[1] << ',' << kin[2] << ',' << kin[3] << ") mass " << mass
       << " potential (" << pot[0] << ',' << pot[1] << ',' << pot[2] << ',' << pot[3] << ')';
    res.steps.push_back(os.str());
  };

  // Coefficients of g^a p_a, of m c and of (e/c) g^a A_a written in the input's
  // symbols; the potential coefficient carries the signs of e and A_a.
  const int e = to_int(eq.charge);
  std::array<int, 4> kin{1, 1, 1, 1};
  int mass = -to_int(eq.mass);
  std::array<int, 4> pot{};
  for (std::size_t a = 0; a < 4; ++a) pot[a] = eq.potential_zero ? 0 : -e * to_int(a == 0 ? eq.a0 : eq.a);
  record("input", kin, mass, pot);

  // Dirac conjugate: p_a = i hbar d_a changes sign when acting on psi-bar.
  for (auto& k : kin) k = -k;
  record("Dirac conjugate", kin, mass, pot);

  // c -> -c, hbar -> -hbar; e is a scalar; e/c changes sign; rule on A.
  const int eps_c = -1;
  const int eps_hbar = -1;
  const int eps_a = rule == PotentialRule::Unchanged ? 1 : -1;
  for (auto& k : kin) k *= eps_hbar;
  mass *= eps_c;
  for (auto& p : pot) p *= eps_c * eps_a;
  record("c -> -c, hbar -> -hbar, A rule " + to_string(rule), kin, mass, pot);

  // Transpose and conjugate by U_Q.
  const ExactMatrix uq = -(gs4.g[0] * gs4.g[2]);
  const auto uq_inv = inverse(uq);
  if (!uq_inv) throw std::logic_error("transform_charged_equation: U_Q singular");
  for (std::size_t a = 0; a < 4; ++a) {
    const ExactMatrix t = uq * gs4.g[a].transpose() * *uq_inv;
    if (t == gs4.g[a]) {
      res.mu[a] = 1;
    } else if (t == -gs4.g[a]) {
      res.mu[a] = -1;
    } else {
      throw std::logic_error("transform_charged_equation: U_Q g^T U_Q^-1 is not +-g");
    }
    kin[a] *= res.mu[a];
    pot[a] *= res.mu[a];
  }
  record("U_Q g^T U_Q^-1 = mu g", kin, mass, pot);

  if (!std::all_of(kin.begin(), kin.end(), [&](int k) { return k == kin[0]; })) {
    throw std::logic_error("transform_charged_equation: kinetic term lost its covariant form");
  }
  const int norm_ = kin[0];
  for (auto& k : kin) k *= norm_;
  mass *= norm_;
  for (auto& p : pot) p *= norm_;
  record("normalized", kin, mass, pot);

  // Read the record back against the input's external potential.
  ChargedEquation out = eq;
  out.mass = mass == -1 ? Sign::Plus : Sign::Minus;
  if (!eq.potential_zero) {
    std::array<int, 4> charge{};
    for (std::size_t a = 0; a < 4; ++a) charge[a] = -pot[a] * to_int(a == 0 ? eq.a0 : eq.a);
    if (!std::all_of(charge.begin(), charge.end(), [&](int c) { return c == charge[0]; })) {
      throw std::logic_error("transform_charged_equation: potential term is not a charge times g^a A_a");
    }
    out.charge = charge[0] > 0 ? Sign::Plus : Sign::Minus;
  }
  res.equation = out.canonical();
  return res;
}

}  // namespace symcheck
