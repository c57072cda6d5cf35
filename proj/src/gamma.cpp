#include "symcheck/gamma.hpp"

#include <algorithm>
#include <sstream>

namespace symcheck {

namespace {

const ExactComplex kI = ExactComplex::i();

ExactMatrix scaled_identity(std::size_t n, int k) { return ExactMatrix::identity(n) * ExactComplex(k); }

IdentityCheck check(std::string key, std::string name, bool holds, bool enforced = true) {
  return {std::move(key), std::move(name), holds, enforced, {}};
}

// {g^a, g^b} = 2 g^{ab} for all pairs; failing pairs go into the detail.
IdentityCheck clifford(const std::array<ExactMatrix, 4>& g) {
  const std::size_t n = g[0].rows();
  std::ostringstream bad;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) {
      if (anticommutator(g[a], g[b]) != scaled_identity(n, 2 * metric(a, b))) bad << " (" << a << ',' << b << ')';
    }
  }
  IdentityCheck c = check("clifford", "g^a g^b + g^b g^a = 2 g^ab", bad.str().empty());
  if (!c.holds) c.detail = "fails for" + bad.str();
  return c;
}

IdentityCheck g5_anticommutes(const std::array<ExactMatrix, 4>& g, const ExactMatrix& g5, bool with_metric) {
  const std::size_t n = g5.rows();
  std::ostringstream bad;
  for (std::size_t a = 0; a < 4; ++a) {
    const ExactMatrix rhs = with_metric ? scaled_identity(n, -2 * metric(a, 0)) : ExactMatrix(n, n);
    if (anticommutator(g[a], g5) != rhs) bad << ' ' << a;
  }
  IdentityCheck c = check("g5-anticommutator", with_metric ? "g^a g5 + g5 g^a = -2 g^a0" : "g^a g5 + g5 g^a = 0", bad.str().empty());
  if (!c.holds) c.detail = "fails for a =" + bad.str();
  return c;
}

void common_identities(std::vector<IdentityCheck>& out, const std::array<ExactMatrix, 4>& g) {
  const std::size_t n = g[0].rows();
  out.push_back(check("g0-hermitian", "(g0)^+ = g0", g[0].adjoint() == g[0]));
  out.push_back(check("gk-antihermitian", "(g^k)^+ = -g^k",
                      std::all_of(g.begin() + 1, g.end(), [](const ExactMatrix& m) { return m.adjoint() == -m; })));
  out.push_back(check("g0-square", "(g0)^2 = 1", g[0] * g[0] == ExactMatrix::identity(n)));
  out.push_back(check("gk-square", "(g^k)^2 = -1", std::all_of(g.begin() + 1, g.end(), [n](const ExactMatrix& m) {
                        return m * m == scaled_identity(n, -1);
                      })));
}

void g5_identities(std::vector<IdentityCheck>& out, const ExactMatrix& g5) {
  out.push_back(check("g5-hermitian", "(g5)^+ = g5", g5.adjoint() == g5));
  out.push_back(check("g5-real", "(g5)* = g5", g5.conj() == g5));
  out.push_back(check("g5-square", "(g5)^2 = 1", g5 * g5 == ExactMatrix::identity(g5.rows())));
}

void apply_override(std::array<ExactMatrix, 4>& g, ExactMatrix& g5, const std::optional<GammaOverride>& o) {
  if (!o) return;
  if (o->index == 5) {
    g5 = o->matrix;
  } else if (o->index < 4) {
    g[o->index] = o->matrix;
  } else {
    throw std::out_of_range("GammaOverride: index must be 0..3 or 5");
  }
}

GammaSet finish(std::size_t dim, std::array<ExactMatrix, 4> g, ExactMatrix g5, std::vector<IdentityCheck> ids) {
  for (const auto& id : ids) {
    if (id.enforced && !id.holds) {
      throw GammaIdentityError("gamma identity failed: " + id.name + (id.detail.empty() ? "" : " (" + id.detail + ")"));
    }
  }
  GammaSet gs;
  gs.dim = dim;
  gs.g = std::move(g);
  gs.g5 = std::move(g5);
  gs.identities = std::move(ids);
  return gs;
}

}  // namespace

bool GammaSet::all_identities_hold() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.holds; });
}

std::array<ExactMatrix, 3> alpha4() {
  return {
      ExactMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
      ExactMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}),
      ExactMatrix::from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}),
  };
}

std::array<ExactMatrix, 3> pauli() {
  return {
      ExactMatrix::from_rows({{0, 1}, {1, 0}}),
      ExactMatrix::from_rows({{0, -kI}, {kI, 0}}),
      ExactMatrix::from_rows({{1, 0}, {0, -1}}),
  };
}

std::vector<IdentityCheck> gamma8_identities(const std::array<ExactMatrix, 4>& g, const ExactMatrix& g5) {
  std::vector<IdentityCheck> out;
  out.push_back(clifford(g));
  out.push_back(g5_anticommutes(g, g5, true));
  common_identities(out, g);
  out.push_back(check("real", "(g^a)* = g^a", std::all_of(g.begin(), g.end(), [](const ExactMatrix& m) { return m.conj() == m; })));
  out.push_back(check("g0-symmetric", "(g0)^T = g0", g[0].transpose() == g[0]));
  out.push_back(check("gk-antisymmetric", "(g^k)^T = -g^k",
                      std::all_of(g.begin() + 1, g.end(), [](const ExactMatrix& m) { return m.transpose() == -m; })));
  IdentityCheck product = check("g5-product", "g5 = g0 g1 g2 g3", g[0] * g[1] * g[2] * g[3] == g5, false);
  if (!product.holds) product.detail = "g0 g1 g2 g3 = " + (g[0] * g[1] * g[2] * g[3]).str();
  out.push_back(std::move(product));
  g5_identities(out, g5);
  return out;
}

std::vector<IdentityCheck> gamma4_identities(const std::array<ExactMatrix, 4>& g, const ExactMatrix& g5) {
  std::vector<IdentityCheck> out;
  out.push_back(clifford(g));
  out.push_back(g5_anticommutes(g, g5, false));
  common_identities(out, g);
  out.push_back(check("g013-real", "(g^{0,1,3})* = g^{0,1,3}",
                      g[0].conj() == g[0] && g[1].conj() == g[1] && g[3].conj() == g[3]));
  out.push_back(check("g2-imaginary", "(g2)* = -g2", g[2].conj() == -g[2]));
  out.push_back(check("g02-symmetric", "(g^{0,2})^T = g^{0,2}", g[0].transpose() == g[0] && g[2].transpose() == g[2]));
  out.push_back(check("g13-antisymmetric", "(g^{1,3})^T = -g^{1,3}", g[1].transpose() == -g[1] && g[3].transpose() == -g[3]));
  out.push_back(check("g5-product", "g5 = -i g0 g1 g2 g3", -kI * (g[0] * g[1] * g[2] * g[3]) == g5));
  g5_identities(out, g5);
  return out;
}

GammaSet build_gamma8(const std::optional<GammaOverride>& override) {
  const ExactMatrix id = ExactMatrix::identity(4);
  const ExactMatrix zero(4, 4);
  const auto al = alpha4();
  std::array<ExactMatrix, 4> g{
      ExactMatrix::blocks(zero, id, id, zero),
      ExactMatrix::blocks(al[0], zero, zero, -al[0]),
      ExactMatrix::blocks(al[1], zero, zero, -al[1]),
      ExactMatrix::blocks(al[2], zero, zero, -al[2]),
  };
  ExactMatrix g5 = ExactMatrix::blocks(zero, -id, -id, zero);
  apply_override(g, g5, override);
  auto ids = gamma8_identities(g, g5);
  return finish(8, std::move(g), std::move(g5), std::move(ids));
}

GammaSet build_gamma4(const std::optional<GammaOverride>& override) {
  const ExactMatrix id = ExactMatrix::identity(2);
  const ExactMatrix zero(2, 2);
  const auto s = pauli();
  std::array<ExactMatrix, 4> g{
      ExactMatrix::blocks(id, zero, zero, -id),
      ExactMatrix::blocks(zero, s[0], -s[0], zero),
      ExactMatrix::blocks(zero, s[1], -s[1], zero),
      ExactMatrix::blocks(zero, s[2], -s[2], zero),
  };
  ExactMatrix g5 = ExactMatrix::blocks(zero, -id, -id, zero);
  apply_override(g, g5, override);
  auto ids = gamma4_identities(g, g5);
  return finish(4, std::move(g), std::move(g5), std::move(ids));
}

ExactMatrix conjugation_constraints(const GammaSet& gs, const std::array<int, 4>& eta) {
  const std::size_t n = gs.dim;
  const std::size_t nn = n * n;
  ExactMatrix sys(4 * nn, nn);
  for (std::size_t a = 0; a < 4; ++a) {
    const ExactMatrix gt = gs.g[a].transpose();
    const ExactComplex e(eta[a]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = a * nn + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          // (U gt)_ij = sum_k U_ik gt_kj ; (g U)_ij = sum_k g_ik U_kj
          sys(row, i * n + k) += gt(k, j);
          sys(row, k * n + j) -= e * gs.g[a](i, k);
        }
      }
    }
  }
  return sys;
}

std::vector<ExactMatrix> ConjugationSolution::basis_matrices(std::size_t n) const {
  std::vector<ExactMatrix> out;
  for (const auto& v : nullspace.basis) out.push_back(unvectorize(v, n));
  return out;
}

bool ConjugationSolution::satisfies(const ExactMatrix& u) const { return (constraints * vectorize(u)).is_zero(); }

bool ConjugationSolution::in_span(const ExactMatrix& u) const {
  if (nullspace.basis.empty()) return u.is_zero();
  ExactMatrix rows = nullspace.basis.front().transpose();
  for (std::size_t k = 1; k < nullspace.basis.size(); ++k) rows = rows.stack(nullspace.basis[k].transpose());
  return row_combination(rows, vectorize(u).entries()).has_value();
}

ConjugationSolution solve_conjugation(const GammaSet& gs, const std::array<int, 4>& eta) {
  ConjugationSolution s{conjugation_constraints(gs, eta), {}};
  s.nullspace = linear_solve(s.constraints);
  return s;
}

}  // namespace symcheck
