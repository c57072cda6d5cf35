#include "symcheck/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symcheck {

namespace {

ExactMatrix diag5(int t, int x, int c) {
  const std::array<ExactComplex, 5> d{t, x, x, x, c};
  return ExactMatrix::diagonal(d);
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

}  // namespace

std::array<Alpha5, 4> alpha_matrices() {
  return {{{"E", diag5(1, 1, 1)}, {"T", diag5(-1, 1, 1)}, {"P", diag5(1, -1, 1)}, {"Q", diag5(1, 1, -1)}}};
}

std::size_t GroupTable::index_of(const ExactMatrix& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == m) return i;
  }
  throw std::out_of_range("GroupTable: element not in group " + m.str());
}

GroupTable generate_group(std::span<const Alpha5> generators) {
  if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
  const std::size_t n = generators.front().matrix.rows();

  GroupTable g;
  g.elements.push_back(ExactMatrix::identity(n));
  g.names.emplace_back("E");

  // Breadth-first closure under right multiplication by generators.
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    const std::size_t cur = todo.front();
    todo.pop_front();
    for (const auto& gen : generators) {
      ExactMatrix prod = g.elements[cur] * gen.matrix;
      if (std::find(g.elements.begin(), g.elements.end(), prod) != g.elements.end()) continue;
      g.names.push_back(cur == g.identity ? gen.name : g.names[cur] + gen.name);
      g.elements.push_back(std::move(prod));
      todo.push_back(g.elements.size() - 1);
    }
  }

  const std::size_t order = g.elements.size();
  g.product.assign(order, std::vector<std::size_t>(order, 0));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) g.product[i][j] = g.index_of(g.elements[i] * g.elements[j]);
  }
  return g;
}

GroupTable generate_g8() {
  const auto alphas = alpha_matrices();
  return generate_group(std::span<const Alpha5>(alphas).subspan(1));
}

std::string GroupStructure::summary() const {
  std::ostringstream os;
  os << "order " << order << ", exponent " << exponent << ", " << (abelian ? "Abelian" : "non-Abelian") << ", "
     << (cyclic ? "cyclic" : "not cyclic");
  if (elementary_abelian) os << ", elementary Abelian";
  os << "; element orders [";
  for (std::size_t i = 0; i < element_orders.size(); ++i) os << (i ? "," : "") << element_orders[i];
  os << ']';
  return os.str();
}

GroupStructure classify_group(const GroupTable& table) {
  GroupStructure s;
  const std::size_t n = table.order();
  const auto& mul = table.product;
  s.order = n;

  bool assoc = true;
  for (std::size_t a = 0; a < n && assoc; ++a) {
    for (std::size_t b = 0; b < n && assoc; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          assoc = false;
          break;
        }
      }
    }
  }
  bool identity = true;
  bool inverses = true;
  for (std::size_t a = 0; a < n; ++a) {
    identity = identity && mul[table.identity][a] == a && mul[a][table.identity] == a;
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) has_inverse = has_inverse || mul[a][b] == table.identity;
    inverses = inverses && has_inverse;
  }
  s.axioms_hold = assoc && identity && inverses;

  s.abelian = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) s.abelian = s.abelian && mul[a][b] == mul[b][a];
  }

  s.element_orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    std::size_t cur = a;
    while (cur != table.identity && k <= n) {
      cur = mul[cur][a];
      ++k;
    }
    s.element_orders[a] = k;
  }
  s.exponent = std::accumulate(s.element_orders.begin(), s.element_orders.end(), std::size_t{1},
                               [](std::size_t acc, std::size_t o) { return std::lcm(acc, o); });
  s.cyclic = std::find(s.element_orders.begin(), s.element_orders.end(), n) != s.element_orders.end();
  s.elementary_abelian = s.abelian && (n == 1 || is_prime(s.exponent));
  return s;
}

// ---------------------------------------------------------------------------

namespace {

std::array<Sign, kFieldComponents> expand(const ComponentSigns& s) {
  std::array<Sign, kFieldComponents> out;
  out.fill(Sign::Plus);
  for (std::size_t k = 0; k < 3; ++k) {
    out[slot::kE + k] = s.e;
    out[slot::kH + k] = s.h;
    out[slot::kJ + k] = s.j;
    out[slot::kA + k] = s.a;
  }
  out[slot::kRho] = s.rho;
  out[slot::kPhi] = s.phi;
  return out;
}

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

}  // namespace

FieldOperator::FieldOperator(std::string name, ArgumentSignature args, const ComponentSigns& signs, bool charge_flip)
    : FieldOperator(std::move(name), args, expand(signs), charge_flip) {}

FieldOperator::FieldOperator(std::string name, ArgumentSignature args, std::array<Sign, kFieldComponents> comp_signs,
                             bool charge_flip)
    : name_(std::move(name)), args_(args), signs_(comp_signs), charge_flip_(charge_flip) {
  signs_[slot::kZero0] = Sign::Plus;
  signs_[slot::kZero1] = Sign::Plus;
}

FieldOperator FieldOperator::compose(const FieldOperator& other) const {
  std::array<Sign, kFieldComponents> s;
  for (std::size_t k = 0; k < kFieldComponents; ++k) s[k] = signs_[k] * other.signs_[k];
  std::string name = name_ == "E" ? other.name_ : other.name_ == "E" ? name_ : name_ + other.name_;
  return {std::move(name), args_ * other.args_, s, charge_flip_ != other.charge_flip_};
}

ExactMatrix FieldOperator::component_matrix() const {
  std::vector<ExactComplex> diag;
  diag.reserve(kFieldComponents);
  for (Sign s : signs_) diag.emplace_back(to_int(s));
  return ExactMatrix::diagonal(diag);
}

ExactMatrix FieldOperator::argument_matrix() const {
  return diag5(to_int(args_.time), to_int(args_.space), to_int(args_.light));
}

bool FieldOperator::is_identity() const noexcept {
  return !charge_flip_ && args_ == ArgumentSignature{} &&
         std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::Plus; });
}

const FieldOperator& FieldOperatorSet::by_name(std::string_view name) const {
  for (const FieldOperator* op : {&e, &p1, &p2, &t1, &t2, &q1, &q2}) {
    if (op->name() == name) return *op;
  }
  throw std::out_of_range("FieldOperatorSet: no operator named " + std::string(name));
}

FieldOperatorSet build_field_operators() {
  const ArgumentSignature id{};
  const ArgumentSignature t{M, P, P};
  const ArgumentSignature p{P, M, P};
  const ArgumentSignature q{P, P, M};
  //                              E  H  rho J  phi A
  return {
      FieldOperator("E", id, ComponentSigns{P, P, P, P, P, P}, false),
      FieldOperator("P1", p, ComponentSigns{M, P, P, M, P, M}, false),
      FieldOperator("P2", p, ComponentSigns{P, M, M, P, M, P}, true),
      FieldOperator("T1", t, ComponentSigns{P, M, P, M, P, M}, false),
      FieldOperator("T2", t, ComponentSigns{M, P, M, P, M, P}, true),
      FieldOperator("Q1", q, ComponentSigns{M, M, M, M, M, M}, true),
      FieldOperator("Q2", q, ComponentSigns{P, P, P, P, P, P}, false),
  };
}

FieldOperator classical_charge_conjugation(const FieldOperatorSet& ops) {
  FieldOperator ce = ops.q1.compose(ops.q2);
  return {"Ce", ce.args(), ce.comp_signs(), ce.charge_flip()};
}

std::vector<RelationCheck> verify_relations(const FieldOperatorSet& ops) {
  std::vector<RelationCheck> out;
  for (const FieldOperator* g : ops.generators()) {
    out.push_back({g->name() + "^2 = E", g->compose(*g).is_identity()});
  }
  const FieldOperator p12 = ops.p1.compose(ops.p2);
  const FieldOperator t12 = ops.t1.compose(ops.t2);
  const FieldOperator q12 = ops.q1.compose(ops.q2);
  out.push_back({"P1P2 = T1T2", p12 == t12});
  out.push_back({"T1T2 = Q1Q2", t12 == q12});

  // [A, B] = AB - BA must vanish as an operator: component and argument actions
  // commute and the charge labels agree.
  auto commutator_vanishes = [](const FieldOperator& a, const FieldOperator& b) {
    const FieldOperator ab = a.compose(b);
    const FieldOperator ba = b.compose(a);
    return commutator(a.component_matrix(), b.component_matrix()).is_zero() &&
           commutator(a.argument_matrix(), b.argument_matrix()).is_zero() &&
           (ab.component_matrix() - ba.component_matrix()).is_zero() && ab.charge_flip() == ba.charge_flip();
  };
  const std::array<std::array<const FieldOperator*, 4>, 6> pairs{{
      {&ops.p1, &ops.t1, &ops.p2, &ops.t2},
      {&ops.p1, &ops.q1, &ops.p2, &ops.q2},
      {&ops.t1, &ops.q1, &ops.t2, &ops.q2},
      {&ops.p1, &ops.t2, &ops.p2, &ops.t1},
      {&ops.p1, &ops.q2, &ops.p2, &ops.q1},
      {&ops.t1, &ops.q2, &ops.t2, &ops.q1},
  }};
  for (const auto& pr : pairs) {
    const FieldOperator a = pr[0]->compose(*pr[1]);
    const FieldOperator b = pr[2]->compose(*pr[3]);
    out.push_back({"[" + a.name() + ", " + b.name() + "] = 0", commutator_vanishes(a, b)});
  }
  return out;
}

std::vector<FieldOperator> canonical_symmetries(const FieldOperatorSet& ops) {
  const auto& [e, p1, p2, t1, t2, q1, q2] = ops;
  return {
      e,
      p1,
      p2,
      t1,
      t2,
      q1,
      q2,
      p1.compose(t1),
      p1.compose(t2),
      p1.compose(q1),
      p1.compose(q2),
      t1.compose(q1),
      t1.compose(q2),
      q1.compose(q2),
      p1.compose(t1).compose(q1),
      p1.compose(t1).compose(q2),
  };
}

std::string canonical_name(const std::vector<FieldOperator>& canonical, const FieldOperator& op) {
  for (const auto& c : canonical) {
    if (c == op) return c.name();
  }
  return {};
}

SymmetryEnumeration enumerate_distinct(const FieldOperatorSet& ops) {
  const auto gens = ops.generators();
  const auto canonical = canonical_symmetries(ops);
  SymmetryEnumeration out;
  out.all_canonical = true;
  for (unsigned mask = 0; mask < (1U << gens.size()); ++mask) {
    FieldOperator prod = ops.e;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (mask & (1U << k)) prod = prod.compose(*gens[k]);
    }
    ++out.products;
    if (std::find(out.distinct.begin(), out.distinct.end(), prod) == out.distinct.end()) out.distinct.push_back(prod);
    std::string name = canonical_name(canonical, prod);
    out.all_canonical = out.all_canonical && !name.empty();
    out.canonical_of[prod.name()] = std::move(name);
  }
  return out;
}

}  // namespace symcheck
