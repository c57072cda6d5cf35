#include <algorithm>
#include <sstream>

#include "suites.hpp"
#include "symcheck/group.hpp"

namespace symcheck::detail {

std::vector<CheckResult> run_group_suite(const RunConfig&) {
  CheckList out("group");
  const GroupTable g8 = generate_g8();
  const GroupStructure st = classify_group(g8);

  out.add("g8-order", "the reflections of (x0, x, c) generate exactly 8 elements", "signature-group/order-8",
          [&] { return verdict(st.order == 8, "order " + std::to_string(st.order)); });
  out.add("g8-abelian", "every pair of group elements commutes", "signature-group/abelian",
          [&] { return verdict(st.abelian, st.summary()); });
  out.add("g8-involutions", "every non-identity element has order 2", "signature-group/involutions", [&] {
    for (std::size_t i = 0; i < st.order; ++i) {
      if (i != g8.identity && st.element_orders[i] != 2) {
        return fail(g8.names[i] + " has order " + std::to_string(st.element_orders[i]));
      }
    }
    return pass(st.summary());
  });
  out.add("g8-axioms", "Cayley table is associative with identity and inverses", "signature-group/axioms",
          [&] { return verdict(st.axioms_hold, st.summary()); });
  out.add("g8-structure", "the group is elementary Abelian (Z2^3) and not cyclic", "signature-group/structure",
          [&] { return verdict(st.elementary_abelian && !st.cyclic && st.exponent == 2, st.summary()); });
  out.add("alpha-involutions", "each generator squares to the identity and they commute pairwise",
          "signature-group/generators", [&] {
            const auto alphas = alpha_matrices();
            const ExactMatrix id = ExactMatrix::identity(5);
            for (const auto& a : alphas) {
              if (!(a.matrix * a.matrix == id)) return fail(a.name + "^2 != E");
              for (const auto& b : alphas) {
                if (!commutator(a.matrix, b.matrix).is_zero()) return fail(a.name + " and " + b.name + " do not commute");
              }
            }
            return pass();
          });

  const FieldOperatorSet ops = build_field_operators();
  out.add("relations", "squares, product identities and commutators of the field operators", "field-operators/relations",
          [&] {
            std::ostringstream bad;
            std::size_t n = 0;
            for (const auto& r : verify_relations(ops)) {
              ++n;
              if (!r.holds) bad << r.name << "; ";
            }
            return bad.str().empty() ? pass(std::to_string(n) + " relations hold") : fail("violated: " + bad.str());
          });

  const SymmetryEnumeration en = enumerate_distinct(ops);
  out.add("distinct-16", "the 64 subset products collapse to the 16 listed symmetries", "field-operators/sixteen", [&] {
    std::ostringstream os;
    os << en.products << " products, " << en.distinct.size() << " distinct, "
       << (en.all_canonical ? "all in the list" : "some outside the list");
    return verdict(en.products == 64 && en.distinct.size() == 16 && en.all_canonical, os.str());
  });
  auto collapse = [&](const std::string& word, const std::string& expected) {
    const auto it = en.canonical_of.find(word);
    if (it == en.canonical_of.end()) return fail("word " + word + " not enumerated");
    return verdict(it->second == expected, word + " = " + (it->second.empty() ? "?" : it->second));
  };
  out.add("collapse-p1q1q2", "P1 Q1 Q2 reduces to P2", "field-operators/collapse-p2",
          [&] { return collapse("P1Q1Q2", "P2"); });
  out.add("collapse-p1p2t1t2", "P1 P2 T1 T2 reduces to the identity", "field-operators/collapse-identity",
          [&] { return collapse("P1P2T1T2", "E"); });
  out.add("ce-signature", "classical charge conjugation Q1 Q2 negates every component and keeps the arguments",
          "classical-conjugation/definition", [&] {
            const FieldOperator ce = classical_charge_conjugation(ops);
            if (!(ce.args() == ArgumentSignature{})) return fail("arguments are transformed");
            if (!ce.charge_flip()) return fail("charge is not flipped");
            for (std::size_t k = 0; k < kFieldComponents; ++k) {
              if (k == slot::kZero0 || k == slot::kZero1) continue;
              if (ce.comp_signs()[k] != Sign::Minus) return fail("component " + std::to_string(k) + " keeps its sign");
            }
            return pass("all 14 physical components negated");
          });
  return out.take();
}

}  // namespace symcheck::detail
