#include <map>

#include "internal.hpp"

namespace lf::lib {

using namespace logic;

namespace {

using Impl = std::function<Derivation(const RuleArgs&)>;

void arity(const RuleArgs& a, std::string_view name, std::size_t premises, std::size_t terms) {
  if (a.premises.size() != premises || a.terms.size() != terms) {
    fail(ErrorCode::ArityMismatch, std::string(name) + " takes " + std::to_string(premises) + " premise(s) and " +
                                       std::to_string(terms) + " term argument(s), got " +
                                       std::to_string(a.premises.size()) + " and " + std::to_string(a.terms.size()));
  }
}

Variable as_variable(const Term& t, std::string_view name) {
  if (!t.is_var()) fail(ErrorCode::ShapeMismatch, std::string(name) + ": expected a variable, got '" + print(t) + "'");
  return t.variable();
}

// Γ ⊢ ∃x.B   Δ, [c/x]B ⊢ G  /  Γ, Δ ⊢ G   (c not free in Γ, Δ, ∃x.B or G)
Derivation exists_elim_rule(const Derivation& d, const Derivation& d2, const Variable& c) {
  auto ex = match_exists(d.conclusion());
  if (!ex) fail(ErrorCode::ShapeMismatch, "exists_elim: '" + print(d.conclusion()) + "' is not existential");
  const auto& [x, b] = *ex;
  if (c.type != x.type) fail(ErrorCode::TypeMismatch, "exists_elim: the witness variable has the wrong type");
  const Term bc = substitute(b, x, Term::var(c));
  if (!contains(d2.assumptions(), bc)) {
    fail(ErrorCode::ShapeMismatch, "exists_elim: the second premise does not assume '" + print(bc) + "'");
  }
  const Term goal = d2.conclusion();
  if (goal.has_free(c) || d.conclusion().has_free(c)) {
    fail(ErrorCode::FreshnessViolation, "exists_elim: the witness variable occurs free in the conclusion");
  }
  return exists_elim(
      d, goal,
      [&](const Derivation& hyp, const Term& fresh_c) {
        // rename c to the chosen variable inside the subproof by discharging and reinstantiating
        const Derivation closed = forall_intro(cp(d2, bc), c);
        const Derivation inst = forall_elim(closed, fresh_c);
        return mp(hyp, inst);
      },
      c.letter);
}

const std::map<std::string, Impl, std::less<>>& table() {
  static const std::map<std::string, Impl, std::less<>> t = {
      {"and_intro", [](const RuleArgs& a) { arity(a, "and_intro", 2, 0); return and_intro(a.premises[0], a.premises[1]); }},
      {"and_elim_l", [](const RuleArgs& a) { arity(a, "and_elim_l", 1, 0); return and_elim_l(a.premises[0]); }},
      {"and_elim_r", [](const RuleArgs& a) { arity(a, "and_elim_r", 1, 0); return and_elim_r(a.premises[0]); }},
      {"or_intro_l", [](const RuleArgs& a) { arity(a, "or_intro_l", 1, 1); return or_intro_l(a.premises[0], a.terms[0]); }},
      {"or_intro_r", [](const RuleArgs& a) { arity(a, "or_intro_r", 1, 1); return or_intro_r(a.terms[0], a.premises[0]); }},
      {"or_elim", [](const RuleArgs& a) { arity(a, "or_elim", 3, 0); return or_elim(a.premises[0], a.premises[1], a.premises[2]); }},
      {"ex_falso", [](const RuleArgs& a) { arity(a, "ex_falso", 1, 1); return ex_falso(a.premises[0], a.terms[0]); }},
      {"neg_intro", [](const RuleArgs& a) { arity(a, "neg_intro", 1, 1); return neg_intro(a.premises[0], a.terms[0]); }},
      {"neg_elim", [](const RuleArgs& a) { arity(a, "neg_elim", 2, 0); return neg_elim(a.premises[0], a.premises[1]); }},
      {"neg_elim_classical", [](const RuleArgs& a) { arity(a, "neg_elim_classical", 1, 1); return by_contradiction(a.premises[0], a.terms[0]); }},
      {"by_contradiction", [](const RuleArgs& a) { arity(a, "by_contradiction", 1, 1); return by_contradiction(a.premises[0], a.terms[0]); }},
      {"dne", [](const RuleArgs& a) { arity(a, "dne", 1, 0); return double_negation(a.premises[0]); }},
      {"excluded_middle", [](const RuleArgs& a) { arity(a, "excluded_middle", 0, 1); return excluded_middle(a.terms[0]); }},
      {"iff_intro", [](const RuleArgs& a) { arity(a, "iff_intro", 2, 0); return iff_intro(a.premises[0], a.premises[1]); }},
      {"iff_elim", [](const RuleArgs& a) { arity(a, "iff_elim", 1, 0); return iff_elim_l(a.premises[0]); }},
      {"iff_elim_l", [](const RuleArgs& a) { arity(a, "iff_elim_l", 1, 0); return iff_elim_l(a.premises[0]); }},
      {"iff_elim_r", [](const RuleArgs& a) { arity(a, "iff_elim_r", 1, 0); return iff_elim_r(a.premises[0]); }},
      {"forall_intro", [](const RuleArgs& a) {
         arity(a, "forall_intro", 1, 1);
         return forall_intro(a.premises[0], as_variable(a.terms[0], "forall_intro"));
       }},
      {"forall_elim", [](const RuleArgs& a) {
         if (a.premises.size() != 1 || a.terms.empty()) fail(ErrorCode::ArityMismatch, "forall_elim takes one premise and at least one term");
         Derivation d = a.premises[0];
         for (const Term& t : a.terms) d = forall_elim(d, t);
         return d;
       }},
      {"exists_intro", [](const RuleArgs& a) {
         // terms: the existential to prove and the witness
         arity(a, "exists_intro", 1, 2);
         auto ex = match_exists(a.terms[0]);
         if (!ex) fail(ErrorCode::ShapeMismatch, "exists_intro: '" + print(a.terms[0]) + "' is not existential");
         return exists_intro(a.premises[0], ex->first, ex->second, a.terms[1]);
       }},
      {"exists_elim", [](const RuleArgs& a) {
         arity(a, "exists_elim", 2, 1);
         return exists_elim_rule(a.premises[0], a.premises[1], as_variable(a.terms[0], "exists_elim"));
       }},
      {"mp", [](const RuleArgs& a) { arity(a, "mp", 2, 0); return mp(a.premises[0], a.premises[1]); }},
      {"cp", [](const RuleArgs& a) { arity(a, "cp", 1, 1); return cp(a.premises[0], a.terms[0]); }},
      {"modus_ponens", [](const RuleArgs& a) { arity(a, "modus_ponens", 2, 0); return modus_ponens(a.premises[0], a.premises[1]); }},
      {"conditional_proof", [](const RuleArgs& a) { arity(a, "conditional_proof", 1, 0); return conditional_proof(a.premises[0]); }},
      {"eq_refl", [](const RuleArgs& a) { arity(a, "eq_refl", 0, 1); return eq_refl(a.terms[0]); }},
      {"leibniz", [](const RuleArgs& a) {
         // terms: λx.body
         arity(a, "leibniz", 2, 1);
         if (!a.terms[0].is_abs()) fail(ErrorCode::ShapeMismatch, "leibniz: expected an abstraction λx.P");
         return rewrite(a.premises[0], a.terms[0].bound(), a.terms[0].body(), a.premises[1]);
       }},
      {"eq_sym", [](const RuleArgs& a) { arity(a, "eq_sym", 1, 0); return eq_sym(a.premises[0]); }},
      {"eq_trans", [](const RuleArgs& a) { arity(a, "eq_trans", 2, 0); return eq_trans(a.premises[0], a.premises[1]); }},
      {"necessitation", [](const RuleArgs& a) { arity(a, "necessitation", 1, 0); return necessitation(a.premises[0]); }},
      {"box_t", [](const RuleArgs& a) { arity(a, "box_t", 1, 0); return box_t(a.premises[0]); }},
      {"box_k", [](const RuleArgs& a) { arity(a, "box_k", 2, 0); return box_k(a.premises[0], a.premises[1]); }},
      {"box_4", [](const RuleArgs& a) { arity(a, "box_4", 1, 0); return box_4(a.premises[0]); }},
      {"intensional_eq", [](const RuleArgs& a) { arity(a, "intensional_eq", 2, 0); return intensional_eq(a.premises[0], a.premises[1]); }},
      {"subst_equiv", [](const RuleArgs& a) {
         // terms: the context and its hole
         arity(a, "subst_equiv", 2, 2);
         return subst_equiv(a.premises[0], a.premises[1], a.terms[0], as_variable(a.terms[1], "subst_equiv"));
       }},
  };
  return t;
}

}  // namespace

Derivation derived_rule(std::string_view name, const RuleArgs& args) {
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) fail(ErrorCode::UnknownRule, "no derived rule named '" + std::string(name) + "'");
  return it->second(args);
}

const std::vector<std::string>& derived_rule_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : table()) out.push_back(k);
    return out;
  }();
  return names;
}

}  // namespace lf::lib
