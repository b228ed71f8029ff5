#include <unordered_set>

#include "lf/error.hpp"
#include "lf/extensions.hpp"
#include "lf/kernel.hpp"

namespace lf {

std::optional<std::string> Theory::axiom_match(const Term& p) const {
  for (const Term& a : axioms) {
    if (alpha_equal(a, p)) return "axiom " + print(a);
  }
  // every schema instance is ∀X^{σt}. ..., so σ can be read off the binder
  if (schemas.empty() || !p.is_app() || !p.arg().is_abs()) return std::nullopt;
  const Type& bound = p.arg().bound().type;
  if (!bound.is_fun() || !bound.codomain().is_t()) return std::nullopt;
  for (const AxiomSchema& s : schemas) {
    if (alpha_equal(s.generate(bound.domain()), p)) return s.name;
  }
  return std::nullopt;
}

Theory Theory::without(RuleId r) const {
  Theory t = *this;
  t.rules.erase(r);
  t.name += "−" + std::string(rule_name(r));
  return t;
}

Theory Theory::with(RuleId r) const {
  Theory t = *this;
  t.rules.insert(r);
  t.name += "+" + std::string(rule_name(r));
  return t;
}

Theory Theory::plus_axiom(const Term& sentence) const {
  if (!is_formula(sentence)) fail(ErrorCode::TypeMismatch, "an axiom must be a formula");
  Theory t = *this;
  t.axioms.push_back(sentence);
  return t;
}

namespace {

using R = RuleId;

std::set<RuleId> lf_rules() {
  return {R::R1_Structural, R::R2_Beta, R::R3_UI, R::R4_UG, R::R5_NegElim, R::R6_Intensionality,
          R::R7_FunExt,     R::R8_Choice, R::R9_PotInf};
}

Theory make(std::string name, std::set<RuleId> rules, Extension guard = Extension::Core) {
  Theory t;
  t.name = std::move(name);
  t.rules = std::move(rules);
  t.guard = guard;
  if (guard != Extension::Core) t.schemas = extension_axioms(t);
  return t;
}

std::optional<Theory> builtin(std::string_view name) {
  if (name == "LF") return make("LF", lf_rules());
  if (name == "LF_ι" || name == "LF_iota") return make("LF_ι", lf_rules(), Extension::Iota);
  if (name == "LF_ε" || name == "LF_eps") return make("LF_ε", lf_rules(), Extension::Epsilon);
  if (name == "Church-1940") {
    return make("Church-1940",
                {R::R1_Structural, R::R2_Beta, R::R3_UI, R::R4_UG, R::R5_NegElim, R::R7_FunExt, R::R8_Choice,
                 R::V_ActualInfinityE},
                Extension::Epsilon);
  }
  if (name == "Henkin-1950") {
    Theory t = *builtin("Church-1940");
    t.name = "Henkin-1950";
    t.rules.insert(R::V_HenkinExt);
    return t;
  }
  if (name == "HFE") {
    std::set<RuleId> rs = lf_rules();
    rs.erase(R::R8_Choice);
    rs.erase(R::R9_PotInf);
    return make("HFE", rs);
  }
  if (name == "Classicism") {
    Theory t = *builtin("HFE");
    t.name = "Classicism";
    t.rules.erase(R::R7_FunExt);
    t.rules.erase(R::R6_Intensionality);
    t.rules.insert(R::V_ClassicismSubst);
    return t;
  }
  if (name == "ModalFunExt-LF") {
    std::set<RuleId> rs = lf_rules();
    rs.erase(R::R7_FunExt);
    rs.insert(R::V_ModalFunExt);
    return make("ModalFunExt-LF", rs);
  }
  return std::nullopt;
}

}  // namespace

Theory theory(std::string_view name) {
  if (auto t = builtin(name)) return *t;
  // composite names: BASE−R.n, BASE-R.n, BASE+Rule, applied right to left
  for (std::size_t i = name.size(); i-- > 0;) {
    std::string_view rest;
    std::string_view base;
    bool add = false;
    if (name[i] == '+') {
      base = name.substr(0, i);
      rest = name.substr(i + 1);
      add = true;
    } else if (name[i] == '-') {
      base = name.substr(0, i);
      rest = name.substr(i + 1);
    } else if (name.substr(i).starts_with("−")) {
      base = name.substr(0, i);
      rest = name.substr(i + std::string_view("−").size());
    } else {
      continue;
    }
    if (base.empty()) continue;
    RuleId r;
    try {
      r = parse_rule_id(rest);
    } catch (const Error&) {
      continue;
    }
    Theory t = theory(base);
    Theory out = add ? t.with(r) : t.without(r);
    out.name = std::string(name);
    return out;
  }
  fail(ErrorCode::UnknownTheory, "no theory named '" + std::string(name) + "'");
}

std::vector<std::string> theory_names() {
  std::vector<std::string> names{"LF"};
  for (int n = 1; n <= 9; ++n) names.push_back("LF−R." + std::to_string(n));
  for (const char* s : {"LF_ι", "LF_ε", "Church-1940", "Henkin-1950", "HFE", "Classicism", "ModalFunExt-LF", "LF+HenkinExt"}) {
    names.emplace_back(s);
  }
  return names;
}

namespace {

// Post-order walk over distinct nodes, without recursion: derivations built
// by the library can be thousands of nodes deep.
template <typename Fn>
void for_each_node(const Derivation& root, Fn&& fn) {
  std::unordered_set<const void*> done;
  std::vector<std::pair<const Derivation*, bool>> stack{{&root, false}};
  while (!stack.empty()) {
    auto [d, expanded] = stack.back();
    stack.pop_back();
    if (done.count(d->identity())) continue;
    if (expanded) {
      done.insert(d->identity());
      fn(*d);
      continue;
    }
    stack.push_back({d, true});
    for (const Derivation& p : d->premises()) {
      if (!done.count(p.identity())) stack.push_back({&p, false});
    }
  }
}

}  // namespace

std::optional<RuleId> first_disabled_rule(const Theory& t, const Derivation& d) {
  std::optional<RuleId> found;
  for_each_node(d, [&](const Derivation& n) {
    if (!found && !t.enabled(n.rule())) found = n.rule();
  });
  return found;
}

CheckReport check_theorem(const Theory& t, const Derivation& d) {
  CheckReport report;
  for_each_node(d, [&](const Derivation& n) {
    const Sequent again = RuleApplication::of(n).infer();
    if (!alpha_equal(again, n.sequent())) {
      fail(ErrorCode::ShapeMismatch, n.label() + ": node does not re-validate (" + to_string(n.sequent()) + ")");
    }
    if (!t.enabled(n.rule())) {
      fail(ErrorCode::RuleDisabled,
           std::string(rule_name(n.rule())) + " is not a rule of " + t.name + " (used for " + to_string(n.sequent()) + ")");
    }
    ++report.nodes;
  });
  for (const Term& a : d.assumptions()) {
    auto which = t.axiom_match(a);
    if (!which) {
      fail(ErrorCode::UndischargedAssumption, "'" + print(a) + "' is not an axiom of " + t.name);
    }
    report.axioms.push_back(*which);
  }
  report.ok = true;
  report.theorem = d.conclusion();
  return report;
}

}  // namespace lf
