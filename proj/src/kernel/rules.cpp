#include <algorithm>
#include <unordered_set>

#include "lf/error.hpp"
#include "lf/kernel.hpp"
#include "lf/logic.hpp"

namespace lf {

namespace {

bool same(const Term& a, const Term& b) { return a.alpha_hash() == b.alpha_hash() && alpha_equal(a, b); }

std::string show(const Term& a) { return print(a); }

[[noreturn]] void shape(std::string_view rule, const std::string& what) {
  fail(ErrorCode::ShapeMismatch, std::string(rule) + ": " + what);
}

void require_formula(std::string_view rule, const Term& p) {
  if (!p.type().is_t()) shape(rule, "'" + show(p) + "' is not a formula (type " + to_string(p.type()) + ")");
}

void require_premises(std::string_view rule, const std::vector<Derivation>& ps, std::size_t n) {
  if (ps.size() != n) shape(rule, "expects " + std::to_string(n) + " premise(s), got " + std::to_string(ps.size()));
}

void require_terms(std::string_view rule, const std::vector<Term>& ts, std::size_t n) {
  if (ts.size() != n) shape(rule, "expects " + std::to_string(n) + " formula parameter(s), got " + std::to_string(ts.size()));
}

const Variable& require_variable(std::string_view rule, const std::optional<Variable>& v) {
  if (!v) shape(rule, "needs a variable parameter");
  return *v;
}

bool same_context(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i], b[i])) return false;
  }
  return true;
}

void require_same_context(std::string_view rule, const Sequent& a, const Sequent& b) {
  if (!same_context(a.assumptions, b.assumptions)) {
    fail(ErrorCode::ContextMismatch,
         std::string(rule) + ": premises have different assumptions (" + to_string(a) + " vs " + to_string(b) + ")");
  }
}

void require_fresh(std::string_view rule, const Variable& x, const Term& in, const std::string& where) {
  if (in.has_free(x)) {
    fail(ErrorCode::FreshnessViolation,
         std::string(rule) + ": " + x.name() + " occurs free in " + where + " '" + show(in) + "'");
  }
}

void require_fresh_context(std::string_view rule, const Variable& x, const std::vector<Term>& gamma) {
  for (const Term& g : gamma) require_fresh(rule, x, g, "the assumption");
}

// a single-assumption premise, as R.6 and the classicism rule demand
const Term& sole_assumption(std::string_view rule, const Sequent& s, const char* which) {
  if (s.assumptions.size() > 1) {
    fail(ErrorCode::NonEmptyContext, std::string(rule) + ": " + which + " premise must have exactly one assumption, has " +
                                         std::to_string(s.assumptions.size()) + " (" + to_string(s) + ")");
  }
  if (s.assumptions.empty()) shape(rule, std::string(which) + " premise has no assumption (" + to_string(s) + ")");
  return s.assumptions.front();
}

// f x = g x  ->  (f, g), for the given x
std::pair<Term, Term> split_pointwise_identity(std::string_view rule, const Term& p, const Variable& x) {
  auto eq = logic::match_eq(p);
  if (!eq) shape(rule, "conclusion '" + show(p) + "' is not an identity");
  const auto& [l, r] = *eq;
  const Term xv = Term::var(x);
  if (!l.is_app() || !same(l.arg(), xv) || !r.is_app() || !same(r.arg(), xv)) {
    shape(rule, "identity '" + show(p) + "' is not of the form f " + x.name() + " = g " + x.name());
  }
  return {l.fun(), r.fun()};
}

Sequent infer_structural(const RuleApplication& a) {
  const std::vector<Derivation>& ps = a.premises;
  switch (a.structural) {
    case Structural::Hypothesis: {
      constexpr std::string_view r = "R.1 hypothesis";
      require_premises(r, ps, 0);
      if (a.terms.empty()) shape(r, "needs the formula P");
      for (const Term& t : a.terms) require_formula(r, t);
      return Sequent{a.terms, a.terms.back()};
    }
    case Structural::Contraction: {
      constexpr std::string_view r = "R.1 contraction";
      require_premises(r, ps, 1);
      const Sequent& s = ps[0].sequent();
      const std::size_t n = s.assumptions.size();
      if (n < 2 || !same(s.assumptions[n - 1], s.assumptions[n - 2])) {
        shape(r, "premise must have the form Γ, P, P ⊢ Q (" + to_string(s) + ")");
      }
      Sequent out = s;
      out.assumptions.pop_back();
      return out;
    }
    case Structural::Weakening: {
      constexpr std::string_view r = "R.1 weakening";
      require_premises(r, ps, 1);
      require_terms(r, a.terms, 1);
      require_formula(r, a.terms[0]);
      Sequent out = ps[0].sequent();
      out.assumptions.push_back(a.terms[0]);
      return out;
    }
    case Structural::Exchange: {
      constexpr std::string_view r = "R.1 exchange";
      require_premises(r, ps, 1);
      Sequent out = ps[0].sequent();
      if (a.position + 1 >= out.assumptions.size()) {
        shape(r, "no adjacent assumptions at position " + std::to_string(a.position) + " in " + to_string(out));
      }
      std::swap(out.assumptions[a.position], out.assumptions[a.position + 1]);
      return out;
    }
    case Structural::Cut: {
      constexpr std::string_view r = "R.1 cut";
      require_premises(r, ps, 2);
      const Sequent& left = ps[0].sequent();
      const Sequent& right = ps[1].sequent();
      if (right.assumptions.empty() || !same(right.assumptions.back(), left.conclusion)) {
        shape(r, "second premise must have the form Δ, P ⊢ Q with P the conclusion of the first (" + to_string(left) +
                     " and " + to_string(right) + ")");
      }
      std::vector<Term> gamma = left.assumptions;
      gamma.insert(gamma.end(), right.assumptions.begin(), right.assumptions.end() - 1);
      return Sequent{std::move(gamma), right.conclusion};
    }
    case Structural::None:
      break;
  }
  shape("R.1", "unknown structural rule");
}

}  // namespace

Sequent RuleApplication::infer() const {
  const std::vector<Derivation>& ps = premises;
  switch (rule) {
    case RuleId::R1_Structural:
      return infer_structural(*this);

    case RuleId::R2_Beta: {
      constexpr std::string_view r = "R.2";
      require_premises(r, ps, 1);
      require_terms(r, terms, 1);
      const Term& q = terms[0];
      require_formula(r, q);
      const Sequent& s = ps[0].sequent();
      if (!beta_equivalent(s.conclusion, q)) {
        fail(ErrorCode::NotBetaEquivalent, "R.2: '" + show(s.conclusion) + "' and '" + show(q) + "' are not β-equivalent");
      }
      return Sequent{s.assumptions, q};
    }

    case RuleId::R3_UI: {
      constexpr std::string_view r = "R.3";
      require_premises(r, ps, 2);
      const Sequent& s1 = ps[0].sequent();
      const Sequent& s2 = ps[1].sequent();
      auto sub = logic::match_subset(s1.conclusion);
      if (!sub) shape(r, "first premise must conclude F ⊆ G, got '" + show(s1.conclusion) + "'");
      const auto& [f, g] = *sub;
      if (!s2.conclusion.is_app() || !same(s2.conclusion.fun(), f)) {
        shape(r, "second premise must conclude " + show(f) + " applied to a term, got '" + show(s2.conclusion) + "'");
      }
      require_same_context(r, s1, s2);
      return Sequent{s1.assumptions, g * s2.conclusion.arg()};
    }

    case RuleId::R4_UG: {
      constexpr std::string_view r = "R.4";
      require_premises(r, ps, 1);
      const Variable& x = require_variable(r, variable);
      const Sequent& s = ps[0].sequent();
      if (s.assumptions.empty()) shape(r, "premise must have the form Γ, F x ⊢ G x (no assumptions)");
      const Term& fx = s.assumptions.back();
      const Term& gx = s.conclusion;
      const Term xv = Term::var(x);
      if (!fx.is_app() || !same(fx.arg(), xv)) {
        shape(r, "last assumption '" + show(fx) + "' is not of the form F " + x.name());
      }
      if (!gx.is_app() || !same(gx.arg(), xv)) shape(r, "conclusion '" + show(gx) + "' is not of the form G " + x.name());
      const Term& f = fx.fun();
      const Term& g = gx.fun();
      require_fresh(r, x, f, "F");
      require_fresh(r, x, g, "G");
      require_fresh_context(r, x, std::vector<Term>(s.assumptions.begin(), s.assumptions.end() - 1));
      return Sequent{std::vector<Term>(s.assumptions.begin(), s.assumptions.end() - 1), logic::subset(f, g)};
    }

    case RuleId::R5_NegElim: {
      constexpr std::string_view r = "R.5";
      require_premises(r, ps, 1);
      const Sequent& s = ps[0].sequent();
      if (s.assumptions.empty()) shape(r, "premise must have the form Γ, ¬P ⊢ P (no assumptions)");
      auto neg = logic::match_neg(s.assumptions.back());
      if (!neg || !same(*neg, s.conclusion)) {
        shape(r, "last assumption '" + show(s.assumptions.back()) + "' is not the negation of the conclusion '" +
                     show(s.conclusion) + "'");
      }
      return Sequent{std::vector<Term>(s.assumptions.begin(), s.assumptions.end() - 1), s.conclusion};
    }

    case RuleId::R6_Intensionality:
    case RuleId::V_ClassicismSubst: {
      const std::string_view r = rule == RuleId::R6_Intensionality ? "R.6" : "ClassicismSubst";
      require_premises(r, ps, 2);
      const Sequent& s1 = ps[0].sequent();
      const Sequent& s2 = ps[1].sequent();
      const Term& p = sole_assumption(r, s1, "first");
      const Term& q = s1.conclusion;
      const Term& q2 = sole_assumption(r, s2, "second");
      if (!same(q2, q) || !same(s2.conclusion, p)) {
        shape(r, "premises must have the forms P ⊢ Q and Q ⊢ P (" + to_string(s1) + " and " + to_string(s2) + ")");
      }
      if (rule == RuleId::R6_Intensionality) return Sequent{{}, logic::eq(p, q)};
      require_terms(r, terms, 1);
      const Term& big = terms[0];
      require_formula(r, big);
      const Term& at = subterm_at(big, path);
      if (!same(at, p)) {
        shape(r, "subterm at the given path of '" + show(big) + "' is '" + show(at) + "', not '" + show(p) + "'");
      }
      return Sequent{{big}, replace_at(big, path, q)};
    }

    case RuleId::R7_FunExt:
    case RuleId::V_ModalFunExt: {
      const bool modal = rule == RuleId::V_ModalFunExt;
      const std::string_view r = modal ? "ModalFunExt" : "R.7";
      require_premises(r, ps, 1);
      const Variable& x = require_variable(r, variable);
      const Sequent& s = ps[0].sequent();
      Term body = s.conclusion;
      if (modal) {
        auto b = logic::match_box(body);
        auto all = b ? logic::match_forall(*b) : std::nullopt;
        if (!all || all->first != x) {
          shape(r, "premise must conclude □∀" + x.name() + ".(f " + x.name() + " = g " + x.name() + "), got '" +
                       show(s.conclusion) + "'");
        }
        body = all->second;
      }
      auto [f, g] = split_pointwise_identity(r, body, x);
      require_fresh(r, x, f, "f");
      require_fresh(r, x, g, "g");
      if (!modal) require_fresh_context(r, x, s.assumptions);
      return Sequent{s.assumptions, logic::eq(f, g)};
    }

    case RuleId::R8_Choice: {
      constexpr std::string_view r = "R.8";
      require_premises(r, ps, 1);
      const Variable& f = require_variable(r, variable);
      const Sequent& s = ps[0].sequent();
      auto all = logic::match_forall(s.conclusion);
      auto some = all ? logic::match_exists(all->second) : std::nullopt;
      if (!some) shape(r, "premise must conclude ∀x.∃y.R x y, got '" + show(s.conclusion) + "'");
      const Variable& x = all->first;
      const Variable& y = some->first;
      const Term& rxy = some->second;
      if (x == y || !rxy.is_app() || !rxy.fun().is_app() || !same(rxy.arg(), Term::var(y)) ||
          !same(rxy.fun().arg(), Term::var(x))) {
        shape(r, "matrix '" + show(rxy) + "' is not of the form R x y");
      }
      const Term& rel = rxy.fun().fun();
      if (rel.has_free(x) || rel.has_free(y)) shape(r, "relation '" + show(rel) + "' mentions the bound variables");
      if (f.type != Type::fun(x.type, y.type)) {
        shape(r, "function variable " + f.name() + " has type " + to_string(f.type) + ", expected " +
                     to_string(Type::fun(x.type, y.type)));
      }
      require_fresh(r, f, rel, "R");
      require_fresh_context(r, f, s.assumptions);
      const Term fx = Term::var(f) * Term::var(x);
      return Sequent{s.assumptions, logic::exists(f, logic::forall(x, rel * Term::var(x) * fx))};
    }

    case RuleId::R9_PotInf:
    case RuleId::V_ActualInfinityE: {
      const bool actual = rule == RuleId::V_ActualInfinityE;
      const std::string_view r = actual ? "ActualInfinityE" : "R.9";
      require_premises(r, ps, 1);
      const Sequent& s = ps[0].sequent();
      auto n = logic::match_nat(s.conclusion);
      if (!n) shape(r, "premise must conclude ℕ n, got '" + show(s.conclusion) + "'");
      const Type sigma = n->type().domain().domain();
      if (actual ? !sigma.is_e() : !sigma.is_base()) {
        fail(ErrorCode::TypeRestriction, std::string(r) + ": ℕ_σ with σ = " + to_string(sigma) +
                                             (actual ? "; the rule is only for e" : "; σ must be e or t"));
      }
      if (actual) return Sequent{s.assumptions, logic::exists_of(*n)};
      return Sequent{s.assumptions, logic::neq(logic::bot(), logic::exists_of(*n))};
    }

    case RuleId::V_HenkinExt: {
      constexpr std::string_view r = "HenkinExt";
      require_premises(r, ps, 2);
      const Sequent& s1 = ps[0].sequent();
      const Sequent& s2 = ps[1].sequent();
      if (s1.assumptions.empty() || s2.assumptions.empty()) {
        shape(r, "premises must have the forms Γ, P ⊢ Q and Γ, Q ⊢ P");
      }
      const Term& p = s1.assumptions.back();
      const Term& q = s1.conclusion;
      if (!same(s2.assumptions.back(), q) || !same(s2.conclusion, p)) {
        shape(r, "premises must have the forms Γ, P ⊢ Q and Γ, Q ⊢ P (" + to_string(s1) + " and " + to_string(s2) + ")");
      }
      std::vector<Term> g1(s1.assumptions.begin(), s1.assumptions.end() - 1);
      std::vector<Term> g2(s2.assumptions.begin(), s2.assumptions.end() - 1);
      if (!same_context(g1, g2)) fail(ErrorCode::ContextMismatch, "HenkinExt: the premises have different Γ");
      return Sequent{g1, logic::eq(p, q)};
    }
  }
  shape("kernel", "unknown rule");
}

Derivation RuleApplication::build() const {
  return Derivation(std::make_shared<const Derivation::Node>(
      Derivation::Node{rule, structural, premises, terms, variable, position, path, infer()}));
}

RuleApplication RuleApplication::of(const Derivation& d) {
  RuleApplication a;
  a.rule = d.rule();
  a.structural = d.structural();
  a.premises = d.premises();
  a.terms = d.terms();
  a.variable = d.variable();
  a.position = d.position();
  a.path = d.path();
  return a;
}

std::string Derivation::label() const {
  std::string out(rule_name(rule()));
  if (rule() == RuleId::R1_Structural) out += " " + std::string(structural_name(structural()));
  return out;
}

std::size_t Derivation::node_count() const {
  std::unordered_set<const void*> seen;
  std::vector<const Derivation*> stack{this};
  while (!stack.empty()) {
    const Derivation* d = stack.back();
    stack.pop_back();
    if (!seen.insert(d->identity()).second) continue;
    for (const Derivation& p : d->premises()) stack.push_back(&p);
  }
  return seen.size();
}

namespace rules {

namespace {

Derivation make(RuleId r, std::vector<Derivation> ps, std::vector<Term> ts = {}, std::optional<Variable> v = {}) {
  RuleApplication a;
  a.rule = r;
  a.premises = std::move(ps);
  a.terms = std::move(ts);
  a.variable = std::move(v);
  return a.build();
}

Derivation make_structural(Structural s, std::vector<Derivation> ps, std::vector<Term> ts = {}, std::size_t pos = 0) {
  RuleApplication a;
  a.rule = RuleId::R1_Structural;
  a.structural = s;
  a.premises = std::move(ps);
  a.terms = std::move(ts);
  a.position = pos;
  return a.build();
}

}  // namespace

Derivation hypothesis(const std::vector<Term>& gamma, const Term& p) {
  std::vector<Term> ts = gamma;
  ts.push_back(p);
  return make_structural(Structural::Hypothesis, {}, std::move(ts));
}

Derivation contraction(const Derivation& d) { return make_structural(Structural::Contraction, {d}); }
Derivation weakening(const Derivation& d, const Term& p) { return make_structural(Structural::Weakening, {d}, {p}); }
Derivation exchange(const Derivation& d, std::size_t i) { return make_structural(Structural::Exchange, {d}, {}, i); }
Derivation cut(const Derivation& d1, const Derivation& d2) { return make_structural(Structural::Cut, {d1, d2}); }

Derivation beta(const Derivation& d, const Term& q) { return make(RuleId::R2_Beta, {d}, {q}); }
Derivation universal_instantiation(const Derivation& d1, const Derivation& d2) { return make(RuleId::R3_UI, {d1, d2}); }
Derivation universal_generalization(const Derivation& d, const Variable& x) { return make(RuleId::R4_UG, {d}, {}, x); }
Derivation negation_elimination(const Derivation& d) { return make(RuleId::R5_NegElim, {d}); }
Derivation intensionality(const Derivation& d1, const Derivation& d2) {
  return make(RuleId::R6_Intensionality, {d1, d2});
}
Derivation function_extensionality(const Derivation& d, const Variable& x) { return make(RuleId::R7_FunExt, {d}, {}, x); }
Derivation choice(const Derivation& d, const Variable& f) { return make(RuleId::R8_Choice, {d}, {}, f); }
Derivation potential_infinity(const Derivation& d) { return make(RuleId::R9_PotInf, {d}); }
Derivation actual_infinity_e(const Derivation& d) { return make(RuleId::V_ActualInfinityE, {d}); }
Derivation henkin_extensionality(const Derivation& d1, const Derivation& d2) {
  return make(RuleId::V_HenkinExt, {d1, d2});
}

Derivation classicism_substitution(const Derivation& d1, const Derivation& d2, const Term& r, const Path& path) {
  RuleApplication a;
  a.rule = RuleId::V_ClassicismSubst;
  a.premises = {d1, d2};
  a.terms = {r};
  a.path = path;
  return a.build();
}

Derivation modal_function_extensionality(const Derivation& d, const Variable& x) {
  return make(RuleId::V_ModalFunExt, {d}, {}, x);
}

}  // namespace rules

}  // namespace lf
