#include <gtest/gtest.h>

#include <random>

#include "lf/kernel.hpp"
#include "lf/library.hpp"
#include "lf/logic.hpp"
#include "support/errors.hpp"

using namespace lf;
using namespace lf::logic;
using lf::testing::code_of;

namespace {

const Type e = Type::e();
const Type t = Type::t();
const Type et = Type::fun(e, t);

const Variable x('x', e);
const Variable y('y', e);
const Variable F('F', et);
const Variable G('G', et);
const Term P = var('p', t);
const Term Q = var('q', t);
const Term Fx = Term::var(F) * Term::var(x);
const Term Gx = Term::var(G) * Term::var(x);

Derivation hyp(const Term& p) { return rules::hypothesis({}, p); }

}  // namespace

// --- accepted shapes --------------------------------------------------------------

TEST(Rules, HypothesisAndStructure) {
  const Derivation h = rules::hypothesis({Q}, P);
  EXPECT_EQ(h.assumptions().size(), 2u);
  EXPECT_TRUE(alpha_equal(h.conclusion(), P));
  const Derivation w = rules::weakening(h, P);
  const Derivation c = rules::contraction(w);
  EXPECT_EQ(c.assumptions().size(), 2u);
  const Derivation x1 = rules::exchange(h, 0);
  EXPECT_TRUE(alpha_equal(x1.assumptions()[0], P));
  // [Q] ⊢ Q cut against [Q, Q] ⊢ Q leaves [Q, Q]
  const Derivation cut = rules::cut(hyp(Q), rules::hypothesis({Q}, Q));
  EXPECT_EQ(cut.assumptions().size(), 2u);
}

TEST(Rules, UniversalGeneralizationThenInstantiation) {
  // Fx ⊢ Fx gives F ⊆ F; instantiating at y with Fy gives Fy
  const Derivation sub = rules::universal_generalization(hyp(Fx), x);
  EXPECT_TRUE(alpha_equal(sub.conclusion(), subset(Term::var(F), Term::var(F))));
  const Term Fy = Term::var(F) * Term::var(y);
  const Derivation ui = rules::universal_instantiation(rules::weakening(sub, Fy), hyp(Fy));
  EXPECT_TRUE(alpha_equal(ui.conclusion(), Fy));
}

TEST(Rules, BetaAcceptsRedexes) {
  const Term redex = Term::abs(x, Fx) * Term::var(y);
  const Derivation d = rules::beta(hyp(redex), Term::var(F) * Term::var(y));
  EXPECT_EQ(d.rule(), RuleId::R2_Beta);
}

TEST(Rules, IntensionalityWithSingleAssumptions) {
  const Term pp = conj(P, P);
  const Derivation d1 = lib::and_intro(hyp(P), hyp(P));
  const Derivation d2 = lib::and_elim_l(hyp(pp));
  const Derivation id = rules::intensionality(d1, d2);
  EXPECT_TRUE(id.assumptions().empty());
  EXPECT_TRUE(alpha_equal(id.conclusion(), eq(P, pp)));
}

TEST(Rules, PotentialInfinityAtBaseTypes) {
  for (const Type& s : {e, t}) {
    const Derivation d = rules::potential_infinity(lib::numeral_is_nat(2, s));
    EXPECT_TRUE(alpha_equal(d.conclusion(), neq(bot(), exists_of(numeral(2, s)))));
  }
}

// --- one malformed application per rule family ----------------------------------------

TEST(NegativeRules, UniversalGeneralizationFreshness) {
  EXPECT_EQ(code_of([] { rules::universal_generalization(rules::hypothesis({Gx}, Fx), x); }),
            ErrorCode::FreshnessViolation);
}

TEST(NegativeRules, UniversalGeneralizationShape) {
  EXPECT_EQ(code_of([] { rules::universal_generalization(hyp(P), x); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, FunctionExtensionalityFreshness) {
  const Derivation d = rules::weakening(lib::eq_refl(Fx), Gx);
  EXPECT_EQ(code_of([&] { rules::function_extensionality(d, x); }), ErrorCode::FreshnessViolation);
}

TEST(NegativeRules, IntensionalityNonEmptyContext) {
  const Derivation d1 = rules::hypothesis({Q}, P);
  const Derivation d2 = rules::hypothesis({Q}, P);
  EXPECT_EQ(code_of([&] { rules::intensionality(d1, d2); }), ErrorCode::NonEmptyContext);
}

TEST(NegativeRules, PotentialInfinityAtFunctionType) {
  const Derivation d = lib::numeral_is_nat(1, et);
  EXPECT_EQ(code_of([&] { rules::potential_infinity(d); }), ErrorCode::TypeRestriction);
}

TEST(NegativeRules, UniversalInstantiationContextMismatch) {
  const Derivation sub = rules::weakening(rules::universal_generalization(hyp(Fx), x), P);
  const Term Fy = Term::var(F) * Term::var(y);
  EXPECT_EQ(code_of([&] { rules::universal_instantiation(sub, hyp(Fy)); }), ErrorCode::ContextMismatch);
}

TEST(NegativeRules, UniversalInstantiationShape) {
  EXPECT_EQ(code_of([] { rules::universal_instantiation(hyp(P), hyp(P)); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, CutShape) {
  EXPECT_EQ(code_of([] { rules::cut(hyp(P), rules::hypothesis({Q}, Q)); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, ContractionShape) {
  EXPECT_EQ(code_of([] { rules::contraction(rules::hypothesis({Q}, P)); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, ExchangeOutOfRange) {
  EXPECT_EQ(code_of([] { rules::exchange(hyp(P), 0); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, WeakeningByNonFormula) {
  EXPECT_EQ(code_of([] { rules::weakening(hyp(P), Term::var(x)); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, BetaInequivalent) {
  EXPECT_EQ(code_of([] { rules::beta(hyp(P), Q); }), ErrorCode::NotBetaEquivalent);
}

TEST(NegativeRules, NegationEliminationShape) {
  // the last assumption must be ¬P
  EXPECT_EQ(code_of([] { rules::negation_elimination(rules::hypothesis({Q}, P)); }), ErrorCode::ShapeMismatch);
}

TEST(NegativeRules, ChoiceFreshness) {
  // R = λxy.f x = y mentions f, so f cannot be the choice function's name
  const Variable f('f', Type::fun(e, e));
  const Term fx = Term::var(f) * Term::var(x);
  const Term rel = Term::abs(x, Term::abs(y, eq(fx, Term::var(y))));
  const Term rxy = rel * Term::var(x) * Term::var(y);
  const Derivation witness = lib::conv(lib::eq_refl(fx), rel * Term::var(x) * fx);
  const Derivation total = lib::forall_intro(lib::exists_intro(witness, y, rxy, fx), x);
  EXPECT_EQ(code_of([&] { rules::choice(total, f); }), ErrorCode::FreshnessViolation);
  const Variable g('g', Type::fun(e, e));
  EXPECT_NO_THROW(rules::choice(total, g));
}

TEST(NegativeRules, ActualInfinityOnlyAtE) {
  EXPECT_EQ(code_of([] { rules::actual_infinity_e(lib::numeral_is_nat(1, t)); }), ErrorCode::TypeRestriction);
  EXPECT_NO_THROW(rules::actual_infinity_e(lib::numeral_is_nat(1, e)));
}

TEST(NegativeRules, HenkinContextMismatch) {
  const Derivation d1 = rules::hypothesis({Q, P}, P);
  const Derivation d2 = rules::hypothesis({P}, P);
  EXPECT_EQ(code_of([&] { rules::henkin_extensionality(d1, d2); }), ErrorCode::ContextMismatch);
}

TEST(NegativeRules, ClassicismNonEmptyContext) {
  const Derivation d = rules::hypothesis({Q, P}, P);
  EXPECT_EQ(code_of([&] { rules::classicism_substitution(d, d, P, {}); }), ErrorCode::NonEmptyContext);
}

TEST(NegativeRules, ModalFunctionExtensionalityFreshness) {
  // □∀x.(R x x = R x x): the function R x would lose its x
  const Term R = var('R', Type::fun(e, et));
  const Term rxx = R * Term::var(x) * Term::var(x);
  const Derivation d = lib::necessitation(lib::forall_intro(lib::eq_refl(rxx), x));
  EXPECT_EQ(code_of([&] { rules::modal_function_extensionality(d, x); }), ErrorCode::FreshnessViolation);
  const Derivation ok = lib::necessitation(lib::forall_intro(lib::eq_refl(Fx), x));
  EXPECT_TRUE(alpha_equal(rules::modal_function_extensionality(ok, x).conclusion(), eq(Term::var(F), Term::var(F))));
}

TEST(Rules, ClassicismReplacesUnderBinders) {
  // p∧p ⊣⊢ p rewrites ∀x.(Fx ∨ (p∧p)) at the captured position
  const Term pp = conj(P, P);
  const Derivation d1 = lib::and_elim_l(hyp(pp));
  const Derivation d2 = lib::and_intro(hyp(P), hyp(P));
  const Term r = forall(x, disj(Fx, pp));
  // ∀_e (λx. ∨ Fx (p∧p)): arg, body, arg
  const Path path{1, 0, 1};
  const Derivation s = rules::classicism_substitution(d1, d2, r, path);
  EXPECT_TRUE(alpha_equal(s.conclusion(), forall(x, disj(Fx, P))));
  EXPECT_EQ(s.assumptions().size(), 1u);
}

// --- R.6 with fuzzed side contexts ------------------------------------------------------

TEST(IntensionalityFuzz, AnySideAssumptionIsRejected) {
  std::mt19937 rng(7);
  const std::vector<Term> stock{P, Q, Fx, Gx, neg(P), conj(P, Q), top()};
  for (int round = 0; round < 200; ++round) {
    std::vector<Term> gamma;
    const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < extra; ++i) gamma.push_back(stock[rng() % stock.size()]);
    const Derivation d1 = rules::hypothesis(gamma, P);
    const Derivation d2 = rules::hypothesis(gamma, P);
    if (gamma.empty()) {
      EXPECT_NO_THROW(rules::intensionality(d1, d2));
    } else {
      EXPECT_EQ(code_of([&] { rules::intensionality(d1, d2); }), ErrorCode::NonEmptyContext) << round;
    }
  }
}

// --- theories ---------------------------------------------------------------------------

TEST(Theories, Lattice) {
  const Theory lf = theory("LF");
  for (RuleId r : all_rules()) {
    const bool base = r <= RuleId::R9_PotInf;
    EXPECT_EQ(lf.enabled(r), base) << rule_name(r);
  }
  for (int n = 1; n <= 9; ++n) {
    const std::string name = "LF−R." + std::to_string(n);
    const Theory th = theory(name);
    EXPECT_EQ(th.rules.size(), 8u);
    EXPECT_FALSE(th.enabled(static_cast<RuleId>(n - 1)));
    EXPECT_EQ(theory("LF-R." + std::to_string(n)).rules, th.rules);
  }
  const Theory church = theory("Church-1940");
  EXPECT_FALSE(church.enabled(RuleId::R6_Intensionality));
  EXPECT_FALSE(church.enabled(RuleId::R9_PotInf));
  EXPECT_TRUE(church.enabled(RuleId::V_ActualInfinityE));
  EXPECT_EQ(church.guard, Extension::Epsilon);
  EXPECT_TRUE(theory("Henkin-1950").enabled(RuleId::V_HenkinExt));
  const Theory hfe = theory("HFE");
  EXPECT_FALSE(hfe.enabled(RuleId::R8_Choice));
  EXPECT_FALSE(hfe.enabled(RuleId::R9_PotInf));
  const Theory cl = theory("Classicism");
  EXPECT_FALSE(cl.enabled(RuleId::R6_Intensionality));
  EXPECT_FALSE(cl.enabled(RuleId::R7_FunExt));
  EXPECT_TRUE(cl.enabled(RuleId::V_ClassicismSubst));
  const Theory mfe = theory("ModalFunExt-LF");
  EXPECT_FALSE(mfe.enabled(RuleId::R7_FunExt));
  EXPECT_TRUE(mfe.enabled(RuleId::V_ModalFunExt));
  EXPECT_EQ(theory("LF−R.8−R.9").rules.size(), 7u);
  EXPECT_EQ(theory("LF_ι").schemas.size(), 2u);
  EXPECT_EQ(theory("LF_ε").schemas.size(), 4u);
  EXPECT_EQ(code_of([] { theory("ZFC"); }), ErrorCode::UnknownTheory);
  EXPECT_EQ(code_of([] { theory("LF−R.12"); }), ErrorCode::UnknownTheory);
}

TEST(Theories, RuleNames) {
  for (RuleId r : all_rules()) EXPECT_EQ(parse_rule_id(rule_name(r)), r);
  EXPECT_EQ(parse_rule_id("R6"), RuleId::R6_Intensionality);
  EXPECT_EQ(code_of([] { parse_rule_id("R.10"); }), ErrorCode::UnknownRule);
}

TEST(Check, DisabledRuleAndUndischargedAssumption) {
  const Derivation d = lib::necessitation(lib::top_intro());
  EXPECT_TRUE(check_theorem(theory("LF"), d).ok);
  EXPECT_EQ(code_of([&] { check_theorem(theory("LF−R.6"), d); }), ErrorCode::RuleDisabled);
  EXPECT_EQ(first_disabled_rule(theory("LF−R.6"), d), RuleId::R6_Intensionality);
  EXPECT_EQ(code_of([] { check_theorem(theory("LF"), hyp(P)); }), ErrorCode::UndischargedAssumption);
  // an axiom discharges its own assumption
  const CheckReport r = check_theorem(theory("LF").plus_axiom(P), hyp(P));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.axioms.size(), 1u);
}

TEST(Check, SchemaInstancesDischargeAtAnyType) {
  for (const Type& s : {e, t, et}) {
    const Term ax = theory("LF_ι").schemas[0].generate(s);
    EXPECT_TRUE(check_theorem(theory("LF_ι"), hyp(ax)).ok);
    EXPECT_EQ(code_of([&] { check_theorem(theory("LF"), hyp(ax)); }), ErrorCode::UndischargedAssumption);
  }
}

TEST(Check, SharedSubproofsAreCountedOnce) {
  // each step uses its predecessor twice; unshared, the tree would have 2^40 leaves
  Derivation d = lib::top_intro();
  for (int i = 0; i < 40; ++i) d = lib::and_elim_l(lib::and_intro(d, d));
  EXPECT_LT(d.node_count(), 40u * 200u);
  EXPECT_TRUE(check_theorem(theory("LF"), d).ok);
}

TEST(Check, DeepChainsDoNotRecurse) {
  Derivation d = hyp(P);
  for (int i = 0; i < 100000; ++i) d = rules::beta(d, P);
  EXPECT_EQ(code_of([&] { check_theorem(theory("LF"), d); }), ErrorCode::UndischargedAssumption);
  EXPECT_TRUE(check_theorem(theory("LF").plus_axiom(P), d).ok);
}

TEST(Check, ReinferenceMatchesStoredConclusion) {
  const Derivation d = lib::library_theorem("peirce");
  const RuleApplication app = RuleApplication::of(d);
  EXPECT_TRUE(alpha_equal(app.infer(), d.sequent()));
}
