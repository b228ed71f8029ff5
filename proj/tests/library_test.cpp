#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "lf/extensions.hpp"
#include "lf/library.hpp"
#include "lf/logic.hpp"
#include "lf/syntax.hpp"
#include "support/errors.hpp"

using namespace lf;
using namespace lf::logic;
using lf::testing::code_of;

namespace {

const Type e = Type::e();
const Type t = Type::t();
const Type et = Type::fun(e, t);
const Term P = var('p', t);
const Term Q = var('q', t);

Derivation hyp(const Term& p) { return rules::hypothesis({}, p); }

std::vector<Term> merge_ctx(std::vector<Term> ctx, const Term& p) {
  ctx.push_back(p);
  return ctx;
}

Extension guard_of(const std::string& theory_name) { return theory(theory_name).guard; }

}  // namespace

// --- the catalog -------------------------------------------------------------------------

TEST(Catalog, EveryEntryChecksUnderItsTheory) {
  const auto start = std::chrono::steady_clock::now();
  for (const lib::LibraryEntry& entry : lib::catalog()) {
    SCOPED_TRACE(entry.name);
    const Derivation d = entry.build();
    EXPECT_TRUE(d.assumptions().empty() || theory(entry.theory).guard != Extension::Core);
    const CheckReport r = check_theorem(theory(entry.theory), d);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(alpha_equal(*r.theorem, read_term(entry.statement, guard_of(entry.theory))));
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 30.0);
}

TEST(Catalog, NamedStatements) {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"refute_extensionality", "∃pq.((p ↔ q) ∧ p ≠ q)"},
      {"s5_axiom", "∀p.(¬□p → □¬□p)"},
      {"prop_intensionalism", "∀pq.(□(p ↔ q) → p = q)"},
      {"nec_identity", "∀xy^e.(x = y → □(x = y))"},
      {"barcan_len1", "∀X^{et}.((∀z.□X z) → □∀z.X z)"},
  };
  for (const auto& [name, text] : expected) {
    EXPECT_TRUE(alpha_equal(lib::library_theorem(name).conclusion(), read_term(text))) << name;
  }
  for (const char* name : {"s4_K", "s4_T", "s4_4", "s5_axiom", "nec_identity", "nec_distinctness", "barcan_len1",
                           "converse_barcan_len1", "prop_intensionalism", "property_intensionalism_len1",
                           "refute_extensionality", "class_comprehension_ι", "class_extensionality", "peirce",
                           "double_neg_elim", "alpha_iff_top_ι"}) {
    EXPECT_NO_THROW(lib::library_entry(name)) << name;
  }
  EXPECT_EQ(lib::library_entry("alpha_iff_top_iota").name, "alpha_iff_top_ι");
  EXPECT_EQ(code_of([] { lib::library_entry("fermat"); }), ErrorCode::UnknownTheorem);
}

TEST(Catalog, Minimality) {
  auto disabled = [](const char* name, const char* th) {
    return code_of([&] { check_theorem(theory(th), lib::library_theorem(name)); });
  };
  EXPECT_EQ(disabled("s5_axiom", "LF−R.8"), ErrorCode::RuleDisabled);
  EXPECT_EQ(disabled("refute_extensionality", "LF−R.9"), ErrorCode::RuleDisabled);
  EXPECT_EQ(disabled("prop_intensionalism", "LF−R.6"), ErrorCode::RuleDisabled);
  EXPECT_EQ(disabled("nec_distinctness", "LF−R.8"), ErrorCode::RuleDisabled);
  EXPECT_EQ(disabled("peirce", "LF−R.5"), ErrorCode::RuleDisabled);
  EXPECT_EQ(disabled("class_extensionality", "LF−R.7"), ErrorCode::RuleDisabled);
  EXPECT_EQ(first_disabled_rule(theory("LF−R.8"), lib::library_theorem("s5_axiom")), RuleId::R8_Choice);
}

TEST(Catalog, DescriptionEntriesNeedTheAxioms) {
  EXPECT_EQ(code_of([] { check_theorem(theory("LF"), lib::library_theorem("class_comprehension_ι")); }),
            ErrorCode::UndischargedAssumption);
  EXPECT_TRUE(check_theorem(theory("LF_ε"), lib::library_theorem("alpha_iff_top_ι")).ok);
}

// --- slingshot and Henkin --------------------------------------------------------------

TEST(Slingshot, IntensionalityRefusesTheDescriptionAssumption) {
  // [D_ι.1, p] ⊢ @p and [D_ι.1, @p] ⊢ p are provable, but R.6 needs bare contexts
  const Derivation there = lib::actuality_from(P);
  EXPECT_EQ(there.assumptions().size(), 2u);
  const Term at_p = read_term("@p", Extension::Iota);
  const Derivation iff = lib::actuality_iff(P);
  const Derivation back = lib::mp(lib::assume(merge_ctx(iff.assumptions(), at_p), at_p), lib::iff_elim_r(iff));
  EXPECT_TRUE(alpha_equal(back.conclusion(), P));
  EXPECT_EQ(code_of([&] { rules::intensionality(there, back); }), ErrorCode::NonEmptyContext);
  EXPECT_EQ(code_of([&] { lib::intensional_eq(there, back); }), ErrorCode::NonEmptyContext);
  // and the description assumption cannot be dropped
  EXPECT_EQ(code_of([&] { rules::intensionality(lib::align(there, {P}), back); }), ErrorCode::ContextMismatch);
}

TEST(Henkin, ComposedInconsistency) {
  const Derivation bottom = lib::henkin_inconsistency();
  EXPECT_TRUE(alpha_equal(bottom.conclusion(), bot()));
  EXPECT_TRUE(bottom.assumptions().empty());
  EXPECT_TRUE(check_theorem(theory("LF+HenkinExt"), bottom).ok);
  // LF has no Henkin rule; Henkin-1950 has no R.9 to refute extensionality
  EXPECT_EQ(first_disabled_rule(theory("LF"), bottom), RuleId::V_HenkinExt);
  EXPECT_EQ(code_of([&] { check_theorem(theory("LF"), bottom); }), ErrorCode::RuleDisabled);
  EXPECT_EQ(first_disabled_rule(theory("Henkin-1950"), bottom), RuleId::R9_PotInf);
}

TEST(Henkin, ExtensionalityAxiomIsDerivable) {
  const Derivation ax = lib::henkin_extensionality_axiom();
  EXPECT_TRUE(alpha_equal(ax.conclusion(), read_term("∀pq.((p ↔ q) → p = q)")));
  EXPECT_TRUE(check_theorem(theory("Henkin-1950"), ax).ok);
}

// --- numerals --------------------------------------------------------------------------

TEST(Numerals, ClosureNumeralsAreNatural) {
  const Theory r14 = theory("LF−R.5−R.6−R.7−R.8−R.9");
  for (const Type& s : {e, t}) {
    for (int k = 0; k <= 6; ++k) {
      const Derivation d = lib::numeral_is_nat(k, s);
      EXPECT_TRUE(alpha_equal(d.conclusion(), nat(numeral(k, s)))) << k;
      EXPECT_TRUE(check_theorem(r14, d).ok) << k;
    }
  }
  EXPECT_TRUE(alpha_equal(lib::numeral_is_nat(0, t).conclusion(), read_term("ℕ_t 0_t")));
}

TEST(Numerals, ThreeFeedsPotentialInfinity) {
  const Derivation d = rules::potential_infinity(lib::numeral_is_nat(3, t));
  EXPECT_TRUE(alpha_equal(d.conclusion(), read_term("⊥ ≠ ∃(((0_t + 1_t) + 1_t) + 1_t)")));
  EXPECT_TRUE(check_theorem(theory("LF"), d).ok);
}

TEST(Numerals, UnitNumeralsViaZeroPlusOne) {
  const Theory r17 = theory("LF−R.8−R.9");
  for (const Type& s : {e, t}) {
    const Derivation z = lib::zero_plus_one(s);
    EXPECT_TRUE(check_theorem(r17, z).ok);
    for (int k = 1; k <= 4; ++k) {
      const Derivation d = lib::unit_numeral_is_nat(k, s);
      EXPECT_TRUE(alpha_equal(d.conclusion(), nat(unit_numeral(k, s)))) << k;
      EXPECT_TRUE(check_theorem(r17, d).ok) << k;
    }
  }
  EXPECT_TRUE(alpha_equal(lib::unit_numeral_is_nat(2, t).conclusion(), read_term("ℕ_t(1+1)")));
  // without R.6 the leading 0 + 1 stays
  EXPECT_EQ(code_of([] { check_theorem(theory("LF−R.6"), lib::zero_plus_one(t)); }), ErrorCode::RuleDisabled);
  const Derivation pot = rules::potential_infinity(lib::unit_numeral_is_nat(3, t));
  EXPECT_TRUE(alpha_equal(pot.conclusion(), read_term("⊥ ≠ ∃((1_t + 1_t) + 1_t)")));
}

TEST(Numerals, RightAssociatedThree) {
  const Theory r17 = theory("LF−R.8−R.9");
  const Derivation assoc = lib::one_assoc(t);
  EXPECT_TRUE(alpha_equal(assoc.conclusion(), read_term("(1_t + 1_t) + 1_t = 1_t + (1_t + 1_t)")));
  EXPECT_TRUE(check_theorem(r17, assoc).ok);
  EXPECT_EQ(first_disabled_rule(theory("LF−R.7"), assoc), RuleId::R7_FunExt);
  const Derivation three = lib::three_is_nat(t);
  EXPECT_TRUE(alpha_equal(three.conclusion(), read_term("ℕ_t(1+1+1)")));
  EXPECT_TRUE(alpha_equal(three.conclusion(), read_term("ℕ_t 3_t")));
  EXPECT_TRUE(check_theorem(r17, three).ok);
  const Derivation pot = rules::potential_infinity(three);
  EXPECT_TRUE(alpha_equal(pot.conclusion(), read_term("⊥ ≠ ∃(1+1+1_t)")));
}

// --- derived rules ----------------------------------------------------------------------

TEST(DerivedRules, ModusPonensAndConditionalProof) {
  const Derivation mp = lib::modus_ponens(lib::top_intro(), lib::cp(lib::top_intro({top()}), top()));
  EXPECT_TRUE(alpha_equal(mp.conclusion(), top()));
  EXPECT_EQ(code_of([] { lib::modus_ponens(hyp(P), hyp(imp(P, Q))); }), ErrorCode::ContextMismatch);
  const Derivation pp = lib::conditional_proof(hyp(P));
  EXPECT_TRUE(alpha_equal(pp.conclusion(), imp(P, P)));
  // the tree's own variable names (p, r) collide with the formula's
  const Term r = var('r', t);
  const Derivation clash = lib::conditional_proof(rules::hypothesis({imp(P, r)}, conj(P, r)));
  EXPECT_TRUE(alpha_equal(clash.conclusion(), imp(conj(P, r), conj(P, r))));
  EXPECT_TRUE(check_theorem(theory("LF").plus_axiom(imp(P, r)), clash).ok);
}

TEST(DerivedRules, ExFalsoAndNecessitation) {
  const Derivation ef = lib::ex_falso(hyp(bot()), Q);
  EXPECT_TRUE(alpha_equal(ef.conclusion(), Q));
  const Derivation nec = lib::derived_rule("necessitation", {{lib::top_intro()}, {}});
  EXPECT_TRUE(alpha_equal(nec.conclusion(), read_term("□⊤")));
  EXPECT_EQ(code_of([] { lib::derived_rule("necessitation", {{hyp(P)}, {}}); }), ErrorCode::NonEmptyContext);
  EXPECT_EQ(code_of([] { lib::derived_rule("modus_tollens", {}); }), ErrorCode::UnknownRule);
}

TEST(DerivedRules, TableCoversTheNamedRules) {
  for (const char* name : {"and_intro", "and_elim_l", "and_elim_r", "or_intro_l", "or_intro_r", "or_elim", "ex_falso",
                           "neg_intro", "neg_elim_classical", "iff_intro", "iff_elim", "forall_intro", "forall_elim",
                           "exists_intro", "exists_elim", "necessitation", "eq_refl", "leibniz", "subst_equiv"}) {
    const auto& names = lib::derived_rule_names();
    EXPECT_NE(std::find(names.begin(), names.end(), name), names.end()) << name;
  }
}

TEST(DerivedRules, ExistsElimWithNamedWitness) {
  const Variable x('x', e);
  const Variable c('c', e);
  const Variable F('F', et);
  const Term Fc = Term::var(F) * Term::var(c);
  const Term ex = exists(x, Term::var(F) * Term::var(x));
  const Derivation inner = lib::exists_intro(hyp(Fc), x, Term::var(F) * Term::var(x), Term::var(c));
  const Derivation d = lib::derived_rule("exists_elim", {{hyp(ex), inner}, {Term::var(c)}});
  EXPECT_TRUE(alpha_equal(d.conclusion(), ex));
  EXPECT_EQ(d.assumptions().size(), 1u);
}

TEST(DerivedRules, LeibnizAndReflexivity) {
  const Variable x('x', e);
  const Term a = var('a', e);
  const Term b = var('b', e);
  const Term F = var('F', et);
  const Derivation d = lib::derived_rule("leibniz", {{hyp(eq(a, b)), hyp(F * a)}, {Term::abs(x, F * Term::var(x))}});
  EXPECT_TRUE(alpha_equal(d.conclusion(), F * b));
  EXPECT_TRUE(alpha_equal(lib::library_theorem("eq_refl").conclusion(), read_term("∀x^e. x = x")));
}

// --- full intensionality over random contexts ------------------------------------------------

namespace {

struct Equivalents {
  Derivation pq;  // P ⊢ Q
  Derivation qp;  // Q ⊢ P
};

std::vector<Equivalents> equivalent_pairs() {
  const Variable x('x', e);
  const Term Gx = var('G', et) * Term::var(x);
  const Term tg = imp(top(), Gx);
  const Term pq = conj(P, Q);
  const Term qp = conj(Q, P);
  return {
      {lib::cp(hyp(Gx), top()), lib::mp(lib::top_intro({tg}), hyp(tg))},
      {lib::and_intro(lib::and_elim_r(hyp(pq)), lib::and_elim_l(hyp(pq))),
       lib::and_intro(lib::and_elim_r(hyp(qp)), lib::and_elim_l(hyp(qp)))},
      {lib::double_negation(hyp(neg(neg(P)))), lib::neg_intro(lib::neg_elim(lib::assume({P, neg(P)}, P), lib::assume({P, neg(P)}, neg(P))), neg(P))},
  };
}

Term random_context(std::mt19937& rng, const Variable& hole, int depth) {
  const Variable x('x', e);
  const std::vector<Term> side{P, Q, var('F', et) * Term::var(x), top(), neg(Q)};
  if (depth == 0) return Term::var(hole);
  const Term inner = random_context(rng, hole, depth - 1);
  const Term s = side[rng() % side.size()];
  switch (rng() % 6) {
    case 0: return neg(inner);
    case 1: return conj(inner, s);
    case 2: return disj(s, inner);
    case 3: return imp(inner, s);
    case 4: return forall(x, inner);
    default: return exists(x, inner);
  }
}

}  // namespace

TEST(FullIntensionality, RandomContexts) {
  std::mt19937 rng(2024);
  const Variable hole('h', t);
  const std::vector<Equivalents> pairs = equivalent_pairs();
  for (int round = 0; round < 40; ++round) {
    const Term ctx = random_context(rng, hole, 1 + static_cast<int>(rng() % 4));
    const Equivalents& pr = pairs[rng() % pairs.size()];
    const Term p = pr.qp.conclusion();
    const Term q = pr.pq.conclusion();
    const Derivation there = lib::subst_equiv(pr.pq, pr.qp, ctx, hole);
    const Derivation back = lib::subst_equiv(pr.qp, pr.pq, ctx, hole);
    const Term cp = lib::replace_free_raw(ctx, hole, p);
    const Term cq = lib::replace_free_raw(ctx, hole, q);
    ASSERT_EQ(there.assumptions().size(), 1u);
    EXPECT_TRUE(alpha_equal(there.assumptions()[0], cp)) << round;
    EXPECT_TRUE(alpha_equal(there.conclusion(), cq)) << round;
    EXPECT_TRUE(alpha_equal(back.assumptions()[0], cq)) << round;
    EXPECT_TRUE(alpha_equal(back.conclusion(), cp)) << round;
    EXPECT_TRUE(check_theorem(theory("LF"), lib::cp(there, cp)).ok) << round;
  }
}

TEST(FullIntensionality, CaptureCase) {
  // G x ⊣⊢ ⊤ → G x under ∀x: the x of the replacement is the bound one
  const Derivation d = lib::library_theorem("subst_equiv_capture");
  EXPECT_TRUE(check_theorem(theory("LF−R.5−R.8−R.9"), d).ok);
  const Term want = read_term("∀F^{et}.∀G^{et}.((∀x^e. G x ∨ F x) → ∀x^e. (⊤ → G x) ∨ F x)");
  EXPECT_TRUE(alpha_equal(d.conclusion(), want));
}
