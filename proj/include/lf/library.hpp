#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lf/kernel.hpp"

// Derived rules and the catalog of metatheorems. Everything here is built
// from the kernel's rule constructors, so a result is only as trusted as the
// kernel, and check_theorem re-validates it.
//
// Unless a function says otherwise, premises may carry different assumption
// lists; the result carries their union (in order of first appearance),
// obtained with explicit exchange, contraction and weakening steps.
namespace lf::lib {

using Context = std::vector<Term>;

// --- contexts ---------------------------------------------------------------

bool contains(const Context& ctx, const Term& p);
Context merge(const Context& a, const Context& b);
Context without(const Context& ctx, const Term& p);
// Rearrange d's assumptions into exactly `target` (which must include every
// assumption of d). Throws ContextMismatch otherwise.
Derivation align(const Derivation& d, const Context& target);
// ctx ⊢ p, for p in ctx (or appended when absent).
Derivation assume(const Context& ctx, const Term& p);

// --- R.1–R.4: implication, negation, conjunction, quantifiers ----------------

// R.2 when needed: Γ ⊢ P  to  Γ ⊢ Q.
Derivation conv(const Derivation& d, const Term& q);
Derivation top_intro(const Context& ctx = {});

// The bare trees: contexts must agree exactly (ContextMismatch).
Derivation modus_ponens(const Derivation& d1, const Derivation& d2);
// Γ, P ⊢ Q  /  Γ ⊢ P → Q, with P the last assumption.
Derivation conditional_proof(const Derivation& d);

Derivation mp(const Derivation& d1, const Derivation& d2);
// Discharges P wherever it sits among the assumptions (or vacuously).
Derivation cp(const Derivation& d, const Term& p);
Derivation ex_falso(const Derivation& d, const Term& p);
Derivation neg_intro(const Derivation& d, const Term& p);
Derivation neg_elim(const Derivation& d, const Derivation& d_neg);
Derivation and_intro(const Derivation& d1, const Derivation& d2);
Derivation or_intro_l(const Derivation& d, const Term& q);
Derivation or_intro_r(const Term& p, const Derivation& d);
Derivation iff_intro(const Derivation& d_pq, const Derivation& d_qp);
Derivation excluded_middle(const Term& p);

Derivation forall_intro(const Derivation& d, const Variable& x);
Derivation forall_elim(const Derivation& d, const Term& a);
Derivation forall_elim(const Derivation& d, std::initializer_list<Term> as);
// d proves [a/x]body
Derivation exists_intro(const Derivation& d, const Variable& x, const Term& body, const Term& a);

// --- R.5: classical rules -----------------------------------------------------

// Γ (containing ¬P) ⊢ ⊥  /  Γ∖¬P ⊢ P
Derivation by_contradiction(const Derivation& d, const Term& p);
Derivation double_negation(const Derivation& d);
Derivation and_elim_l(const Derivation& d);
Derivation and_elim_r(const Derivation& d);
Derivation iff_elim_l(const Derivation& d);  // P ↔ Q  /  P → Q
Derivation iff_elim_r(const Derivation& d);  // P ↔ Q  /  Q → P
// d: Γ ⊢ P ∨ Q, d1 proves R from P, d2 proves R from Q
Derivation or_elim(const Derivation& d, const Derivation& d1, const Derivation& d2);
// d1 proves R from P, d2 proves R from ¬P
Derivation cases(const Term& p, const Derivation& d1, const Derivation& d2);

// Existential elimination. `body` receives the hypothesis Γ, [c/x]B ⊢ [c/x]B
// (c a fresh variable, also passed) and returns a derivation of `goal`. For
// goal ⊥ no classical step is used.
using WitnessFn = std::function<Derivation(const Derivation& hyp, const Term& c)>;
Derivation exists_elim(const Derivation& d, const Term& goal, const WitnessFn& body, char letter = 'c');

// --- identity -----------------------------------------------------------------

Derivation eq_refl(const Term& a);
// Leibniz: d_eq proves a = b and d proves [a/x]body; the result proves [b/x]body.
Derivation rewrite(const Derivation& d_eq, const Variable& x, const Term& body, const Derivation& d);
Derivation eq_sym(const Derivation& d);
Derivation eq_trans(const Derivation& d1, const Derivation& d2);
// a = b  /  f a = f b
Derivation congruence(const Derivation& d_eq, const Term& f);

// --- R.6 and modal logic --------------------------------------------------------

// P ⊢ Q and Q ⊢ P, each with exactly that one assumption, give ⊢ P = Q.
Derivation intensional_eq(const Derivation& d1, const Derivation& d2);
// ⊢ P  /  ⊢ □P (the premise must have no assumptions)
Derivation necessitation(const Derivation& d);
Derivation box_t(const Derivation& d);                         // □P / P
Derivation box_k(const Derivation& d_imp, const Derivation& d);  // □(P→Q), □P / □Q
Derivation box_4(const Derivation& d);                         // □P / □□P

// Full intensionality: from P ⊢ Q and Q ⊢ P, R[P] ⊢ R[Q], where R[·] is
// `context` with the free occurrences of the t-variable `hole` replaced
// without renaming, so free variables of P and Q may be captured.
Derivation subst_equiv(const Derivation& d1, const Derivation& d2, const Term& context, const Variable& hole);

// Replace free occurrences of v by r without renaming binders.
Term replace_free_raw(const Term& a, const Variable& v, const Term& r);

// --- named derived rules (as used by scripts) -----------------------------------

struct RuleArgs {
  std::vector<Derivation> premises;
  std::vector<Term> terms;
};
// and_intro, and_elim_l, and_elim_r, or_intro_l, or_intro_r, or_elim, ex_falso,
// neg_intro, neg_elim, neg_elim_classical, iff_intro, iff_elim (iff_elim_l),
// iff_elim_r, forall_intro, forall_elim, exists_intro, exists_elim,
// necessitation, eq_refl, leibniz, eq_sym, eq_trans, subst_equiv, mp, cp,
// box_t, box_k, box_4, by_contradiction, dne, excluded_middle.
// Throws UnknownRule.
Derivation derived_rule(std::string_view name, const RuleArgs& args);
const std::vector<std::string>& derived_rule_names();

// --- numerals ---------------------------------------------------------------------

// ⊢ ℕ_σ n where n = ((0 + 1) + ...) + 1 with k ones. R.1–R.4 only.
Derivation numeral_is_nat(int k, const Type& sigma);
// ⊢ 0_σ + 1_σ = 1_σ, by R.6 on the two unfoldings and R.7 (R.1–R.7).
Derivation zero_plus_one(const Type& sigma);
// ⊢ ℕ_σ n for n = (1 + 1) ... + 1 with k ≥ 1 ones: the closure numeral with
// its leading 0 + 1 rewritten by zero_plus_one.
Derivation unit_numeral_is_nat(int k, const Type& sigma);
// ⊢ (1 + 1) + 1 = 1 + (1 + 1) at (σt)t (R.1–R.7).
Derivation one_assoc(const Type& sigma);
// ⊢ ℕ_σ(1 + (1 + 1)), the numeral 3 as written with right-associated +.
Derivation three_is_nat(const Type& sigma);

// --- catalog ----------------------------------------------------------------------

struct LibraryEntry {
  std::string name;
  std::string theory;     // the theory it is checked under
  std::string statement;  // source text of the conclusion
  std::string summary;
  std::function<Derivation()> build;
};

const std::vector<LibraryEntry>& catalog();
// Throws UnknownTheorem.
const LibraryEntry& library_entry(std::string_view name);
Derivation library_theorem(std::string_view name);

// Lemmas exposed for the slingshot and Henkin demonstrations.
// [D_ι.1 at t, P] ⊢ @P  (the assumption cannot be dropped)
Derivation actuality_from(const Term& p);
// [D_ι.1 at t] ⊢ P ↔ @P
Derivation actuality_iff(const Term& p);
// ⊢ ∀pq.((p ↔ q) → p = q) in LF+HenkinExt
Derivation henkin_extensionality_axiom();
// ⊢ ⊥ from the refutation and the Henkin-derived axiom
Derivation henkin_inconsistency();

}  // namespace lf::lib
