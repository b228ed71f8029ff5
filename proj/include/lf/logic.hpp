#pragma once

#include <optional>
#include <utility>

#include "lf/notation.hpp"
#include "lf/term.hpp"

// Builders and matchers for the defined connectives. Builders apply the
// definition instance to its arguments without reducing, exactly as the
// elaborator does, so read_term("P → Q") and imp(P, Q) are the same term.
// Matchers accept only that literal shape (up to alpha).
namespace lf::logic {

inline Term var(char letter, const Type& ty, std::uint32_t primes = 0) {
  return Term::var(Variable(letter, ty, primes));
}

Term top();
Term bot();
Term neg(const Term& p);
Term imp(const Term& p, const Term& q);
Term disj(const Term& p, const Term& q);
Term conj(const Term& p, const Term& q);
Term iff(const Term& p, const Term& q);
Term forall(const Variable& x, const Term& body);
Term exists(const Variable& x, const Term& body);
// the quantifier constants applied to a property
Term forall_of(const Term& property);
Term exists_of(const Term& property);
Term eq(const Term& a, const Term& b);
Term neq(const Term& a, const Term& b);
Term box(const Term& p);
Term subset(const Term& f, const Term& g);  // the primitive constant
Term coext(const Term& f, const Term& g);   // ≡ at the relational type of f
Term setminus(const Term& f, const Term& g);
Term zero(const Type& sigma);
Term one(const Type& sigma);
Term plus(const Term& m, const Term& n);
Term nat(const Term& n);  // ℕ_σ n with σ read off the type of n
// ((0 + 1) + 1) ... + 1 with k ones: the numerals the closure clause of ℕ
// produces.
Term numeral(int k, const Type& sigma);
// (1 + 1) ... + 1 with k ≥ 1 ones
Term unit_numeral(int k, const Type& sigma);
Term is_class(const Term& f);  // class_σ F

// For f of type σ1..σn τ and a list of arguments, f a1 .. an.
Term apply(const Term& f, std::initializer_list<Term> args);

using Pair = std::pair<Term, Term>;
std::optional<Term> match_neg(const Term& p);
std::optional<Pair> match_imp(const Term& p);
std::optional<Pair> match_disj(const Term& p);
std::optional<Pair> match_conj(const Term& p);
std::optional<Pair> match_iff(const Term& p);
std::optional<Pair> match_eq(const Term& p);
std::optional<Pair> match_subset(const Term& p);
std::optional<Term> match_box(const Term& p);
// ∀x.B written as ∀_σ (λx.B)
std::optional<std::pair<Variable, Term>> match_forall(const Term& p);
std::optional<std::pair<Variable, Term>> match_exists(const Term& p);
// ℕ_σ n
std::optional<Term> match_nat(const Term& p);

}  // namespace lf::logic
