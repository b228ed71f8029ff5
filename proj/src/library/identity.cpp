#include "internal.hpp"

namespace lf::lib {

using namespace logic;

namespace {

Pair require_eq(const Derivation& d, const char* who) {
  auto ab = match_eq(d.conclusion());
  if (!ab) fail(ErrorCode::ShapeMismatch, std::string(who) + ": '" + print(d.conclusion()) + "' is not an identity");
  return *ab;
}

Term require_box(const Derivation& d, const char* who) {
  auto p = match_box(d.conclusion());
  if (!p) fail(ErrorCode::ShapeMismatch, std::string(who) + ": '" + print(d.conclusion()) + "' is not of the form □P");
  return *p;
}

}  // namespace

// --- identity -------------------------------------------------------------------

Derivation eq_refl(const Term& a) {
  // a = a unfolds to (λZ.Za) ⊆ (λZ.Za): hypothesis and generalisation
  const Type pred = Type::fun(a.type(), Type::t());
  const Variable z = fresh('Z', pred, {a}, {});
  const Variable w = fresh('W', pred, {a}, {});
  const Term za = Term::abs(z, Term::var(z) * a);
  const Derivation g = rules::universal_generalization(rules::hypothesis({}, za * Term::var(w)), w);
  return conv(g, eq(a, a));
}

Derivation rewrite(const Derivation& d_eq, const Variable& x, const Term& body, const Derivation& d) {
  const auto [a, b] = require_eq(d_eq, "leibniz");
  if (x.type != a.type()) fail(ErrorCode::TypeMismatch, "leibniz: the variable's type differs from the identity's");
  // unpack a = b to (λZ.Za) ⊆ (λZ.Zb) and instantiate with λx.body
  const Variable z = fresh('Z', Type::fun(a.type(), Type::t()), {a, b}, {});
  const Term za = Term::abs(z, Term::var(z) * a);
  const Term zb = Term::abs(z, Term::var(z) * b);
  const Term c = Term::abs(x, body);
  auto [e1, e2] = unify(conv(d_eq, subset(za, zb)), conv(d, za * c));
  return conv(rules::universal_instantiation(e1, e2), substitute(body, x, b));
}

Derivation eq_sym(const Derivation& d) {
  const auto [a, b] = require_eq(d, "eq_sym");
  const Variable x = fresh('x', a.type(), {a, b}, {});
  return rewrite(d, x, eq(Term::var(x), a), eq_refl(a));
}

Derivation eq_trans(const Derivation& d1, const Derivation& d2) {
  const auto [a, b] = require_eq(d1, "eq_trans");
  const auto [b2, c] = require_eq(d2, "eq_trans");
  if (!same(b, b2)) fail(ErrorCode::ShapeMismatch, "eq_trans: the middle terms differ");
  const Variable x = fresh('x', a.type(), {a, b, c}, {});
  return rewrite(d2, x, eq(a, Term::var(x)), d1);
}

Derivation congruence(const Derivation& d_eq, const Term& f) {
  const auto [a, b] = require_eq(d_eq, "congruence");
  const Variable x = fresh('x', a.type(), {a, b, f}, {});
  return rewrite(d_eq, x, eq(f * a, f * Term::var(x)), eq_refl(f * a));
}

// --- intensionality and the modal operators ----------------------------------------

Derivation intensional_eq(const Derivation& d1, const Derivation& d2) {
  const Term p = d2.conclusion();
  const Term q = d1.conclusion();
  for (const auto& [d, only] : {std::pair{&d1, p}, std::pair{&d2, q}}) {
    for (const Term& a : d->assumptions()) {
      if (!same(a, only)) {
        fail(ErrorCode::NonEmptyContext, "intensionality: '" + to_string(d->sequent()) + "' depends on '" + print(a) +
                                             "' besides '" + print(only) + "'");
      }
    }
  }
  return rules::intensionality(align(d1, {p}), align(d2, {q}));
}

Derivation necessitation(const Derivation& d) {
  if (!d.assumptions().empty()) {
    fail(ErrorCode::NonEmptyContext, "necessitation applies to theorems; '" + to_string(d.sequent()) + "' has assumptions");
  }
  const Term& p = d.conclusion();
  return rules::intensionality(rules::weakening(d, top()), top_intro({p}));
}

Derivation box_t(const Derivation& d) {
  require_box(d, "box_t");
  const Variable x('p', Type::t());
  return rewrite(d, x, Term::var(x), top_intro(d.assumptions()));
}

Derivation box_k(const Derivation& d_imp, const Derivation& d) {
  const Term pq = require_box(d_imp, "box_k");
  const Term p = require_box(d, "box_k");
  auto parts = match_imp(pq);
  if (!parts || !same(parts->first, p)) fail(ErrorCode::ShapeMismatch, "box_k: expected □(P → Q) and □P");
  const Term q = parts->second;
  const Variable x = fresh('p', Type::t(), {p, q}, {});
  // ⊤ = (⊤ → Q)
  const Derivation r1 = rewrite(eq_sym(d), x, eq(top(), imp(Term::var(x), q)), d_imp);
  // (⊤ → Q) = Q
  const Term tq = imp(top(), q);
  const Derivation there = mp(top_intro({tq}), assume({tq}, tq));
  const Derivation back = cp(assume({q}, q), top());
  const Derivation lemma = intensional_eq(there, back);
  return rewrite(lemma, x, eq(top(), Term::var(x)), r1);
}

Derivation box_4(const Derivation& d) {
  const Term p = require_box(d, "box_4");
  const Variable x = fresh('p', Type::t(), {p}, {});
  const Derivation tt = necessitation(necessitation(top_intro()));
  return rewrite(d, x, box(box(Term::var(x))), align(tt, d.assumptions()));
}

// --- full intensionality ---------------------------------------------------------------

Term replace_free_raw(const Term& a, const Variable& v, const Term& r) {
  if (!a.has_free(v)) return a;
  switch (a.kind()) {
    case TermKind::Var:
      return r;
    case TermKind::App:
      return Term::app(replace_free_raw(a.fun(), v, r), replace_free_raw(a.arg(), v, r));
    case TermKind::Abs:
      return Term::abs(a.bound(), replace_free_raw(a.body(), v, r));
    case TermKind::Con:
      break;
  }
  return a;
}

Derivation subst_equiv(const Derivation& d1, const Derivation& d2, const Term& context, const Variable& hole) {
  if (!hole.type.is_t()) fail(ErrorCode::TypeMismatch, "subst_equiv: the hole must be a formula variable");
  const Term p = d2.conclusion();
  const Term q = d1.conclusion();
  // ⊢ P = Q, then close over the free variables with R.7
  Derivation cur = intensional_eq(d1, d2);
  std::vector<Variable> xs = p.free_vars();
  for (const Variable& v : q.free_vars()) {
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
  }
  Term lp = p;
  Term lq = q;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    const Term xv = Term::var(*it);
    cur = conv(cur, eq(Term::abs(*it, lp) * xv, Term::abs(*it, lq) * xv));
    cur = rules::function_extensionality(cur, *it);
    lp = Term::abs(*it, lp);
    lq = Term::abs(*it, lq);
  }
  // the closed terms can be substituted anywhere; V x⃗ marks the hole
  const Variable v = fresh('V', lp.type(), {context, p, q}, {});
  Term applied = Term::var(v);
  for (const Variable& x : xs) applied = applied * Term::var(x);
  const Term marked = replace_free_raw(context, hole, applied);
  const Term rp = replace_free_raw(context, hole, p);
  const Derivation start = conv(rules::hypothesis({}, rp), substitute(marked, v, lp));
  const Derivation moved = rewrite(cur, v, marked, start);
  return conv(moved, replace_free_raw(context, hole, q));
}

}  // namespace lf::lib
