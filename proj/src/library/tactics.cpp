#include "internal.hpp"

namespace lf::lib {

using namespace logic;

// --- helpers shared by the library ------------------------------------------

bool same(const Term& a, const Term& b) { return a.alpha_hash() == b.alpha_hash() && alpha_equal(a, b); }

Variable fresh(char letter, const Type& type, std::initializer_list<Term> terms, const Context& ctx) {
  std::vector<Variable> avoid;
  for (const Term& t : terms) avoid.insert(avoid.end(), t.free_vars().begin(), t.free_vars().end());
  for (const Term& t : ctx) avoid.insert(avoid.end(), t.free_vars().begin(), t.free_vars().end());
  return fresh_variable(letter, type, avoid);
}

// --- contexts ----------------------------------------------------------------

bool contains(const Context& ctx, const Term& p) {
  return std::any_of(ctx.begin(), ctx.end(), [&](const Term& q) { return same(p, q); });
}

Context merge(const Context& a, const Context& b) {
  Context out;
  for (const Context* c : {&a, &b}) {
    for (const Term& t : *c) {
      if (!contains(out, t)) out.push_back(t);
    }
  }
  return out;
}

Context without(const Context& ctx, const Term& p) {
  Context out;
  for (const Term& t : ctx) {
    if (!same(t, p)) out.push_back(t);
  }
  return out;
}

namespace {

// move the assumption at `from` to `to` by adjacent swaps
Derivation move(Derivation d, std::size_t from, std::size_t to) {
  while (from < to) d = rules::exchange(d, from++);
  while (from > to) d = rules::exchange(d, --from);
  return d;
}

}  // namespace

Derivation align(const Derivation& d, const Context& target) {
  Derivation cur = d;
  // contract duplicates
  for (bool again = true; again;) {
    again = false;
    const Context& g = cur.assumptions();
    for (std::size_t i = 0; i < g.size() && !again; ++i) {
      for (std::size_t j = i + 1; j < g.size() && !again; ++j) {
        if (!same(g[i], g[j])) continue;
        const std::size_t n = g.size();
        cur = move(cur, j, n - 1);
        cur = move(cur, i, n - 2);
        cur = rules::contraction(cur);
        again = true;
      }
    }
  }
  // weaken with whatever is missing (respecting multiplicity in target)
  {
    std::vector<bool> used(cur.assumptions().size(), false);
    for (const Term& t : target) {
      const Context& g = cur.assumptions();
      bool found = false;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i < used.size() && !used[i] && same(g[i], t)) {
          used[i] = found = true;
          break;
        }
      }
      if (!found) {
        cur = rules::weakening(cur, t);
        used.push_back(true);
      }
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) {
        fail(ErrorCode::ContextMismatch, "assumption '" + print(cur.assumptions()[i]) + "' is not in the target context");
      }
    }
  }
  // permute
  for (std::size_t k = 0; k < target.size(); ++k) {
    const Context& g = cur.assumptions();
    std::size_t j = k;
    while (j < g.size() && !same(g[j], target[k])) ++j;
    if (j == g.size()) fail(ErrorCode::ContextMismatch, "could not arrange assumptions");
    cur = move(cur, j, k);
  }
  return cur;
}

Derivation assume(const Context& ctx, const Term& p) {
  return align(rules::hypothesis(without(ctx, p), p), contains(ctx, p) ? ctx : merge(ctx, {p}));
}

std::pair<Derivation, Derivation> unify(const Derivation& a, const Derivation& b) {
  const Context ctx = merge(a.assumptions(), b.assumptions());
  return {align(a, ctx), align(b, ctx)};
}

// --- implication ------------------------------------------------------------------

Derivation conv(const Derivation& d, const Term& q) {
  if (same(d.conclusion(), q)) return d;
  return rules::beta(d, q);
}

Derivation top_intro(const Context& ctx) {
  // (λp.p)p ⊢ (λp.p)p, then generalise on p: ⊢ (λp.p) ⊆ (λp.p), which is ⊤
  const Variable p('p', Type::t());
  const Term id = Term::abs(p, Term::var(p));
  Derivation d = rules::universal_generalization(rules::hypothesis({}, id * Term::var(p)), p);
  d = conv(d, top());
  return align(d, ctx);
}

Derivation modus_ponens(const Derivation& d1, const Derivation& d2) {
  auto pq = match_imp(d2.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "modus ponens: second premise is not an implication");
  const auto& [p, q] = *pq;
  const Context& g = d1.assumptions();
  const Variable r = fresh('r', Type::t(), {p, q}, g);
  const Variable pv = fresh('p', Type::t(), {p, q, Term::var(r)}, g);
  const Term lp = Term::abs(r, p);
  const Term lq = Term::abs(r, q);
  const Derivation a = conv(d1, lp * Term::var(pv));
  const Derivation b = conv(d2, subset(lp, lq));
  const Derivation c = rules::universal_instantiation(b, a);
  return conv(c, q);
}

Derivation conditional_proof(const Derivation& d) {
  const Context& all = d.assumptions();
  if (all.empty()) fail(ErrorCode::ShapeMismatch, "conditional proof: no assumption to discharge");
  const Term p = all.back();
  const Term& q = d.conclusion();
  const Context g(all.begin(), all.end() - 1);
  const Variable r = fresh('r', Type::t(), {p, q}, g);
  const Variable pv = fresh('p', Type::t(), {p, q, Term::var(r)}, g);
  const Term lp = Term::abs(r, p);
  const Term lq = Term::abs(r, q);
  const Term hyp = lp * Term::var(pv);
  Derivation h = conv(rules::hypothesis({}, hyp), p);  // (λr.P)p ⊢ P
  Derivation c = rules::cut(h, d);                      // (λr.P)p, Γ ⊢ Q
  c = move(c, 0, g.size());                             // Γ, (λr.P)p ⊢ Q
  c = conv(c, lq * Term::var(pv));
  Derivation u = rules::universal_generalization(c, pv);
  return conv(u, imp(p, q));
}

Derivation mp(const Derivation& d1, const Derivation& d2) {
  auto [a, b] = unify(d1, d2);
  return modus_ponens(a, b);
}

Derivation cp(const Derivation& d, const Term& p) {
  Context target = without(d.assumptions(), p);
  target.push_back(p);
  return conditional_proof(align(d, target));
}

Derivation ex_falso(const Derivation& d, const Term& p) {
  // ⊥ is (λp.⊤) ⊆ (λp.p); instantiate at P
  const Variable v('p', Type::t());
  const Term k = Term::abs(v, top());
  const Term id = Term::abs(v, Term::var(v));
  const Derivation sub = conv(d, subset(k, id));
  const Derivation kp = conv(top_intro(d.assumptions()), k * p);
  return conv(rules::universal_instantiation(sub, kp), p);
}

Derivation neg_intro(const Derivation& d, const Term& p) { return conv(cp(d, p), neg(p)); }

Derivation neg_elim(const Derivation& d, const Derivation& d_neg) {
  return mp(d, conv(d_neg, imp(d.conclusion(), bot())));
}

Derivation and_intro(const Derivation& d1, const Derivation& d2) {
  // P ∧ Q is ¬(¬¬P → ¬Q)
  const Term& p = d1.conclusion();
  const Term& q = d2.conclusion();
  const Context ctx = merge(d1.assumptions(), d2.assumptions());
  const Term h = imp(neg(neg(p)), neg(q));
  const Derivation nnp = neg_intro(neg_elim(d1, assume(ctx, neg(p))), neg(p));
  const Derivation nq = mp(nnp, assume(ctx, h));
  const Derivation falsum = neg_elim(align(d2, merge(ctx, {h})), nq);
  return conv(neg_intro(falsum, h), conj(p, q));
}

Derivation or_intro_l(const Derivation& d, const Term& q) {
  const Term& p = d.conclusion();
  const Derivation falsum = neg_elim(d, assume(d.assumptions(), neg(p)));
  return conv(cp(ex_falso(falsum, q), neg(p)), disj(p, q));
}

Derivation or_intro_r(const Term& p, const Derivation& d) {
  return conv(cp(d, neg(p)), disj(p, d.conclusion()));
}

Derivation iff_intro(const Derivation& d_pq, const Derivation& d_qp) {
  auto pq = match_imp(d_pq.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "iff_intro: first premise is not an implication");
  return conv(and_intro(d_pq, d_qp), iff(pq->first, pq->second));
}

Derivation excluded_middle(const Term& p) {
  // P ∨ ¬P is ¬P → ¬P
  return conv(cp(rules::hypothesis({}, neg(p)), neg(p)), disj(p, neg(p)));
}

// --- quantifiers -------------------------------------------------------------------

Derivation forall_intro(const Derivation& d, const Variable& x) {
  // Γ, (λy.⊤)x ⊢ (λx.B)x  gives  Γ ⊢ (λy.⊤) ⊆ (λx.B)
  const Term body = d.conclusion();
  const Variable y = fresh('y', x.type, {}, {});
  const Term k = Term::abs(y, top());
  Derivation w = rules::weakening(d, k * Term::var(x));
  w = conv(w, Term::abs(x, body) * Term::var(x));
  return conv(rules::universal_generalization(w, x), forall(x, body));
}

Derivation forall_elim(const Derivation& d, const Term& a) {
  auto all = match_forall(d.conclusion());
  if (!all) fail(ErrorCode::ShapeMismatch, "forall_elim: '" + print(d.conclusion()) + "' is not universal");
  const auto& [x, body] = *all;
  const Variable y = fresh('y', x.type, {}, {});
  const Term k = Term::abs(y, top());
  const Term lam = Term::abs(x, body);
  const Derivation sub = conv(d, subset(k, lam));
  const Derivation ka = conv(top_intro(d.assumptions()), k * a);
  return conv(rules::universal_instantiation(sub, ka), substitute(body, x, a));
}

Derivation forall_elim(const Derivation& d, std::initializer_list<Term> as) {
  Derivation out = d;
  for (const Term& a : as) out = forall_elim(out, a);
  return out;
}

Derivation exists_intro(const Derivation& d, const Variable& x, const Term& body, const Term& a) {
  // ∃x.B is ¬∀y.¬B[y]
  const Context& ctx = d.assumptions();
  const Variable y = fresh('y', x.type, {body, a}, ctx);
  const Term all_not = forall(y, neg(substitute(body, x, Term::var(y))));
  const Derivation inst = forall_elim(assume(ctx, all_not), a);
  const Derivation falsum = neg_elim(d, inst);
  return conv(neg_intro(falsum, all_not), exists(x, body));
}

// --- classical ----------------------------------------------------------------------

Derivation by_contradiction(const Derivation& d, const Term& p) {
  const Derivation dp = ex_falso(d, p);
  Context target = without(dp.assumptions(), neg(p));
  target.push_back(neg(p));
  return rules::negation_elimination(align(dp, target));
}

Derivation double_negation(const Derivation& d) {
  auto nn = match_neg(d.conclusion());
  auto n = nn ? match_neg(*nn) : std::nullopt;
  if (!n) fail(ErrorCode::ShapeMismatch, "double_negation: premise is not ¬¬P");
  const Term p = *n;
  return by_contradiction(neg_elim(assume(d.assumptions(), neg(p)), d), p);
}

Derivation and_elim_l(const Derivation& d) {
  auto pq = match_conj(d.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "and_elim: premise is not a conjunction");
  const auto& [p, q] = *pq;
  // from ¬P: ¬¬P → ¬Q, i.e. ¬P ∨ ¬Q, against ¬(¬P ∨ ¬Q)
  const Context ctx = merge(d.assumptions(), {neg(p)});
  const Derivation clash = neg_elim(assume(ctx, neg(p)), assume(merge(ctx, {neg(neg(p))}), neg(neg(p))));
  const Derivation disj_ = conv(cp(ex_falso(clash, neg(q)), neg(neg(p))), disj(neg(p), neg(q)));
  const Derivation falsum = neg_elim(disj_, conv(align(d, ctx), neg(disj(neg(p), neg(q)))));
  return by_contradiction(falsum, p);
}

Derivation and_elim_r(const Derivation& d) {
  auto pq = match_conj(d.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "and_elim: premise is not a conjunction");
  const auto& [p, q] = *pq;
  const Context ctx = merge(d.assumptions(), {neg(q)});
  const Derivation disj_ = conv(cp(assume(ctx, neg(q)), neg(neg(p))), disj(neg(p), neg(q)));
  const Derivation falsum = neg_elim(disj_, conv(align(d, ctx), neg(disj(neg(p), neg(q)))));
  return by_contradiction(falsum, q);
}

Derivation iff_elim_l(const Derivation& d) {
  auto pq = match_iff(d.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "iff_elim: premise is not a biconditional");
  return and_elim_l(conv(d, conj(imp(pq->first, pq->second), imp(pq->second, pq->first))));
}

Derivation iff_elim_r(const Derivation& d) {
  auto pq = match_iff(d.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "iff_elim: premise is not a biconditional");
  return and_elim_r(conv(d, conj(imp(pq->first, pq->second), imp(pq->second, pq->first))));
}

Derivation or_elim(const Derivation& d, const Derivation& d1, const Derivation& d2) {
  auto pq = match_disj(d.conclusion());
  if (!pq) fail(ErrorCode::ShapeMismatch, "or_elim: premise is not a disjunction");
  const auto& [p, q] = *pq;
  const Term& r = d1.conclusion();
  if (!same(r, d2.conclusion())) fail(ErrorCode::ShapeMismatch, "or_elim: the two cases prove different formulas");
  const Derivation pr = cp(d1, p);
  const Derivation qr = cp(d2, q);
  const Context ctx = merge(merge(d.assumptions(), pr.assumptions()), merge(qr.assumptions(), {neg(r)}));
  // ¬R, P ⊢ ⊥ hence ¬P; then Q by the disjunction, R, and ⊥ again
  const Derivation not_p =
      neg_intro(neg_elim(mp(assume(ctx, p), align(pr, ctx)), assume(ctx, neg(r))), p);
  const Derivation got_q = mp(not_p, conv(align(d, ctx), imp(neg(p), q)));
  const Derivation falsum = neg_elim(mp(got_q, align(qr, ctx)), assume(ctx, neg(r)));
  return by_contradiction(falsum, r);
}

Derivation cases(const Term& p, const Derivation& d1, const Derivation& d2) {
  return or_elim(excluded_middle(p), d1, d2);
}

Derivation exists_elim(const Derivation& d, const Term& goal, const WitnessFn& body, char letter) {
  auto ex = match_exists(d.conclusion());
  if (!ex) fail(ErrorCode::ShapeMismatch, "exists_elim: '" + print(d.conclusion()) + "' is not existential");
  const auto& [x, b] = *ex;
  const Context& ctx = d.assumptions();
  const Variable c = fresh(letter, x.type, {d.conclusion(), goal}, ctx);
  const Term bc = substitute(b, x, Term::var(c));
  const Derivation r = body(assume(ctx, bc), Term::var(c));
  if (!same(r.conclusion(), goal)) {
    fail(ErrorCode::ShapeMismatch, "exists_elim: the witness argument proves '" + print(r.conclusion()) +
                                       "', expected '" + print(goal) + "'");
  }
  const bool to_bot = same(goal, bot());
  // reduce to a proof of ⊥ (adding ¬goal when the goal is not ⊥)
  const Derivation falsum = to_bot ? r : neg_elim(r, assume(merge(r.assumptions(), {neg(goal)}), neg(goal)));
  const Derivation all_not = forall_intro(neg_intro(falsum, bc), c);
  const Term target = forall(c, neg(bc));
  const Derivation contra = neg_elim(conv(all_not, target), conv(d, neg(target)));
  return to_bot ? contra : by_contradiction(contra, goal);
}

}  // namespace lf::lib
