#include <mutex>

#include "internal.hpp"
#include "lf/extensions.hpp"

namespace lf::lib {

using namespace logic;

namespace {

const Type E = Type::e();
const Type T = Type::t();
const Type ET = Type::fun(Type::e(), Type::t());

Term v(const Variable& x) { return Term::var(x); }

Derivation finish(const Derivation& d, std::string_view statement, Extension ext = Extension::Core) {
  return conv(d, read_term(statement, ext));
}

// ⊢ A = (A ∧ ⊤)
Derivation and_top(const Term& a) {
  const Term at = conj(a, top());
  return intensional_eq(and_intro(assume({a}, a), top_intro({a})), and_elim_l(assume({at}, at)));
}

// ⊢ (A ∧ B) = (B ∧ A)
Derivation and_comm(const Term& a, const Term& b) {
  const Term ab = conj(a, b);
  const Term ba = conj(b, a);
  const Derivation there = and_intro(and_elim_r(assume({ab}, ab)), and_elim_l(assume({ab}, ab)));
  const Derivation back = and_intro(and_elim_r(assume({ba}, ba)), and_elim_l(assume({ba}, ba)));
  return intensional_eq(there, back);
}

// ⊢ (A ∧ B) = (A ∧ (A → B))
Derivation and_imp(const Term& a, const Term& b) {
  const Term ab = conj(a, b);
  const Term aab = conj(a, imp(a, b));
  const Derivation h1 = assume({ab}, ab);
  const Derivation there = and_intro(and_elim_l(h1), cp(and_elim_r(h1), a));
  const Derivation h2 = assume({aab}, aab);
  const Derivation back = and_intro(and_elim_l(h2), mp(and_elim_l(h2), and_elim_r(h2)));
  return intensional_eq(there, back);
}

// ⊢ ⊥ ≠ ⊤
Derivation bot_neq_top() {
  const Term bt = eq(bot(), top());
  const Variable p('p', T);
  const Derivation falsum = rewrite(eq_sym(assume({bt}, bt)), p, v(p), top_intro({bt}));
  return conv(neg_intro(falsum, bt), neq(bot(), top()));
}

// --- choice: distinctness is necessary -------------------------------------------

// [x ≠ y] ⊢ □(x ≠ y), using the function that maps y to ⊤ and everything
// else to ⊥
Derivation distinct_box(const Term& x, const Term& y) {
  const Type sigma = x.type();
  const Variable z = fresh('z', sigma, {x, y}, {});
  const Variable q = fresh('q', T, {x, y}, {});
  const Term zt = v(z);
  const Term qt = v(q);
  const Term rel = Term::abs(z, Term::abs(q, conj(imp(neq(zt, y), eq(qt, bot())), imp(eq(zt, y), eq(qt, top())))));

  // ⊢ ∀z.∃q.R z q
  const Term zy = eq(zt, y);
  const Term nzy = neg(zy);
  const Derivation on = [&] {
    const Derivation clash = neg_elim(assume({zy}, zy), conv(assume({zy, neq(zt, y)}, neq(zt, y)), nzy));
    const Derivation body = and_intro(cp(ex_falso(clash, eq(top(), bot())), neq(zt, y)), cp(eq_refl(top()), zy));
    return exists_intro(body, q, rel * zt * qt, top());
  }();
  const Derivation off = [&] {
    const Derivation clash = neg_elim(assume({nzy, zy}, zy), assume({nzy, zy}, nzy));
    const Derivation body = and_intro(cp(eq_refl(bot()), neq(zt, y)), cp(ex_falso(clash, eq(bot(), top())), zy));
    return exists_intro(body, q, rel * zt * qt, bot());
  }();
  const Derivation total = forall_intro(cases(zy, on, off), z);

  const Variable f = fresh('f', Type::fun(sigma, T), {rel, x, y}, {});
  const Term xy = neq(x, y);
  const Derivation ch = align(rules::choice(total, f), {xy});
  const Term goal = box(xy);
  return exists_elim(
      ch, goal,
      [&](const Derivation& h, const Term& g) {
        const Term fx = g * x;
        const Term fy = g * y;
        const Derivation rx = conv(forall_elim(h, x), conj(imp(xy, eq(fx, bot())), imp(eq(x, y), eq(fx, top()))));
        const Derivation fx_bot = mp(assume(h.assumptions(), xy), and_elim_l(rx));
        const Derivation ry = conv(forall_elim(h, y), conj(imp(neq(y, y), eq(fy, bot())), imp(eq(y, y), eq(fy, top()))));
        const Derivation fy_top = mp(eq_refl(y), and_elim_r(ry));
        const Variable w = fresh('p', T, {x, y, g}, {});
        const Derivation s1 = rewrite(eq_sym(fx_bot), w, box(neq(v(w), top())), necessitation(bot_neq_top()));
        const Derivation s2 = rewrite(eq_sym(fy_top), w, box(neq(fx, v(w))), s1);
        // ⊢ f x ≠ f y → x ≠ y
        const Term fxy = neq(fx, fy);
        const Term exy = eq(x, y);
        const Derivation same_val = congruence(assume({fxy, exy}, exy), g);
        const Derivation clash = neg_elim(same_val, conv(assume({fxy, exy}, fxy), neg(eq(fx, fy))));
        const Derivation contra = cp(conv(neg_intro(clash, exy), xy), fxy);
        return box_k(necessitation(contra), s2);
      },
      'f');
}

// --- the description lemma -----------------------------------------------------------

// λq.((A → q = ⊤) ∧ (¬A → q = ⊥))
Term truth_value_of(const Term& a) {
  const Variable q = fresh('q', T, {a}, {});
  return Term::abs(q, conj(imp(a, eq(v(q), top())), imp(neg(a), eq(v(q), bot()))));
}

Term description_of(const Term& a) { return Term::con({ConstantKind::Iota, T}) * truth_value_of(a); }

Term description_axiom() { return axiom_schema("D_ι.1").generate(T); }

// from Γ ⊢ A (resp. Γ ⊢ ¬A): Γ, D_ι.1 ⊢ ι(value of A) = ⊤ (resp. ⊥)
Derivation description_value(const Derivation& d, bool truth) {
  const Term a = truth ? d.conclusion() : *match_neg(d.conclusion());
  const Term pa = truth_value_of(a);
  const Term val = truth ? top() : bot();
  const Context ctx = merge(d.assumptions(), {description_axiom()});
  const Derivation dd = align(d, ctx);
  const Variable z = fresh('z', T, {a}, ctx);
  const Term zt = v(z);
  // P_A val
  Derivation holds = [&] {
    if (truth) {
      const Derivation absurd = neg_elim(dd, assume(merge(ctx, {neg(a)}), neg(a)));
      return and_intro(cp(eq_refl(top()), a), cp(ex_falso(absurd, eq(top(), bot())), neg(a)));
    }
    const Derivation absurd = neg_elim(assume(merge(ctx, {a}), a), dd);
    return and_intro(cp(ex_falso(absurd, eq(bot(), top())), a), cp(eq_refl(bot()), neg(a)));
  }();
  holds = conv(holds, pa * val);
  // ∀z.(P_A z → val = z)
  const Term pz = pa * zt;
  const Derivation hz = conv(assume(merge(ctx, {pz}), pz), conj(imp(a, eq(zt, top())), imp(neg(a), eq(zt, bot()))));
  const Derivation z_val = truth ? mp(dd, and_elim_l(hz)) : mp(dd, and_elim_r(hz));
  const Derivation unique_part = forall_intro(cp(eq_sym(z_val), pz), z);
  const Variable yv = fresh('y', T, {pa}, ctx);
  const Term yb = conj(pa * v(yv), forall(z, imp(pa * zt, eq(v(yv), zt))));
  const Derivation inst = forall_elim(assume(ctx, description_axiom()), pa);
  const Derivation uniq = conv(exists_intro(and_intro(holds, unique_part), yv, yb, val), match_imp(inst.conclusion())->first);
  const Term dsc = description_of(a);
  const Derivation at = conv(mp(uniq, inst), conj(imp(a, eq(dsc, top())), imp(neg(a), eq(dsc, bot()))));
  return truth ? mp(dd, and_elim_l(at)) : mp(dd, and_elim_r(at));
}

// [D_ι.1] ⊢ A ↔ ι(value of A)
Derivation description_iff(const Term& a) {
  const Term dsc = description_of(a);
  const Term ax = description_axiom();
  const Variable p('p', T);
  const Derivation is_top = description_value(assume({a}, a), true);
  const Derivation there = cp(rewrite(eq_sym(is_top), p, v(p), top_intro(is_top.assumptions())), a);
  const Derivation not_a = assume({ax, dsc, neg(a)}, neg(a));
  const Derivation is_bot = description_value(not_a, false);
  const Derivation falsum = rewrite(is_bot, p, v(p), assume(is_bot.assumptions(), dsc));
  const Derivation back = cp(by_contradiction(falsum, a), dsc);
  return align(iff_intro(there, back), {ax});
}

// --- quantified statements ------------------------------------------------------

Derivation converse_barcan_proof() {
  const Variable x('X', ET);
  const Variable z('z', E);
  const Variable y('y', E);
  const Variable w('p', T);
  const Term X = v(x);
  const Term all = forall(z, X * v(z));
  const Term h = box(all);
  const Term xy = X * v(y);
  const Derivation id_all = intensional_eq(and_intro(forall_elim(assume({all}, all), v(y)), assume({all}, all)),
                                           and_elim_r(assume({conj(xy, all)}, conj(xy, all))));
  const Derivation s1 = rewrite(id_all, w, box(v(w)), assume({h}, h));
  const Derivation s2 = rewrite(eq_sym(assume({h}, h)), w, box(conj(xy, v(w))), s1);
  const Derivation s3 = rewrite(eq_sym(and_top(xy)), w, box(v(w)), s2);
  const Derivation body = conv(forall_intro(s3, y), forall(z, box(X * v(z))));
  return forall_intro(cp(body, h), x);
}

Derivation prop_intensionalism_proof() {
  const Variable pv('p', T);
  const Variable qv('q', T);
  const Term p = v(pv);
  const Term q = v(qv);
  const Term h = box(iff(p, q));
  const Variable w('r', T);
  // □(P ↔ Q) ⊢ □(P → Q)
  auto boxed_half = [&](bool left) {
    const Term pq = iff(p, q);
    const Derivation half = left ? iff_elim_l(assume({pq}, pq)) : iff_elim_r(assume({pq}, pq));
    return box_k(necessitation(cp(half, pq)), assume({h}, h));
  };
  // A = (A ∧ B) from □(A → B)
  auto absorb = [&](const Term& a, const Term& b, const Derivation& boxed) {
    const Derivation s = rewrite(boxed, w, eq(a, conj(a, v(w))), and_top(a));
    return eq_trans(s, eq_sym(and_imp(a, b)));
  };
  const Derivation pp = absorb(p, q, boxed_half(true));
  const Derivation qq = eq_trans(absorb(q, p, boxed_half(false)), and_comm(q, p));
  const Derivation pq = eq_trans(pp, eq_sym(qq));
  return forall_intro(forall_intro(cp(pq, h), qv), pv);
}

// A member of X with m + 1 elements: the parts Y ⊆ X, m Y and one c in X ∖ Y.
struct Split {
  Derivation sub;     // Y ⊆ X
  Derivation rest;    // m Y
  Derivation in;      // X c
  Derivation out;     // ¬(Y c)
  Term y;
  Term c;
};

// `letter` names the element; nested splits need distinct letters since the
// continuation mixes in facts from the outer scopes.
Derivation split(const Derivation& d, const Term& m, const Term& x, char letter,
                 const std::function<Derivation(const Split&)>& k) {
  const Type tt = x.type();
  const Variable yv = fresh('Y', tt, {x, m}, d.assumptions());
  const Term Y = v(yv);
  const Derivation opened = conv(d, exists(yv, conj(subset(Y, x), conj(m * Y, one(T) * setminus(x, Y)))));
  return exists_elim(
      opened, bot(),
      [&](const Derivation& h, const Term& y) {
        const Term diff = setminus(x, y);
        const Variable a('a', T);
        const Variable b('b', T);
        const Term body = conj(diff * v(a), forall(b, imp(diff * v(b), eq(v(a), v(b)))));
        const Derivation single = conv(and_elim_r(and_elim_r(h)), exists(a, body));
        return exists_elim(
            single, bot(),
            [&](const Derivation& h2, const Term& c) {
              const Derivation member = conv(and_elim_l(h2), conj(x * c, neg(y * c)));
              return k(Split{and_elim_l(h), and_elim_l(and_elim_r(h)), and_elim_l(member), and_elim_r(member), y, c});
            },
            letter);
      },
      'Y');
}

const Variable kP('p', Type::t());
const Variable kQ('q', Type::t());

Term extensionality_formula() {
  return forall(kP, forall(kQ, imp(iff(v(kP), v(kQ)), eq(v(kP), v(kQ)))));
}

// [∀pq.((p ↔ q) → p = q)] ⊢ ⊥
Derivation refutation_core() {
  const Term ext = extensionality_formula();

  // from Γ ⊢ A (or Γ ⊢ ¬A), Γ, ext ⊢ A = ⊤ (or A = ⊥)
  auto value = [&](const Derivation& d, bool truth) {
    const Context ctx = merge(d.assumptions(), {ext});
    const Term a = truth ? d.conclusion() : *match_neg(d.conclusion());
    const Term val = truth ? top() : bot();
    const Derivation dd = align(d, ctx);
    const Derivation there = truth ? cp(top_intro(ctx), a) : conv(dd, imp(a, bot()));
    const Derivation back = truth ? cp(dd, top()) : cp(ex_falso(assume(merge(ctx, {bot()}), bot()), a), bot());
    return mp(iff_intro(there, back), forall_elim(assume(ctx, ext), {a, val}));
  };

  // u and v share a value but W holds of v and not of u
  auto clash = [&](const Derivation& u_val, const Derivation& v_val, const Derivation& wv, const Derivation& not_wu,
                   const Term& w) {
    const Derivation vu = eq_sym(eq_trans(u_val, eq_sym(v_val)));
    const Variable x = fresh('x', T, {w}, {});
    return neg_elim(rewrite(vu, x, w * v(x), wv), not_wu);
  };

  const Type tt = Type::fun(T, T);
  const Term n3 = numeral(3, T);
  const Term ex3 = exists_of(n3);
  const Variable xv('X', tt);
  const Derivation opened = conv(assume({ext, ex3}, ex3), exists(xv, n3 * v(xv)));

  const Derivation falsum = exists_elim(opened, bot(), [&](const Derivation& h, const Term& x) {
    return split(h, numeral(2, T), x, 'a', [&](const Split& s1) {
      return split(s1.rest, numeral(1, T), s1.y, 'b', [&](const Split& s2) {
        return split(s2.rest, zero(T), s2.y, 'c', [&](const Split& s3) {
          // a ∉ Y1, b ∈ Y1 ∖ Y2, c ∈ Y2 ⊆ Y1
          const Term a = s1.c, b = s2.c, c = s3.c;
          const Term y1 = s1.y, y2 = s2.y;
          const Derivation not_y1_a = s1.out;
          const Derivation y1_b = s2.in;
          const Derivation not_y2_b = s2.out;
          const Derivation y2_c = s3.in;
          const auto [sub, in] = unify(s2.sub, y2_c);
          const Derivation y1_c = rules::universal_instantiation(sub, in);
          auto yes = [&](const Term& t) { return value(assume({t}, t), true); };
          auto no = [&](const Term& t) { return value(assume({neg(t)}, neg(t)), false); };
          const Derivation a_true = cases(
              b, clash(yes(a), yes(b), y1_b, not_y1_a, y1),
              cases(c, clash(yes(a), yes(c), y1_c, not_y1_a, y1), clash(no(b), no(c), y2_c, not_y2_b, y2)));
          const Derivation a_false = cases(
              b, cases(c, clash(yes(b), yes(c), y2_c, not_y2_b, y2), clash(no(a), no(c), y1_c, not_y1_a, y1)),
              clash(no(a), no(b), y1_b, not_y1_a, y1));
          return cases(a, a_true, a_false);
        });
      });
    });
  });
  // ⊥ = ∃3 contradicts R.9 at 3
  const Derivation not_three = neg_intro(falsum, ex3);
  const Derivation as_bot = eq_sym(value(not_three, false));
  const Derivation pot = conv(rules::potential_infinity(conv(numeral_is_nat(3, T), nat(n3))), neg(eq(bot(), ex3)));
  return neg_elim(as_bot, pot);
}

// ⊢ ∃pq.((p ↔ q) ∧ p ≠ q)
Derivation refutation_proof() {
  const Term ext = extensionality_formula();
  const Derivation neg_ext = neg_intro(refutation_core(), ext);
  const Term p = v(kP), q = v(kQ);
  const Term body = conj(iff(p, q), neq(p, q));
  const Term goal = exists(kP, exists(kQ, body));
  const Term ng = neg(goal);
  const Term pq = iff(p, q);
  const Term npq = neg(eq(p, q));
  const Context ctx{ng, pq, npq};
  const Derivation witness = and_intro(assume(ctx, pq), conv(assume(ctx, npq), neq(p, q)));
  const Derivation inner = exists_intro(witness, kQ, body, q);
  const Derivation outer = exists_intro(inner, kP, exists(kQ, body), p);
  const Derivation eq_pq = by_contradiction(neg_elim(outer, assume(ctx, ng)), eq(p, q));
  const Derivation ext_d = forall_intro(forall_intro(cp(eq_pq, pq), kQ), kP);
  return by_contradiction(neg_elim(ext_d, neg_ext), goal);
}

Derivation property_intensionalism_proof() {
  const Variable fv('F', ET);
  const Variable gv('G', ET);
  const Variable z('z', E);
  const Term F = v(fv), G = v(gv), zt = v(z);
  const Term h = box(coext(F, G));
  const Term pointwise = Term::abs(z, iff(F * zt, G * zt));
  const Derivation hb = conv(assume({h}, h), box(forall(z, pointwise * zt)));
  const Derivation each = mp(hb, forall_elim(converse_barcan_proof(), pointwise));
  const Derivation at_z = conv(forall_elim(each, zt), box(iff(F * zt, G * zt)));
  const Derivation same_z = mp(at_z, forall_elim(prop_intensionalism_proof(), {F * zt, G * zt}));
  const Derivation fg = rules::function_extensionality(same_z, z);
  return forall_intro(forall_intro(cp(fg, h), gv), fv);
}

Derivation barcan_proof() {
  const Variable x('X', ET);
  const Variable z('z', E);
  const Variable y('y', E);
  const Term X = v(x), zt = v(z);
  const Term h = forall(z, box(X * zt));
  const Term always = Term::abs(y, top());
  const Derivation xz = conv(eq_sym(forall_elim(assume({h}, h), zt)), eq(X * zt, always * zt));
  const Derivation fe = rules::function_extensionality(xz, z);
  const Derivation trivial = necessitation(forall_intro(conv(top_intro(), always * zt), z));
  const Variable w = fresh('W', ET, {X}, {});
  const Derivation moved = rewrite(eq_sym(fe), w, box(forall(z, v(w) * zt)), trivial);
  return forall_intro(cp(moved, h), x);
}

Derivation s5_proof() {
  const Variable pv('p', T);
  const Term p = v(pv);
  const Term bp = box(p);
  const Term nbp = neg(bp);
  const Term pt = eq(p, top());
  // ¬□p ⊢ p ≠ ⊤
  const Derivation swapped = eq_sym(assume({nbp, pt}, pt));
  const Derivation p_not_top = conv(neg_intro(neg_elim(conv(swapped, bp), assume({nbp, pt}, nbp)), pt), neq(p, top()));
  const Derivation boxed = mp(p_not_top, cp(distinct_box(p, top()), neq(p, top())));
  // ⊢ p ≠ ⊤ → ¬□p
  const Term pnt = neq(p, top());
  const Derivation back = conv(eq_sym(assume({pnt, bp}, bp)), pt);
  const Derivation lemma = cp(neg_intro(neg_elim(back, conv(assume({pnt, bp}, pnt), neg(pt))), bp), pnt);
  return forall_intro(cp(box_k(necessitation(lemma), boxed), nbp), pv);
}

Derivation nec_identity_proof() {
  const Variable xv('x', E);
  const Variable yv('y', E);
  const Term x = v(xv), y = v(yv);
  const Variable w('z', E);
  const Derivation moved = rewrite(assume({eq(x, y)}, eq(x, y)), w, box(eq(x, v(w))), necessitation(eq_refl(x)));
  return forall_intro(forall_intro(cp(moved, eq(x, y)), yv), xv);
}

Derivation nec_distinctness_proof() {
  const Variable xv('x', E);
  const Variable yv('y', E);
  const Term x = v(xv), y = v(yv);
  return forall_intro(forall_intro(cp(distinct_box(x, y), neq(x, y)), yv), xv);
}

Derivation class_comprehension_proof() {
  const Variable xv('X', ET);
  const Variable yv('y', E);
  const Variable zv('z', E);
  const Term X = v(xv);
  const Term xy = X * v(yv);
  const Term w = Term::abs(yv, description_of(xy));
  const Term wy = w * v(yv);
  const Derivation on = or_intro_l(conv(description_value(assume({xy}, xy), true), eq(wy, top())), eq(wy, bot()));
  const Derivation off = or_intro_r(eq(wy, top()), conv(description_value(assume({neg(xy)}, neg(xy)), false), eq(wy, bot())));
  const Derivation cls = conv(forall_intro(cases(xy, on, off), yv), is_class(w));
  const Term xz = X * v(zv);
  const Derivation co = conv(forall_intro(conv(description_iff(xz), iff(xz, w * v(zv))), zv), coext(X, w));
  const Variable cv('Y', ET);
  const Derivation ex = exists_intro(and_intro(cls, co), cv, conj(is_class(v(cv)), coext(X, v(cv))), w);
  return forall_intro(ex, xv);
}

Derivation alpha_iff_top_proof() {
  const Variable pv('p', T);
  const Term p = v(pv);
  const Term at_p = read_term("@p", Extension::Iota);
  const Derivation all = forall_intro(conv(description_iff(p), iff(p, at_p)), pv);
  const Term alpha = read_term("α", Extension::Iota);
  const Derivation a = conv(all, alpha);
  return iff_intro(cp(top_intro(a.assumptions()), alpha), cp(a, top()));
}

Derivation class_extensionality_proof() {
  const Variable xv('X', ET);
  const Variable yv('Y', ET);
  const Variable zv('z', E);
  const Variable uv('u', E);
  const Variable p('p', T);
  const Term X = v(xv), Y = v(yv), z = v(zv);
  const Term cx = is_class(X), cy = is_class(Y), co = coext(X, Y);
  const Context ctx{cx, cy, co};
  auto values = [&](const Term& f, const Term& cf) {
    const Term fu = f * v(uv);
    const Derivation all = conv(assume(ctx, cf), forall(uv, disj(eq(fu, top()), eq(fu, bot()))));
    return forall_elim(all, z);
  };
  const Term xz = X * z, yz = Y * z;
  const Derivation iff_z = forall_elim(conv(assume(ctx, co), forall(uv, iff(X * v(uv), Y * v(uv)))), z);
  const Term goal = eq(xz, yz);
  auto h = [&](const Term& f) { return assume(ctx, f); };
  const Term xt = eq(xz, top()), xf = eq(xz, bot()), yt = eq(yz, top()), yf = eq(yz, bot());
  const Derivation x_true = or_elim(
      values(Y, cy), eq_trans(h(xt), eq_sym(h(yt))),
      ex_falso(rewrite(h(yf), p, v(p), mp(rewrite(eq_sym(h(xt)), p, v(p), top_intro(ctx)), iff_elim_l(iff_z))), goal));
  const Derivation x_false = or_elim(
      values(Y, cy),
      ex_falso(rewrite(h(xf), p, v(p), mp(rewrite(eq_sym(h(yt)), p, v(p), top_intro(ctx)), iff_elim_r(iff_z))), goal),
      eq_trans(h(xf), eq_sym(h(yf))));
  const Derivation pointwise = or_elim(values(X, cx), x_true, x_false);
  const Derivation fe = rules::function_extensionality(align(pointwise, ctx), zv);
  return forall_intro(cp(forall_intro(cp(cp(fe, co), cy), yv), cx), xv);
}

Derivation peirce_proof() {
  const Variable pv('p', T), qv('q', T);
  const Term p = v(pv), q = v(qv);
  const Term h = imp(imp(p, q), p);
  const Context ctx{h, neg(p)};
  const Derivation pq = cp(ex_falso(neg_elim(assume(merge(ctx, {p}), p), assume(ctx, neg(p))), q), p);
  const Derivation falsum = neg_elim(mp(pq, assume(ctx, h)), assume(ctx, neg(p)));
  return forall_intro(forall_intro(cp(by_contradiction(falsum, p), h), qv), pv);
}

Derivation dne_proof() {
  const Variable pv('p', T);
  const Term p = v(pv);
  const Term nnp = neg(neg(p));
  return forall_intro(cp(double_negation(assume({nnp}, nnp)), nnp), pv);
}

Derivation de_morgan_proof() {
  const Variable pv('p', T), qv('q', T);
  const Term p = v(pv), q = v(qv);
  const Term nc = neg(conj(p, q));
  const Term dn = disj(neg(p), neg(q));
  // ¬(p ∧ q) ⊢ ¬p ∨ ¬q by cases on p
  const Derivation with_p = or_intro_r(
      neg(p), neg_intro(neg_elim(and_intro(assume({nc, p, q}, p), assume({nc, p, q}, q)), assume({nc, p, q}, nc)), q));
  const Derivation without_p = or_intro_l(assume({nc, neg(p)}, neg(p)), neg(q));
  const Derivation there = cp(cases(p, with_p, without_p), nc);
  // ¬p ∨ ¬q ⊢ ¬(p ∧ q)
  const Term pq = conj(p, q);
  const Derivation left = neg_intro(neg_elim(and_elim_l(assume({dn, neg(p), pq}, pq)), assume({dn, neg(p), pq}, neg(p))), pq);
  const Derivation right = neg_intro(neg_elim(and_elim_r(assume({dn, neg(q), pq}, pq)), assume({dn, neg(q), pq}, neg(q))), pq);
  const Derivation back = cp(or_elim(assume({dn}, dn), left, right), dn);
  return forall_intro(forall_intro(iff_intro(there, back), qv), pv);
}

Derivation modus_ponens_proof() {
  const Variable pv('p', T), qv('q', T);
  const Term p = v(pv), q = v(qv);
  const Context ctx{p, imp(p, q)};
  const Derivation d = modus_ponens(assume(ctx, p), assume(ctx, imp(p, q)));
  const Derivation closed = conditional_proof(conditional_proof(d));
  return forall_intro(forall_intro(closed, qv), pv);
}

Derivation conditional_proof_proof() {
  const Variable pv('p', T), qv('q', T);
  const Term p = v(pv), q = v(qv);
  const Derivation d = rules::weakening(rules::hypothesis({}, p), q);
  return forall_intro(forall_intro(conditional_proof(conditional_proof(d)), qv), pv);
}

Derivation leibniz_proof() {
  const Variable fv('X', ET);
  const Variable xv('x', E), yv('y', E), zv('z', E);
  const Term X = v(fv), x = v(xv), y = v(yv);
  const Term e = eq(x, y);
  const Derivation moved = rewrite(assume({e}, e), zv, X * v(zv), assume({e, X * x}, X * x));
  return forall_intro(forall_intro(forall_intro(cp(cp(moved, X * x), e), yv), xv), fv);
}

Derivation eq_refl_proof() {
  const Variable xv('x', E);
  return forall_intro(eq_refl(v(xv)), xv);
}

Derivation quantifier_proof() {
  const Variable fv('X', ET);
  const Variable xv('x', E), yv('y', E);
  const Term X = v(fv);
  const Term all = forall(xv, X * v(xv));
  const Derivation inst = forall_elim(assume({all}, all), v(yv));
  return forall_intro(forall_intro(cp(inst, all), yv), fv);
}

Derivation subst_capture_proof() {
  // P = G x and Q = ⊤ → G x, placed under ∀x so that x is captured
  const Variable fv('F', ET), gv('G', ET);
  const Variable xv('x', E);
  const Variable hole('h', T);
  const Term gx = v(gv) * v(xv);
  const Term tg = imp(top(), gx);
  const Derivation pq = cp(assume({gx}, gx), top());
  const Derivation qp = mp(top_intro({tg}), assume({tg}, tg));
  const Term context = forall(xv, disj(v(hole), v(fv) * v(xv)));
  const Derivation moved = subst_equiv(pq, qp, context, hole);
  const Term before = replace_free_raw(context, hole, gx);
  return forall_intro(forall_intro(cp(moved, before), gv), fv);
}

Derivation s4_k_proof() {
  const Variable pv('p', T), qv('q', T);
  const Term p = v(pv), q = v(qv);
  const Term bi = box(imp(p, q));
  const Term bp = box(p);
  const Derivation k = box_k(assume({bi, bp}, bi), assume({bi, bp}, bp));
  return forall_intro(forall_intro(cp(cp(k, bp), bi), qv), pv);
}

Derivation s4_t_proof() {
  const Variable pv('p', T);
  const Term bp = box(v(pv));
  return forall_intro(cp(box_t(assume({bp}, bp)), bp), pv);
}

Derivation s4_4_proof() {
  const Variable pv('p', T);
  const Term bp = box(v(pv));
  return forall_intro(cp(box_4(assume({bp}, bp)), bp), pv);
}

std::vector<LibraryEntry> make_catalog() {
  auto entry = [](std::string name, std::string theory, std::string statement, std::string summary,
                  std::function<Derivation()> proof, Extension ext = Extension::Core) {
    const std::string st = statement;
    return LibraryEntry{std::move(name), std::move(theory), std::move(statement), std::move(summary),
                        [proof, st, ext] { return finish(proof(), st, ext); }};
  };
  const std::string r1_4 = "LF−R.5−R.6−R.7−R.8−R.9";
  const std::string r1_5 = "LF−R.6−R.7−R.8−R.9";
  const std::string r1_7 = "LF−R.8−R.9";
  return {
      entry("modus_ponens", r1_4, "∀pq.(p → (p → q) → q)", "modus ponens, closed by conditional proof",
            modus_ponens_proof),
      entry("conditional_proof", r1_4, "∀pq.(p → q → p)", "conditional proof over a weakened hypothesis",
            conditional_proof_proof),
      entry("leibniz", r1_4, "∀X^{et}.∀xy^e.(x = y → X x → X y)", "indiscernibility of identicals", leibniz_proof),
      entry("eq_refl", r1_4, "∀x^e. x = x", "reflexivity of identity", eq_refl_proof),
      entry("forall_elim", r1_4, "∀X^{et}.∀y^e.((∀x. X x) → X y)", "universal instantiation and generalisation",
            quantifier_proof),
      entry("subst_equiv_capture", "LF−R.5−R.8−R.9",
            "∀F^{et}.∀G^{et}.((∀x^e. G x ∨ F x) → ∀x^e. (⊤ → G x) ∨ F x)",
            "substitution of equivalents under a binder that captures x", subst_capture_proof),
      entry("peirce", r1_5, "∀pq.(((p → q) → p) → p)", "Peirce's law", peirce_proof),
      entry("double_neg_elim", r1_5, "∀p.(¬¬p → p)", "double negation elimination", dne_proof),
      entry("de_morgan", r1_5, "∀pq.(¬(p ∧ q) ↔ (¬p ∨ ¬q))", "De Morgan for conjunction", de_morgan_proof),
      entry("necessitation_top", "LF−R.5−R.7−R.8−R.9", "□⊤", "necessitation of ⊤",
            [] { return necessitation(top_intro()); }),
      entry("s4_K", r1_7, "∀pq.(□(p → q) → □p → □q)", "distribution of □ over →", s4_k_proof),
      entry("s4_T", r1_7, "∀p.(□p → p)", "what is necessary is true", s4_t_proof),
      entry("s4_4", r1_7, "∀p.(□p → □□p)", "positive introspection", s4_4_proof),
      entry("s5_axiom", "LF−R.9", "∀p.(¬□p → □¬□p)", "negative introspection, by choice", s5_proof),
      entry("nec_identity", "LF−R.5−R.7−R.8−R.9", "∀xy^e.(x = y → □(x = y))",
            "identity is necessary", nec_identity_proof),
      entry("nec_distinctness", "LF−R.7−R.9", "∀xy^e.(x ≠ y → □(x ≠ y))", "distinctness is necessary",
            nec_distinctness_proof),
      entry("barcan_len1", r1_7, "∀X^{et}.((∀z. □X z) → □∀z. X z)", "Barcan formula at e",
            barcan_proof),
      entry("converse_barcan_len1", r1_7, "∀X^{et}.((□∀z. X z) → ∀z. □X z)", "converse Barcan formula at e",
            converse_barcan_proof),
      entry("prop_intensionalism", r1_7, "∀pq.(□(p ↔ q) → p = q)", "necessarily equivalent propositions are identical",
            prop_intensionalism_proof),
      entry("property_intensionalism_len1", r1_7, "∀FG^{et}.(□(F ≡ G) → F = G)",
            "necessarily coextensive properties are identical", property_intensionalism_proof),
      entry("refute_extensionality", "LF−R.6−R.7−R.8", "∃pq.((p ↔ q) ∧ p ≠ q)",
            "some materially equivalent propositions differ", refutation_proof),
      entry("class_comprehension_ι", "LF_ι", "∀X^{et}. ∃Y ∈ class_e. X ≡ Y",
            "every property is coextensive with a class", class_comprehension_proof, Extension::Iota),
      entry("class_extensionality", "LF", "∀XY ∈ class_e. (X ≡ Y → X = Y)", "coextensive classes are identical",
            class_extensionality_proof),
      entry("alpha_iff_top_ι", "LF_ι", "α ↔ ⊤", "the actuality principle holds", alpha_iff_top_proof,
            Extension::Iota),
  };
}

}  // namespace

const std::vector<LibraryEntry>& catalog() {
  static const std::vector<LibraryEntry> entries = make_catalog();
  return entries;
}

const LibraryEntry& library_entry(std::string_view name) {
  for (const LibraryEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  // ASCII spellings of the ι suffix
  if (name.size() > 5 && name.substr(name.size() - 5) == "_iota") {
    return library_entry(std::string(name.substr(0, name.size() - 5)) + "_ι");
  }
  fail(ErrorCode::UnknownTheorem, "no library theorem named '" + std::string(name) + "'");
}

Derivation library_theorem(std::string_view name) { return library_entry(name).build(); }

Derivation actuality_from(const Term& p) {
  const Derivation there = iff_elim_l(description_iff(p));
  const Derivation d = mp(assume(merge(there.assumptions(), {p}), p), there);
  return conv(d, instantiate_def("@", {}, Extension::Iota) * p);
}

Derivation actuality_iff(const Term& p) {
  return conv(description_iff(p), iff(p, instantiate_def("@", {}, Extension::Iota) * p));
}

Derivation henkin_extensionality_axiom() {
  const Term p = v(kP), q = v(kQ);
  const Term pq = iff(p, q);
  const Derivation d1 = mp(assume({pq, p}, p), iff_elim_l(assume({pq, p}, pq)));
  const Derivation d2 = mp(assume({pq, q}, q), iff_elim_r(assume({pq, q}, pq)));
  const Derivation e = rules::henkin_extensionality(align(d1, {pq, p}), align(d2, {pq, q}));
  return forall_intro(forall_intro(cp(e, pq), kQ), kP);
}

Derivation henkin_inconsistency() {
  const Derivation ext = henkin_extensionality_axiom();
  const Derivation some = refutation_proof();
  return exists_elim(some, bot(), [&](const Derivation& h1, const Term& c1) {
    return exists_elim(h1, bot(), [&](const Derivation& h2, const Term& c2) {
      const Derivation same_val = mp(and_elim_l(h2), forall_elim(ext, {c1, c2}));
      return neg_elim(same_val, conv(and_elim_r(h2), neg(eq(c1, c2))));
    });
  });
}

}  // namespace lf::lib
