#include "internal.hpp"

namespace lf::lib {

using namespace logic;

Derivation numeral_is_nat(int k, const Type& sigma) {
  if (k < 0) fail(ErrorCode::ShapeMismatch, "numeral_is_nat: negative numeral");
  // the numerals live at (σt)t; ℕ n is ∀X.(X0 → X ⊆ λy.X(y + 1) → Xn)
  const Type num = Type::fun(Type::fun(sigma, Type::t()), Type::t());
  const Variable x('X', Type::fun(num, Type::t()));
  const Variable y('y', num);
  const Term X = Term::var(x);
  const Term base = X * zero(sigma);
  const Term step = subset(X, Term::abs(y, X * plus(Term::var(y), one(sigma))));
  const Context ctx{base, step};
  Derivation cur = assume(ctx, base);
  Term n = zero(sigma);
  for (int i = 0; i < k; ++i) {
    cur = rules::universal_instantiation(assume(ctx, step), cur);
    n = plus(n, one(sigma));
    cur = conv(cur, X * n);
  }
  const Derivation closed = forall_intro(cp(cp(cur, step), base), x);
  return conv(closed, nat(n));
}

Derivation zero_plus_one(const Type& sigma) {
  const Type prop = Type::fun(sigma, Type::t());
  const Variable xv('X', prop);
  const Variable yv('Y', prop);
  const Variable a('y', sigma);
  const Variable b('z', sigma);
  const Term X = Term::var(xv);
  const Term lhs = plus(zero(sigma), one(sigma)) * X;
  const Term rhs = one(sigma) * X;
  // 1 F unfolded with the letters above
  auto single = [&](const Term& f) {
    return exists(a, conj(f * Term::var(a), forall(b, imp(f * Term::var(b), eq(Term::var(a), Term::var(b))))));
  };

  // 0 + 1 ⊢ 1: the part outside the empty Y is all of X
  const Derivation opened = conv(assume({lhs}, lhs), exists(yv, conj(subset(Term::var(yv), X),
                                                                     conj(zero(sigma) * Term::var(yv),
                                                                          one(sigma) * setminus(X, Term::var(yv))))));
  const Derivation there = exists_elim(opened, rhs, [&](const Derivation& h, const Term& y) {
    const Derivation empty = conv(and_elim_l(and_elim_r(h)), neg(exists_of(y)));
    const Term rest = setminus(X, y);
    const Derivation one_rest = conv(and_elim_r(and_elim_r(h)), single(rest));
    return exists_elim(one_rest, rhs, [&](const Derivation& h2, const Term& c) {
      const Derivation xc = and_elim_l(conv(and_elim_l(h2), conj(X * c, neg(y * c))));
      const Variable z = fresh('z', sigma, {X, y, c}, h2.assumptions());
      const Term zt = Term::var(z);
      const Derivation yz = assume(merge(h2.assumptions(), {X * zt, y * zt}), y * zt);
      const Derivation some = exists_intro(yz, z, y * zt, zt);
      const Derivation not_yz = neg_intro(neg_elim(conv(some, exists_of(y)), empty), y * zt);
      const Derivation rz = conv(and_intro(assume(h2.assumptions(), X * zt), not_yz), rest * zt);
      const Derivation cz = mp(rz, forall_elim(and_elim_r(h2), zt));
      const Derivation all = forall_intro(cp(cz, X * zt), z);
      const Term body = conj(X * Term::var(a), forall(b, imp(X * Term::var(b), eq(Term::var(a), Term::var(b)))));
      return conv(exists_intro(and_intro(xc, conv(all, forall(b, imp(X * Term::var(b), eq(c, Term::var(b)))))), a, body, c),
                  rhs);
    });
  });

  // 1 ⊢ 0 + 1 with the empty property as the 0 part
  const Variable w('w', sigma);
  const Term none = Term::abs(w, bot());
  const Variable u = fresh('u', sigma, {X}, {});
  const Term ut = Term::var(u);
  const Derivation sub = rules::universal_generalization(
      conv(ex_falso(conv(assume({rhs, none * ut}, none * ut), bot()), X * ut), X * ut), u);
  const Derivation no_none = [&] {
    const Term ex = exists_of(none);
    const Derivation d = exists_elim(conv(assume({ex}, ex), exists(w, none * Term::var(w))), bot(),
                                     [&](const Derivation& h, const Term&) { return conv(h, bot()); });
    return conv(neg_intro(d, ex), zero(sigma) * none);
  }();
  const Term rest = setminus(X, none);
  const Derivation one_rest = exists_elim(conv(assume({rhs}, rhs), single(X)), one(sigma) * rest,
                                          [&](const Derivation& h, const Term& c) {
    const Derivation not_none = neg_intro(conv(assume(merge(h.assumptions(), {none * c}), none * c), bot()), none * c);
    const Derivation rc = conv(and_intro(and_elim_l(h), not_none), rest * c);
    const Variable z = fresh('z', sigma, {X, c}, h.assumptions());
    const Term zt = Term::var(z);
    const Derivation xz = and_elim_l(conv(assume(merge(h.assumptions(), {rest * zt}), rest * zt), conj(X * zt, neg(none * zt))));
    const Derivation cz = mp(xz, forall_elim(and_elim_r(h), zt));
    const Derivation all = forall_intro(cp(cz, rest * zt), z);
    const Term body = conj(rest * Term::var(a), forall(b, imp(rest * Term::var(b), eq(Term::var(a), Term::var(b)))));
    return conv(exists_intro(and_intro(rc, conv(all, forall(b, imp(rest * Term::var(b), eq(c, Term::var(b)))))), a, body, c),
                one(sigma) * rest);
  });
  const Term packed = conj(subset(Term::var(yv), X), conj(zero(sigma) * Term::var(yv), one(sigma) * setminus(X, Term::var(yv))));
  const Derivation back = conv(exists_intro(and_intro(sub, and_intro(no_none, one_rest)), yv, packed, none), lhs);

  const Derivation pointwise = intensional_eq(there, back);
  return rules::function_extensionality(pointwise, xv);
}

Derivation unit_numeral_is_nat(int k, const Type& sigma) {
  if (k < 1) fail(ErrorCode::ShapeMismatch, "unit_numeral_is_nat: k must be at least 1");
  const Type num = Type::fun(Type::fun(sigma, Type::t()), Type::t());
  const Variable w('n', num);
  Term body = Term::var(w);
  for (int i = 1; i < k; ++i) body = plus(body, one(sigma));
  return rewrite(zero_plus_one(sigma), w, nat(body), numeral_is_nat(k, sigma));
}

namespace {

Term v(const Variable& x) { return Term::var(x); }

// ∃Y.(Y ⊆ X ∧ mY ∧ n(X ∖ Y)), the unfolding of (m + n) X
Term sum_open(const Term& m, const Term& n, const Term& x, const Variable& y) {
  return exists(y, conj(subset(v(y), x), conj(m * v(y), n * setminus(x, v(y)))));
}

struct Parts {
  Derivation sub, first, rest;
};

Parts parts(const Derivation& h) { return {and_elim_l(h), and_elim_l(and_elim_r(h)), and_elim_r(and_elim_r(h))}; }

// Γ ⊢ 1P   Δ ⊢ ∀z.(Pz ↔ Qz)  /  Γ, Δ ⊢ 1Q
Derivation transfer_one(const Derivation& d_one, const Derivation& d_iff, const Term& p, const Term& q) {
  const Type sigma = p.type().domain();
  const Variable a('y', sigma);
  const Variable b('z', sigma);
  auto single = [&](const Term& f) { return exists(a, conj(f * v(a), forall(b, imp(f * v(b), eq(v(a), v(b)))))); };
  const Term goal = one(sigma) * q;
  return exists_elim(conv(d_one, single(p)), goal, [&](const Derivation& h, const Term& c) {
    const Context ctx = merge(h.assumptions(), d_iff.assumptions());
    const Derivation qc = mp(and_elim_l(h), iff_elim_l(forall_elim(d_iff, c)));
    const Variable z = fresh('z', sigma, {p, q, c}, ctx);
    const Term zt = v(z);
    const Derivation pz = mp(assume(merge(ctx, {q * zt}), q * zt), iff_elim_r(forall_elim(d_iff, zt)));
    const Derivation cz = mp(pz, forall_elim(and_elim_r(h), zt));
    const Derivation all = forall_intro(cp(cz, q * zt), z);
    const Term body = conj(q * v(a), forall(b, imp(q * v(b), eq(v(a), v(b)))));
    return conv(exists_intro(and_intro(qc, conv(all, forall(b, imp(q * v(b), eq(c, v(b)))))), a, body, c), goal);
  });
}

// ctx ⊢ ∀z.(Pz ↔ Qz) from the two directions at a fresh z
Derivation pointwise_iff(const Context& ctx, const Term& p, const Term& q,
                         const std::function<Derivation(const Term&, const Context&)>& fwd,
                         const std::function<Derivation(const Term&, const Context&)>& back) {
  const Variable z = fresh('z', p.type().domain(), {p, q}, ctx);
  const Term zt = v(z);
  const Derivation there = cp(fwd(zt, merge(ctx, {p * zt})), p * zt);
  const Derivation again = cp(back(zt, merge(ctx, {q * zt})), q * zt);
  return forall_intro(iff_intro(there, again), z);
}

// ctx ⊢ F ⊆ G from ctx, F z ⊢ G z
Derivation subset_intro(const Context& ctx, const Term& f, const Term& g,
                        const std::function<Derivation(const Term&, const Context&)>& body) {
  const Variable z = fresh('z', f.type().domain(), {f, g}, ctx);
  const Term zt = v(z);
  const Context with = merge(ctx, {f * zt});
  return rules::universal_generalization(align(conv(body(zt, with), g * zt), with), z);
}

Derivation ui(const Derivation& d_sub, const Derivation& d) {
  auto [a, b] = unify(d_sub, d);
  return rules::universal_instantiation(a, b);
}

}  // namespace

Derivation one_assoc(const Type& sigma) {
  const Type prop = Type::fun(sigma, Type::t());
  const Variable zv('Z', prop);
  const Variable yv('Y', prop);
  const Variable wv('W', prop);
  const Term Z = v(zv);
  const Term I = one(sigma);
  const Term II = plus(I, I);
  const Term lhs = plus(II, I) * Z;
  const Term rhs = plus(I, II) * Z;

  // (1 + 1) + 1 ⊢ 1 + (1 + 1): Z = Y + c with Y = W + b; regroup as W + (Y ∖ W + c)
  const Derivation there = exists_elim(conv(assume({lhs}, lhs), sum_open(II, I, Z, yv)), rhs, [&](const Derivation& h, const Term& Y) {
    const Parts outer = parts(h);
    const Derivation two = conv(outer.first, sum_open(I, I, Y, wv));
    return exists_elim(two, rhs, [&](const Derivation& h2, const Term& W) {
      const Parts inner = parts(h2);
      const Context ctx = merge(h2.assumptions(), h.assumptions());
      const Term V = setminus(Y, W);
      const Term ZW = setminus(Z, W);
      const Derivation w_z = subset_intro(ctx, W, Z, [&](const Term& z, const Context& c) {
        return ui(align(outer.sub, c), ui(align(inner.sub, c), assume(c, W * z)));
      });
      const Derivation v_sub = subset_intro(ctx, V, ZW, [&](const Term& z, const Context& c) {
        const Derivation vz = conv(assume(c, V * z), conj(Y * z, neg(W * z)));
        return conv(and_intro(ui(outer.sub, and_elim_l(vz)), and_elim_r(vz)), ZW * z);
      });
      // (Z ∖ Y) z ↔ ((Z ∖ W) ∖ V) z, given W ⊆ Y
      const Term R1 = setminus(Z, Y);
      const Term R2 = setminus(ZW, V);
      const Derivation same = pointwise_iff(
          ctx, R1, R2,
          [&](const Term& z, const Context& c) {
            const Derivation r = conv(assume(c, R1 * z), conj(Z * z, neg(Y * z)));
            const Derivation not_w = neg_intro(neg_elim(ui(inner.sub, assume(merge(c, {W * z}), W * z)), and_elim_r(r)), W * z);
            const Term yw = conj(Y * z, neg(W * z));
            const Derivation not_v = neg_intro(neg_elim(and_elim_l(assume(merge(c, {yw}), yw)), and_elim_r(r)), yw);
            return conv(and_intro(and_intro(and_elim_l(r), not_w), not_v), R2 * z);
          },
          [&](const Term& z, const Context& c) {
            const Derivation r = conv(assume(c, R2 * z), conj(conj(Z * z, neg(W * z)), neg(conj(Y * z, neg(W * z)))));
            const Derivation yz = assume(merge(c, {Y * z}), Y * z);
            const Derivation not_y = neg_intro(neg_elim(and_intro(yz, and_elim_r(and_elim_l(r))), and_elim_r(r)), Y * z);
            return conv(and_intro(and_elim_l(and_elim_l(r)), not_y), R1 * z);
          });
      const Derivation last = transfer_one(outer.rest, same, R1, R2);
      const Variable vv = fresh('V', prop, {Z, Y, W}, ctx);
      const Term vb = conj(subset(v(vv), ZW), conj(I * v(vv), I * setminus(ZW, v(vv))));
      const Derivation pair = conv(exists_intro(and_intro(v_sub, and_intro(inner.rest, last)), vv, vb, V), II * ZW);
      const Term yb = conj(subset(v(yv), Z), conj(I * v(yv), II * setminus(Z, v(yv))));
      return conv(exists_intro(and_intro(w_z, and_intro(inner.first, pair)), yv, yb, W), rhs);
    }, 'W');
  }, 'Y');

  // 1 + (1 + 1) ⊢ (1 + 1) + 1: Z = Y + (V + c); regroup as (Y ∪ V) + c
  const Derivation back = exists_elim(conv(assume({rhs}, rhs), sum_open(I, II, Z, yv)), lhs, [&](const Derivation& h, const Term& Y) {
    const Parts outer = parts(h);
    const Term ZY = setminus(Z, Y);
    const Derivation two = conv(outer.rest, sum_open(I, I, ZY, wv));
    return exists_elim(two, lhs, [&](const Derivation& h2, const Term& V) {
      const Parts inner = parts(h2);
      const Context ctx = merge(h2.assumptions(), h.assumptions());
      const Variable uz('z', sigma);
      const Term U = Term::abs(uz, disj(Y * v(uz), V * v(uz)));
      // V z gives Z z ∧ ¬Y z
      auto in_zy = [&](const Derivation& vz) { return conv(ui(inner.sub, vz), conj(Z * vz.conclusion().arg(), neg(Y * vz.conclusion().arg()))); };
      const Derivation u_z = subset_intro(ctx, U, Z, [&](const Term& z, const Context& c) {
        const Derivation u = conv(assume(c, U * z), disj(Y * z, V * z));
        return or_elim(u, ui(outer.sub, assume(merge(c, {Y * z}), Y * z)), and_elim_l(in_zy(assume(merge(c, {V * z}), V * z))));
      });
      const Derivation y_u = subset_intro(ctx, Y, U, [&](const Term& z, const Context& c) {
        return or_intro_l(assume(c, Y * z), V * z);
      });
      const Term UY = setminus(U, Y);
      const Derivation v_same = pointwise_iff(
          ctx, V, UY,
          [&](const Term& z, const Context& c) {
            const Derivation vz = assume(c, V * z);
            return conv(and_intro(or_intro_r(Y * z, vz), and_elim_r(in_zy(vz))), UY * z);
          },
          [&](const Term& z, const Context& c) {
            const Derivation r = conv(assume(c, UY * z), conj(disj(Y * z, V * z), neg(Y * z)));
            const Derivation yz = assume(merge(c, {Y * z}), Y * z);
            return or_elim(and_elim_l(r), ex_falso(neg_elim(yz, and_elim_r(r)), V * z), assume(merge(c, {V * z}), V * z));
          });
      const Derivation u_two = [&] {
        const Derivation rest = transfer_one(inner.first, v_same, V, UY);
        const Variable x = fresh('X', prop, {U, Z, Y}, ctx);
        const Term xb = conj(subset(v(x), U), conj(I * v(x), I * setminus(U, v(x))));
        return conv(exists_intro(and_intro(y_u, and_intro(outer.first, rest)), x, xb, Y), II * U);
      }();
      // ((Z ∖ Y) ∖ V) z ↔ (Z ∖ U) z
      const Term R1 = setminus(ZY, V);
      const Term R2 = setminus(Z, U);
      const Derivation same = pointwise_iff(
          ctx, R1, R2,
          [&](const Term& z, const Context& c) {
            const Derivation r = conv(assume(c, R1 * z), conj(conj(Z * z, neg(Y * z)), neg(V * z)));
            const Term yv_z = disj(Y * z, V * z);
            const Derivation d = assume(merge(c, {yv_z}), yv_z);
            const Derivation no = neg_intro(or_elim(d, neg_elim(assume(merge(c, {Y * z}), Y * z), and_elim_r(and_elim_l(r))),
                                                   neg_elim(assume(merge(c, {V * z}), V * z), and_elim_r(r))),
                                            yv_z);
            return conv(and_intro(and_elim_l(and_elim_l(r)), no), R2 * z);
          },
          [&](const Term& z, const Context& c) {
            const Derivation r = conv(assume(c, R2 * z), conj(Z * z, neg(disj(Y * z, V * z))));
            const Derivation yz = assume(merge(c, {Y * z}), Y * z);
            const Derivation vz = assume(merge(c, {V * z}), V * z);
            const Derivation not_y = neg_intro(neg_elim(or_intro_l(yz, V * z), and_elim_r(r)), Y * z);
            const Derivation not_v = neg_intro(neg_elim(or_intro_r(Y * z, vz), and_elim_r(r)), V * z);
            return conv(and_intro(and_intro(and_elim_l(r), not_y), not_v), R1 * z);
          });
      const Derivation last = transfer_one(inner.rest, same, R1, R2);
      const Term yb = conj(subset(v(yv), Z), conj(II * v(yv), I * setminus(Z, v(yv))));
      return conv(exists_intro(and_intro(u_z, and_intro(u_two, last)), yv, yb, U), lhs);
    }, 'W');
  }, 'Y');

  return rules::function_extensionality(intensional_eq(there, back), zv);
}

Derivation three_is_nat(const Type& sigma) {
  const Type num = Type::fun(Type::fun(sigma, Type::t()), Type::t());
  const Variable w('n', num);
  return rewrite(one_assoc(sigma), w, nat(Term::var(w)), unit_numeral_is_nat(3, sigma));
}

}  // namespace lf::lib
