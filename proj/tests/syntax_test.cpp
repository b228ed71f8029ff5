#include <gtest/gtest.h>

#include "lf/error.hpp"
#include "lf/syntax.hpp"

using namespace lf;

namespace {

const Type e = Type::e();
const Type t = Type::t();
const Type et = Type::fun(e, t);
const Type ee = Type::fun(e, e);

Term v(char c, const Type& ty, std::uint32_t primes = 0) { return Term::var(Variable(c, ty, primes)); }
Term lam(char c, const Type& ty, const Term& body) { return Term::abs(Variable(c, ty), body); }

}  // namespace

TEST(Types, PrintingStyles) {
  const Type ttt = Type::fun(t, Type::fun(t, t));
  EXPECT_EQ(to_string(ttt), "ttt");
  EXPECT_EQ(to_string(Type::fun(et, t)), "⟨et⟩t");
  EXPECT_EQ(to_string(Type::fun(et, t), TypeStyle::Bracketed), "⟨⟨et⟩t⟩");
  EXPECT_EQ(to_string(Type::fun(et, t), TypeStyle::Bracketed, true), "<<et>t>");
  EXPECT_EQ(Type::fun(et, t).depth(), 2);
}

TEST(Types, StructuralEquality) {
  EXPECT_EQ(Type::fun(e, t), et);
  EXPECT_NE(Type::fun(t, e), et);
  EXPECT_EQ(Type::fun(e, t).hash(), et.hash());
  EXPECT_FALSE(et < et);
  EXPECT_TRUE(e < et || et < e);
}

TEST(Terms, TypeOfAbstractionAndApplication) {
  EXPECT_EQ(type_of(lam('x', e, v('f', et) * v('x', e))), et);
  const Term inc = Term::con({ConstantKind::Include, e});
  EXPECT_EQ(to_string(type_of(inc), TypeStyle::Bracketed), "⟨⟨et⟩⟨⟨et⟩t⟩⟩");
  EXPECT_EQ(type_of(inc * v('X', et) * v('Y', et)), t);
}

TEST(Terms, IllTypedApplicationRejected) {
  try {
    (void)(v('p', t) * v('q', t));
    FAIL() << "expected an exception";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::IllTypedApplication);
  }
  EXPECT_THROW((void)(v('f', et) * v('p', t)), Error);
}

TEST(Terms, FreeVariables) {
  // λx^e. f x y : free f, y (sorted)
  const Term a = lam('x', e, v('f', Type::fun(e, et)) * v('x', e) * v('y', e));
  auto fv = free_vars(a);
  ASSERT_EQ(fv.size(), 2u);
  EXPECT_EQ(fv[0].letter, 'f');
  EXPECT_EQ(fv[1].letter, 'y');
  // same letter with different types are different variables
  const Term b = lam('x', e, v('x', t));
  ASSERT_EQ(free_vars(b).size(), 1u);
  EXPECT_EQ(free_vars(b)[0].type, t);
  EXPECT_TRUE(is_sentence(lam('p', t, v('p', t)) * v('q', t)) == false);
  EXPECT_TRUE(is_sentence(Term::con({ConstantKind::Include, t}) * lam('p', t, v('p', t)) * lam('p', t, v('p', t))));
}

TEST(Terms, AlphaEquality) {
  EXPECT_TRUE(alpha_equal(lam('x', e, v('x', e)), lam('y', e, v('y', e))));
  EXPECT_FALSE(alpha_equal(lam('x', e, v('x', e)), lam('x', t, v('x', t))));
  EXPECT_FALSE(alpha_equal(lam('x', e, v('y', e)), lam('y', e, v('y', e))));
  // λx.λy.x vs λy.λx.y
  EXPECT_TRUE(alpha_equal(lam('x', e, lam('y', e, v('x', e))), lam('y', e, lam('x', e, v('y', e)))));
  EXPECT_FALSE(alpha_equal(lam('x', e, lam('y', e, v('x', e))), lam('y', e, lam('x', e, v('x', e)))));
  // free variables compared by identity
  EXPECT_FALSE(alpha_equal(v('x', e), v('x', e, 1)));
}

TEST(Terms, SubstitutionAvoidsCapture) {
  // [y/x] λy^e.x  =  λy'^e.y
  const Term body = lam('y', e, v('x', e));
  const Term out = substitute(body, Variable('x', e), v('y', e));
  ASSERT_TRUE(out.is_abs());
  EXPECT_EQ(out.bound(), Variable('y', e, 1));
  EXPECT_EQ(out.body().variable(), Variable('y', e));
  EXPECT_TRUE(alpha_equal(out, lam('z', e, v('y', e))));
}

TEST(Terms, SubstitutionLeastPrime) {
  // [y/x] λy. f x y'  renames to y'' since y' is free in the body
  const Type eee = Type::fun(e, ee);
  const Term a = lam('y', e, v('f', eee) * v('x', e) * v('y', e, 1));
  const Term out = substitute(a, Variable('x', e), v('y', e));
  EXPECT_EQ(out.bound(), Variable('y', e, 2));
}

TEST(Terms, SubstitutionTypeMismatch) {
  try {
    (void)substitute(v('x', e), Variable('x', e), v('p', t));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::TypeMismatch);
  }
}

TEST(Terms, SubstitutionRespectsShadowing) {
  const Term a = lam('x', e, v('x', e));
  EXPECT_TRUE(substitute(a, Variable('x', e), v('y', e)).same_node(a));
}

TEST(Beta, NormalForms) {
  // (λx^e.f x) a  ->  f a
  const Term redex = lam('x', e, v('f', et) * v('x', e)) * v('a', e);
  EXPECT_FALSE(is_beta_normal(redex));
  const Term nf = beta_normal_form(redex);
  EXPECT_TRUE(alpha_equal(nf, v('f', et) * v('a', e)));
  EXPECT_TRUE(is_beta_normal(nf));
  EXPECT_TRUE(beta_equivalent(redex, nf));
  // λx.(λy.y) x  ->  λx.x
  const Term inner = lam('x', e, lam('y', e, v('y', e)) * v('x', e));
  EXPECT_TRUE(alpha_equal(beta_normal_form(inner), lam('z', e, v('z', e))));
}

TEST(Beta, NormalisationUnderCapture) {
  // (λx.λy.x) y  ->  λy'.y
  const Term k = lam('x', e, lam('y', e, v('x', e)));
  const Term nf = beta_normal_form(k * v('y', e));
  ASSERT_TRUE(nf.is_abs());
  EXPECT_EQ(nf.body().variable(), Variable('y', e));
  EXPECT_NE(nf.bound(), Variable('y', e));
}

TEST(Beta, EquivalenceRequiresSameType) {
  EXPECT_THROW((void)beta_equivalent(v('x', e), v('p', t)), Error);
}

TEST(Beta, FuelExhaustion) {
  // Church numeral exponentiation blows up: use a small fuel budget.
  const Type n = Type::fun(ee, ee);
  const Term two = Term::abs(Variable('f', ee), lam('x', e, v('f', ee) * (v('f', ee) * v('x', e))));
  // (λg^{<ee><ee>}. g (g (g h))) two, with h: ee -> needs several steps
  const Term h = v('h', ee);
  const Term g = v('g', n);
  const Term prog = Term::abs(Variable('g', n), g * (g * (g * h))) * two;
  EXPECT_NO_THROW((void)beta_normal_form(prog));
  try {
    (void)beta_normal_form(prog, 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::FuelExhausted);
  }
}

TEST(Paths, SubtermAndReplace) {
  const Term a = lam('x', e, v('f', et) * v('x', e));
  EXPECT_TRUE(alpha_equal(subterm_at(a, {0, 1}), v('x', e)));
  // raw replacement captures: replacing x by x keeps it bound
  const Term b = replace_at(a, {0, 1}, v('y', e));
  EXPECT_TRUE(b.has_free(Variable('y', e)));
  EXPECT_THROW((void)replace_at(a, {0, 1}, v('p', t)), Error);
  EXPECT_THROW((void)subterm_at(a, {1}), Error);
}
