#include <gtest/gtest.h>

#include "lf/extensions.hpp"
#include "lf/logic.hpp"
#include "lf/syntax.hpp"
#include "support/errors.hpp"

using namespace lf;
using lf::testing::code_of;

namespace {

const Type e = Type::e();
const Type t = Type::t();

// every type of depth at most d over e and t
std::vector<Type> types_up_to(int d) {
  std::vector<Type> out{e, t};
  for (int i = 1; i < d; ++i) {
    std::vector<Type> next = out;
    for (const Type& a : out) {
      for (const Type& b : out) {
        const Type f = Type::fun(a, b);
        if (std::find(next.begin(), next.end(), f) == next.end()) next.push_back(f);
      }
    }
    out = std::move(next);
    if (out.size() > 60) out.erase(out.begin() + 60, out.end());
  }
  return out;
}

}  // namespace

TEST(Dagger, BaseCases) {
  EXPECT_TRUE(alpha_equal(dagger(e), read_term("ι λx^e.⊥", Extension::Iota)));
  EXPECT_TRUE(alpha_equal(dagger(t), logic::bot()));
  EXPECT_TRUE(alpha_equal(dagger(Type::fun(e, t)), read_term("λx^e.⊥")));
}

TEST(Dagger, ClosedAndWellTypedUpToDepthFour) {
  for (const Type& s : types_up_to(4)) {
    const Term d = dagger(s);
    EXPECT_EQ(d.type(), s) << to_string(s);
    EXPECT_TRUE(d.closed()) << to_string(s);
    // †_{στ} = λx^σ.†_τ
    if (s.is_fun()) {
      ASSERT_TRUE(d.is_abs());
      EXPECT_TRUE(alpha_equal(d.body(), dagger(s.codomain())));
    }
  }
}

TEST(Schemas, MatchTheWrittenAxioms) {
  const std::vector<std::pair<std::string, std::string>> written{
      {"D_ι.1", "∀X^{et}.(∃!X → X(ιX))"},
      {"D_ι.2", "∀X^{et}.(¬∃!X → ιX = †)"},
      {"C_ε.1", "∀X^{et}.(∃X → X(εX))"},
      {"C_ε.2", "∀X^{et}.(¬∃X → εX = †)"},
  };
  for (const auto& [name, text] : written) {
    const Term expected = read_term(text, Extension::Epsilon);
    EXPECT_TRUE(alpha_equal(axiom_schema(name).generate(e), expected)) << name;
  }
  EXPECT_TRUE(alpha_equal(axiom_schema("C_ε.2").generate(t), read_term("∀X^{tt}.(¬∃X → εX = †)", Extension::Epsilon)));
  EXPECT_EQ(axiom_schema("D_iota.1").name, "D_ι.1");
  EXPECT_EQ(code_of([] { axiom_schema("D_ι.3"); }), ErrorCode::UnknownTheorem);
}

TEST(Schemas, ClosedSentencesAtEveryType) {
  for (const Type& s : types_up_to(3)) {
    for (const auto* group : {&description_schemas(), &choice_schemas()}) {
      for (const AxiomSchema& a : *group) {
        const Term p = a.generate(s);
        EXPECT_TRUE(p.type().is_t());
        EXPECT_TRUE(p.closed()) << a.name << " at " << to_string(s);
      }
    }
  }
}

TEST(Schemas, TheoryMembership) {
  EXPECT_EQ(extension_axioms(theory("LF_ι")).size(), 2u);
  EXPECT_EQ(extension_axioms(theory("LF_ε")).size(), 4u);
  EXPECT_EQ(code_of([] { extension_axioms(theory("LF")); }), ErrorCode::NoExtension);
  const Term d2 = axiom_schema("D_ι.2").generate(Type::fun(e, e));
  EXPECT_EQ(theory("LF_ι").axiom_match(d2), "D_ι.2");
  EXPECT_FALSE(theory("LF_ι").axiom_match(axiom_schema("C_ε.1").generate(e)));
  EXPECT_EQ(theory("LF_ε").axiom_match(axiom_schema("C_ε.1").generate(e)), "C_ε.1");
}

TEST(GuardedNotation, OnlyInsideExtensions) {
  EXPECT_EQ(code_of([] { read_term("@p"); }), ErrorCode::GuardViolation);
  EXPECT_EQ(code_of([] { read_term("ι λx^e.⊥"); }), ErrorCode::GuardViolation);
  EXPECT_EQ(code_of([] { read_term("ε λx^e.⊥", Extension::Iota); }), ErrorCode::GuardViolation);
  EXPECT_NO_THROW(read_term("{x^e : ⊤}", Extension::Iota));
  EXPECT_NO_THROW(read_term("class_e (λx^e.⊤)"));
  bool has_class = false;
  bool has_at = false;
  for (const Definition* d : extension_definitions()) {
    has_class = has_class || d->name == "class";
    has_at = has_at || d->name == "@";
  }
  EXPECT_TRUE(has_class);
  EXPECT_TRUE(has_at);
}

TEST(GuardedNotation, ActualityExpansion) {
  // @p is ι applied to the truth value of p
  const Term at = expand_all(read_term("@p", Extension::Iota));
  const Term want = expand_all(read_term("ιq.((p → q = ⊤) ∧ (¬p → q = ⊥))", Extension::Iota));
  EXPECT_TRUE(beta_equivalent(at, want));
}
