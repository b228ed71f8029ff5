#include "lf/logic.hpp"

#include <functional>

#include "lf/error.hpp"
#include "lf/syntax.hpp"

namespace lf::logic {

namespace {

Term def(std::string_view name) { return instantiate_def(name, {}, Extension::Epsilon); }
Term def(std::string_view name, const Type& param) { return instantiate_def(name, {param}, Extension::Epsilon); }

bool is_instance(const Term& head, const Term& inst) {
  return head.alpha_hash() == inst.alpha_hash() && alpha_equal(head, inst);
}

// head a b  ->  (a, b)
std::optional<Pair> binary(const Term& p, const std::function<Term(const Term&)>& instance_for) {
  if (!p.is_app() || !p.fun().is_app()) return std::nullopt;
  const Term& a = p.fun().arg();
  const Term inst = instance_for(a);
  if (!is_instance(p.fun().fun(), inst)) return std::nullopt;
  return Pair{a, p.arg()};
}

std::optional<Pair> binary(const Term& p, std::string_view name) {
  return binary(p, [&](const Term&) { return def(name); });
}

Type type_arg_of_property(const Term& f) {
  if (!f.type().is_fun() || !f.type().codomain().is_t()) {
    fail(ErrorCode::TypeMismatch, "expected a property, got a term of type " + to_string(f.type()));
  }
  return f.type().domain();
}

std::optional<std::pair<Variable, Term>> quantifier(const Term& p, std::string_view name) {
  if (!p.is_app() || !p.arg().is_abs()) return std::nullopt;
  const Term& lam = p.arg();
  if (!lam.body().type().is_t()) return std::nullopt;
  if (!is_instance(p.fun(), def(name, lam.bound().type))) return std::nullopt;
  return std::make_pair(lam.bound(), lam.body());
}

}  // namespace

Term top() { return def("⊤"); }
Term bot() { return def("⊥"); }
Term neg(const Term& p) { return def("¬") * p; }
Term imp(const Term& p, const Term& q) { return def("→") * p * q; }
Term disj(const Term& p, const Term& q) { return def("∨") * p * q; }
Term conj(const Term& p, const Term& q) { return def("∧") * p * q; }
Term iff(const Term& p, const Term& q) { return def("↔") * p * q; }
Term forall(const Variable& x, const Term& body) { return def("∀", x.type) * Term::abs(x, body); }
Term exists(const Variable& x, const Term& body) { return def("∃", x.type) * Term::abs(x, body); }
Term forall_of(const Term& property) { return def("∀", type_arg_of_property(property)) * property; }
Term exists_of(const Term& property) { return def("∃", type_arg_of_property(property)) * property; }
Term eq(const Term& a, const Term& b) { return def("=", a.type()) * a * b; }
Term neq(const Term& a, const Term& b) { return def("≠", a.type()) * a * b; }
Term box(const Term& p) { return def("□") * p; }
Term subset(const Term& f, const Term& g) {
  return Term::con({ConstantKind::Include, type_arg_of_property(f)}) * f * g;
}
Term coext(const Term& f, const Term& g) { return def("≡", f.type()) * f * g; }
Term setminus(const Term& f, const Term& g) { return def("∖", f.type()) * f * g; }
Term zero(const Type& sigma) { return def("0", sigma); }
Term one(const Type& sigma) { return def("1", sigma); }

Term plus(const Term& m, const Term& n) {
  // m : <<σt>t>
  return def("+", m.type().domain().domain()) * m * n;
}

Term nat(const Term& n) { return def("ℕ", n.type().domain().domain()) * n; }

Term numeral(int k, const Type& sigma) {
  Term acc = zero(sigma);
  for (int i = 0; i < k; ++i) acc = plus(acc, one(sigma));
  return acc;
}

Term unit_numeral(int k, const Type& sigma) {
  Term acc = one(sigma);
  for (int i = 1; i < k; ++i) acc = plus(acc, one(sigma));
  return acc;
}

Term is_class(const Term& f) { return def("class", type_arg_of_property(f)) * f; }

Term apply(const Term& f, std::initializer_list<Term> args) {
  Term out = f;
  for (const Term& a : args) out = out * a;
  return out;
}

std::optional<Term> match_neg(const Term& p) {
  if (!p.is_app() || !is_instance(p.fun(), def("¬"))) return std::nullopt;
  return p.arg();
}

std::optional<Pair> match_imp(const Term& p) { return binary(p, "→"); }
std::optional<Pair> match_disj(const Term& p) { return binary(p, "∨"); }
std::optional<Pair> match_conj(const Term& p) { return binary(p, "∧"); }
std::optional<Pair> match_iff(const Term& p) { return binary(p, "↔"); }
std::optional<Pair> match_eq(const Term& p) {
  return binary(p, [](const Term& a) { return def("=", a.type()); });
}

std::optional<Pair> match_subset(const Term& p) {
  if (!p.is_app() || !p.fun().is_app() || !p.fun().fun().is_con()) return std::nullopt;
  if (p.fun().fun().constant().kind != ConstantKind::Include) return std::nullopt;
  return Pair{p.fun().arg(), p.arg()};
}

std::optional<Term> match_box(const Term& p) {
  if (!p.is_app() || !is_instance(p.fun(), def("□"))) return std::nullopt;
  return p.arg();
}

std::optional<std::pair<Variable, Term>> match_forall(const Term& p) { return quantifier(p, "∀"); }
std::optional<std::pair<Variable, Term>> match_exists(const Term& p) { return quantifier(p, "∃"); }

std::optional<Term> match_nat(const Term& p) {
  if (!p.is_app()) return std::nullopt;
  const Type& nt = p.arg().type();
  if (!nt.is_fun() || !nt.domain().is_fun() || !nt.domain().codomain().is_t() || !nt.codomain().is_t()) {
    return std::nullopt;
  }
  if (!is_instance(p.fun(), def("ℕ", nt.domain().domain()))) return std::nullopt;
  return p.arg();
}

}  // namespace lf::logic
