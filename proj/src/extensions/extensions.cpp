#include "lf/extensions.hpp"

#include "lf/error.hpp"
#include "lf/logic.hpp"

namespace lf {

namespace {

using namespace logic;

Variable property_var(const Type& sigma) { return Variable('X', Type::fun(sigma, Type::t())); }

Term iota(const Type& sigma) { return Term::con({ConstantKind::Iota, sigma}); }
Term epsilon(const Type& sigma) { return Term::con({ConstantKind::Epsilon, sigma}); }

Term unique(const Term& x) { return instantiate_def("∃!", {x.type().domain()}) * x; }

Term selects(const Term& op, const Type& sigma, bool uniquely) {
  const Variable X = property_var(sigma);
  const Term x = Term::var(X);
  const Term pre = uniquely ? unique(x) : exists_of(x);
  return forall(X, imp(pre, x * (op * x)));
}

Term defaults(const Term& op, const Type& sigma, bool uniquely) {
  const Variable X = property_var(sigma);
  const Term x = Term::var(X);
  const Term pre = uniquely ? unique(x) : exists_of(x);
  return forall(X, imp(neg(pre), eq(op * x, dagger(sigma))));
}

}  // namespace

Term dagger(const Type& sigma) { return instantiate_def("†", {sigma}, Extension::Iota); }

const std::vector<AxiomSchema>& description_schemas() {
  static const std::vector<AxiomSchema> s{
      {"D_ι.1", [](const Type& sigma) { return selects(iota(sigma), sigma, true); }},
      {"D_ι.2", [](const Type& sigma) { return defaults(iota(sigma), sigma, true); }},
  };
  return s;
}

const std::vector<AxiomSchema>& choice_schemas() {
  static const std::vector<AxiomSchema> s{
      {"C_ε.1", [](const Type& sigma) { return selects(epsilon(sigma), sigma, false); }},
      {"C_ε.2", [](const Type& sigma) { return defaults(epsilon(sigma), sigma, false); }},
  };
  return s;
}

const AxiomSchema& axiom_schema(std::string_view name) {
  for (const auto* group : {&description_schemas(), &choice_schemas()}) {
    for (const AxiomSchema& s : *group) {
      if (s.name == name) return s;
    }
  }
  // ASCII spellings
  if (name == "D_iota.1") return description_schemas()[0];
  if (name == "D_iota.2") return description_schemas()[1];
  if (name == "C_eps.1") return choice_schemas()[0];
  if (name == "C_eps.2") return choice_schemas()[1];
  fail(ErrorCode::UnknownTheorem, "no axiom schema named '" + std::string(name) + "'");
}

std::vector<AxiomSchema> extension_axioms(const Theory& t) {
  if (t.guard == Extension::Core) fail(ErrorCode::NoExtension, t.name + " has neither ι nor ε");
  std::vector<AxiomSchema> out = description_schemas();
  if (t.guard == Extension::Epsilon) {
    out.insert(out.end(), choice_schemas().begin(), choice_schemas().end());
  }
  return out;
}

std::vector<const Definition*> extension_definitions() {
  std::vector<const Definition*> out;
  for (const Definition& d : definition_table()) {
    if (d.guard != Extension::Core || d.name == "class") out.push_back(&d);
  }
  return out;
}

}  // namespace lf
