#include <map>
#include <memory>
#include <mutex>

#include "lf/error.hpp"
#include "lf/notation.hpp"
#include "lf/syntax.hpp"

namespace lf {

namespace {

// Expansion templates use σ for the type parameter. Entries whose expansion
// is not a fixed text (vector parameters, recursion on types, primitives)
// are built in code below; their text here is documentation only.
const std::vector<Definition>& table() {
  static const std::vector<Definition> defs = {
      {"⊤", "top", 0, false, "t", "(λp.p) ⊆ (λp.p)", Fixity::Constant, false, Extension::Core},
      {"∀", "forall", 1, false, "<at>t", "λX^{σt}.((λy^σ.⊤) ⊆ X)", Fixity::Prefix, true, Extension::Core},
      {"⊥", "bot", 0, false, "t", "(λp.⊤) ⊆ (λp.p)", Fixity::Constant, false, Extension::Core},
      {"¬", "not", 0, false, "tt", "λp.((λr^t.p) ⊆ (λr^t.⊥))", Fixity::Prefix, false, Extension::Core},
      {"∃", "exists", 1, false, "<at>t", "λX^{σt}.¬∀y^σ.¬Xy", Fixity::Prefix, true, Extension::Core},
      {"→", "->", 0, false, "ttt", "λpq.((λr^t.p) ⊆ (λr^t.q))", Fixity::Infix, false, Extension::Core},
      {"∨", "|", 0, false, "ttt", "λpq.(¬p → q)", Fixity::Infix, false, Extension::Core},
      {"∧", "&", 0, false, "ttt", "λpq.¬(¬p ∨ ¬q)", Fixity::Infix, false, Extension::Core},
      {"↔", "<->", 0, false, "ttt", "λpq.((p → q) ∧ (q → p))", Fixity::Infix, false, Extension::Core},
      {"≡", "==", 1, true, "a<at>", "λXY^{σ⃗t}.∀z⃗.(Xz⃗ ↔ Yz⃗)", Fixity::Infix, false, Extension::Core},
      {"=", "=", 1, false, "aat", "λxy^σ.((λZ.Zx) ⊆ (λZ.Zy))", Fixity::Infix, false, Extension::Core},
      {"≠", "!=", 1, false, "aat", "λxy^σ.¬(x = y)", Fixity::Infix, false, Extension::Core},
      {"□", "box", 0, false, "tt", "=_t ⊤", Fixity::Prefix, false, Extension::Core},
      {"◇", "dia", 0, false, "tt", "≠_t ⊥", Fixity::Prefix, false, Extension::Core},
      {"0", "0", 1, false, "<at>t", "λX^{σt}.¬∃X", Fixity::Constant, false, Extension::Core},
      {"1", "1", 1, false, "<at>t", "λX^{σt}.∃y.(Xy ∧ ∀z.(Xz → y = z))", Fixity::Constant, false, Extension::Core},
      {"∖", "setminus", 1, true, "a<aa>", "λXY^{σ⃗t}z⃗.(Xz⃗ ∧ ¬Yz⃗)", Fixity::Infix, false, Extension::Core},
      {"+", "+", 1, false, "<<at>t><<at>t><at>t", "λmn^{⟨σt⟩t}X^{σt}.∃Y.(Y ⊆ X ∧ mY ∧ n(X ∖ Y))", Fixity::Infix,
       false, Extension::Core},
      {"ℕ", "Nat", 1, false, "<<at>t>t", "λn^{⟨σt⟩t}.∀X.(X0 → (X ⊆ λy.X(y + 1)) → Xn)", Fixity::Prefix, false,
       Extension::Core},
      {"⊆", "sub", 1, false, "<at><at>t", "primitive", Fixity::Infix, false, Extension::Core},
      {"∃!", "unique", 1, false, "<at>t", "1_σ", Fixity::Prefix, true, Extension::Core},
      {"class", "class", 1, false, "<at>t", "λX^{σt}.∀y.(Xy = ⊤ ∨ Xy = ⊥)", Fixity::Prefix, false, Extension::Core},
      {"∀∈", "forall in", 1, false, "<at>t", "∀x∈F.P ⇝ ∀x.(Fx → P)", Fixity::Binder, true, Extension::Core},
      {"∃∈", "exists in", 1, false, "<at>t", "∃x∈F.P ⇝ ∃x.(Fx ∧ P)", Fixity::Binder, true, Extension::Core},
      {"ι", "iota", 1, false, "<at>a", "primitive", Fixity::Prefix, true, Extension::Iota},
      {"†", "dagger", 1, false, "a", "†_e ⇝ ι λx^e.⊥; †_t ⇝ ⊥; †_{στ} ⇝ λx^σ.†_τ", Fixity::Constant, false,
       Extension::Iota},
      {"{:}", "{:}", 1, false, "<at>", "{x^σ : P} ⇝ ι λX^{σt}.(∀y.(Xy = ⊤ ∨ Xy = ⊥) ∧ X ≡ λx.P)", Fixity::Binder, true,
       Extension::Iota},
      {"@", "@", 0, false, "tt", "λp.ιq.((p → q = ⊤) ∧ (¬p → q = ⊥))", Fixity::Prefix, false, Extension::Iota},
      {"α", "alpha", 0, false, "t", "∀p.(p ↔ @p)", Fixity::Constant, false, Extension::Iota},
      {"ε", "eps", 1, false, "<at>a", "primitive", Fixity::Prefix, true, Extension::Epsilon},
  };
  return defs;
}

// --- type schemas ------------------------------------------------------------

struct Schema {
  enum Kind { E, T, Param, Fun } kind;
  std::shared_ptr<const Schema> dom, cod;
};
using SchemaPtr = std::shared_ptr<const Schema>;

SchemaPtr schema_seq(std::string_view s, std::size_t& i);

SchemaPtr schema_item(std::string_view s, std::size_t& i) {
  const char c = s[i++];
  if (c == 'e') return std::make_shared<Schema>(Schema{Schema::E, nullptr, nullptr});
  if (c == 't') return std::make_shared<Schema>(Schema{Schema::T, nullptr, nullptr});
  if (c == 'a') return std::make_shared<Schema>(Schema{Schema::Param, nullptr, nullptr});
  SchemaPtr inner = schema_seq(s, i);
  ++i;  // '>'
  return inner;
}

SchemaPtr schema_seq(std::string_view s, std::size_t& i) {
  std::vector<SchemaPtr> items;
  while (i < s.size() && s[i] != '>') items.push_back(schema_item(s, i));
  SchemaPtr out = items.back();
  for (std::size_t k = items.size() - 1; k-- > 0;) out = std::make_shared<Schema>(Schema{Schema::Fun, items[k], out});
  return out;
}

const SchemaPtr& schema_of(const Definition& d) {
  static std::mutex mu;
  static std::map<std::string, SchemaPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d.name);
  if (it == cache.end()) {
    std::size_t i = 0;
    it = cache.emplace(d.name, schema_seq(d.type_schema, i)).first;
  }
  return it->second;
}

Type apply_schema(const Schema& s, const std::optional<Type>& param) {
  switch (s.kind) {
    case Schema::E:
      return Type::e();
    case Schema::T:
      return Type::t();
    case Schema::Param:
      return *param;
    case Schema::Fun:
      return Type::fun(apply_schema(*s.dom, param), apply_schema(*s.cod, param));
  }
  return Type::t();
}

bool match_schema(const Schema& s, const Type& ty, std::optional<Type>& param) {
  switch (s.kind) {
    case Schema::E:
      return ty.is_e();
    case Schema::T:
      return ty.is_t();
    case Schema::Param:
      if (param) return *param == ty;
      param = ty;
      return true;
    case Schema::Fun:
      return ty.is_fun() && match_schema(*s.dom, ty.domain(), param) && match_schema(*s.cod, ty.codomain(), param);
  }
  return false;
}

// --- building instances --------------------------------------------------------

std::string type_text(const Type& ty) { return to_string(ty, TypeStyle::Bracketed, true); }

std::string replace_sigma(std::string text, const Type& sigma) {
  const std::string from = "σ";
  const std::string to = type_text(sigma);
  for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

// λXY^ρ z1..zn. (X z1..zn <op> Y z1..zn)   (the op is ↔ for ≡, ∧ ¬ for ∖)
Term vector_entry(const std::string& name, const Type& rho) {
  std::vector<Type> args;
  if (!rho.relational_args(args)) {
    fail(ErrorCode::TypeMismatch, "'" + name + "' needs a relational type, got " + to_string(rho));
  }
  // ≡ quantifies the argument places so that it is a formula; ∖ abstracts
  // them and yields a relation of the same type
  const bool equiv = name == "≡";
  std::string text = "λXY^{" + type_text(rho) + "}.";
  std::string zs;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string z = "z" + std::string(i, '\'');
    text += (equiv ? " ∀" : " λ") + z + "^{" + type_text(args[i]) + "}.";
    zs += " " + z;
  }
  text += equiv ? " (X" + zs + " ↔ Y" + zs + ")" : " (X" + zs + " ∧ ¬(Y" + zs + "))";
  return read_term(text, Extension::Epsilon);
}

Term dagger(const Type& ty) {
  if (ty.is_t()) return instantiate_def("⊥");
  if (ty.is_e()) {
    return Term::con({ConstantKind::Iota, Type::e()}) * Term::abs(Variable('x', Type::e()), instantiate_def("⊥"));
  }
  return Term::abs(Variable('x', ty.domain()), dagger(ty.codomain()));
}

Term build(const Definition& d, const std::optional<Type>& param) {
  if (d.name == "⊆") return Term::con({ConstantKind::Include, *param});
  if (d.name == "ι") return Term::con({ConstantKind::Iota, *param});
  if (d.name == "ε") return Term::con({ConstantKind::Epsilon, *param});
  if (d.name == "□") return instantiate_def("=", {Type::t()}) * instantiate_def("⊤");
  if (d.name == "◇") return instantiate_def("≠", {Type::t()}) * instantiate_def("⊥");
  if (d.name == "∃!") return instantiate_def("1", {*param});
  if (d.name == "†") return dagger(*param);
  if (d.vector) return vector_entry(d.name, *param);
  std::string text = d.expansion;
  if (param) text = replace_sigma(text, *param);
  return read_term(text, Extension::Epsilon);
}

std::string cache_key(const Definition& d, const std::optional<Type>& param) {
  return param ? d.name + "|" + type_text(*param) : d.name;
}

}  // namespace

const std::vector<Definition>& definition_table() { return table(); }

const Definition* find_definition(std::string_view name) {
  for (const Definition& d : table()) {
    if (d.name == name || d.ascii == name) return &d;
  }
  return nullptr;
}

Type definition_type(const Definition& d, const std::vector<Type>& params) {
  if (static_cast<int>(params.size()) != d.params) {
    fail(ErrorCode::ArityMismatch, "'" + d.name + "' takes " + std::to_string(d.params) + " type parameter(s), got " +
                                       std::to_string(params.size()));
  }
  return apply_schema(*schema_of(d), params.empty() ? std::nullopt : std::optional<Type>(params[0]));
}

std::optional<std::vector<Type>> match_definition_type(const Definition& d, const Type& ty) {
  std::optional<Type> param;
  if (!match_schema(*schema_of(d), ty, param)) return std::nullopt;
  if (d.params == 0) return std::vector<Type>{};
  if (!param) return std::nullopt;
  if (d.vector) {
    std::vector<Type> args;
    if (!param->relational_args(args)) return std::nullopt;
  }
  return std::vector<Type>{*param};
}

Term instantiate_def(std::string_view name, const std::vector<Type>& params, Extension ext) {
  const Definition* d = find_definition(name);
  if (!d) fail(ErrorCode::UnknownNotation, "'" + std::string(name) + "' is not in the definition table");
  if (d->fixity == Fixity::Binder) {
    fail(ErrorCode::ArityMismatch, "'" + d->name + "' is binder sugar and needs a bound variable and a body");
  }
  if (!permits(ext, d->guard)) {
    fail(ErrorCode::GuardViolation, "'" + d->name + "' requires " +
                                        (d->guard == Extension::Iota ? "the description extension" : "the choice extension"));
  }
  if (static_cast<int>(params.size()) != d->params) {
    fail(ErrorCode::ArityMismatch, "'" + d->name + "' takes " + std::to_string(d->params) + " type parameter(s), got " +
                                       std::to_string(params.size()));
  }
  const std::optional<Type> param = params.empty() ? std::nullopt : std::optional<Type>(params[0]);

  static std::mutex mu;
  static std::map<std::string, Term> cache;
  const std::string key = cache_key(*d, param);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Term built = build(*d, param);
  if (built.type() != definition_type(*d, params) || !built.closed()) {
    fail(ErrorCode::TypeMismatch, "expansion of '" + d->name + "' does not have its declared type");
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, built).first->second;
}

std::string dump_definitions() {
  std::string out;
  for (const Definition& d : table()) {
    std::string schema = d.type_schema;
    for (char& c : schema) {
      if (c == 'a') c = '#';
    }
    std::string ty;
    for (char c : schema) {
      if (c == '#') {
        ty += d.vector ? "ρ" : "σ";
      } else if (c == '<') {
        ty += "⟨";
      } else if (c == '>') {
        ty += "⟩";
      } else {
        ty += c;
      }
    }
    out += d.name + " : " + ty + " := " + d.expansion + "\n";
  }
  return out;
}

Term class_abstraction(const Variable& x, const Term& body) {
  if (!body.type().is_t()) fail(ErrorCode::TypeMismatch, "class abstraction needs a formula body");
  const Type sigma = x.type;
  const Type pred = Type::fun(sigma, Type::t());
  const Term lam_body = Term::abs(x, body);
  const Variable X = fresh_variable('X', pred, {&lam_body});
  const Variable y = fresh_variable('y', sigma, {&lam_body});
  const Term Xt = Term::var(X), yt = Term::var(y);
  const Term eq_t = instantiate_def("=", {Type::t()});
  const Term classical = instantiate_def("∀", {sigma}) *
                         Term::abs(y, instantiate_def("∨") * (eq_t * (Xt * yt) * instantiate_def("⊤")) *
                                          (eq_t * (Xt * yt) * instantiate_def("⊥")));
  const Term coext = instantiate_def("≡", {pred}) * Xt * lam_body;
  return Term::con({ConstantKind::Iota, pred}) * Term::abs(X, instantiate_def("∧") * classical * coext);
}

namespace {

Term iota_by_epsilon(const Type& sigma);

Term dagger_by_epsilon(const Type& ty) {
  if (ty.is_t()) return instantiate_def("⊥");
  if (ty.is_e()) {
    return Term::con({ConstantKind::Epsilon, Type::e()}) * Term::abs(Variable('x', Type::e()), instantiate_def("⊥"));
  }
  return Term::abs(Variable('x', ty.domain()), dagger_by_epsilon(ty.codomain()));
}

// ε λf^{<σt>σ}. ∀X^{σt}. ((∃!X → X(fX)) ∧ (¬∃!X → fX = †_σ))
Term iota_by_epsilon(const Type& sigma) {
  const Type pred = Type::fun(sigma, Type::t());
  const Type fty = Type::fun(pred, sigma);
  const Term f = Term::var(Variable('f', fty));
  const Term X = Term::var(Variable('X', pred));
  const Term unique = instantiate_def("1", {sigma}) * X;
  const Term imp = instantiate_def("→");
  const Term left = imp * unique * (X * (f * X));
  const Term right = imp * (instantiate_def("¬") * unique) * (instantiate_def("=", {sigma}) * (f * X) * dagger_by_epsilon(sigma));
  const Term body = instantiate_def("∀", {pred}) * Term::abs(X.variable(), instantiate_def("∧") * left * right);
  return Term::con({ConstantKind::Epsilon, fty}) * Term::abs(f.variable(), body);
}

Term reduce(const Term& a) {
  switch (a.kind()) {
    case TermKind::Var:
      return a;
    case TermKind::Con:
      if (a.constant().kind == ConstantKind::Iota) return iota_by_epsilon(a.constant().index);
      return a;
    case TermKind::App: {
      // †_e is ι λx.⊥ and is read as ε λx.⊥ directly
      if (a.fun().is_con() && a.fun().constant().kind == ConstantKind::Iota && a.fun().constant().index.is_e() &&
          alpha_equal(a, dagger(Type::e()))) {
        return dagger_by_epsilon(Type::e());
      }
      return Term::app(reduce(a.fun()), reduce(a.arg()));
    }
    case TermKind::Abs:
      return Term::abs(a.bound(), reduce(a.body()));
  }
  return a;
}

}  // namespace

Term expand_all(const Term& a, const ExpandOptions& opts) {
  if (!opts.reduce_iota_to_epsilon || !contains_constant(a, ConstantKind::Iota)) return a;
  return reduce(a);
}

}  // namespace lf
