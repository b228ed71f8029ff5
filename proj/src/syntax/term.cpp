#include <algorithm>

#include "lf/error.hpp"
#include "lf/term.hpp"

namespace lf {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::vector<Variable> merge(const std::vector<Variable>& a, const std::vector<Variable>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Variable> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool operator<(const Variable& a, const Variable& b) {
  if (a.letter != b.letter) return a.letter < b.letter;
  if (a.primes != b.primes) return a.primes < b.primes;
  return a.type < b.type;
}

std::string Variable::name() const {
  std::string out(1, letter);
  out.append(primes, '\'');
  return out;
}

Type Constant::type() const {
  const Type pred = Type::fun(index, Type::t());
  switch (kind) {
    case ConstantKind::Include:
      return Type::fun(pred, Type::fun(pred, Type::t()));
    case ConstantKind::Iota:
    case ConstantKind::Epsilon:
      return Type::fun(pred, index);
  }
  return pred;
}

Term Term::var(const Variable& v) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->type = v.type;
  n->var = v;
  n->free = {v};
  n->ahash = mix(0x11, v.type.hash());
  return Term(std::move(n));
}

Term Term::con(const Constant& c) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Con;
  n->type = c.type();
  n->con = c;
  n->ahash = mix(0x22 + static_cast<std::size_t>(c.kind), c.index.hash());
  return Term(std::move(n));
}

Term Term::app(const Term& f, const Term& a) {
  if (!f.type().is_fun() || f.type().domain() != a.type()) {
    fail(ErrorCode::IllTypedApplication,
         "cannot apply a term of type " + to_string(f.type(), TypeStyle::Bracketed) +
             " to an argument of type " + to_string(a.type(), TypeStyle::Bracketed));
  }
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->type = f.type().codomain();
  n->kids = {f, a};
  n->free = merge(f.free_vars(), a.free_vars());
  n->size = 1 + f.size() + a.size();
  n->ahash = mix(mix(0x33, f.alpha_hash()), a.alpha_hash());
  n->normal = f.beta_normal() && a.beta_normal() && !f.is_abs();
  return Term(std::move(n));
}

Term Term::app(const Term& f, std::span<const Term> args) {
  Term out = f;
  for (const Term& a : args) out = app(out, a);
  return out;
}

Term Term::abs(const Variable& x, const Term& body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Abs;
  n->type = Type::fun(x.type, body.type());
  n->var = x;
  n->kids = {body};
  n->free = body.free_vars();
  auto it = std::lower_bound(n->free.begin(), n->free.end(), x);
  if (it != n->free.end() && *it == x) n->free.erase(it);
  n->size = 1 + body.size();
  n->ahash = mix(mix(0x44, x.type.hash()), body.alpha_hash());
  n->normal = body.beta_normal();
  return Term(std::move(n));
}

bool Term::has_free(const Variable& v) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), v);
}

bool contains_constant(const Term& a, ConstantKind kind) {
  switch (a.kind()) {
    case TermKind::Var:
      return false;
    case TermKind::Con:
      return a.constant().kind == kind;
    case TermKind::App:
      return contains_constant(a.fun(), kind) || contains_constant(a.arg(), kind);
    case TermKind::Abs:
      return contains_constant(a.body(), kind);
  }
  return false;
}

}  // namespace lf
