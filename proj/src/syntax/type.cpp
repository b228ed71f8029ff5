#include "lf/type.hpp"

#include <algorithm>

namespace lf {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

Type Type::e() {
  static const Type ty = [] {
    auto n = std::make_shared<Node>();
    n->base = BaseType::E;
    n->hash = 0x51;
    return Type(std::move(n));
  }();
  return ty;
}

Type Type::t() {
  static const Type ty = [] {
    auto n = std::make_shared<Node>();
    n->base = BaseType::T;
    n->hash = 0x74;
    return Type(std::move(n));
  }();
  return ty;
}

Type Type::fun(const Type& domain, const Type& codomain) {
  auto n = std::make_shared<Node>();
  n->base_kind = false;
  n->dom = domain;
  n->cod = codomain;
  n->depth = 1 + std::max(domain.depth(), codomain.depth());
  n->hash = mix(mix(0xf00d, domain.hash()), codomain.hash());
  return Type(std::move(n));
}

Type Type::curried(const std::vector<Type>& args, const Type& result) {
  Type ty = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) ty = fun(*it, ty);
  return ty;
}

bool Type::relational_args(std::vector<Type>& out) const {
  out.clear();
  Type cur = *this;
  while (cur.is_fun()) {
    out.push_back(cur.domain());
    cur = cur.codomain();
  }
  return cur.is_t();
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->base_kind != b.node_->base_kind) return false;
  if (a.is_base()) return a.node_->base == b.node_->base;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

bool operator<(const Type& a, const Type& b) {
  if (a == b) return false;
  if (a.is_base() != b.is_base()) return a.is_base();
  if (a.is_base()) return a.node_->base < b.node_->base;
  if (a.domain() != b.domain()) return a.domain() < b.domain();
  return a.codomain() < b.codomain();
}

namespace {

void render(const Type& ty, TypeStyle style, bool ascii, std::string& out) {
  const char* open = ascii ? "<" : "⟨";
  const char* close = ascii ? ">" : "⟩";
  if (ty.is_base()) {
    out += ty.is_e() ? 'e' : 't';
    return;
  }
  if (style == TypeStyle::Bracketed) {
    out += open;
    render(ty.domain(), style, ascii, out);
    render(ty.codomain(), style, ascii, out);
    out += close;
    return;
  }
  // Abbreviated: the domain needs brackets when it is itself a function type;
  // the codomain continues the right-associated chain.
  if (ty.domain().is_fun()) {
    out += open;
    render(ty.domain(), style, ascii, out);
    out += close;
  } else {
    render(ty.domain(), style, ascii, out);
  }
  render(ty.codomain(), style, ascii, out);
}

}  // namespace

std::string to_string(const Type& ty, TypeStyle style, bool ascii) {
  std::string out;
  render(ty, style, ascii, out);
  return out;
}

}  // namespace lf
