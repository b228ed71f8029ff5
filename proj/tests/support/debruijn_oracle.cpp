#include "debruijn_oracle.hpp"

#include <deque>

namespace lf::testing {

namespace {

NamelessPtr make(Nameless n) { return std::make_shared<const Nameless>(std::move(n)); }

NamelessPtr convert(const Term& t, std::vector<Variable>& env) {
  switch (t.kind()) {
    case TermKind::Var: {
      for (std::size_t i = env.size(); i-- > 0;) {
        if (env[i] == t.variable()) return make({Nameless::Kind::Bound, "", static_cast<int>(env.size() - 1 - i), {}, {}});
      }
      const Variable& v = t.variable();
      return make({Nameless::Kind::Free, v.name() + ":" + to_string(v.type, TypeStyle::Bracketed, true), 0, {}, {}});
    }
    case TermKind::Con: {
      const Constant& c = t.constant();
      std::string k = c.kind == ConstantKind::Include ? "sub" : c.kind == ConstantKind::Iota ? "iota" : "eps";
      return make({Nameless::Kind::Const, k + "_" + to_string(c.index, TypeStyle::Bracketed, true), 0, {}, {}});
    }
    case TermKind::App:
      return make({Nameless::Kind::App, "", 0, convert(t.fun(), env), convert(t.arg(), env)});
    case TermKind::Abs: {
      env.push_back(t.bound());
      NamelessPtr body = convert(t.body(), env);
      env.pop_back();
      // binder type is part of the key so that \x^e.x and \x^t.x differ
      return make({Nameless::Kind::Lam, to_string(t.bound().type, TypeStyle::Bracketed, true), 0, body, {}});
    }
  }
  return nullptr;
}

NamelessPtr shift(const NamelessPtr& t, int d, int cutoff) {
  switch (t->kind) {
    case Nameless::Kind::Bound:
      if (t->index >= cutoff) return make({Nameless::Kind::Bound, "", t->index + d, {}, {}});
      return t;
    case Nameless::Kind::App:
      return make({Nameless::Kind::App, "", 0, shift(t->left, d, cutoff), shift(t->right, d, cutoff)});
    case Nameless::Kind::Lam:
      return make({Nameless::Kind::Lam, t->name, 0, shift(t->left, d, cutoff + 1), {}});
    default:
      return t;
  }
}

NamelessPtr subst(const NamelessPtr& t, int j, const NamelessPtr& s) {
  switch (t->kind) {
    case Nameless::Kind::Bound:
      return t->index == j ? s : t;
    case Nameless::Kind::App:
      return make({Nameless::Kind::App, "", 0, subst(t->left, j, s), subst(t->right, j, s)});
    case Nameless::Kind::Lam:
      return make({Nameless::Kind::Lam, t->name, 0, subst(t->left, j + 1, shift(s, 1, 0)), {}});
    default:
      return t;
  }
}

NamelessPtr beta(const NamelessPtr& lam, const NamelessPtr& arg) {
  return shift(subst(lam->left, 0, shift(arg, 1, 0)), -1, 0);
}

void collect(const NamelessPtr& t, std::vector<NamelessPtr>& out) {
  switch (t->kind) {
    case Nameless::Kind::App: {
      if (t->left->kind == Nameless::Kind::Lam) out.push_back(beta(t->left, t->right));
      std::vector<NamelessPtr> sub;
      collect(t->left, sub);
      for (auto& l : sub) out.push_back(make({Nameless::Kind::App, "", 0, l, t->right}));
      sub.clear();
      collect(t->right, sub);
      for (auto& r : sub) out.push_back(make({Nameless::Kind::App, "", 0, t->left, r}));
      break;
    }
    case Nameless::Kind::Lam: {
      std::vector<NamelessPtr> sub;
      collect(t->left, sub);
      for (auto& b : sub) out.push_back(make({Nameless::Kind::Lam, t->name, 0, b, {}}));
      break;
    }
    default:
      break;
  }
}

}  // namespace

NamelessPtr to_nameless(const Term& t) {
  std::vector<Variable> env;
  return convert(t, env);
}

std::string key(const NamelessPtr& t) {
  switch (t->kind) {
    case Nameless::Kind::Free:
      return t->name;
    case Nameless::Kind::Const:
      return "#" + t->name;
    case Nameless::Kind::Bound:
      return "%" + std::to_string(t->index);
    case Nameless::Kind::App:
      return "(" + key(t->left) + " " + key(t->right) + ")";
    case Nameless::Kind::Lam:
      return "[" + t->name + "." + key(t->left) + "]";
  }
  return "?";
}

std::vector<NamelessPtr> one_step(const NamelessPtr& t) {
  std::vector<NamelessPtr> out;
  collect(t, out);
  return out;
}

std::set<std::string> reach(const NamelessPtr& t, int depth) {
  std::set<std::string> seen{key(t)};
  std::vector<NamelessPtr> frontier{t};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<NamelessPtr> next;
    for (const auto& u : frontier) {
      for (auto& v : one_step(u)) {
        if (seen.insert(key(v)).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

bool oracle_beta_equivalent(const Term& a, const Term& b, int depth) {
  const auto ra = reach(to_nameless(a), depth);
  const auto rb = reach(to_nameless(b), depth);
  for (const auto& k : ra) {
    if (rb.count(k)) return true;
  }
  return false;
}

std::set<std::string> reachable_normal_forms(const Term& t, std::size_t max_states, bool& complete) {
  std::set<std::string> seen, normal;
  std::deque<NamelessPtr> queue{to_nameless(t)};
  seen.insert(key(queue.front()));
  complete = true;
  while (!queue.empty()) {
    NamelessPtr u = queue.front();
    queue.pop_front();
    auto next = one_step(u);
    if (next.empty()) normal.insert(key(u));
    for (auto& v : next) {
      if (seen.size() >= max_states) {
        complete = false;
        return normal;
      }
      if (seen.insert(key(v)).second) queue.push_back(v);
    }
  }
  return normal;
}

}  // namespace lf::testing
