#include <map>
#include <memory>
#include <mutex>

#include "lf/error.hpp"
#include "lf/notation.hpp"

namespace lf {

namespace {

// --- types with metavariables --------------------------------------------------

class MetaTypes {
 public:
  MetaTypes() {
    e_ = push({Node::E});
    t_ = push({Node::T});
  }

  int e() const { return e_; }
  int t() const { return t_; }
  int meta() { return push({Node::Meta}); }
  int fun(int a, int b) { return push({Node::Fun, a, b}); }

  int from(const Type& ty) {
    if (ty.is_e()) return e_;
    if (ty.is_t()) return t_;
    return fun(from(ty.domain()), from(ty.codomain()));
  }

  // Schema text over e, t, a (the parameter) and <...>.
  int from_schema(std::string_view s, int param) {
    std::size_t i = 0;
    return schema_seq(s, i, param);
  }

  int find(int x) {
    while (nodes_[x].kind == Node::Meta && nodes_[x].bind >= 0) x = nodes_[x].bind;
    return x;
  }

  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    Node& na = nodes_[a];
    Node& nb = nodes_[b];
    if (na.kind == Node::Meta) return bind(a, b);
    if (nb.kind == Node::Meta) return bind(b, a);
    if (na.kind != nb.kind) return false;
    if (na.kind != Node::Fun) return true;
    const int a1 = na.a, a2 = na.b, b1 = nb.a, b2 = nb.b;
    return unify(a1, b1) && unify(a2, b2);
  }

  std::optional<Type> resolve(int x) {
    x = find(x);
    const Node n = nodes_[x];
    switch (n.kind) {
      case Node::E:
        return Type::e();
      case Node::T:
        return Type::t();
      case Node::Meta:
        return std::nullopt;
      case Node::Fun: {
        auto d = resolve(n.a);
        if (!d) return std::nullopt;
        auto c = resolve(n.b);
        if (!c) return std::nullopt;
        return Type::fun(*d, *c);
      }
    }
    return std::nullopt;
  }

  std::string show(int x) {
    x = find(x);
    const Node n = nodes_[x];
    switch (n.kind) {
      case Node::E:
        return "e";
      case Node::T:
        return "t";
      case Node::Meta:
        return "?" + std::to_string(x);
      case Node::Fun:
        return "⟨" + show(n.a) + show(n.b) + "⟩";
    }
    return "";
  }

 private:
  struct Node {
    enum Kind { E, T, Fun, Meta } kind;
    int a = -1, b = -1;
    int bind = -1;
  };

  int push(Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool occurs(int m, int x) {
    x = find(x);
    if (x == m) return true;
    const Node n = nodes_[x];
    return n.kind == Node::Fun && (occurs(m, n.a) || occurs(m, n.b));
  }

  bool bind(int m, int x) {
    if (occurs(m, x)) return false;
    nodes_[m].bind = x;
    return true;
  }

  int schema_item(std::string_view s, std::size_t& i, int param) {
    const char c = s[i++];
    if (c == 'e') return e_;
    if (c == 't') return t_;
    if (c == 'a') return param;
    const int inner = schema_seq(s, i, param);
    ++i;
    return inner;
  }

  int schema_seq(std::string_view s, std::size_t& i, int param) {
    std::vector<int> items;
    while (i < s.size() && s[i] != '>') items.push_back(schema_item(s, i, param));
    int out = items.back();
    for (std::size_t k = items.size() - 1; k-- > 0;) out = fun(items[k], out);
    return out;
  }

  std::vector<Node> nodes_;
  int e_ = 0, t_ = 0;
};

// --- bracketings of application chains -------------------------------------------

struct Tree {
  int leaf = -1;
  std::shared_ptr<const Tree> left, right;
};
using TreePtr = std::shared_ptr<const Tree>;

// All binary trees over leaves [lo, hi); the left-associated tree comes first.
std::vector<TreePtr> trees(int lo, int hi) {
  if (hi - lo == 1) return {std::make_shared<Tree>(Tree{lo, nullptr, nullptr})};
  std::vector<TreePtr> out;
  for (int split = hi - 1; split > lo; --split) {
    for (const auto& l : trees(lo, split)) {
      for (const auto& r : trees(split, hi)) out.push_back(std::make_shared<Tree>(Tree{-1, l, r}));
    }
  }
  return out;
}

const std::vector<TreePtr>& trees_for(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<TreePtr>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, trees(0, n)).first;
  return it->second;
}

constexpr int kMaxRebracketLeaves = 8;
constexpr std::size_t kMaxCombinations = 4096;

// --- elaboration -----------------------------------------------------------------

struct Failure {
  ErrorCode code;
  std::string detail;
};

struct Group {
  char letter;
  std::uint32_t primes;
  int ty;
  bool decorated;
  std::optional<Type> binder_decoration;
};

struct ENode {
  enum Kind { Var, Const, App, Abs, ClassAbs } kind = Var;
  int ty = -1;
  int group = -1;
  const Definition* def = nullptr;
  int param = -1;
  int a = -1, b = -1;
  Span span;
};

struct FreeOcc {
  int node;
  char letter;
  std::uint32_t primes;
  std::optional<Type> decoration;
};

class Attempt {
 public:
  Attempt(const ElabOptions& opts, const std::vector<int>& choices) : opts_(opts), choices_(choices) {}

  // Sizes of the rebracketable chains met during the walk (in walk order).
  const std::vector<int>& chain_sizes() const { return chain_sizes_; }

  Term run(const SurfaceTerm& s) {
    const int root = convert(s);
    resolve_free();
    for (const Group& g : groups_) {
      if (!g.decorated && (g.letter == 'p' || g.letter == 'q')) constraints_.push_back({g.ty, types_.t(), {}});
    }
    for (const Constraint& c : constraints_) {
      if (!types_.unify(c.a, c.b)) {
        throw Failure{ErrorCode::NoCompletion, "no typing: " + types_.show(c.a) + " cannot be " + types_.show(c.b) +
                                                   where(c.span)};
      }
    }
    for (const auto& [node, name] : vector_params_) {
      auto ty = types_.resolve(node);
      std::vector<Type> args;
      if (ty && !ty->relational_args(args)) {
        throw Failure{ErrorCode::NoCompletion, "'" + name + "' needs a relational type, not " + to_string(*ty)};
      }
    }
    built_.assign(nodes_.size(), std::nullopt);
    return build(root);
  }

 private:
  struct Constraint {
    int a, b;
    Span span;
  };

  static std::string where(const Span& span) {
    if (span.end == 0) return "";
    return " (column " + std::to_string(span.begin + 1) + ")";
  }

  int add(ENode n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void require(const Definition& d, const Span& span) {
    if (!permits(opts_.extensions, d.guard)) {
      throw Failure{ErrorCode::GuardViolation,
                    "'" + d.name + "' is only available in theories with " +
                        (d.guard == Extension::Iota ? "description (ι)" : "choice (ε)") + where(span)};
    }
  }

  int constant(const std::string& name, const std::optional<Type>& subscript, int param_ty, const Span& span) {
    const Definition* d = find_definition(name);
    if (!d) throw Failure{ErrorCode::UnknownNotation, "'" + name + "' is not defined" + where(span)};
    require(*d, span);
    ENode n;
    n.kind = ENode::Const;
    n.def = d;
    n.span = span;
    if (d->params == 1) {
      n.param = param_ty >= 0 ? param_ty : types_.meta();
      if (subscript) constraints_.push_back({n.param, types_.from(*subscript), span});
      if (d->vector) vector_params_.emplace_back(n.param, d->name);
    } else if (subscript) {
      throw Failure{ErrorCode::ArityMismatch, "'" + d->name + "' takes no type subscript" + where(span)};
    }
    n.ty = types_.from_schema(d->type_schema, n.param);
    return add(n);
  }

  int app(int f, int a, const Span& span) {
    ENode n;
    n.kind = ENode::App;
    n.a = f;
    n.b = a;
    n.ty = types_.meta();
    n.span = span;
    constraints_.push_back({nodes_[f].ty, types_.fun(nodes_[a].ty, n.ty), span});
    return add(n);
  }

  int bind_var(const SurfaceTerm::Name& v) {
    Group g{v.letter, v.primes, v.decoration ? types_.from(*v.decoration) : types_.meta(), v.decoration.has_value(),
            v.decoration};
    groups_.push_back(g);
    return static_cast<int>(groups_.size()) - 1;
  }

  int var_node(int group, const Span& span) {
    ENode n;
    n.kind = ENode::Var;
    n.group = group;
    n.ty = groups_[group].ty;
    n.span = span;
    return add(n);
  }

  int abs(int group, int body, const Span& span) {
    ENode n;
    n.kind = ENode::Abs;
    n.group = group;
    n.a = body;
    n.ty = types_.fun(groups_[group].ty, nodes_[body].ty);
    n.span = span;
    return add(n);
  }

  int tree_node(const Tree& tr, const std::vector<int>& items, const Span& span) {
    if (tr.leaf >= 0) return items[tr.leaf];
    const int l = tree_node(*tr.left, items, span);
    const int r = tree_node(*tr.right, items, span);
    return app(l, r, span);
  }

  int convert(const SurfaceTerm& s) {
    using K = SurfaceTerm::Kind;
    switch (s.kind) {
      case K::Var:
        return variable(s);
      case K::Notation:
        return constant(s.name, s.subscript, -1, s.span);
      case K::Apply: {
        const int f = convert(s.kids[0]);
        const int a = convert(s.kids[1]);
        return app(f, a, s.span);
      }
      case K::Juxt: {
        if (s.kids.size() == 1) return convert(s.kids[0]);
        std::vector<int> items;
        for (const auto& k : s.kids) items.push_back(convert(k));
        const int n = static_cast<int>(items.size());
        int choice = 0;
        if (n >= 3 && n <= kMaxRebracketLeaves) {
          const std::size_t idx = chain_sizes_.size();
          chain_sizes_.push_back(n);
          if (idx < choices_.size()) choice = choices_[idx];
        }
        return tree_node(*trees_for(n)[choice], items, s.span);
      }
      case K::Binder:
        return binder(s);
      case K::ClassAbs: {
        const Definition* d = find_definition("{:}");
        require(*d, s.span);
        const int g = bind_var(s.var);
        env_.push_back(g);
        const int body = convert(s.kids[0]);
        env_.pop_back();
        constraints_.push_back({nodes_[body].ty, types_.t(), s.kids[0].span});
        ENode n;
    n.kind = ENode::ClassAbs;
        n.group = g;
        n.a = body;
        n.ty = types_.fun(groups_[g].ty, types_.t());
        n.span = s.span;
        return add(n);
      }
    }
    return -1;
  }

  int variable(const SurfaceTerm& s) {
    const auto& v = s.var;
    for (std::size_t i = env_.size(); i-- > 0;) {
      Group& g = groups_[env_[i]];
      if (g.letter != v.letter || g.primes != v.primes) continue;
      // an explicitly decorated binder does not capture an occurrence
      // decorated with another type
      if (v.decoration && g.binder_decoration && *g.binder_decoration != *v.decoration) continue;
      if (v.decoration) {
        g.decorated = true;
        constraints_.push_back({g.ty, types_.from(*v.decoration), s.span});
      }
      return var_node(env_[i], s.span);
    }
    ENode n;
    n.kind = ENode::Var;
    n.ty = types_.meta();
    n.span = s.span;
    const int id = add(n);
    free_.push_back({id, v.letter, v.primes, v.decoration});
    return id;
  }

  int binder(const SurfaceTerm& s) {
    using BK = SurfaceTerm::BinderKind;
    int set = -1;
    if (s.bounded) set = convert(s.kids[0]);
    std::vector<int> gs;
    for (const auto& v : s.vars) {
      gs.push_back(bind_var(v));
      env_.push_back(gs.back());
    }
    int body = convert(s.kids.back());
    env_.resize(env_.size() - gs.size());
    if (s.binder != BK::Lambda) constraints_.push_back({nodes_[body].ty, types_.t(), s.kids.back().span});
    const char* q = nullptr;
    switch (s.binder) {
      case BK::Lambda:
        break;
      case BK::Forall:
        q = "∀";
        break;
      case BK::Exists:
        q = "∃";
        break;
      case BK::ExistsUnique:
        q = "∃!";
        break;
      case BK::Iota:
        q = "ι";
        break;
      case BK::Epsilon:
        q = "ε";
        break;
    }
    for (std::size_t i = gs.size(); i-- > 0;) {
      if (set >= 0) {
        const bool universal = s.binder == BK::Forall;
        const int conn = constant(universal ? "→" : "∧", std::nullopt, -1, s.span);
        const int member = app(set, var_node(gs[i], s.span), s.span);
        body = app(app(conn, member, s.span), body, s.span);
      }
      body = abs(gs[i], body, s.span);
      if (q) body = app(constant(q, std::nullopt, groups_[gs[i]].ty, s.span), body, s.span);
    }
    return body;
  }

  void resolve_free() {
    std::map<std::pair<char, std::uint32_t>, std::vector<const FreeOcc*>> by_name;
    for (const FreeOcc& f : free_) by_name[{f.letter, f.primes}].push_back(&f);
    for (const auto& [name, occs] : by_name) {
      std::vector<std::pair<Type, int>> decorated;
      auto group_for = [&](const Type& ty) {
        for (auto& [t, g] : decorated) {
          if (t == ty) return g;
        }
        groups_.push_back({name.first, name.second, types_.from(ty), true, ty});
        decorated.emplace_back(ty, static_cast<int>(groups_.size()) - 1);
        return decorated.back().second;
      };
      for (const FreeOcc* f : occs) {
        if (f->decoration) nodes_[f->node].group = group_for(*f->decoration);
      }
      if (decorated.empty()) {
        for (auto it = opts_.scope.rbegin(); it != opts_.scope.rend(); ++it) {
          if (it->letter == name.first && it->primes == name.second) {
            group_for(it->type);
            break;
          }
        }
      }
      int plain = -1;
      for (const FreeOcc* f : occs) {
        if (f->decoration) continue;
        if (decorated.size() > 1) {
          throw Failure{ErrorCode::AmbiguousTypes, "free " + std::string(1, name.first) + std::string(name.second, '\'') +
                                                       " is decorated with several types; decorate every occurrence"};
        }
        if (decorated.size() == 1) {
          nodes_[f->node].group = decorated[0].second;
        } else {
          if (plain < 0) {
            groups_.push_back({name.first, name.second, types_.meta(), false, std::nullopt});
            plain = static_cast<int>(groups_.size()) - 1;
          }
          nodes_[f->node].group = plain;
        }
      }
      for (const FreeOcc* f : occs) constraints_.push_back({nodes_[f->node].ty, groups_[nodes_[f->node].group].ty, nodes_[f->node].span});
    }
  }

  Type resolved(int ty, const std::string& what, const Span& span) {
    auto r = types_.resolve(ty);
    if (!r) throw Failure{ErrorCode::AmbiguousTypes, "the type of " + what + " is not determined" + where(span)};
    return *r;
  }

  Variable variable_of(int group, const Span& span) {
    const Group& g = groups_[group];
    const std::string name = std::string(1, g.letter) + std::string(g.primes, '\'');
    return Variable(g.letter, resolved(g.ty, name, span), g.primes);
  }

  Term build(int id) {
    if (built_[id]) return *built_[id];
    const ENode& n = nodes_[id];
    std::optional<Term> out;
    switch (n.kind) {
      case ENode::Var:
        out = Term::var(variable_of(n.group, n.span));
        break;
      case ENode::Const: {
        std::vector<Type> params;
        if (n.param >= 0) params.push_back(resolved(n.param, "'" + n.def->name + "'", n.span));
        out = instantiate_def(n.def->name, params, Extension::Epsilon);
        break;
      }
      case ENode::App:
        out = Term::app(build(n.a), build(n.b));
        break;
      case ENode::Abs:
        out = Term::abs(variable_of(n.group, n.span), build(n.a));
        break;
      case ENode::ClassAbs:
        out = class_abstraction(variable_of(n.group, n.span), build(n.a));
        break;
    }
    built_[id] = out;
    return *out;
  }

  ElabOptions opts_;
  std::vector<int> choices_;
  MetaTypes types_;
  std::vector<ENode> nodes_;
  std::vector<Group> groups_;
  std::vector<int> env_;
  std::vector<FreeOcc> free_;
  std::vector<Constraint> constraints_;
  std::vector<std::pair<int, std::string>> vector_params_;
  std::vector<int> chain_sizes_;
  std::vector<std::optional<Term>> built_;
};

struct Outcome {
  std::optional<Term> term;
  std::optional<Failure> failure;
  std::vector<int> chain_sizes;
};

Outcome attempt(const SurfaceTerm& s, const ElabOptions& opts, const std::vector<int>& choices) {
  Attempt a(opts, choices);
  Outcome out;
  try {
    out.term = a.run(s);
  } catch (const Failure& f) {
    out.failure = f;
  } catch (const Error& e) {
    out.failure = Failure{e.code(), e.detail()};
  }
  out.chain_sizes = a.chain_sizes();
  return out;
}

}  // namespace

Term elaborate(const SurfaceTerm& s, const ElabOptions& opts) {
  Outcome first = attempt(s, opts, {});
  if (first.term) return *first.term;
  if (first.failure->code != ErrorCode::NoCompletion || first.chain_sizes.empty()) {
    fail(first.failure->code, first.failure->detail);
  }
  // Application is left associative by default; when that reading has no
  // typing, accept the unique alternative grouping that has one.
  std::vector<std::size_t> radix;
  std::size_t total = 1;
  for (int n : first.chain_sizes) {
    radix.push_back(trees_for(n).size());
    total *= radix.back();
    if (total > kMaxCombinations) fail(first.failure->code, first.failure->detail);
  }
  std::vector<Term> found;
  bool ambiguous = false;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<int> choices;
    std::size_t rest = code;
    for (std::size_t r : radix) {
      choices.push_back(static_cast<int>(rest % r));
      rest /= r;
    }
    Outcome o = attempt(s, opts, choices);
    // a different walk shape means the choices no longer line up; skip
    if (o.chain_sizes != first.chain_sizes) continue;
    if (o.term) found.push_back(*o.term);
    if (o.failure && o.failure->code == ErrorCode::AmbiguousTypes) ambiguous = true;
  }
  if (found.size() == 1 && !ambiguous) return found.front();
  if (!found.empty() || ambiguous) {
    fail(ErrorCode::AmbiguousTypes, "several groupings of an application chain are well typed; add parentheses");
  }
  fail(first.failure->code, first.failure->detail);
}

Term read_term(std::string_view text, const ElabOptions& opts) { return elaborate(parse(text), opts); }

}  // namespace lf
