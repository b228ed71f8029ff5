#include <algorithm>

#include "lf/error.hpp"
#include "lf/syntax.hpp"

namespace lf {

std::vector<Variable> free_vars(const Term& a) { return a.free_vars(); }

// --- alpha equivalence -------------------------------------------------------

namespace {

class AlphaComparer {
 public:
  bool equal(const Term& a, const Term& b) {
    if (a.alpha_hash() != b.alpha_hash() || a.kind() != b.kind() || a.type() != b.type()) return false;
    if (a.same_node(b) && consistent(a)) return true;
    switch (a.kind()) {
      case TermKind::Var: {
        const int li = depth_of(left_, a.variable());
        const int ri = depth_of(right_, b.variable());
        if (li < 0 && ri < 0) return a.variable() == b.variable();
        return li == ri;
      }
      case TermKind::Con:
        return a.constant() == b.constant();
      case TermKind::App:
        return equal(a.fun(), b.fun()) && equal(a.arg(), b.arg());
      case TermKind::Abs: {
        if (a.bound().type != b.bound().type) return false;
        left_.push_back(&a.bound());
        right_.push_back(&b.bound());
        const bool ok = equal(a.body(), b.body());
        left_.pop_back();
        right_.pop_back();
        return ok;
      }
    }
    return false;
  }

 private:
  // Index of the innermost binder of v counted from the innermost end, or -1.
  static int depth_of(const std::vector<const Variable*>& env, const Variable& v) {
    for (std::size_t i = env.size(); i-- > 0;) {
      if (*env[i] == v) return static_cast<int>(env.size() - 1 - i);
    }
    return -1;
  }

  // A shared subterm is equal to itself iff every free variable is resolved
  // identically by both environments.
  bool consistent(const Term& a) const {
    if (left_.empty()) return true;
    for (const Variable& v : a.free_vars()) {
      if (depth_of(left_, v) != depth_of(right_, v)) return false;
    }
    return true;
  }

  std::vector<const Variable*> left_, right_;
};

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  AlphaComparer cmp;
  return cmp.equal(a, b);
}

// --- substitution ------------------------------------------------------------

Variable fresh_variable(char letter, const Type& type, const std::vector<Variable>& avoid) {
  for (std::uint32_t primes = 0;; ++primes) {
    Variable v(letter, type, primes);
    if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) return v;
  }
}

Variable fresh_variable(char letter, const Type& type, std::initializer_list<const Term*> avoid) {
  std::vector<Variable> vars;
  for (const Term* t : avoid) vars.insert(vars.end(), t->free_vars().begin(), t->free_vars().end());
  return fresh_variable(letter, type, vars);
}

namespace {

Term subst(const Term& a, const Variable& x, const Term& b) {
  if (!a.has_free(x)) return a;
  switch (a.kind()) {
    case TermKind::Var:
      return b;
    case TermKind::Con:
      return a;
    case TermKind::App:
      return Term::app(subst(a.fun(), x, b), subst(a.arg(), x, b));
    case TermKind::Abs: {
      const Variable& y = a.bound();
      if (b.has_free(y)) {
        std::vector<Variable> avoid = b.free_vars();
        avoid.insert(avoid.end(), a.body().free_vars().begin(), a.body().free_vars().end());
        const Variable renamed = fresh_variable(y.letter, y.type, avoid);
        const Term body = subst(a.body(), y, Term::var(renamed));
        return Term::abs(renamed, subst(body, x, b));
      }
      return Term::abs(y, subst(a.body(), x, b));
    }
  }
  return a;
}

}  // namespace

Term substitute(const Term& a, const Variable& x, const Term& b) {
  if (b.type() != x.type) {
    fail(ErrorCode::TypeMismatch, "cannot substitute a term of type " + to_string(b.type()) +
                                      " for variable " + x.name() + " of type " + to_string(x.type));
  }
  return subst(a, x, b);
}

// --- beta reduction ----------------------------------------------------------

Term contract_root(const Term& a) {
  return substitute(a.fun().body(), a.fun().bound(), a.arg());
}

namespace {

class Normaliser {
 public:
  explicit Normaliser(std::size_t fuel) : fuel_(fuel) {}

  Term run(const Term& t) {
    if (t.beta_normal()) return t;
    Term head = t;
    std::vector<Term> args;  // reversed: back() is the first argument
    unwind(head, args);
    while (head.is_abs() && !args.empty()) {
      tick();
      head = substitute(head.body(), head.bound(), args.back());
      args.pop_back();
      unwind(head, args);
    }
    if (head.is_abs()) return Term::abs(head.bound(), run(head.body()));
    Term out = head;
    for (auto it = args.rbegin(); it != args.rend(); ++it) out = Term::app(out, run(*it));
    return out;
  }

 private:
  static void unwind(Term& head, std::vector<Term>& args) {
    std::vector<Term> extra;
    while (head.is_app()) {
      extra.push_back(head.arg());
      head = head.fun();
    }
    // extra holds the new arguments outermost-first; they precede the old ones.
    args.insert(args.end(), extra.begin(), extra.end());
  }

  void tick() {
    if (++steps_ > fuel_) fail(ErrorCode::FuelExhausted, "beta reduction exceeded " + std::to_string(fuel_) + " steps");
  }

  std::size_t fuel_;
  std::size_t steps_ = 0;
};

}  // namespace

Term beta_normal_form(const Term& a, std::size_t fuel) {
  Normaliser n(fuel);
  return n.run(a);
}

bool is_beta_normal(const Term& a) { return a.beta_normal(); }

bool beta_equivalent(const Term& a, const Term& b) {
  if (a.type() != b.type()) {
    fail(ErrorCode::TypeMismatch, "beta equivalence between terms of types " + to_string(a.type()) + " and " +
                                      to_string(b.type()));
  }
  if (alpha_equal(a, b)) return true;
  return alpha_equal(beta_normal_form(a), beta_normal_form(b));
}

// --- traversal ---------------------------------------------------------------

void visit(const Term& a, const std::function<bool(const Term&)>& fn) {
  if (!fn(a)) return;
  switch (a.kind()) {
    case TermKind::App:
      visit(a.fun(), fn);
      visit(a.arg(), fn);
      break;
    case TermKind::Abs:
      visit(a.body(), fn);
      break;
    default:
      break;
  }
}

const Term& subterm_at(const Term& a, const Path& path) {
  const Term* cur = &a;
  for (unsigned char step : path) {
    if (cur->is_app()) {
      cur = step == 0 ? &cur->fun() : &cur->arg();
    } else if (cur->is_abs() && step == 0) {
      cur = &cur->body();
    } else {
      fail(ErrorCode::ShapeMismatch, "path does not address a subterm");
    }
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& a, const Path& path, std::size_t i, const Term& replacement) {
  if (i == path.size()) {
    if (replacement.type() != a.type()) fail(ErrorCode::TypeMismatch, "replacement changes the type of the subterm");
    return replacement;
  }
  if (a.is_app()) {
    if (path[i] == 0) return Term::app(replace_rec(a.fun(), path, i + 1, replacement), a.arg());
    return Term::app(a.fun(), replace_rec(a.arg(), path, i + 1, replacement));
  }
  if (a.is_abs() && path[i] == 0) return Term::abs(a.bound(), replace_rec(a.body(), path, i + 1, replacement));
  fail(ErrorCode::ShapeMismatch, "path does not address a subterm");
}

}  // namespace

Term replace_at(const Term& a, const Path& path, const Term& replacement) {
  return replace_rec(a, path, 0, replacement);
}

}  // namespace lf
