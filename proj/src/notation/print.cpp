#include <algorithm>
#include <cctype>

#include "lf/error.hpp"
#include "lf/notation.hpp"
#include "lf/syntax.hpp"

namespace lf {

namespace {

using Deco = PrintOptions::Decorations;

struct Doc {
  enum Kind { Atom, App, Lam, Binder, Infix, Prefix } kind = Atom;
  std::string text;               // atom text or operator symbol (with subscript)
  std::vector<std::string> vars;  // Lam / Binder
  std::vector<Doc> kids;
  int level = 9;
  int lhs_min = 0, rhs_min = 0;
  bool word = false;  // operator is an alphabetic keyword
};

struct InfixInfo {
  int level, lhs_min, rhs_min;
};

InfixInfo infix_info(const std::string& op) {
  if (op == "↔") return {1, 2, 2};
  if (op == "→") return {2, 3, 2};
  if (op == "∨") return {3, 4, 3};
  if (op == "∧") return {4, 5, 4};
  if (op == "+") return {6, 7, 6};
  if (op == "∖") return {6, 7, 7};
  return {5, 6, 6};  // relations
}

const char* ascii_binder(const std::string& name) {
  if (name == "λ") return "\\";
  if (name == "∀") return "forall";
  if (name == "∃") return "exists";
  if (name == "∃!") return "unique";
  if (name == "ι") return "iota";
  return "eps";
}

class Printer {
 public:
  Printer(const PrintOptions& o, Deco mode, bool elide) : o_(o), mode_(mode), elide_(elide) {}

  std::string run(const Term& t) { return render(doc(t), true, 0); }

 private:
  bool full_parens() const { return o_.parens == PrintOptions::Parens::Full; }

  std::string type_text(const Type& ty) const {
    if (ty.is_base()) return ty.is_e() ? "e" : "t";
    return "{" + to_string(ty, TypeStyle::Abbreviated, o_.ascii) + "}";
  }

  std::string var_text(const Variable& v, bool binder) const {
    std::string s = v.name();
    if (mode_ == Deco::Full || (binder && mode_ == Deco::Binders)) s += "^" + type_text(v.type);
    return s;
  }

  std::string symbol(const Definition& d, const std::vector<Type>& params) const {
    std::string s = o_.ascii ? d.ascii : d.name;
    if (!params.empty() && mode_ != Deco::None) s += "_" + type_text(params[0]);
    return s;
  }

  std::string con_symbol(const Constant& c) const {
    std::string s;
    switch (c.kind) {
      case ConstantKind::Include:
        s = o_.ascii ? "<=" : "⊆";
        break;
      case ConstantKind::Iota:
        s = o_.ascii ? "iota" : "ι";
        break;
      case ConstantKind::Epsilon:
        s = o_.ascii ? "eps" : "ε";
        break;
    }
    if (mode_ != Deco::None) s += "_" + type_text(c.index);
    return s;
  }

  static Doc atom(std::string text) {
    Doc d;
    d.kind = Doc::Atom;
    d.text = std::move(text);
    return d;
  }

  Doc apply(Doc head, const std::vector<Term>& args, std::size_t from) {
    if (from >= args.size()) return head;
    if (full_parens()) {
      for (std::size_t i = from; i < args.size(); ++i) {
        Doc d;
        d.kind = Doc::App;
        d.level = 8;
        d.kids = {std::move(head), doc(args[i])};
        head = std::move(d);
      }
      return head;
    }
    Doc d;
    d.kind = Doc::App;
    d.level = 8;
    if (head.kind == Doc::App) {
      d.kids = std::move(head.kids);
    } else {
      d.kids.push_back(std::move(head));
    }
    for (std::size_t i = from; i < args.size(); ++i) d.kids.push_back(doc(args[i]));
    return d;
  }

  Doc infix(const std::string& op, bool word, const Term& l, const Term& r, const std::string& key) {
    Doc d;
    d.kind = Doc::Infix;
    d.text = op;
    d.word = word;
    const InfixInfo info = infix_info(key);
    d.level = info.level;
    d.lhs_min = info.lhs_min;
    d.rhs_min = info.rhs_min;
    d.kids = {doc(l), doc(r)};
    return d;
  }

  Doc prefix(const std::string& op, bool word, const Term& arg) {
    Doc d;
    d.kind = Doc::Prefix;
    d.text = op;
    d.word = word;
    d.level = 7;
    d.kids = {doc(arg)};
    return d;
  }

  Doc binder(const std::string& name, const Term& abs) {
    Doc d;
    d.kind = Doc::Binder;
    d.level = 0;
    d.text = o_.ascii ? ascii_binder(name) : name;
    d.word = o_.ascii;
    d.vars = {var_text(abs.bound(), true)};
    d.kids = {doc(abs.body())};
    return d;
  }

  // A prefix of an application spine that is an abbreviation, if any.
  const Definition* fold_match(const Term& t, std::vector<Type>& params) const {
    if (t.is_var()) return nullptr;
    for (const Definition& d : definition_table()) {
      if (d.fixity == Fixity::Binder || d.name == "⊆" || d.name == "ι" || d.name == "ε" || d.name == "∃!") continue;
      auto ps = match_definition_type(d, t.type());
      if (!ps) continue;
      const Term inst = instantiate_def(d.name, *ps, Extension::Epsilon);
      if (inst.alpha_hash() == t.alpha_hash() && alpha_equal(inst, t)) {
        params = *ps;
        return &d;
      }
    }
    return nullptr;
  }

  Doc notation(const Definition& d, const std::vector<Type>& params, const std::vector<Term>& args, std::size_t k) {
    const std::size_t rest = args.size() - k;
    const std::string shown = o_.ascii ? d.ascii : d.name;
    const bool word = std::isalpha(static_cast<unsigned char>(shown[0]));
    switch (d.fixity) {
      case Fixity::Infix:
        if (rest >= 2) return apply(infix(symbol(d, params), word, args[k], args[k + 1], d.name), args, k + 2);
        return apply(atom("(" + symbol(d, params) + ")"), args, k);
      case Fixity::Prefix:
        if (rest >= 1 && d.binder_sugar && args[k].is_abs()) return apply(binder(d.name, args[k]), args, k + 1);
        if (rest >= 1) return apply(prefix(symbol(d, params), word || !params.empty(), args[k]), args, k + 1);
        return atom(rest == 0 && k == 0 ? "(" + symbol(d, params) + ")" : symbol(d, params));
      default:
        if (d.name == "1" && rest >= 1 && args[k].is_abs()) return apply(binder("∃!", args[k]), args, k + 1);
        return apply(atom(symbol(d, params)), args, k);
    }
  }

  Doc doc(const Term& t) {
    std::vector<Term> args;
    std::vector<Term> prefixes;  // prefixes[k] = head applied to the first k args
    {
      Term cur = t;
      std::vector<Term> rev;
      while (cur.is_app()) {
        rev.push_back(cur.arg());
        prefixes.push_back(cur);
        cur = cur.fun();
      }
      prefixes.push_back(cur);
      args.assign(rev.rbegin(), rev.rend());
      std::reverse(prefixes.begin(), prefixes.end());
    }
    if (o_.fold) {
      for (std::size_t k = args.size() + 1; k-- > 0;) {
        std::vector<Type> params;
        if (const Definition* d = fold_match(prefixes[k], params)) return notation(*d, params, args, k);
      }
    }
    const Term& head = prefixes[0];
    switch (head.kind()) {
      case TermKind::Var:
        return apply(atom(var_text(head.variable(), false)), args, 0);
      case TermKind::Con: {
        const Constant& c = head.constant();
        if (c.kind == ConstantKind::Include && args.size() >= 2) {
          return apply(infix(con_symbol(c), o_.ascii, args[0], args[1], "⊆"), args, 2);
        }
        if (c.kind == ConstantKind::Include) return apply(atom("(" + con_symbol(c) + ")"), args, 0);
        if (!args.empty()) return apply(prefix(con_symbol(c), true, args[0]), args, 1);
        return atom("(" + con_symbol(c) + ")");
      }
      case TermKind::Abs: {
        Doc d;
        d.kind = Doc::Lam;
        d.level = 0;
        d.text = o_.ascii ? "\\" : "λ";
        Term body = head;
        do {
          d.vars.push_back(var_text(body.bound(), true));
          body = body.body();
        } while (!full_parens() && body.is_abs() && !(o_.fold && fold_match(body, scratch_)));
        d.kids = {doc(body)};
        return apply(std::move(d), args, 0);
      }
      case TermKind::App:
        break;
    }
    return atom("?");
  }

  std::string join(const std::string& a, const std::string& b, bool space) const {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (space) return a + " " + b;
    const unsigned char x = static_cast<unsigned char>(a.back());
    const unsigned char y = static_cast<unsigned char>(b.front());
    if (std::isdigit(x) && std::isdigit(y)) return a + " " + b;
    return a + b;
  }

  bool spaced() const { return !o_.compact || o_.ascii; }

  std::string render(const Doc& d, bool tail, int min) {
    bool wrap;
    if (full_parens()) {
      wrap = d.kind != Doc::Atom;
    } else if (d.kind == Doc::Lam || d.kind == Doc::Binder) {
      wrap = !tail;
    } else {
      wrap = d.level < min;
    }
    if (wrap) return "(" + body(d, true) + ")";
    return body(d, tail);
  }

  std::string body(const Doc& d, bool tail) {
    switch (d.kind) {
      case Doc::Atom:
        return d.text;
      case Doc::Lam:
      case Doc::Binder: {
        std::string head = d.text;
        if (d.word && d.kind == Doc::Binder) head += " ";
        for (const auto& v : d.vars) head += v;
        head += ".";
        const bool space = spaced() && d.kids[0].kind != Doc::Atom;
        return join(head, render(d.kids[0], true, 0), space);
      }
      case Doc::Infix: {
        // binders are always bracketed as operands of infix operators
        const std::string l = render(d.kids[0], false, d.lhs_min);
        const std::string r = render(d.kids[1], false, d.rhs_min);
        const bool space = spaced() || d.word;
        return join(join(l, d.text, space), r, space);
      }
      case Doc::Prefix:
        return join(d.text, render(d.kids[0], tail, 7), d.word || (spaced() && d.text.find('_') != std::string::npos));
      case Doc::App: {
        std::string out = render(d.kids[0], false, 8);
        for (std::size_t i = 1; i < d.kids.size(); ++i) {
          const bool last = i + 1 == d.kids.size();
          std::string arg;
          if (last && elide_ && d.kids[i].kind == Doc::App && !full_parens()) {
            arg = body(d.kids[i], tail);
          } else {
            // a trailing prefix form needs no parentheses, a trailing application does
            arg = render(d.kids[i], last && tail, last && d.kids[i].kind != Doc::App ? 7 : 9);
          }
          out = join(out, arg, spaced());
        }
        return out;
      }
    }
    return "";
  }

  const PrintOptions& o_;
  Deco mode_;
  bool elide_;
  std::vector<Type> scratch_;
};

bool round_trips(const std::string& text, const Term& t) {
  try {
    return alpha_equal(read_term(text, Extension::Epsilon), t);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::string print(const Term& a, const PrintOptions& opts) {
  std::vector<Deco> modes;
  if (opts.decorations == Deco::Auto) {
    modes = {Deco::None, Deco::Binders, Deco::Full};
  } else {
    modes = {opts.decorations};
  }
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const bool last = i + 1 == modes.size();
    if (opts.elide_application_parens) {
      std::string s = Printer(opts, modes[i], true).run(a);
      if (round_trips(s, a)) return s;
    }
    std::string s = Printer(opts, modes[i], false).run(a);
    if (last || round_trips(s, a)) return s;
  }
  return "";
}

std::string print_type(const Type& ty, bool ascii) { return to_string(ty, TypeStyle::Abbreviated, ascii); }

}  // namespace lf
