#include <cctype>
#include <utility>

#include "lf/error.hpp"
#include "lf/notation.hpp"

namespace lf {

namespace {

enum class Tok {
  End,
  Var,
  Num,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Dot,
  Colon,
  In,
  Lambda,
  Quant,   // ∀ ∃ ∃! ι ε: binder or prefix depending on what follows
  Prefix,  // ¬ □ ◇ @ ℕ class
  Const,   // ⊤ ⊥ †
  Infix,
};

struct Token {
  Tok kind = Tok::End;
  Span span;
  std::string name;  // canonical notation name for Quant/Prefix/Const/Infix
  SurfaceTerm::Name var;
  unsigned long number = 0;
  std::optional<Type> subscript;
};

struct Symbol {
  const char* text;
  Tok kind;
  const char* name;
};

// Longest spellings first where one is a prefix of another.
const Symbol kSymbols[] = {
    {"<->", Tok::Infix, "↔"}, {"->", Tok::Infix, "→"},  {"<=", Tok::Infix, "⊆"},  {"!=", Tok::Infix, "≠"},
    {"==", Tok::Infix, "≡"},  {"=", Tok::Infix, "="},   {"&", Tok::Infix, "∧"},   {"|", Tok::Infix, "∨"},
    {"+", Tok::Infix, "+"},   {"~", Tok::Prefix, "¬"},  {"@", Tok::Prefix, "@"},  {"\\", Tok::Lambda, "λ"},
    {"λ", Tok::Lambda, "λ"},  {"∀", Tok::Quant, "∀"},   {"∃!", Tok::Quant, "∃!"}, {"∃", Tok::Quant, "∃"},
    {"ι", Tok::Quant, "ι"},   {"ε", Tok::Quant, "ε"},   {"¬", Tok::Prefix, "¬"},  {"□", Tok::Prefix, "□"},
    {"◇", Tok::Prefix, "◇"},  {"ℕ", Tok::Prefix, "ℕ"},  {"⊤", Tok::Const, "⊤"},   {"⊥", Tok::Const, "⊥"},
    {"†", Tok::Const, "†"},   {"α", Tok::Const, "α"},   {"∧", Tok::Infix, "∧"},   {"∨", Tok::Infix, "∨"},   {"→", Tok::Infix, "→"},
    {"↔", Tok::Infix, "↔"},   {"≡", Tok::Infix, "≡"},   {"≠", Tok::Infix, "≠"},   {"⊆", Tok::Infix, "⊆"},
    {"∖", Tok::Infix, "∖"},   {"∈", Tok::In, "∈"},      {"(", Tok::LParen, ""},   {")", Tok::RParen, ""},
    {"{", Tok::LBrace, ""},   {"}", Tok::RBrace, ""},   {".", Tok::Dot, ""},      {":", Tok::Colon, ""},
};

const Symbol kKeywords[] = {
    {"lam", Tok::Lambda, "λ"},     {"forall", Tok::Quant, "∀"},   {"exists", Tok::Quant, "∃"},
    {"unique", Tok::Quant, "∃!"}, {"iota", Tok::Quant, "ι"},     {"eps", Tok::Quant, "ε"},
    {"not", Tok::Prefix, "¬"},     {"box", Tok::Prefix, "□"},     {"dia", Tok::Prefix, "◇"},
    {"Nat", Tok::Prefix, "ℕ"},     {"class", Tok::Prefix, "class"}, {"top", Tok::Const, "⊤"},
    {"bot", Tok::Const, "⊥"},      {"dagger", Tok::Const, "†"},   {"alpha", Tok::Const, "α"},   {"and", Tok::Infix, "∧"},
    {"or", Tok::Infix, "∨"},       {"sub", Tok::Infix, "⊆"},      {"equiv", Tok::Infix, "≡"},
    {"setminus", Tok::Infix, "∖"}, {"in", Tok::In, "∈"},
};

// Non-ASCII symbols that look like notation but are not part of the language.
const char* const kForeignSymbols[] = {"∪", "∩", "∘", "⊂", "⊃", "⊇", "∉", "×", "⊕", "⊗", "≤", "≥", "⇒", "⇔", "∑", "∏"};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  fail(ErrorCode::SyntaxError, what + " at column " + std::to_string(pos + 1));
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : src_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) break;
      lex_one(out);
    }
    Token end;
    end.span = {src_.size(), src_.size()};
    out.push_back(end);
    return out;
  }

  // Types are lexed directly from characters.
  Type type_all() {
    skip_space();
    Type ty = type_seq(false);
    skip_space();
    if (pos_ != src_.size()) syntax_error(pos_, "unexpected character in type");
    return ty;
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  // One bracket-free item: e, t, or a bracketed sequence.
  std::optional<Type> type_item() {
    if (pos_ >= src_.size()) return std::nullopt;
    const char c = src_[pos_];
    if (c == 'e') {
      ++pos_;
      return Type::e();
    }
    if (c == 't') {
      ++pos_;
      return Type::t();
    }
    const bool ascii_open = c == '<';
    if (ascii_open || starts_with("⟨")) {
      const std::size_t open = pos_;
      pos_ += ascii_open ? 1 : std::string_view("⟨").size();
      Type inner = type_seq(true);
      if (pos_ < src_.size() && src_[pos_] == '>') {
        ++pos_;
      } else if (starts_with("⟩")) {
        pos_ += std::string_view("⟩").size();
      } else {
        syntax_error(open, "unclosed type bracket");
      }
      return inner;
    }
    return std::nullopt;
  }

  // Right-associated sequence of items.
  Type type_seq(bool allow_space) {
    std::vector<Type> items;
    for (;;) {
      if (allow_space) skip_space();
      auto item = type_item();
      if (!item) break;
      items.push_back(*item);
    }
    if (items.empty()) syntax_error(pos_, "expected a type");
    Type ty = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) ty = Type::fun(items[i], ty);
    return ty;
  }

  // After '^' or '_': a single base letter, a bracketed type, or {type}.
  Type annotation() {
    if (pos_ < src_.size() && src_[pos_] == '{') {
      const std::size_t open = pos_++;
      Type ty = type_seq(true);
      skip_space();
      if (pos_ >= src_.size() || src_[pos_] != '}') syntax_error(open, "unclosed type annotation");
      ++pos_;
      return ty;
    }
    auto item = type_item();
    if (!item) syntax_error(pos_, "expected a type after annotation mark");
    return *item;
  }

  std::optional<Type> maybe_subscript() {
    if (pos_ < src_.size() && src_[pos_] == '_') {
      ++pos_;
      return annotation();
    }
    return std::nullopt;
  }

  void lex_one(std::vector<Token>& out) {
    const std::size_t start = pos_;
    const unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (std::isalpha(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isalpha(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string_view run = src_.substr(pos_, end - pos_);
      for (const Symbol& k : kKeywords) {
        if (run == k.text) {
          pos_ = end;
          push_symbol(out, k, start);
          return;
        }
      }
      for (std::size_t i = pos_; i < end; ++i) {
        Token tok;
        tok.kind = Tok::Var;
        tok.var.letter = src_[i];
        tok.span = {i, i + 1};
        out.push_back(tok);
      }
      pos_ = end;
      Token& last = out.back();
      while (pos_ < src_.size() && (src_[pos_] == '\'' || starts_with("′"))) {
        pos_ += src_[pos_] == '\'' ? 1 : std::string_view("′").size();
        ++last.var.primes;
      }
      if (pos_ < src_.size() && src_[pos_] == '^') {
        ++pos_;
        last.var.decoration = annotation();
      }
      last.span.end = pos_;
      return;
    }
    if (std::isdigit(c)) {
      unsigned long n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        n = n * 10 + static_cast<unsigned long>(src_[pos_] - '0');
        if (n > 64) syntax_error(start, "numeral too large");
        ++pos_;
      }
      Token tok;
      tok.kind = Tok::Num;
      tok.number = n;
      tok.subscript = maybe_subscript();
      tok.span = {start, pos_};
      out.push_back(tok);
      return;
    }
    for (const Symbol& s : kSymbols) {
      if (starts_with(s.text)) {
        pos_ += std::string_view(s.text).size();
        push_symbol(out, s, start);
        return;
      }
    }
    for (const char* f : kForeignSymbols) {
      if (starts_with(f)) {
        fail(ErrorCode::UnknownNotation, std::string("'") + f + "' is not defined (column " + std::to_string(start + 1) + ")");
      }
    }
    if (c >= 0x80) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && (static_cast<unsigned char>(src_[end]) & 0xC0) == 0x80) ++end;
      fail(ErrorCode::UnknownNotation, "'" + std::string(src_.substr(pos_, end - pos_)) + "' is not defined (column " +
                                           std::to_string(start + 1) + ")");
    }
    syntax_error(start, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  void push_symbol(std::vector<Token>& out, const Symbol& s, std::size_t start) {
    Token tok;
    tok.kind = s.kind;
    tok.name = s.name;
    if (s.kind == Tok::Quant || s.kind == Tok::Prefix || s.kind == Tok::Const || s.kind == Tok::Infix) {
      tok.subscript = maybe_subscript();
    }
    tok.span = {start, pos_};
    out.push_back(tok);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

using BK = SurfaceTerm::BinderKind;

SurfaceTerm make_notation(const std::string& name, const std::optional<Type>& sub, Span span) {
  SurfaceTerm s;
  s.kind = SurfaceTerm::Kind::Notation;
  s.name = name;
  s.subscript = sub;
  s.span = span;
  return s;
}

SurfaceTerm make_apply(SurfaceTerm f, SurfaceTerm a) {
  SurfaceTerm s;
  s.kind = SurfaceTerm::Kind::Apply;
  s.span = {std::min(f.span.begin, a.span.begin), std::max(f.span.end, a.span.end)};
  s.kids.push_back(std::move(f));
  s.kids.push_back(std::move(a));
  return s;
}

SurfaceTerm make_infix(const Token& op, SurfaceTerm l, SurfaceTerm r) {
  SurfaceTerm head = make_notation(op.name, op.subscript, op.span);
  return make_apply(make_apply(std::move(head), std::move(l)), std::move(r));
}

int infix_level(const std::string& op) {
  if (op == "↔") return 1;
  if (op == "→") return 2;
  if (op == "∨") return 3;
  if (op == "∧") return 4;
  if (op == "=" || op == "≠" || op == "⊆" || op == "≡") return 5;
  return 6;  // + and ∖
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SurfaceTerm top() {
    SurfaceTerm s = expr();
    if (peek().kind != Tok::End) syntax_error(peek().span.begin, "unexpected token");
    return s;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  bool at_infix(int level) const { return peek().kind == Tok::Infix && infix_level(peek().name) == level; }

  // A quantifier token starts a binder iff variables then '.' or '∈' follow.
  bool starts_binder() const {
    if (peek().kind == Tok::Lambda) return true;
    if (peek().kind != Tok::Quant || peek().subscript) return false;
    std::size_t k = 1;
    while (peek(k).kind == Tok::Var) ++k;
    return k > 1 && (peek(k).kind == Tok::Dot || peek(k).kind == Tok::In);
  }

  SurfaceTerm expr() { return level(1); }

  // Boolean connectives (1-4), relations (5), + and ∖ (6).
  SurfaceTerm level(int lv) {
    if (lv == 6) return additive();
    SurfaceTerm lhs = level(lv + 1);
    if (!at_infix(lv)) return lhs;
    const Token op = next();
    const bool right_assoc = lv >= 2 && lv <= 4;
    SurfaceTerm rhs = level(right_assoc ? lv : lv + 1);
    if (!right_assoc && at_infix(lv)) {
      syntax_error(peek().span.begin, "'" + peek().name + "' does not associate here; add parentheses");
    }
    return make_infix(op, std::move(lhs), std::move(rhs));
  }

  SurfaceTerm additive() {
    SurfaceTerm lhs = application();
    if (!at_infix(6)) return lhs;
    const Token op = next();
    if (op.name == "+") return make_infix(op, std::move(lhs), additive());
    SurfaceTerm rhs = application();
    if (at_infix(6)) syntax_error(peek().span.begin, "mixed or repeated set difference needs parentheses");
    return make_infix(op, std::move(lhs), std::move(rhs));
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Var:
      case Tok::Num:
      case Tok::LParen:
      case Tok::LBrace:
      case Tok::Const:
        return true;
      default:
        return false;
    }
  }

  SurfaceTerm application() {
    std::vector<SurfaceTerm> items;
    const std::size_t begin = peek().span.begin;
    for (;;) {
      if (starts_binder()) {
        items.push_back(binder());
        break;
      }
      if (peek().kind == Tok::Prefix || peek().kind == Tok::Quant) {
        const Token op = next();
        SurfaceTerm head = make_notation(op.name, op.subscript, op.span);
        if (!starts_binder() && !starts_atom() && peek().kind != Tok::Prefix && peek().kind != Tok::Quant) {
          // nothing to apply it to: the operator itself, as in  ∃Y ∈ class_e. P
          items.push_back(std::move(head));
          break;
        }
        items.push_back(make_apply(std::move(head), application()));
        break;
      }
      if (items.empty() && peek().kind == Tok::Infix) {
        // an infix operator in operand position denotes the curried constant
        const Token op = next();
        items.push_back(make_notation(op.name, op.subscript, op.span));
        continue;
      }
      if (!starts_atom()) break;
      items.push_back(atom());
    }
    if (items.empty()) syntax_error(peek().span.begin, "expected a term");
    if (items.size() == 1) return std::move(items.front());
    SurfaceTerm s;
    s.kind = SurfaceTerm::Kind::Juxt;
    s.span = {begin, items.back().span.end};
    s.kids = std::move(items);
    return s;
  }

  SurfaceTerm numeral(const Token& tok) {
    if (tok.number <= 1) return make_notation(tok.number == 0 ? "0" : "1", tok.subscript, tok.span);
    // k = 1 + (1 + ... + 1), right associated
    SurfaceTerm acc = make_notation("1", tok.subscript, tok.span);
    for (unsigned long i = 1; i < tok.number; ++i) {
      SurfaceTerm plus = make_notation("+", tok.subscript, tok.span);
      acc = make_apply(make_apply(std::move(plus), make_notation("1", tok.subscript, tok.span)), std::move(acc));
    }
    return acc;
  }

  SurfaceTerm atom() {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::Var: {
        SurfaceTerm s;
        s.kind = SurfaceTerm::Kind::Var;
        s.var = tok.var;
        s.span = tok.span;
        return s;
      }
      case Tok::Num:
        return numeral(tok);
      case Tok::Const:
        return make_notation(tok.name, tok.subscript, tok.span);
      case Tok::LParen: {
        // (op) for a bare operator
        if ((peek().kind == Tok::Infix || peek().kind == Tok::Prefix || peek().kind == Tok::Quant) &&
            peek(1).kind == Tok::RParen) {
          const Token op = next();
          next();
          return make_notation(op.name, op.subscript, {tok.span.begin, op.span.end + 1});
        }
        SurfaceTerm inner = expr();
        if (peek().kind != Tok::RParen) syntax_error(peek().span.begin, "expected ')'");
        next();
        // keep a parenthesised chain as one item so it is never rebracketed
        if (inner.kind == SurfaceTerm::Kind::Juxt) {
          SurfaceTerm wrapped;
          wrapped.kind = SurfaceTerm::Kind::Juxt;
          wrapped.span = inner.span;
          wrapped.kids.push_back(std::move(inner));
          return wrapped;
        }
        return inner;
      }
      case Tok::LBrace: {
        if (peek().kind != Tok::Var) syntax_error(peek().span.begin, "expected a variable after '{'");
        SurfaceTerm s;
        s.kind = SurfaceTerm::Kind::ClassAbs;
        s.var = next().var;
        if (peek().kind == Tok::Colon || (peek().kind == Tok::Infix && peek().name == "∨")) {
          next();
        } else {
          syntax_error(peek().span.begin, "expected ':' in class abstraction");
        }
        s.kids.push_back(expr());
        if (peek().kind != Tok::RBrace) syntax_error(peek().span.begin, "expected '}'");
        s.span = {tok.span.begin, next().span.end};
        return s;
      }
      default:
        syntax_error(tok.span.begin, "expected a term");
    }
  }

  SurfaceTerm binder() {
    const Token head = next();
    SurfaceTerm s;
    s.kind = SurfaceTerm::Kind::Binder;
    if (head.kind == Tok::Lambda) {
      s.binder = BK::Lambda;
    } else if (head.name == "∀") {
      s.binder = BK::Forall;
    } else if (head.name == "∃") {
      s.binder = BK::Exists;
    } else if (head.name == "∃!") {
      s.binder = BK::ExistsUnique;
    } else if (head.name == "ι") {
      s.binder = BK::Iota;
    } else {
      s.binder = BK::Epsilon;
    }
    // λxy^e: a decoration covers the undecorated letters just before it
    std::size_t undecorated_from = 0;
    while (peek().kind == Tok::Var) {
      s.vars.push_back(next().var);
      if (s.vars.back().decoration) {
        for (std::size_t k = undecorated_from; k + 1 < s.vars.size(); ++k) s.vars[k].decoration = s.vars.back().decoration;
        undecorated_from = s.vars.size();
      }
    }
    if (s.vars.empty()) syntax_error(peek().span.begin, "expected a bound variable");
    if (peek().kind == Tok::In) {
      if (s.binder == BK::Lambda || s.binder == BK::Iota || s.binder == BK::Epsilon) {
        syntax_error(peek().span.begin, "bounded binding is only available for quantifiers");
      }
      next();
      s.bounded = true;
      s.kids.push_back(application());
    }
    if (peek().kind != Tok::Dot) syntax_error(peek().span.begin, "expected '.' after bound variables");
    next();
    s.kids.push_back(expr());
    s.span = {head.span.begin, s.kids.back().span.end};
    return s;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

SurfaceTerm parse(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.top();
}

Type parse_type(std::string_view text) {
  Lexer lexer(text);
  return lexer.type_all();
}

}  // namespace lf
