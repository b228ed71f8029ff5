#include "lf/script.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lf/library.hpp"
#include "lf/logic.hpp"
#include "lf/notation.hpp"
#include "lf/syntax.hpp"

namespace lf::script {

namespace {

struct LineError : Error {
  LineError(int l, const std::string& what) : Error(ErrorCode::ScriptError, "line " + std::to_string(l) + ": " + what), line(l) {}
  int line;
};

[[noreturn]] void bad(int line, const std::string& what) { throw LineError(line, what); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

bool starts_with_word(const std::string& s, std::string_view word, std::string& rest) {
  if (s.size() <= word.size() || s.compare(0, word.size(), word) != 0) return false;
  if (s[word.size()] != ' ' && s[word.size()] != '\t') return false;
  rest = trim(std::string_view(s).substr(word.size()));
  return true;
}

bool label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
         c == '\'';
}

int depth_delta(char c) {
  if (c == '(' || c == '[' || c == '{') return 1;
  if (c == ')' || c == ']' || c == '}') return -1;
  return 0;
}

// Split at top-level occurrences of sep.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += depth_delta(s[i]);
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

// Position and length of the top-level turnstile, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_turnstile(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += depth_delta(s[i]);
    if (depth != 0) continue;
    if (s.substr(i, 3) == "⊢") return std::pair{i, std::size_t{3}};
    if (s.substr(i, 2) == "|-") return std::pair{i, std::size_t{2}};
  }
  return std::nullopt;
}

struct Line {
  std::string text;
  int number;
};

// Comments start with '#'; an indented line continues the previous one.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    ++number;
    pos = nl + 1;
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    const bool indented = !raw.empty() && (raw[0] == ' ' || raw[0] == '\t');
    if (indented && !out.empty()) {
      out.back().text += " " + t;
    } else {
      out.push_back({t, number});
    }
    if (nl == text.size()) break;
  }
  return out;
}

Step parse_step(const std::string& s, int line) {
  Step st;
  st.line = line;
  std::size_t i = 0;
  while (i < s.size() && label_char(s[i])) ++i;
  if (i == 0 || i >= s.size() || s[i] != ':') bad(line, "expected 'label: rule(...)', a header line or 'qed label'");
  st.label = s.substr(0, i);
  const std::size_t open = s.find('(', i + 1);
  if (open == std::string::npos) bad(line, "step '" + st.label + "' has no argument list");
  st.rule = trim(std::string_view(s).substr(i + 1, open - i - 1));
  if (st.rule.empty() || st.rule.find_first_of(" \t") != std::string::npos) bad(line, "bad rule name '" + st.rule + "'");
  int depth = 0;
  std::size_t close = std::string::npos;
  for (std::size_t k = open; k < s.size(); ++k) {
    depth += depth_delta(s[k]);
    if (depth == 0) {
      close = k;
      break;
    }
  }
  if (close == std::string::npos || s[close] != ')') bad(line, "unbalanced parentheses in step '" + st.label + "'");
  const std::vector<std::string> groups = split_top(std::string_view(s).substr(open + 1, close - open - 1), ';');
  if (!groups[0].empty()) {
    for (const std::string& l : split_top(groups[0], ',')) {
      if (l.empty()) bad(line, "empty premise label in step '" + st.label + "'");
      for (char c : l) {
        if (!label_char(c)) bad(line, "bad premise label '" + l + "' (term arguments go after ';')");
      }
      st.premises.push_back(l);
    }
  }
  for (std::size_t g = 1; g < groups.size(); ++g) {
    if (groups[g].empty()) bad(line, "empty argument in step '" + st.label + "'");
    st.args.push_back(groups[g]);
  }
  const std::string rest = trim(std::string_view(s).substr(close + 1));
  if (!rest.empty()) {
    if (!find_turnstile(rest)) bad(line, "expected sequent needs '⊢' (or '|-')");
    st.expected = rest;
  }
  return st;
}

// --- step elaboration -------------------------------------------------------

struct StepEnv {
  const Step& step;
  std::vector<Derivation> premises;
  Extension ext;
  std::vector<Variable> scope;

  Term term(std::size_t i) {
    const Term a = read_term(arg(i), ElabOptions{ext, scope});
    for (const Variable& v : a.free_vars()) scope.push_back(v);
    return a;
  }
  Variable variable(std::size_t i) {
    const Term a = term(i);
    if (!a.is_var()) fail(ErrorCode::ShapeMismatch, "'" + arg(i) + "' is not a variable");
    return a.variable();
  }
  Type type(std::size_t i) { return parse_type(arg(i)); }
  int integer(std::size_t i) {
    const std::string& s = arg(i);
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorCode::SyntaxError, "'" + s + "' is not a small non-negative integer");
    }
    return std::stoi(s);
  }
  Path path(std::size_t i) {
    Path p;
    for (char c : arg(i)) {
      if (c == '0' || c == '1') {
        p.push_back(static_cast<unsigned char>(c - '0'));
      } else if (c != '.' && c != ' ' && c != ',' && c != '/') {
        fail(ErrorCode::SyntaxError, "a path is a sequence of 0 (function or body) and 1 (argument), got '" + arg(i) + "'");
      }
    }
    return p;
  }
  const std::string& arg(std::size_t i) const { return step.args.at(i); }

  void need(std::size_t np, std::size_t na) const {
    if (premises.size() != np || step.args.size() != na) {
      fail(ErrorCode::ArityMismatch, step.rule + " takes " + std::to_string(np) + " premise(s) and " + std::to_string(na) +
                                         " argument(s), got " + std::to_string(premises.size()) + " and " +
                                         std::to_string(step.args.size()));
    }
  }
};

using Builder = std::function<Derivation(StepEnv&)>;

const std::map<std::string, Builder, std::less<>>& kernel_table() {
  static const std::map<std::string, Builder, std::less<>> t = [] {
    std::map<std::string, Builder, std::less<>> m;
    m["hypothesis"] = [](StepEnv& e) {
      if (!e.premises.empty() || e.step.args.empty()) fail(ErrorCode::ArityMismatch, "hypothesis takes no premises and one or more formulas");
      std::vector<Term> gamma;
      for (std::size_t i = 0; i + 1 < e.step.args.size(); ++i) gamma.push_back(e.term(i));
      return rules::hypothesis(gamma, e.term(e.step.args.size() - 1));
    };
    m["contraction"] = [](StepEnv& e) { e.need(1, 0); return rules::contraction(e.premises[0]); };
    m["weakening"] = [](StepEnv& e) { e.need(1, 1); return rules::weakening(e.premises[0], e.term(0)); };
    m["exchange"] = [](StepEnv& e) {
      e.need(1, 1);
      return rules::exchange(e.premises[0], static_cast<std::size_t>(e.integer(0)));
    };
    m["cut"] = [](StepEnv& e) { e.need(2, 0); return rules::cut(e.premises[0], e.premises[1]); };
    m["R.2"] = [](StepEnv& e) { e.need(1, 1); return rules::beta(e.premises[0], e.term(0)); };
    m["R.3"] = [](StepEnv& e) { e.need(2, 0); return rules::universal_instantiation(e.premises[0], e.premises[1]); };
    m["R.4"] = [](StepEnv& e) { e.need(1, 1); return rules::universal_generalization(e.premises[0], e.variable(0)); };
    m["R.5"] = [](StepEnv& e) { e.need(1, 0); return rules::negation_elimination(e.premises[0]); };
    m["R.6"] = [](StepEnv& e) { e.need(2, 0); return rules::intensionality(e.premises[0], e.premises[1]); };
    m["R.7"] = [](StepEnv& e) { e.need(1, 1); return rules::function_extensionality(e.premises[0], e.variable(0)); };
    m["R.8"] = [](StepEnv& e) { e.need(1, 1); return rules::choice(e.premises[0], e.variable(0)); };
    m["R.9"] = [](StepEnv& e) { e.need(1, 0); return rules::potential_infinity(e.premises[0]); };
    m["ActualInfinityE"] = [](StepEnv& e) { e.need(1, 0); return rules::actual_infinity_e(e.premises[0]); };
    m["HenkinExt"] = [](StepEnv& e) { e.need(2, 0); return rules::henkin_extensionality(e.premises[0], e.premises[1]); };
    m["ClassicismSubst"] = [](StepEnv& e) {
      e.need(2, 2);
      return rules::classicism_substitution(e.premises[0], e.premises[1], e.term(0), e.path(1));
    };
    m["ModalFunExt"] = [](StepEnv& e) {
      e.need(1, 1);
      return rules::modal_function_extensionality(e.premises[0], e.variable(0));
    };
    // conveniences over the structural rules
    m["assume"] = [](StepEnv& e) {
      if (!e.premises.empty() || e.step.args.empty()) fail(ErrorCode::ArityMismatch, "assume takes no premises and one or more formulas");
      std::vector<Term> gamma;
      for (std::size_t i = 0; i + 1 < e.step.args.size(); ++i) gamma.push_back(e.term(i));
      return lib::assume(gamma, e.term(e.step.args.size() - 1));
    };
    m["top_intro"] = [](StepEnv& e) { e.need(0, 0); return lib::top_intro(); };
    m["conv"] = [](StepEnv& e) { e.need(1, 1); return lib::conv(e.premises[0], e.term(0)); };
    return m;
  }();
  return t;
}

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> a = {
      {"hyp", "hypothesis"}, {"R2", "R.2"}, {"R3", "R.3"}, {"R4", "R.4"}, {"R5", "R.5"},
      {"R6", "R.6"},         {"R7", "R.7"}, {"R8", "R.8"}, {"R9", "R.9"}, {"beta", "R.2"},
      {"ui", "R.3"},         {"ug", "R.4"},
  };
  return a;
}

Derivation library_step(std::string_view name, StepEnv& e) {
  if (name == "numeral_is_nat" || name == "unit_numeral_is_nat") {
    e.need(0, 2);
    const int k = e.integer(0);
    const Type s = e.type(1);
    return name == "numeral_is_nat" ? lib::numeral_is_nat(k, s) : lib::unit_numeral_is_nat(k, s);
  }
  if (name == "zero_plus_one" || name == "one_assoc" || name == "three_is_nat") {
    e.need(0, 1);
    const Type s = e.type(0);
    if (name == "zero_plus_one") return lib::zero_plus_one(s);
    return name == "one_assoc" ? lib::one_assoc(s) : lib::three_is_nat(s);
  }
  if (name == "actuality_from" || name == "actuality_iff") {
    e.need(0, 1);
    const Term p = e.term(0);
    return name == "actuality_from" ? lib::actuality_from(p) : lib::actuality_iff(p);
  }
  if (name == "henkin_extensionality_axiom") {
    e.need(0, 0);
    return lib::henkin_extensionality_axiom();
  }
  if (name == "henkin_inconsistency") {
    e.need(0, 0);
    return lib::henkin_inconsistency();
  }
  e.need(0, 0);
  return lib::library_theorem(name);
}

Derivation apply(StepEnv& e) {
  std::string_view name = e.step.rule;
  if (auto a = aliases().find(name); a != aliases().end()) name = a->second;
  if (auto k = kernel_table().find(name); k != kernel_table().end()) return k->second(e);
  if (name.substr(0, 4) == "lib.") return library_step(name.substr(4), e);
  if (name == "R.1") fail(ErrorCode::UnknownRule, "R.1 is five rules: use hypothesis, contraction, weakening, exchange or cut");
  lib::RuleArgs args;
  args.premises = e.premises;
  for (std::size_t i = 0; i < e.step.args.size(); ++i) args.terms.push_back(e.term(i));
  return lib::derived_rule(name, args);
}

Sequent read_sequent(const std::string& text, Extension ext, const std::vector<Variable>& scope) {
  const auto ts = find_turnstile(text);
  std::vector<Term> gamma;
  const std::string left = trim(std::string_view(text).substr(0, ts->first));
  if (!left.empty()) {
    for (const std::string& a : split_top(left, ',')) gamma.push_back(read_term(a, ElabOptions{ext, scope}));
  }
  return Sequent{gamma, read_term(trim(std::string_view(text).substr(ts->first + ts->second)), ElabOptions{ext, scope})};
}

void add_free(std::vector<Variable>& scope, const Term& a) {
  for (const Variable& v : a.free_vars()) scope.push_back(v);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Script parse_script(std::string_view text) {
  Script sc;
  std::set<std::string, std::less<>> labels;
  for (const Line& l : logical_lines(text)) {
    std::string rest;
    if (!sc.qed.empty()) bad(l.number, "nothing may follow 'qed'");
    if (starts_with_word(l.text, "theory", rest)) {
      if (!sc.steps.empty()) bad(l.number, "header lines must precede the steps");
      if (sc.theory) bad(l.number, "the theory is already set");
      sc.theory = rest;
    } else if (starts_with_word(l.text, "disable", rest)) {
      if (!sc.steps.empty()) bad(l.number, "header lines must precede the steps");
      sc.disabled.push_back(rest);
    } else if (starts_with_word(l.text, "axiom", rest)) {
      if (!sc.steps.empty()) bad(l.number, "header lines must precede the steps");
      sc.axioms.emplace_back(rest, l.number);
    } else if (starts_with_word(l.text, "qed", rest)) {
      if (labels.count(rest) == 0) bad(l.number, "qed names unknown step '" + rest + "'");
      sc.qed = rest;
      sc.qed_line = l.number;
    } else {
      Step st = parse_step(l.text, l.number);
      for (const std::string& p : st.premises) {
        if (labels.count(p) == 0) bad(l.number, "step '" + st.label + "' uses '" + p + "' before it is defined");
      }
      if (!labels.insert(st.label).second) bad(l.number, "duplicate label '" + st.label + "'");
      sc.steps.push_back(std::move(st));
    }
  }
  if (sc.qed.empty()) fail(ErrorCode::ScriptError, "missing 'qed label'");
  return sc;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownNotation:
    case ErrorCode::ScriptError:
      return 1;
    case ErrorCode::IllTypedApplication:
    case ErrorCode::TypeMismatch:
    case ErrorCode::AmbiguousTypes:
    case ErrorCode::NoCompletion:
    case ErrorCode::GuardViolation:
    case ErrorCode::ArityMismatch:
    case ErrorCode::NoExtension:
    case ErrorCode::UnknownRule:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::UnknownTheory:
      return 2;
    case ErrorCode::FuelExhausted:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::ContextMismatch:
    case ErrorCode::NotBetaEquivalent:
    case ErrorCode::FreshnessViolation:
    case ErrorCode::NonEmptyContext:
    case ErrorCode::TypeRestriction:
      return 3;
    case ErrorCode::UndischargedAssumption:
      return 4;
    case ErrorCode::RuleDisabled:
      return 5;
  }
  return 3;
}

std::vector<std::string> rule_names() {
  std::vector<std::string> out;
  for (const auto& [name, b] : kernel_table()) out.push_back(name);
  for (const auto& [name, target] : aliases()) out.push_back(name);
  for (const std::string& n : lib::derived_rule_names()) out.push_back(n);
  return out;
}

Outcome run(std::string_view text, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  auto failed = [&](const Error& e) {
    out.error = e.code();
    out.message = e.detail();
    out.exit_code = exit_code(e.code());
    out.millis = since(t0);
    return out;
  };
  Script sc;
  Theory th;
  Extension ext = Extension::Core;
  try {
    sc = parse_script(text);
    const std::string header = sc.theory.value_or("LF");
    th = theory(opts.theory.value_or(header));
    ext = th.guard;
    // the script's terms are written in its header's language
    if (opts.theory) ext = std::max(ext, theory(header).guard);
    std::vector<std::string> disabled = sc.disabled;
    disabled.insert(disabled.end(), opts.disable.begin(), opts.disable.end());
    for (const std::string& r : disabled) {
      const RuleId id = parse_rule_id(r);
      if (th.enabled(id)) th = th.without(id);
    }
    out.theory = th.name;
  } catch (const LineError& e) {
    out.failed_line = e.line;
    return failed(e);
  } catch (const Error& e) {
    out.theory = th.name;
    return failed(e);
  }

  std::vector<Variable> scope;
  for (const auto& [text_ax, line] : sc.axioms) {
    try {
      const Term ax = read_term(text_ax, ElabOptions{ext, scope});
      th = th.plus_axiom(ax);
    } catch (const Error& e) {
      out.failed_label = "axiom";
      out.failed_line = line;
      return failed(e);
    }
  }

  std::map<std::string, Derivation, std::less<>> done;
  for (const Step& st : sc.steps) {
    const auto ts = std::chrono::steady_clock::now();
    try {
      StepEnv env{st, {}, ext, scope};
      for (const std::string& p : st.premises) env.premises.push_back(done.at(p));
      const Derivation d = apply(env);
      if (auto r = first_disabled_rule(th, d)) {
        fail(ErrorCode::RuleDisabled, std::string(rule_name(*r)) + " is not a rule of " + th.name);
      }
      for (const Term& a : d.assumptions()) add_free(scope, a);
      add_free(scope, d.conclusion());
      if (st.expected) {
        const Sequent want = read_sequent(*st.expected, ext, scope);
        if (!alpha_equal(want, d.sequent())) {
          fail(ErrorCode::ShapeMismatch, "step proves '" + to_string(d.sequent()) + "', not the stated '" +
                                             to_string(want) + "'");
        }
      }
      done.emplace(st.label, d);
      out.steps.push_back({st.label, st.rule, st.line, d.sequent(), since(ts)});
    } catch (const Error& e) {
      out.failed_label = st.label;
      out.failed_rule = st.rule;
      out.failed_line = st.line;
      return failed(e);
    }
  }

  try {
    const CheckReport rep = check_theorem(th, done.at(sc.qed));
    out.theorem = rep.theorem;
    out.axioms_used = rep.axioms;
    out.nodes = rep.nodes;
  } catch (const Error& e) {
    out.failed_label = sc.qed;
    out.failed_rule = "qed";
    out.failed_line = sc.qed_line;
    return failed(e);
  }
  out.millis = since(t0);
  return out;
}

Outcome run_file(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Outcome out;
    out.error = ErrorCode::ScriptError;
    out.message = "cannot read '" + path + "'";
    out.exit_code = 1;
    return out;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return run(ss.str(), opts);
}

}  // namespace lf::script
