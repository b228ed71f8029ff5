// lf: check proof scripts and inspect terms, theories and the library.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lf/extensions.hpp"
#include "lf/kernel.hpp"
#include "lf/library.hpp"
#include "lf/notation.hpp"
#include "lf/script.hpp"
#include "lf/syntax.hpp"

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  bool ascii = false;
  unsigned jobs = 1;
  std::string theory;
  std::vector<std::string> disable;
  std::vector<std::string> files;
  std::string term;
  bool epsilon = false;
  bool check = false;
};

bool use_color() {
  if (const char* c = std::getenv("LF_COLOR")) return std::string(c) == "1";
  return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& s, const char* code) {
  if (!use_color()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

lf::PrintOptions printing(const Options& o) {
  lf::PrintOptions p;
  p.ascii = o.ascii;
  return p;
}

std::string show(const lf::Sequent& s, const Options& o) {
  std::string out = lf::to_string(s, printing(o));
  if (o.ascii) {
    const std::string ts = "⊢";
    for (std::size_t i; (i = out.find(ts)) != std::string::npos;) out.replace(i, ts.size(), "|-");
  }
  return out;
}

std::string extension_name(lf::Extension e) {
  switch (e) {
    case lf::Extension::Core:
      return "core";
    case lf::Extension::Iota:
      return "iota";
    case lf::Extension::Epsilon:
      return "epsilon";
  }
  return "core";
}

json error_json(lf::ErrorCode code, const std::string& message) {
  return {{"code", std::string(lf::error_name(code))}, {"message", message}};
}

int emit_error(const std::string& command, const lf::Error& e, const Options& o) {
  const int code = lf::script::exit_code(e.code());
  if (o.json) {
    std::cout << json{{"command", command}, {"status", "error"}, {"exit_code", code}, {"error", error_json(e.code(), e.detail())}}.dump(2)
              << "\n";
  } else {
    std::cerr << paint("error", "31") << ": " << e.what() << "\n";
  }
  return code;
}

// --- check -------------------------------------------------------------------

json outcome_json(const std::string& file, const lf::script::Outcome& r, const Options& o) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json as = json::array();
    for (const lf::Term& a : s.sequent.assumptions) as.push_back(lf::print(a, printing(o)));
    steps.push_back({{"label", s.label},
                     {"rule", s.rule},
                     {"line", s.line},
                     {"assumptions", as},
                     {"conclusion", lf::print(s.sequent.conclusion, printing(o))},
                     {"millis", s.millis}});
  }
  json j = {{"file", file},
            {"theory", r.theory},
            {"status", r.error ? "error" : "ok"},
            {"exit_code", r.exit_code},
            {"theorem", r.theorem ? json(lf::print(*r.theorem, printing(o))) : json(nullptr)},
            {"axioms_used", r.axioms_used},
            {"nodes", r.nodes},
            {"millis", r.millis},
            {"steps", steps},
            {"error", nullptr}};
  if (r.error) {
    json e = error_json(*r.error, r.message);
    e["step"] = r.failed_label.empty() ? json(nullptr) : json(r.failed_label);
    e["rule"] = r.failed_rule.empty() ? json(nullptr) : json(r.failed_rule);
    e["line"] = r.failed_line > 0 ? json(r.failed_line) : json(nullptr);
    j["error"] = e;
  }
  return j;
}

void print_outcome(const std::string& file, const lf::script::Outcome& r, const Options& o) {
  if (!r.error) {
    std::cout << file << ": " << paint("ok", "32") << " in " << r.theory << ": "
              << show(lf::Sequent{{}, *r.theorem}, o);
    if (!r.axioms_used.empty()) {
      std::cout << "  [axioms:";
      for (const auto& a : r.axioms_used) std::cout << " " << a;
      std::cout << "]";
    }
    std::cout << "  (" << r.steps.size() << " steps, " << r.nodes << " nodes, " << static_cast<long>(r.millis) << " ms)\n";
    return;
  }
  std::cerr << file;
  if (r.failed_line > 0) std::cerr << ":" << r.failed_line;
  std::cerr << ": " << paint("error", "31");
  if (!r.failed_label.empty()) {
    std::cerr << " in step '" << r.failed_label << "'";
    if (!r.failed_rule.empty()) std::cerr << " (" << r.failed_rule << ")";
  }
  std::cerr << ": " << lf::error_name(*r.error) << ": " << r.message << "\n";
}

int run_check(const Options& o) {
  lf::script::RunOptions ro;
  if (!o.theory.empty()) ro.theory = o.theory;
  ro.disable = o.disable;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<lf::script::Outcome>> results(o.files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < o.files.size();) results[i] = lf::script::run_file(o.files[i], ro);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(o.files.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  for (const auto& r : results) {
    if (code == 0) code = r->exit_code;
  }
  if (o.json) {
    json files = json::array();
    for (std::size_t i = 0; i < o.files.size(); ++i) files.push_back(outcome_json(o.files[i], *results[i], o));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << json{{"command", "check"}, {"status", code == 0 ? "ok" : "error"}, {"exit_code", code}, {"jobs", n},
                      {"millis", ms}, {"files", files}}
                     .dump(2)
              << "\n";
  } else {
    for (std::size_t i = 0; i < o.files.size(); ++i) print_outcome(o.files[i], *results[i], o);
  }
  return code;
}

// --- term inspection ------------------------------------------------------------

lf::Extension language(const Options& o) {
  return o.theory.empty() ? lf::Extension::Epsilon : lf::theory(o.theory).guard;
}

int run_term(const std::string& command, const Options& o) {
  try {
    const lf::Term a = lf::read_term(o.term, language(o));
    std::string out;
    json j = {{"command", command}, {"status", "ok"}, {"exit_code", 0}, {"input", o.term}};
    if (command == "parse") {
      lf::PrintOptions p = printing(o);
      p.decorations = lf::PrintOptions::Decorations::Full;
      out = lf::print(a, p);
      j["term"] = out;
      j["type"] = lf::to_string(a.type(), lf::TypeStyle::Bracketed, o.ascii);
    } else if (command == "typecheck") {
      out = lf::to_string(a.type(), lf::TypeStyle::Bracketed, o.ascii);
      j["type"] = out;
    } else {
      lf::PrintOptions p = printing(o);
      p.fold = false;
      p.decorations = lf::PrintOptions::Decorations::Binders;
      out = lf::print(lf::expand_all(a, {o.epsilon}), p);
      j["expansion"] = out;
    }
    if (o.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << out << "\n";
    }
    return 0;
  } catch (const lf::Error& e) {
    return emit_error(command, e, o);
  }
}

// --- library and systems -------------------------------------------------------------

struct EntryCheck {
  bool ok = false;
  std::size_t nodes = 0;
  double millis = 0;
  std::optional<lf::Error> error;
};

EntryCheck check_entry(const lf::lib::LibraryEntry& e) {
  EntryCheck c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const lf::Theory th = lf::theory(e.theory);
    const lf::Derivation d = e.build();
    const lf::CheckReport r = lf::check_theorem(th, d);
    if (!lf::alpha_equal(*r.theorem, lf::read_term(e.statement, th.guard))) {
      lf::fail(lf::ErrorCode::ShapeMismatch, "proves '" + lf::print(*r.theorem) + "' instead of the stated sentence");
    }
    c.ok = true;
    c.nodes = r.nodes;
  } catch (const lf::Error& err) {
    c.error = err;
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::string display_statement(const lf::lib::LibraryEntry& e, const Options& o) {
  if (!o.ascii) return e.statement;
  return lf::print(lf::read_term(e.statement, lf::theory(e.theory).guard), printing(o));
}

int run_library(const Options& o) {
  const auto& cat = lf::lib::catalog();
  std::vector<EntryCheck> checks(cat.size());
  if (o.check) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < cat.size();) checks[i] = check_entry(cat[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < std::max(1u, o.jobs); ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  int code = 0;
  for (const EntryCheck& c : checks) {
    if (o.check && !c.ok && code == 0) code = lf::script::exit_code(c.error->code());
  }
  if (o.json) {
    json entries = json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) {
      json j = {{"name", cat[i].name}, {"theory", cat[i].theory}, {"statement", display_statement(cat[i], o)},
                {"summary", cat[i].summary}};
      if (o.check) {
        j["check"] = {{"ok", checks[i].ok}, {"nodes", checks[i].nodes}, {"millis", checks[i].millis},
                      {"error", checks[i].error ? error_json(checks[i].error->code(), checks[i].error->detail()) : json(nullptr)}};
      }
      entries.push_back(j);
    }
    std::cout << json{{"command", "library"}, {"status", code == 0 ? "ok" : "error"}, {"exit_code", code}, {"entries", entries}}.dump(2)
              << "\n";
    return code;
  }
  // theory names contain multi-byte minus signs, so pad by code points
  auto width = [](const std::string& s) {
    std::size_t k = 0;
    for (unsigned char ch : s) k += (ch & 0xC0) != 0x80;
    return k;
  };
  std::size_t w = 0, tw = 0;
  for (const auto& e : cat) {
    w = std::max(w, width(e.name));
    tw = std::max(tw, width(e.theory));
  }
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    std::cout << e.name << std::string(w + 2 - width(e.name), ' ') << e.theory
              << std::string(tw + 2 - width(e.theory), ' ') << display_statement(e, o);
    if (o.check) {
      if (checks[i].ok) {
        std::cout << "  " << paint("ok", "32") << " (" << checks[i].nodes << " nodes, " << static_cast<long>(checks[i].millis)
                  << " ms)";
      } else {
        std::cout << "  " << paint("error", "31") << " " << checks[i].error->what();
      }
    }
    std::cout << "\n";
  }
  return code;
}

int run_systems(const Options& o) {
  json systems = json::array();
  for (const std::string& n : lf::theory_names()) {
    const lf::Theory t = lf::theory(n);
    std::vector<std::string> rules;
    for (lf::RuleId r : t.rules) rules.emplace_back(lf::rule_name(r));
    std::vector<std::string> schemas;
    for (const auto& s : t.schemas) schemas.push_back(s.name);
    systems.push_back({{"name", t.name}, {"rules", rules}, {"extension", extension_name(t.guard)}, {"axioms", schemas}});
    if (!o.json) {
      std::cout << t.name << ":";
      for (const auto& r : rules) std::cout << " " << r;
      if (!schemas.empty()) {
        std::cout << "  axioms:";
        for (const auto& s : schemas) std::cout << " " << s;
      }
      std::cout << "\n";
    }
  }
  if (o.json) std::cout << json{{"command", "systems"}, {"status", "ok"}, {"exit_code", 0}, {"systems", systems}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"lf: a proof checker for the logic LF and its extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--ascii", o.ascii, "ASCII output");

  auto* check = app.add_subcommand("check", "check proof scripts");
  check->add_option("files", o.files, "script files")->required();
  check->add_option("--theory", o.theory, "check against this theory instead of the script's");
  check->add_option("--disable", o.disable, "drop a rule (repeatable), e.g. R.9")->allow_extra_args(false);
  check->add_option("--jobs,-j", o.jobs, "scripts checked concurrently (0: one per core)");

  std::vector<std::pair<std::string, CLI::App*>> term_cmds;
  for (const char* name : {"parse", "typecheck", "expand"}) {
    const char* what = std::string(name) == "parse"       ? "print the elaborated term with full decorations"
                       : std::string(name) == "typecheck" ? "print the type of a term"
                                                          : "print a term with every abbreviation expanded";
    auto* c = app.add_subcommand(name, what);
    c->add_option("term", o.term, "the term")->required();
    c->add_option("--theory", o.theory, "read the term in this theory's language (default: all extensions)");
    if (std::string(name) == "expand") c->add_flag("--epsilon", o.epsilon, "also replace ι and † by their ε definitions");
    term_cmds.emplace_back(name, c);
  }

  auto* library = app.add_subcommand("library", "list the library of derived theorems");
  library->add_flag("--check", o.check, "build and check every entry");
  library->add_option("--jobs,-j", o.jobs, "entries checked concurrently (0: one per core)");

  auto* systems = app.add_subcommand("systems", "list the built-in theories and their rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 1;
  }
  if (o.jobs == 0) o.jobs = std::max(1u, std::thread::hardware_concurrency());

  try {
    if (*check) return run_check(o);
    for (const auto& [name, c] : term_cmds) {
      if (*c) return run_term(name, o);
    }
    if (*library) return run_library(o);
    if (*systems) return run_systems(o);
  } catch (const lf::Error& e) {
    return emit_error(app.get_subcommands().front()->get_name(), e, o);
  }
  return 0;
}
