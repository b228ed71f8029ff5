#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lf/term.hpp"

namespace lf {

// Which extension constants may appear. Epsilon theories also have iota.
enum class Extension : unsigned char { Core, Iota, Epsilon };

inline bool permits(Extension have, Extension need) { return static_cast<int>(have) >= static_cast<int>(need); }

struct Span {
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
};

// Parse tree before type inference. Decorations and subscripts are optional;
// abbreviations are still names.
struct SurfaceTerm {
  enum class Kind { Var, Notation, Apply, Juxt, Binder, ClassAbs };
  enum class BinderKind { Lambda, Forall, Exists, ExistsUnique, Iota, Epsilon };

  struct Name {
    char letter = 'x';
    std::uint32_t primes = 0;
    std::optional<Type> decoration;
  };

  Kind kind = Kind::Var;
  Span span;
  Name var;                   // Var, ClassAbs (the bound variable)
  std::string name;           // Notation: canonical table name
  std::optional<Type> subscript;
  BinderKind binder = BinderKind::Lambda;
  std::vector<Name> vars;     // Binder, outermost first
  bool bounded = false;       // Binder of the form  Q x in F. P
  // Apply: {fun, arg}. Juxt: the items of an unparenthesised application
  // chain (two or more). Binder: {body} or {set, body} when bounded.
  // ClassAbs: {body}.
  std::vector<SurfaceTerm> kids;
};

// Throws SyntaxError (with column) or UnknownNotation.
SurfaceTerm parse(std::string_view text);
// Types: "e", "t", "ttt", "<et>t", "⟨et⟩t".
Type parse_type(std::string_view text);

struct ElabOptions {
  Extension extensions = Extension::Core;
  // Types for free variables written without decoration (later entries win
  // over earlier ones with the same name).
  std::vector<Variable> scope;
};

// Unique fully decorated term. AmbiguousTypes if several completions exist,
// NoCompletion if none, GuardViolation for extension notation outside its
// theory.
Term elaborate(const SurfaceTerm& s, const ElabOptions& opts = {});
Term read_term(std::string_view text, const ElabOptions& opts = {});
inline Term read_term(std::string_view text, Extension ext) { return read_term(text, ElabOptions{ext, {}}); }

// ---------------------------------------------------------------------------
// Definition table

enum class Fixity : unsigned char {
  Constant,  // ⊤, ⊥, 0, 1, †
  Prefix,    // ¬, □, ◇, @, ℕ, class, and ∀/∃/∃!/ι/ε applied to a non-abstraction
  Infix,     // binary connectives and relations
  Binder,    // sugar only (class abstraction)
};

struct Definition {
  std::string name;    // canonical Unicode name
  std::string ascii;   // ASCII spelling
  int params = 0;      // 0 or 1 type parameter
  bool vector = false; // the parameter is a relational type s1..sn t
  std::string type_schema;  // with 'a' for the parameter, e.g. "<at>t"
  std::string expansion;    // human readable expansion schema
  Fixity fixity = Fixity::Constant;
  bool binder_sugar = false;  // admits  name x. P
  Extension guard = Extension::Core;
};

const std::vector<Definition>& definition_table();
// Accepts the canonical or the ASCII name. nullptr when unknown.
const Definition* find_definition(std::string_view name);

// Closed term for the abbreviation at the given parameter (for vector entries
// pass the relational type). Throws UnknownNotation, ArityMismatch or
// GuardViolation.
Term instantiate_def(std::string_view name, const std::vector<Type>& params = {},
                     Extension ext = Extension::Epsilon);
Type definition_type(const Definition& d, const std::vector<Type>& params);
// Parameters for which the entry has the given type, if any.
std::optional<std::vector<Type>> match_definition_type(const Definition& d, const Type& ty);

// One line per entry:  name : type-schema := expansion
std::string dump_definitions();

// Class abstraction {x : P}: ι λX.(∀y.(Xy = ⊤ ∨ Xy = ⊥) ∧ X ≡ λx.P).
Term class_abstraction(const Variable& x, const Term& body);

struct ExpandOptions {
  // Replace ι by its ε definition and † by ε λx.⊥ (LF_ε reading).
  bool reduce_iota_to_epsilon = false;
};

// Terms are stored with every abbreviation already expanded, so this is the
// identity unless the ε reduction is requested.
Term expand_all(const Term& a, const ExpandOptions& opts = {});

// ---------------------------------------------------------------------------
// Printing

struct PrintOptions {
  enum class Parens { Minimal, Full } parens = Parens::Minimal;
  enum class Decorations { Auto, None, Binders, Full } decorations = Decorations::Auto;
  bool compact = false;  // no optional spaces, as in printed mathematics
  bool ascii = false;
  bool fold = true;      // print abbreviations instead of their expansions
  // Drop parentheses around nested application arguments when types make
  // the grouping recoverable (f(fx) printed as ffx).
  bool elide_application_parens = false;
};

std::string print(const Term& a, const PrintOptions& opts = {});
std::string print_type(const Type& ty, bool ascii = false);

}  // namespace lf
