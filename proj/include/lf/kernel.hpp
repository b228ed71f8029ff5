#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lf/notation.hpp"
#include "lf/syntax.hpp"
#include "lf/term.hpp"

namespace lf {

struct Sequent {
  std::vector<Term> assumptions;
  Term conclusion;
};

bool alpha_equal(const Sequent& a, const Sequent& b);
std::string to_string(const Sequent& s, const PrintOptions& opts = {});

enum class RuleId {
  R1_Structural,
  R2_Beta,
  R3_UI,
  R4_UG,
  R5_NegElim,
  R6_Intensionality,
  R7_FunExt,
  R8_Choice,
  R9_PotInf,
  V_ActualInfinityE,
  V_HenkinExt,
  V_ClassicismSubst,
  V_ModalFunExt,
};

// "R.1" .. "R.9", "ActualInfinityE", "HenkinExt", "ClassicismSubst", "ModalFunExt"
std::string_view rule_name(RuleId id);
// Accepts the names above, "R1".."R9" and the enum spellings. Throws UnknownRule.
RuleId parse_rule_id(std::string_view name);
const std::vector<RuleId>& all_rules();

enum class Structural { None, Hypothesis, Contraction, Weakening, Exchange, Cut };
std::string_view structural_name(Structural s);

// An immutable node of a derivation tree. Premises are shared, so a tree is
// really a DAG and building on a derivation never copies it.
class Derivation {
 public:
  RuleId rule() const { return node_->rule; }
  Structural structural() const { return node_->structural; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Sequent& sequent() const { return node_->sequent; }
  const std::vector<Term>& assumptions() const { return node_->sequent.assumptions; }
  const Term& conclusion() const { return node_->sequent.conclusion; }

  // rule parameters
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::optional<Variable>& variable() const { return node_->variable; }
  std::size_t position() const { return node_->position; }
  const Path& path() const { return node_->path; }

  // Human readable rule label, e.g. "R.1 weakening" or "R.4".
  std::string label() const;
  // Distinct nodes reachable from here.
  std::size_t node_count() const;

  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    RuleId rule = RuleId::R1_Structural;
    Structural structural = Structural::None;
    std::vector<Derivation> premises;
    std::vector<Term> terms;
    std::optional<Variable> variable;
    std::size_t position = 0;
    Path path;
    Sequent sequent;
  };
  explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend struct RuleApplication;
};

// Everything needed to (re)compute a node: rule, parameters and premises.
struct RuleApplication {
  RuleId rule = RuleId::R1_Structural;
  Structural structural = Structural::None;
  std::vector<Derivation> premises;
  std::vector<Term> terms;
  std::optional<Variable> variable;
  std::size_t position = 0;
  Path path;

  // The conclusion the rule licenses, or an Error.
  Sequent infer() const;
  Derivation build() const;
  static RuleApplication of(const Derivation& d);
};

// The inference rules. Each throws lf::Error (ShapeMismatch, ContextMismatch,
// NotBetaEquivalent, FreshnessViolation, NonEmptyContext, TypeRestriction)
// when its premises do not have the required shape.
namespace rules {

// Γ, P ⊢ P
Derivation hypothesis(const std::vector<Term>& gamma, const Term& p);
// Γ, P, P ⊢ Q  /  Γ, P ⊢ Q
Derivation contraction(const Derivation& d);
// Γ ⊢ Q  /  Γ, P ⊢ Q
Derivation weakening(const Derivation& d, const Term& p);
// Γ, P, Q, Δ ⊢ R  /  Γ, Q, P, Δ ⊢ R  with P at index i
Derivation exchange(const Derivation& d, std::size_t i);
// Γ ⊢ P   Δ, P ⊢ Q  /  Γ, Δ ⊢ Q
Derivation cut(const Derivation& d1, const Derivation& d2);

// R.2: Γ ⊢ P  /  Γ ⊢ Q  where P ~β Q
Derivation beta(const Derivation& d, const Term& q);
// R.3: Γ ⊢ F ⊆ G   Γ ⊢ F a  /  Γ ⊢ G a
Derivation universal_instantiation(const Derivation& d1, const Derivation& d2);
// R.4: Γ, F x ⊢ G x  /  Γ ⊢ F ⊆ G   (x not free in F, G, Γ)
Derivation universal_generalization(const Derivation& d, const Variable& x);
// R.5: Γ, ¬P ⊢ P  /  Γ ⊢ P
Derivation negation_elimination(const Derivation& d);
// R.6: P ⊢ Q   Q ⊢ P  /  ⊢ P = Q
Derivation intensionality(const Derivation& d1, const Derivation& d2);
// R.7: Γ ⊢ f x = g x  /  Γ ⊢ f = g   (x not free in f, g, Γ)
Derivation function_extensionality(const Derivation& d, const Variable& x);
// R.8: Γ ⊢ ∀x.∃y.R x y  /  Γ ⊢ ∃f.∀x.R x (f x)
Derivation choice(const Derivation& d, const Variable& f);
// R.9: Γ ⊢ ℕ_σ n  /  Γ ⊢ ⊥ ≠ ∃ n   (σ is e or t)
Derivation potential_infinity(const Derivation& d);

// Γ ⊢ ℕ_e n  /  Γ ⊢ ∃ n
Derivation actual_infinity_e(const Derivation& d);
// Γ, P ⊢ Q   Γ, Q ⊢ P  /  Γ ⊢ P = Q
Derivation henkin_extensionality(const Derivation& d1, const Derivation& d2);
// P ⊢ Q   Q ⊢ P   R  /  R ⊢ S  where S replaces the occurrence of P at
// `path` in R by Q. Capture is permitted.
Derivation classicism_substitution(const Derivation& d1, const Derivation& d2, const Term& r, const Path& path);
// Γ ⊢ □∀x.(f x = g x)  /  Γ ⊢ f = g   (x not free in f, g, Γ)
Derivation modal_function_extensionality(const Derivation& d, const Variable& x);

}  // namespace rules

// ---------------------------------------------------------------------------
// Theories

struct AxiomSchema {
  std::string name;  // e.g. "D_ι.1"
  std::function<Term(const Type&)> generate;
};

struct Theory {
  std::string name;
  std::set<RuleId> rules;
  std::vector<Term> axioms;          // sentences
  std::vector<AxiomSchema> schemas;  // generated on demand
  Extension guard = Extension::Core;

  bool enabled(RuleId r) const { return rules.count(r) != 0; }
  // Name of the axiom or schema the formula is an instance of, if any.
  std::optional<std::string> axiom_match(const Term& p) const;

  Theory without(RuleId r) const;
  Theory with(RuleId r) const;
  Theory plus_axiom(const Term& sentence) const;
};

// Built-ins: LF, LF−R.n (also spelled LF-R.n), LF_ι, LF_ε, Church-1940,
// Henkin-1950, HFE, Classicism, ModalFunExt-LF and LF+HenkinExt. Throws
// UnknownTheory.
Theory theory(std::string_view name);
std::vector<std::string> theory_names();

struct CheckReport {
  bool ok = false;
  std::optional<Term> theorem;       // the conclusion, assumptions discharged
  std::vector<std::string> axioms;   // which axioms discharged the assumptions
  std::size_t nodes = 0;
};

// Re-validates every node and checks rule availability and assumptions.
// Throws RuleDisabled, UndischargedAssumption or any node-level error.
CheckReport check_theorem(const Theory& t, const Derivation& d);

// The first rule used in d that t does not enable, if any.
std::optional<RuleId> first_disabled_rule(const Theory& t, const Derivation& d);

}  // namespace lf
