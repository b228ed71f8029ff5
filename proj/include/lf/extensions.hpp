#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lf/kernel.hpp"

// The description and choice extensions: default values, the D_ι and C_ε
// axiom schemas, and the guarded notations that depend on them.
namespace lf {

// †_e = ι λx^e.⊥, †_t = ⊥, †_{στ} = λx^σ.†_τ
Term dagger(const Type& sigma);

// D_ι.1  ∀X^{σt}.(∃!X → X(ιX))
// D_ι.2  ∀X^{σt}.(¬∃!X → ιX = †)
// C_ε.1  ∀X^{σt}.(∃X → X(εX))
// C_ε.2  ∀X^{σt}.(¬∃X → εX = †)
const std::vector<AxiomSchema>& description_schemas();
const std::vector<AxiomSchema>& choice_schemas();
// Throws UnknownTheorem for other names.
const AxiomSchema& axiom_schema(std::string_view name);

// The schemas a theory's guard brings in. Throws NoExtension for core
// theories.
std::vector<AxiomSchema> extension_axioms(const Theory& t);

// Table entries that need ι or ε, plus class_σ.
std::vector<const Definition*> extension_definitions();

}  // namespace lf
