#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lf/term.hpp"

namespace lf {

std::vector<Variable> free_vars(const Term& a);

// True iff a and b differ only by a consistent renaming of bound variables.
bool alpha_equal(const Term& a, const Term& b);

// Capture-avoiding [b/x]a. Binders that would capture a free variable of b
// are renamed to the least-primed variant of their letter that is free in
// neither b nor the body. Throws TypeMismatch if type(b) != type(x).
Term substitute(const Term& a, const Variable& x, const Term& b);

// Least-primed variable with the given letter and type that is not in avoid.
Variable fresh_variable(char letter, const Type& type, const std::vector<Variable>& avoid);
Variable fresh_variable(char letter, const Type& type, std::initializer_list<const Term*> avoid);

inline constexpr std::size_t kDefaultBetaFuel = 1'000'000;

// Leftmost-outermost beta normalisation. Throws FuelExhausted after `fuel`
// contractions.
Term beta_normal_form(const Term& a, std::size_t fuel = kDefaultBetaFuel);

// Throws TypeMismatch when the types differ.
bool beta_equivalent(const Term& a, const Term& b);

bool is_beta_normal(const Term& a);

// Single contraction of the redex at the root. Precondition: a is a redex.
Term contract_root(const Term& a);

// Visit every subterm (pre-order). The callback may return false to skip
// the children of the visited node.
void visit(const Term& a, const std::function<bool(const Term&)>& fn);

// Subterm addressing: 0 = function / body, 1 = argument.
using Path = std::vector<unsigned char>;
const Term& subterm_at(const Term& a, const Path& path);
// Raw replacement (no renaming): variables in `replacement` may be captured
// by binders along the path. Types must agree.
Term replace_at(const Term& a, const Path& path, const Term& replacement);

}  // namespace lf
