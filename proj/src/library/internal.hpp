#pragma once

#include <algorithm>
#include <utility>

#include "lf/error.hpp"
#include "lf/library.hpp"
#include "lf/logic.hpp"

namespace lf::lib {

bool same(const Term& a, const Term& b);
// Least-primed variable of the letter avoiding the free variables of the
// terms and the context.
Variable fresh(char letter, const Type& type, std::initializer_list<Term> terms, const Context& ctx);
// Both premises over the union of their assumptions.
std::pair<Derivation, Derivation> unify(const Derivation& a, const Derivation& b);

}  // namespace lf::lib
