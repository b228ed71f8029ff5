#include "random_terms.hpp"

#include <algorithm>

namespace lf::testing {

namespace {

const char kLetters[] = {'x', 'y', 'z', 'f'};

}  // namespace

Type RandomTerms::random_type(int max_depth) {
  if (max_depth == 0 || pick(3) == 0) return pick(2) ? Type::e() : Type::t();
  return Type::fun(random_type(max_depth - 1), random_type(max_depth - 1));
}

Term RandomTerms::leaf(const Type& ty, std::vector<Variable>& scope) {
  std::vector<Variable> candidates;
  for (const Variable& v : scope) {
    if (v.type == ty) candidates.push_back(v);
  }
  if (!candidates.empty() && pick(3) != 0) return Term::var(candidates[pick(static_cast<int>(candidates.size()))]);
  return Term::var(Variable(kLetters[pick(4)], ty, static_cast<std::uint32_t>(pick(2))));
}

Term RandomTerms::gen(const Type& ty, int budget, std::vector<Variable>& scope) {
  if (budget <= 1) return leaf(ty, scope);
  const int choice = pick(10);
  if (ty.is_fun() && choice < 4) {
    Variable x(kLetters[pick(4)], ty.domain(), static_cast<std::uint32_t>(pick(2)));
    scope.push_back(x);
    Term body = gen(ty.codomain(), budget - 1, scope);
    scope.pop_back();
    return Term::abs(x, body);
  }
  if (budget >= 4 && choice < 8) {
    // explicit redex (\x. body) arg
    Type arg_ty = random_type(1);
    if (Type::fun(arg_ty, ty).depth() > 3) arg_ty = Type::e();
    const int body_budget = 1 + pick(std::max(1, budget - 3));
    Variable x(kLetters[pick(4)], arg_ty, static_cast<std::uint32_t>(pick(2)));
    scope.push_back(x);
    Term body = gen(ty, body_budget, scope);
    scope.pop_back();
    Term arg = gen(arg_ty, std::max(1, budget - 2 - static_cast<int>(body.size())), scope);
    return Term::app(Term::abs(x, body), arg);
  }
  if (budget >= 3) {
    Type arg_ty = random_type(1);
    if (Type::fun(arg_ty, ty).depth() > 3) arg_ty = ty.is_fun() ? Type::e() : Type::t();
    const Type fun_ty = Type::fun(arg_ty, ty);
    if (fun_ty.depth() <= 3) {
      Term f = gen(fun_ty, (budget - 1) / 2, scope);
      Term a = gen(arg_ty, std::max(1, budget - 1 - static_cast<int>(f.size())), scope);
      return Term::app(f, a);
    }
  }
  return leaf(ty, scope);
}

Term RandomTerms::of_type(const Type& ty, int max_size) {
  std::vector<Variable> scope;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Term t = gen(ty, max_size, scope);
    if (static_cast<int>(t.size()) <= max_size) return t;
  }
  return leaf(ty, scope);
}

Term RandomTerms::any(int max_size) { return of_type(random_type(2), max_size); }

}  // namespace lf::testing
