#pragma once

#include <random>
#include <vector>

#include "lf/term.hpp"

namespace lf::testing {

// Generates random well-typed terms over a small pool of types (depth <= 3)
// and a small stock of letters, so shadowing and capture situations are
// common. Redexes are introduced deliberately.
class RandomTerms {
 public:
  explicit RandomTerms(unsigned seed) : rng_(seed) {}

  // A term of the requested type with at most max_size nodes.
  Term of_type(const Type& ty, int max_size);
  // A term of a random pool type.
  Term any(int max_size);
  Type random_type(int max_depth = 2);

  std::mt19937& rng() { return rng_; }

 private:
  Term gen(const Type& ty, int budget, std::vector<Variable>& scope);
  Term leaf(const Type& ty, std::vector<Variable>& scope);
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::mt19937 rng_;
};

}  // namespace lf::testing
