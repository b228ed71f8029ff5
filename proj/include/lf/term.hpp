#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lf/type.hpp"

namespace lf {

// A variable is a roman letter, a type, and a number of primes. Two variables
// are the same variable iff all three agree.
struct Variable {
  char letter = 'x';
  std::uint32_t primes = 0;
  Type type = Type::e();

  Variable() = default;
  Variable(char l, Type ty, std::uint32_t p = 0) : letter(l), primes(p), type(std::move(ty)) {}

  Variable primed(std::uint32_t count) const { return Variable(letter, type, count); }
  std::string name() const;  // letter followed by primes, no decoration

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.letter == b.letter && a.primes == b.primes && a.type == b.type;
  }
  friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
  friend bool operator<(const Variable& a, const Variable& b);
};

enum class ConstantKind : unsigned char {
  Include,  // the subset constant, indexed by sigma
  Iota,     // description, only in theories with the iota guard
  Epsilon,  // choice, only in theories with the epsilon guard
};

struct Constant {
  ConstantKind kind = ConstantKind::Include;
  Type index = Type::e();

  // <<st><<st>t>> for Include; <<st>s> for Iota and Epsilon.
  Type type() const;

  friend bool operator==(const Constant& a, const Constant& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator!=(const Constant& a, const Constant& b) { return !(a == b); }
};

enum class TermKind : unsigned char { Var, Con, App, Abs };

// Intrinsically typed, immutable lambda term. Construction checks the
// application rule, so every Term value is well typed.
class Term {
 public:
  static Term var(const Variable& v);
  static Term con(const Constant& c);
  // Throws IllTypedApplication unless type(f) = <type(a) tau>.
  static Term app(const Term& f, const Term& a);
  static Term app(const Term& f, std::span<const Term> args);
  static Term abs(const Variable& x, const Term& body);

  TermKind kind() const { return node_->kind; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_con() const { return kind() == TermKind::Con; }
  bool is_app() const { return kind() == TermKind::App; }
  bool is_abs() const { return kind() == TermKind::Abs; }

  const Variable& variable() const { return node_->var; }  // Var
  const Constant& constant() const { return node_->con; }  // Con
  const Term& fun() const { return node_->kids[0]; }       // App
  const Term& arg() const { return node_->kids[1]; }       // App
  const Variable& bound() const { return node_->var; }     // Abs
  const Term& body() const { return node_->kids[0]; }      // Abs

  const Type& type() const { return node_->type; }
  // Sorted, duplicate free.
  const std::vector<Variable>& free_vars() const { return node_->free; }
  bool has_free(const Variable& v) const;
  bool closed() const { return node_->free.empty(); }
  std::size_t size() const { return node_->size; }
  // Structural hash that ignores variable names (so it is alpha invariant).
  std::size_t alpha_hash() const { return node_->ahash; }
  // True iff the term contains no beta redex.
  bool beta_normal() const { return node_->normal; }

  const void* identity() const { return node_.get(); }
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node {
    TermKind kind = TermKind::Var;
    Type type = Type::e();
    Variable var;
    Constant con;
    std::vector<Term> kids;
    std::vector<Variable> free;
    std::size_t size = 1;
    std::size_t ahash = 0;
    bool normal = true;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Term operator*(const Term& f, const Term& a) { return Term::app(f, a); }

inline const Type& type_of(const Term& a) { return a.type(); }

// Formula: a term of type t. Sentence: a closed formula.
inline bool is_formula(const Term& a) { return a.type().is_t(); }
inline bool is_sentence(const Term& a) { return is_formula(a) && a.closed(); }

bool contains_constant(const Term& a, ConstantKind kind);

}  // namespace lf
