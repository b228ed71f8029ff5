#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lf {

enum class BaseType : unsigned char { E, T };

// Simple types: the base types e and t, and function types <sigma tau>.
// Values are immutable and cheap to copy.
class Type {
 public:
  static Type e();
  static Type t();
  static Type fun(const Type& domain, const Type& codomain);
  // <a1 <a2 ... <an result>>>
  static Type curried(const std::vector<Type>& args, const Type& result);

  bool is_base() const;
  bool is_fun() const { return !is_base(); }
  bool is_e() const;
  bool is_t() const;
  const Type& domain() const;
  const Type& codomain() const;

  // Number of nested function constructors on the longest path.
  int depth() const;
  std::size_t hash() const;

  // Argument types of a relational type s1 ... sn t (empty for t itself).
  // Returns false when the final codomain is not t.
  bool relational_args(std::vector<Type>& out) const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class TypeStyle {
  Abbreviated,  // brackets omitted by right association: "ttt", "<et>t"
  Bracketed,    // every function type bracketed: "<t<tt>>"
};

// Unicode angle brackets unless ascii is set.
std::string to_string(const Type& ty, TypeStyle style = TypeStyle::Abbreviated, bool ascii = false);

struct Type::Node {
  bool base_kind = true;
  BaseType base = BaseType::E;
  std::optional<Type> dom, cod;
  int depth = 0;
  std::size_t hash = 0;
};

inline bool Type::is_base() const { return node_->base_kind; }
inline bool Type::is_e() const { return node_->base_kind && node_->base == BaseType::E; }
inline bool Type::is_t() const { return node_->base_kind && node_->base == BaseType::T; }
inline const Type& Type::domain() const { return *node_->dom; }
inline const Type& Type::codomain() const { return *node_->cod; }
inline int Type::depth() const { return node_->depth; }
inline std::size_t Type::hash() const { return node_->hash; }

}  // namespace lf

template <>
struct std::hash<lf::Type> {
  std::size_t operator()(const lf::Type& t) const noexcept { return t.hash(); }
};
