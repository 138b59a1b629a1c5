#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace teamlogic {

/// Connectives of the negation-normal-form syntax shared by every logic
/// the library handles.
enum class Op : std::uint8_t {
  Top,
  Bot,
  Prop,
  NegProp,
  And,
  Or,
  NeDisj,  ///< nonempty disjunction
  Dia,
  Box,
  Nab,  ///< nonemptiness operator
  Incl,  ///< inclusion atom
};

/// The least logic admitting a formula.
enum class Dialect : std::uint8_t {
  ML,
  MINC,
  MLNab,
  MLNeDisj,
  Mixed,
};

std::string_view to_string(Dialect d);

namespace detail {
struct Node;
}

/// Immutable formula handle. Copies share structure; equality is structural.
///
/// Invariants enforced at construction: negation only on proposition
/// symbols, inclusion atoms have equal-length nonempty sides whose members
/// are pure modal formulas (no inclusion atoms, no nonemptiness operator,
/// no nonempty disjunction).
class Formula {
 public:
  static Formula top();
  static Formula bot();
  static Formula prop(std::string name);
  static Formula neg_prop(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula nedisj(Formula lhs, Formula rhs);
  static Formula dia(Formula sub);
  static Formula box(Formula sub);
  static Formula nab(Formula sub);
  static Formula incl(std::vector<Formula> lhs, std::vector<Formula> rhs);

  Op op() const;
  /// Proposition name for Prop/NegProp, empty otherwise.
  const std::string& symbol() const;
  /// Children in syntax-tree order. For inclusion atoms: lhs then rhs.
  std::span<const Formula> children() const;
  const Formula& child(std::size_t i) const { return children()[i]; }
  /// Inclusion atoms only.
  std::span<const Formula> lhs() const;
  std::span<const Formula> rhs() const;
  std::size_t arity() const;

  /// Number of occurrence nodes in the syntax tree.
  std::size_t node_count() const;
  /// True if no inclusion atom, nonemptiness operator or nonempty
  /// disjunction occurs.
  bool is_pure_ml() const;
  bool has_incl() const;
  bool has_nab() const;
  bool has_nedisj() const;
  /// Cached modal depth and count of Nab occurrences.
  int depth() const;
  std::size_t nabla_count() const;

  std::size_t hash() const;
  /// Address of the shared node; stable for the lifetime of any copy.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string symbol, std::vector<Formula> kids, std::size_t arity);

  std::shared_ptr<const detail::Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Hash-consing table. intern(f) returns a formula structurally equal to f
/// in which every subformula is the node already interned for it, so that
/// caches keyed by node identity (such as an Evaluator's memo tables) are
/// shared across formulas with common parts.
class FormulaInterner {
 public:
  Formula intern(const Formula& f);
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_set<Formula, FormulaHash> table_;
};

/// Conjunction of all formulas, left-associated; Top for an empty list.
Formula conjoin(std::span<const Formula> parts);
/// Disjunction of all formulas, left-associated; Bot for an empty list.
Formula disjoin(std::span<const Formula> parts);

int modal_depth(const Formula& f);
std::size_t occ_nabla(const Formula& f);
Dialect dialect_of(const Formula& f);
/// Proposition symbols occurring in `f`, in first-occurrence order.
std::vector<std::string> props_of(const Formula& f);

bool is_identifier(std::string_view s);

/// Address of one occurrence node: child indices from the root.
struct Position {
  std::vector<std::uint32_t> path;

  bool is_root() const { return path.empty(); }
  Position child(std::uint32_t i) const;
  /// Dot-separated child indices; the root is the empty string.
  std::string to_string() const;
  static Position parse(std::string_view text);

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// All occurrence positions in preorder. Size equals node_count().
std::vector<Position> positions(const Formula& f);
/// Subformula occurring at `pos`. Throws FormulaError for invalid paths.
const Formula& subformula_at(const Formula& f, const Position& pos);

}  // namespace teamlogic

template <>
struct std::hash<teamlogic::Formula> {
  std::size_t operator()(const teamlogic::Formula& f) const noexcept { return f.hash(); }
};
