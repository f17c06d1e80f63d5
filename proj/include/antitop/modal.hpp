#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antitop/set_family.hpp"

namespace antitop::modal {

enum class Op { kVar, kNot, kAnd, kOr, kImplies, kBox };

/// Immutable modal formula. Copies share subtrees. The diamond is not a
/// primitive: `<>p` parses to `![]!p`.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula box(Formula operand);
  static Formula diamond(Formula operand);

  Op op() const noexcept { return node_->op; }
  /// Variable name; empty for other nodes.
  const std::string& name() const noexcept { return node_->name; }
  /// Operand of a unary node, left operand of a binary node.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  /// Distinct variable names in lexicographic order.
  std::vector<std::string> variables() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, const Formula* lhs, const Formula* rhs);

  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest binding first, `->` right-associative, `&`/`|` left:
///   formula := disj ('->' formula)?
///   disj    := conj ('|' conj)*
///   conj    := unary ('&' unary)*
///   unary   := '!' unary | '[]' unary | '<>' unary | '(' formula ')' | var
///   var     := [a-z][a-z0-9_]*
/// Whitespace is ignored. Throws ParseError with the offending offset.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering that parse_formula reads back to the same
/// tree, e.g. `[]p & []q -> ![](p | q)`.
std::string to_string(const Formula& formula);

using Valuation = std::map<std::string, SubsetMask, std::less<>>;

/// Possible-world model: worlds carry an anti-topology, variables are valued
/// by arbitrary sets of worlds.
class Model {
 public:
  /// Throws NotAntiTopology when `family` is not an anti-topology and
  /// UniverseMismatch for a valuation of the wrong width.
  Model(SetFamily family, Valuation valuation);

  const Universe& worlds() const noexcept { return family_.universe(); }
  const SetFamily& family() const noexcept { return family_; }
  const Valuation& valuation() const noexcept { return valuation_; }

 private:
  SetFamily family_;
  Valuation valuation_;
};

/// Worlds where the formula holds. `[]f` holds at every world when the truth
/// set of f is a member of the family and at none otherwise. Throws
/// EvaluationError naming the first unvalued variable.
SubsetMask truth_set(const Model& model, const Formula& formula);

/// Truth at every world.
bool is_valid_in_model(const Model& model, const Formula& formula);

struct TautologyReport {
  bool tautology = false;
  /// First failing model in search order.
  std::optional<Model> countermodel;

  explicit operator bool() const noexcept { return tautology; }
};

/// Guard on valuation sweeps: universe size times variable count.
inline constexpr std::size_t kMaxValuationBits = 16;

/// Validity under every valuation of the formula's variables on one space.
/// Valuations are visited as mixed-radix numbers with the lexicographically
/// first variable least significant; the countermodel is the first failure.
/// Throws NotAntiTopology or CapacityError (n * variables > 16).
TautologyReport is_tautology_in_space(const SetFamily& family, const Formula& formula);

/// Serial reference for is_tautology_in_space, same visiting order.
TautologyReport is_tautology_in_space_serial(const SetFamily& family, const Formula& formula);

/// Validity on every enumerated anti-topology with 2..n_max points. The
/// degenerate empty family is included unless told otherwise. Throws
/// InvalidArgument for n_max outside [2, 4].
TautologyReport is_anti_tautology_upto(std::size_t n_max, const Formula& formula,
                                       bool include_degenerate = true);

}  // namespace antitop::modal
