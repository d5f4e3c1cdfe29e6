#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lc/error.hpp"

namespace lc {

enum class Kind { Atom, Not, And, Or, Xor, Implies, Iff };

/// Immutable propositional formula value. Copies are cheap (shared subtrees);
/// all operations on formulas are pure, so values are safe to share across
/// threads.
///
/// And/Or are n-ary with arity >= 2; Xor/Implies/Iff are binary. Atom names
/// must be identifiers ([a-zA-Z_][a-zA-Z0-9_]*).
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula exclusive_or(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  /// Atom name; valid only for Kind::Atom.
  const std::string& name() const { return node_->name; }
  const std::vector<Formula>& parts() const { return node_->parts; }
  const Formula& operand() const { return node_->parts.front(); }
  const Formula& lhs() const { return node_->parts[0]; }
  const Formula& rhs() const { return node_->parts[1]; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Canonical text rendering (same as print()).
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;            // Atom only
    std::vector<Formula> parts;  // Not: 1, Xor/Implies/Iff: 2, And/Or: >= 2
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Deterministic total order used for canonical child sorting: formulas are
/// compared by their in-order atom-name sequence, then by connective, then
/// structurally. Returns <0, 0, >0.
int compare(const Formula& a, const Formula& b);

bool is_valid_atom_name(std::string_view name);

/// Truth valuation: total map from atom name to truth value.
using Assignment = std::map<std::string, bool>;

/// Truth-functional evaluation. Throws EvalError naming the first atom
/// missing from the assignment.
bool eval(const Formula& f, const Assignment& a);

/// Lexicographically sorted, duplicate-free atom names of f.
std::vector<std::string> atoms(const Formula& f);

/// Cap on atoms for the brute-force decision procedures (2^n rows).
inline constexpr std::size_t kMaxTableAtoms = 24;

enum class Classification { Tautology, Contradiction, Contingent };

const char* to_string(Classification c);

/// Exhaustive truth table. Rows are enumerated by ascending binary counting
/// over the lexicographically sorted atoms, first atom most significant.
struct TruthTableReport {
  std::vector<std::string> atom_order;
  std::vector<bool> row_values;  // 2^n entries, indexed by row
  Classification classification = Classification::Contingent;
  std::optional<Assignment> falsifying;  // first falsifying row, if any
  std::optional<Assignment> satisfying;  // first satisfying row, if any

  std::size_t row_count() const { return row_values.size(); }
  Assignment assignment_for_row(std::uint64_t row) const;
};

TruthTableReport truth_table(const Formula& f);

bool is_tautology(const Formula& f);

/// True iff Iff(f, g) is a tautology.
bool are_equivalent(const Formula& f, const Formula& g);

/// First falsifying assignment in enumeration order, or nullopt for
/// tautologies.
std::optional<Assignment> find_falsifying(const Formula& f);

/// Canonical form: nested And/Or flattened, duplicate children removed,
/// children sorted by compare(), double negation eliminated. Idempotent and
/// evaluation-equivalent to the input.
Formula normalize(const Formula& f);

}  // namespace lc
