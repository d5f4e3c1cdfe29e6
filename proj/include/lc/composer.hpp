#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lc/formula.hpp"

namespace lc {

/// Inputs to compose() do not share a conclusion / common context, or a
/// premise is absorbed entirely by the other.
class ComposeError : public Error {
 public:
  using Error::Error;
};

/// A transformation precondition on the shape of a structure failed
/// (e.g. conclusion is not a binary disjunction).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An implication premise -> conclusion. The premise is read as a conjunction
/// of one or more conjuncts; it is kept both in normal form (for matching and
/// equality) and in writing order (so derived problems render the way they
/// are composed, context first). The conclusion is kept in normal form.
class ImplicationStructure {
 public:
  ImplicationStructure(const Formula& premise, const Formula& conclusion);

  /// Splits a top-level implication formula into premise/conclusion.
  static ImplicationStructure from_formula(const Formula& f);

  /// Normalized premise.
  const Formula& premise() const { return premise_; }
  const Formula& conclusion() const { return conclusion_; }

  /// Premise conjuncts in writing order, each conjunct normalized, duplicates
  /// dropped after the first occurrence.
  const std::vector<Formula>& premise_conjuncts() const { return conjuncts_; }

  /// Premise in writing order.
  Formula premise_as_written() const;

  Formula to_formula() const { return Formula::implication(premise_as_written(), conclusion_); }
  std::string str() const { return to_formula().str(); }

  /// Structural equality of the normalized sides; writing order is ignored.
  bool operator==(const ImplicationStructure& other) const {
    return premise_ == other.premise_ && conclusion_ == other.conclusion_;
  }

 private:
  std::vector<Formula> conjuncts_;  // writing order
  Formula premise_;                 // normalized
  Formula conclusion_;              // normalized
};

/// One way of exchanging premise conjuncts with the conclusion. `moved` holds
/// the conjuncts that were swapped into the conclusion of `structure`.
struct InverseCandidate {
  ImplicationStructure structure;
  std::vector<Formula> moved;
};

enum class Relation { TautologicalEquivalence, ForwardOnly, BackwardOnly, Independent };

const char* to_string(Relation r);

/// Truth-table relation between two structures, with falsifying witnesses for
/// each direction that fails. Witnesses are the first falsifying assignments
/// in enumeration order and always falsify their direction (re-checkable via
/// eval).
struct RelationVerdict {
  Relation relation = Relation::Independent;
  std::optional<Assignment> forward_witness;   // falsifies a -> b
  std::optional<Assignment> backward_witness;  // falsifies b -> a
};

/// Composes two generating implications that share a conclusion and a common
/// premise context t: (t&p -> r, t&q -> r) becomes t&(p|q) -> r. The common
/// context is recovered as the maximal common conjunct multiset after
/// normalization; both leftovers must be nonempty. Without a common context
/// this raises ComposeError unless allow_empty_context is set, in which case
/// the plain rule (p|q) -> r is emitted. The result is checked to be
/// tautologically equivalent to the conjunction of the inputs.
ImplicationStructure compose(const ImplicationStructure& g1, const ImplicationStructure& g2,
                             bool allow_empty_context = false);

/// All inverse candidates of premise -> conclusion: for every proper subset S
/// of the premise conjuncts (including the empty one), emit
/// S & conclusion -> (complement of S). Candidates are enumerated in
/// binary-mask order over the kept subset, 2^n - 1 in total.
std::vector<InverseCandidate> invert_all(const ImplicationStructure& src);

/// Rewrites premise -> p|q as premise & ~other -> keep, where keep is one of
/// the two disjuncts. The output is tautologically equivalent to the input.
ImplicationStructure conditionalize(const ImplicationStructure& inv, const Formula& keep);

/// Rewrites premise -> p|q as premise -> p ^ (~p & q), turning the
/// disjunction into an exclusive disjunction over a property and its
/// negation. The output is tautologically equivalent to the input.
ImplicationStructure homogenize(const ImplicationStructure& inv);

/// Classifies a against b by deciding both implication directions by truth
/// table.
RelationVerdict classify(const ImplicationStructure& a, const ImplicationStructure& b);

}  // namespace lc
