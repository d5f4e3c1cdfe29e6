#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lc/composer.hpp"
#include "lc/geometry.hpp"

namespace lc::catalog {

using geo::Group;

class UnknownGroupError : public Error {
 public:
  using Error::Error;
};

/// Parses "I".."IV" (also "1".."4"); throws UnknownGroupError otherwise.
Group parse_group(std::string_view text);

/// Role-tagged statement set of one problem group: the context t plus the
/// bindings of atoms p, q, r to geometric statements.
struct ProblemSchema {
  Group group = Group::I;
  std::string context;                        // the statement t
  std::map<char, std::string> statements;     // 'p'/'q'/'r' -> statement text
};

ProblemSchema schema(Group g);

struct DerivedProblem {
  std::string name;                // e.g. "generating_p"
  std::optional<std::string> tag;  // source problem number, when one exists
  ImplicationStructure structure;
};

/// The full problem family of a group, produced by the composition calculus
/// from the two generating implications.
struct DerivedProblemSet {
  Group group = Group::I;
  DerivedProblem generating_p;   // t & p -> r
  DerivedProblem generating_q;   // t & q -> r
  DerivedProblem composed;       // t & (p | q) -> r
  DerivedProblem inverse;        // t & r -> p | q
  DerivedProblem conditional_p;  // t & r & ~q -> p
  DerivedProblem conditional_q;  // t & r & ~p -> q
  DerivedProblem homogenized;    // t & r -> p ^ (~p & q)

  std::vector<const DerivedProblem*> all() const;
};

DerivedProblemSet derive_set(Group g);

/// The closing biconditional: group IV's conclusion holds if and only if
/// group II's conclusion holds, on any one triangle.
struct CapstoneSpec {
  Group left_group = Group::IV;
  geo::AtomId left_atom = geo::AtomId::R;
  Group right_group = Group::II;
  geo::AtomId right_atom = geo::AtomId::R;
};

CapstoneSpec capstone_spec();

enum class Expectation { NotFalsified, Falsified };

const char* to_string(Expectation e);

struct BatteryItem {
  std::string name;
  std::optional<std::string> tag;
  Expectation expected = Expectation::NotFalsified;
  geo::VerificationReport report;
  bool met = false;
};

struct BatteryResult {
  std::string group;
  std::vector<BatteryItem> items;
  bool all_met = false;
};

/// Runs the group's full battery: both generating directions, the inverse
/// slice run, both disjunct-necessity counterexample searches, and the
/// homogenized-conclusion agreement run.
BatteryResult verify_group(Group g, const geo::SamplerConfig& cfg);

/// Verifies the capstone biconditional on both conclusion slices, plus the
/// p-or-q dispatch each slice sample must satisfy.
BatteryResult verify_capstone(const geo::SamplerConfig& cfg);

}  // namespace lc::catalog
